// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_STRFMT_HPP
#define LONGRUN_STRFMT_HPP

#include <charconv>
#include <string>

namespace longrun {

/// Shortest round-trip decimal form of a double (to_chars), so messages and
/// labels are stable across runs.
inline std::string dtos(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace longrun

#endif  // LONGRUN_STRFMT_HPP
