// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_ERRORS_HPP
#define LONGRUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace longrun {

/// Error categories carried across the C API boundary as status codes.
enum class Errc {
  invalid_argument,  // malformed model or parameter
  domain,            // input outside a function's analytic domain
  branch,            // inversion branch not valid for the requested value
  no_convergence,    // iterative solver exhausted its budget
  config,            // inconsistent run configuration
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace longrun

#endif  // LONGRUN_ERRORS_HPP
