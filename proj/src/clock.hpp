// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_CLOCK_HPP
#define LONGRUN_CLOCK_HPP

#include <string>

#include "rng.hpp"

namespace longrun {

enum class ClockKind { degenerate, gamma, inverse_gaussian };

/// A mean-1 stochastic clock: the unit-period increment Z is strictly
/// positive with E[Z] = 1 and Var[Z] = theta.  Exposes the moment
/// generating function psi(s) = E[exp(sZ)], its inverse, and a sampler.
///
/// theta = 0 is always represented by the degenerate kind (Z identically 1),
/// never as a gamma/inverse-Gaussian limit, so the derived parameters
/// gamma_exponent = -theta and ig_shape = 1/theta stay well defined.
class ClockModel {
 public:
  static ClockModel degenerate();
  static ClockModel gamma(double theta);
  static ClockModel inverse_gaussian(double theta);
  static ClockModel make(ClockKind kind, double theta);

  ClockKind kind() const noexcept { return kind_; }
  double theta() const noexcept { return theta_; }
  double gamma_exponent() const noexcept { return -theta_; }  // gamma-clock exponent
  double ig_shape() const noexcept { return 1.0 / theta_; }   // lambda = 1/theta

  /// E[exp(sZ)].  Domain: s < 1/theta (gamma), s <= 1/(2 theta) (IG),
  /// all reals (degenerate).  Out-of-domain input throws Errc::domain.
  double mgf(double s) const;

  /// Inverse of mgf.  Requires r > 0; the IG branch additionally requires
  /// log r <= lambda and throws Errc::branch beyond it.
  double inv_mgf(double r) const;

  /// Supremum of the MGF domain (+infinity for the degenerate clock).
  /// The bound itself is attained only by the IG clock.
  double mgf_domain_sup() const;

  /// Draw one unit-period increment.
  double sample_increment(RngStream& rng) const;

 private:
  ClockModel(ClockKind kind, double theta) : kind_(kind), theta_(theta) {}

  ClockKind kind_;
  double theta_;
};

/// Display label: "KT", "VG(theta)" or "IG(theta)".
std::string model_label(const ClockModel& clock);

const char* clock_kind_name(ClockKind kind);

}  // namespace longrun

#endif  // LONGRUN_CLOCK_HPP
