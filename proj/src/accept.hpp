// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_ACCEPT_HPP
#define LONGRUN_ACCEPT_HPP

#include "bet.hpp"
#include "clock.hpp"

namespace longrun {

enum class DistortionKind { power };

/// Parametric distortion family g_x: [0,inf] -> [0,inf], strictly increasing
/// and onto, with the fixed points g_x(0) = 0 and g_x(1) = 1 and g_0 = id.
/// The power family g_x(y) = y^(1+x) grows faster than the identity, so the
/// inverse pulls MGF values toward 1: applying g_x^{-1} to an MGF yields the
/// pessimistic (infimum) valuation over the stressed measure set.
class DistortionFamily {
 public:
  static DistortionFamily power() { return DistortionFamily(DistortionKind::power); }

  DistortionKind kind() const noexcept { return kind_; }

  /// g_x(y); requires x >= 0 and y >= 0.
  double apply(double x, double y) const;

  /// g_x^{-1}(y); requires x >= 0 and y >= 0.
  double invert(double x, double y) const;

 private:
  explicit DistortionFamily(DistortionKind kind) : kind_(kind) {}
  DistortionKind kind_;
};

/// Pseudo-MGF of the distorted clock law: g_x^{-1}(psi(s)).
double distorted_mgf(const ClockModel& clock, const DistortionFamily& fam, double x, double s);

/// Growth rate after passing the undistorted geometric mean psi(G(f))
/// through the pessimistic pseudo-MGF: psi_inv(g_x^{-1}(psi(G(f)))).
/// Reduces to growth_cc exactly at x = 0.
double distorted_growth(const ClockModel& clock, const DistortionFamily& fam, double x, const BetModel& bet,
                        double f);

struct AcceptabilityResult {
  bool is_infinite = false;
  double index = 0.0;  // meaningful when !is_infinite
};

/// Largest stress level x >= 0 at which the distorted geometric-mean return
/// still clears the hurdle: sup { x : g_x^{-1}(psi(G(f))) >= hurdle }.
/// With hurdle = 1 the unit fixed point makes the test x-independent and the
/// index degenerates to +infinity (G >= 0) or 0 (G < 0); with hurdle > 1 the
/// index is finite, found by bisection on [0, 1e3] to 1e-8 (capped at 1e3).
AcceptabilityResult acceptability_index(const ClockModel& clock, const DistortionFamily& fam, const BetModel& bet,
                                        double f, double hurdle);

}  // namespace longrun

#endif  // LONGRUN_ACCEPT_HPP
