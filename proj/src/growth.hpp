// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_GROWTH_HPP
#define LONGRUN_GROWTH_HPP

#include <span>
#include <string>
#include <vector>

#include "bet.hpp"
#include "clock.hpp"

namespace longrun {

struct CurvePoint {
  double f;
  double g;
};

struct GrowthCurve {
  std::string model_label;
  std::vector<CurvePoint> points;
  ClockModel clock;
  BetModel bet;
};

/// Expected log gross return E[log R(f)]: the Kelly-Thorp growth rate.
double growth_kt(const BetModel& bet, double f);

/// Expected transformed gross return E[psi_inv(R(f))]: the growth rate of
/// the geometric mean when per-period returns ride the given clock.
/// Coincides with growth_kt exactly for the degenerate clock.
double growth_cc(const ClockModel& clock, const BetModel& bet, double f);

/// dG/df of growth_cc.  At f = 0 returns the one-sided limit, which equals
/// the mean per-unit return E[u] for every clock (psi_inv'(1) = 1).
double growth_cc_derivative(const ClockModel& clock, const BetModel& bet, double f);

/// Sample growth_cc over a strictly increasing admissible grid.
GrowthCurve growth_curve(const ClockModel& clock, const BetModel& bet, std::span<const double> f_grid);

}  // namespace longrun

#endif  // LONGRUN_GROWTH_HPP
