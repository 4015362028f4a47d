// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_SOLVE_HPP
#define LONGRUN_SOLVE_HPP

#include <functional>
#include <limits>

#include "bet.hpp"
#include "clock.hpp"

namespace longrun {

struct SolveOptions {
  double f_tol = 1e-10;        // absolute tolerance on f for both roots
  double search_upper = 10.0;  // search bound when max_fraction is infinite
  int max_iterations = 200;
  bool use_golden = false;     // force the derivative-free path
};

struct SolveResult {
  double f_star = 0.0;
  double g_at_f_star = 0.0;
  bool has_ruin_threshold = false;
  double f_c = std::numeric_limits<double>::infinity();
  int iterations = 0;
  double opt_residual = 0.0;   // dG/df at f_star
  double root_residual = 0.0;  // G at f_c
  double opt_bracket_lo = 0.0, opt_bracket_hi = 0.0;
  double root_bracket_lo = 0.0, root_bracket_hi = 0.0;
};

/// Maximize the clock-adjusted growth rate over admissible fractions.
/// Derivative-sign bisection by default, golden-section when requested.
/// When the bet is never favorable (E[u] <= 0) returns f_star = 0, g = 0.
SolveResult optimal_fraction(const ClockModel& clock, const BetModel& bet, const SolveOptions& opts = {});

/// Locate the ruin threshold f_c: the zero of G above f_star.  The bracket
/// expands geometrically (factor 1.6) from f_star and the root is refined
/// by Brent.  When G never turns negative below the search bound the result
/// carries has_ruin_threshold = false.  Also fills the optimum fields.
SolveResult ruin_threshold(const ClockModel& clock, const BetModel& bet, const SolveOptions& opts = {});

struct CalibrationResult {
  double lb = 0.0;
  double ub = 0.0;
  int iterations = 0;
  double residual_f = 0.0;
  double residual_g = 0.0;
};

/// Recover uniform-return bounds (LB, UB) whose Kelly-Thorp optimum matches
/// (target_f_star, target_growth).  Damped Newton on the residual pair with
/// a nested-bisection fallback.  target_f_star must be interior (> 0).
CalibrationResult calibrate_uniform_bounds(double target_f_star, double target_growth);

/// Brent root refinement on [a, b]; fa, fb must straddle zero.
double brent_root(const std::function<double(double)>& fn, double a, double b, double fa, double fb,
                  double x_tol, int max_iter, int* evals = nullptr);

/// Golden-section maximization on [lo, hi] to absolute x tolerance.
double golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi, double x_tol,
                               int* evals = nullptr);

}  // namespace longrun

#endif  // LONGRUN_SOLVE_HPP
