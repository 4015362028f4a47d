// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent numerical routes used as test oracles.  Everything here is
// deliberately written against the math, not against the library code it
// checks: quadrature instead of closed forms, grid scans instead of
// bisection, finite differences instead of analytic derivatives.

#ifndef LONGRUN_TESTS_ORACLES_HPP
#define LONGRUN_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

namespace oracles {

// Adaptive Simpson on [a, b] to absolute tolerance tol.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double err = left + right - whole;
  if (std::abs(err) <= 15.0 * tol || depth > 40) return left + right + err / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 0);
}

// Argmax of fn over [lo, hi] by exhaustive scan at the given step.
inline double grid_argmax(const std::function<double(double)>& fn, double lo, double hi, double step) {
  double best_x = lo;
  double best = fn(lo);
  for (double x = lo + step; x <= hi; x += step) {
    double v = fn(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

// First zero crossing of fn (positive to negative) scanning up from lo.
inline double grid_first_root(const std::function<double(double)>& fn, double lo, double hi, double step) {
  double prev_x = lo;
  double prev = fn(lo);
  for (double x = lo + step; x <= hi; x += step) {
    double v = fn(x);
    if (prev > 0.0 && v <= 0.0) {
      // linear interpolation inside the straddling cell
      return prev_x + step * prev / (prev - v);
    }
    prev_x = x;
    prev = v;
  }
  return std::nan("");
}

// Central finite difference.
inline double central_diff(const std::function<double(double)>& fn, double x, double h = 1e-6) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

}  // namespace oracles

#endif  // LONGRUN_TESTS_ORACLES_HPP
