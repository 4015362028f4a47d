// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "solve.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "growth.hpp"
#include "strfmt.hpp"

namespace longrun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Upper end of the f search interval, pulled a hair inside max_fraction so
// the growth functional stays evaluable.
double search_top(const BetModel& bet, const SolveOptions& opts) {
  double bound = bet.max_fraction();
  if (std::isfinite(bound)) return bound * (1.0 - 1e-12);
  if (!(opts.search_upper > 0.0) || !std::isfinite(opts.search_upper)) {
    throw Error(Errc::config, "bet allows unbounded fractions; a finite positive search_upper is required, got " +
                                  dtos(opts.search_upper));
  }
  return opts.search_upper;
}

}  // namespace

double brent_root(const std::function<double(double)>& fn, double a, double b, double fa, double fb,
                  double x_tol, int max_iter, int* evals) {
  if (fa * fb > 0.0) throw Error(Errc::no_convergence, "brent_root: endpoints do not straddle zero");
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * x_tol;
    double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic / secant step
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        double r = fb / fc;
        double t = fa / fc;
        p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
        q = (t - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = fn(b);
    if (evals) ++*evals;
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
  }
  throw Error(Errc::no_convergence, "brent_root: no convergence within iteration budget");
}

double golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi, double x_tol,
                               int* evals) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double invphi2 = invphi * invphi;
  double a = lo, b = hi;
  double h = b - a;
  double c = a + invphi2 * h;
  double d = a + invphi * h;
  double fc = fn(c), fd = fn(d);
  if (evals) *evals += 2;
  while (h > x_tol) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      h = b - a;
      c = a + invphi2 * h;
      fc = fn(c);
    } else {
      a = c; c = d; fc = fd;
      h = b - a;
      d = a + invphi * h;
      fd = fn(d);
    }
    if (evals) ++*evals;
  }
  return 0.5 * (a + b);
}

SolveResult optimal_fraction(const ClockModel& clock, const BetModel& bet, const SolveOptions& opts) {
  SolveResult res;
  double top = search_top(bet, opts);
  auto growth = [&](double f) { return growth_cc(clock, bet, f); };
  auto slope = [&](double f) { return growth_cc_derivative(clock, bet, f); };

  double d0 = slope(0.0);
  ++res.iterations;
  if (d0 <= 0.0) {
    // never favorable: G <= 0 on the whole admissible range
    res.opt_residual = d0;
    return res;
  }

  if (opts.use_golden) {
    int evals = 0;
    res.f_star = golden_section_maximize(growth, 0.0, top, opts.f_tol, &evals);
    res.iterations += evals;
  } else {
    double a = 0.0;
    double b = top;
    double db = slope(b);
    ++res.iterations;
    if (db > 0.0) {
      // still rising at the boundary; only reachable with an unbounded bet
      res.f_star = b;
      res.g_at_f_star = growth(b);
      res.opt_residual = db;
      res.opt_bracket_lo = a;
      res.opt_bracket_hi = b;
      return res;
    }
    while (b - a > opts.f_tol && res.iterations < opts.max_iterations + 128) {
      double m = 0.5 * (a + b);
      double dm = slope(m);
      ++res.iterations;
      if (dm > 0.0) {
        a = m;
      } else {
        b = m;
      }
    }
    res.f_star = 0.5 * (a + b);
    res.opt_bracket_lo = a;
    res.opt_bracket_hi = b;
  }
  res.g_at_f_star = growth(res.f_star);
  res.opt_residual = slope(res.f_star);
  return res;
}

SolveResult ruin_threshold(const ClockModel& clock, const BetModel& bet, const SolveOptions& opts) {
  SolveResult res = optimal_fraction(clock, bet, opts);
  auto growth = [&](double f) { return growth_cc(clock, bet, f); };

  if (res.g_at_f_star <= 0.0) {
    // no favorable region: every positive fraction loses, the boundary is 0
    res.has_ruin_threshold = true;
    res.f_c = 0.0;
    res.root_residual = 0.0;
    return res;
  }

  double top = search_top(bet, opts);
  double lo = res.f_star;
  double flo = res.g_at_f_star;
  double step = std::max(1e-3, 0.01 * (top - lo));
  double hi = lo;
  double fhi = flo;
  bool bracketed = false;
  while (hi < top) {
    hi = std::min(lo + step, top);
    fhi = growth(hi);
    ++res.iterations;
    if (fhi <= 0.0) {
      bracketed = true;
      break;
    }
    lo = hi;
    flo = fhi;
    step *= 1.6;
  }
  if (!bracketed) {
    res.has_ruin_threshold = false;
    res.f_c = kInf;
    return res;
  }
  res.root_bracket_lo = lo;
  res.root_bracket_hi = hi;
  int evals = 0;
  res.f_c = brent_root(growth, lo, hi, flo, fhi, opts.f_tol, opts.max_iterations, &evals);
  res.iterations += evals;
  res.root_residual = growth(res.f_c);
  res.has_ruin_threshold = true;
  return res;
}

namespace {

// Kelly-Thorp forward solve for a uniform bet: optimum and growth there.
struct KtUniformOpt {
  double f_star;
  double growth;
};

KtUniformOpt kt_uniform_optimum(double lb, double ub) {
  BetModel bet = BetModel::uniform_return(lb, ub);
  ClockModel clock = ClockModel::degenerate();
  SolveOptions opts;
  opts.f_tol = 1e-12;
  SolveResult r = optimal_fraction(clock, bet, opts);
  return {r.f_star, r.g_at_f_star};
}

bool bounds_valid(double lb, double ub, double target_f_star) {
  // LB must admit losses, the optimum must stay admissible, UB must pay
  return lb < -1e-9 && ub > 1e-9 && ub - lb > 1e-6 && target_f_star < -1.0 / lb;
}

CalibrationResult calibrate_by_nested_bisection(double tf, double tg) {
  // Inner: for fixed lb, f* is increasing in ub; match f* = tf.
  auto ub_for_target_f = [&](double lb) {
    double ub_lo = 1e-6, ub_hi = 1.0;
    while (kt_uniform_optimum(lb, ub_hi).f_star < tf && ub_hi < 1e6) ub_hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (ub_lo + ub_hi);
      if (kt_uniform_optimum(lb, mid).f_star < tf) {
        ub_lo = mid;
      } else {
        ub_hi = mid;
      }
    }
    return 0.5 * (ub_lo + ub_hi);
  };
  // Outer: with f* pinned at tf, growth decreases as lb deepens.
  double lb_hi = -1e-4;                      // shallow losses, high growth
  double lb_lo = -1.0 / tf * (1.0 - 1e-6);   // deepest admissible losses
  auto growth_res = [&](double lb) { return kt_uniform_optimum(lb, ub_for_target_f(lb)).growth - tg; };
  double r_hi = growth_res(lb_hi);
  double r_lo = growth_res(lb_lo);
  if (r_hi * r_lo > 0.0) {
    throw Error(Errc::no_convergence, "uniform-bound calibration: no bracket for growth target " + dtos(tg));
  }
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lb_lo + lb_hi);
    if (growth_res(mid) * r_hi <= 0.0) {
      lb_lo = mid;
    } else {
      lb_hi = mid;
      r_hi = growth_res(lb_hi);
    }
  }
  CalibrationResult out;
  out.lb = 0.5 * (lb_lo + lb_hi);
  out.ub = ub_for_target_f(out.lb);
  KtUniformOpt fin = kt_uniform_optimum(out.lb, out.ub);
  out.residual_f = fin.f_star - tf;
  out.residual_g = fin.growth - tg;
  out.iterations = 400;
  return out;
}

}  // namespace

CalibrationResult calibrate_uniform_bounds(double target_f_star, double target_growth) {
  if (!(target_f_star > 0.0) || !std::isfinite(target_f_star)) {
    throw Error(Errc::invalid_argument,
                "calibration target f_star must be interior (> 0), got " + dtos(target_f_star) +
                    "; a symmetric uniform bet pins the optimum to the boundary f = 0");
  }
  if (!(target_growth > 0.0) || !std::isfinite(target_growth)) {
    throw Error(Errc::invalid_argument, "calibration target growth must be > 0, got " + dtos(target_growth));
  }

  // Moment-matched starting point: small-f theory gives f* ~ mu/E[u^2],
  // G(f*) ~ mu^2 / (2 E[u^2]).
  double mu = 2.0 * target_growth / target_f_star;
  double e2 = mu / target_f_star;
  double var = e2 - mu * mu;
  if (var <= 0.0) {
    throw Error(Errc::invalid_argument, "calibration targets imply non-positive return variance; infeasible");
  }
  double hw = std::sqrt(3.0 * var);
  double lb = std::min(mu - hw, -1e-3);
  double ub = mu + hw;

  CalibrationResult out;
  double r1 = 0.0, r2 = 0.0;
  auto residual = [&](double l, double u, double& rf, double& rg) {
    KtUniformOpt o = kt_uniform_optimum(l, u);
    rf = o.f_star - target_f_star;
    rg = o.growth - target_growth;
  };
  residual(lb, ub, r1, r2);
  for (int it = 0; it < 100; ++it) {
    out.iterations = it + 1;
    double norm = std::max(std::abs(r1), std::abs(r2));
    if (norm < 1e-10) {
      out.lb = lb;
      out.ub = ub;
      out.residual_f = r1;
      out.residual_g = r2;
      return out;
    }
    double hl = 1e-7 * std::max(1.0, std::abs(lb));
    double hu = 1e-7 * std::max(1.0, std::abs(ub));
    double a1, a2, b1, b2;
    residual(lb + hl, ub, a1, a2);
    residual(lb, ub + hu, b1, b2);
    double j11 = (a1 - r1) / hl, j12 = (b1 - r1) / hu;
    double j21 = (a2 - r2) / hl, j22 = (b2 - r2) / hu;
    double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) break;
    double dl = (r1 * j22 - r2 * j12) / det;
    double du = (r2 * j11 - r1 * j21) / det;
    double scale = 1.0;
    bool stepped = false;
    for (int half = 0; half < 40; ++half) {
      double nl = lb - scale * dl;
      double nu = ub - scale * du;
      if (bounds_valid(nl, nu, target_f_star)) {
        double n1, n2;
        residual(nl, nu, n1, n2);
        if (std::max(std::abs(n1), std::abs(n2)) < norm) {
          lb = nl;
          ub = nu;
          r1 = n1;
          r2 = n2;
          stepped = true;
          break;
        }
      }
      scale *= 0.5;
    }
    if (!stepped) break;
  }

  if (std::max(std::abs(r1), std::abs(r2)) < 1e-10) {
    out.lb = lb;
    out.ub = ub;
    out.residual_f = r1;
    out.residual_g = r2;
    return out;
  }
  CalibrationResult fb = calibrate_by_nested_bisection(target_f_star, target_growth);
  if (std::max(std::abs(fb.residual_f), std::abs(fb.residual_g)) > 1e-8) {
    throw Error(Errc::no_convergence, "uniform-bound calibration did not converge; residuals f: " +
                                          dtos(fb.residual_f) + ", g: " + dtos(fb.residual_g));
  }
  return fb;
}

}  // namespace longrun
