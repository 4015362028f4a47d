// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "growth.hpp"

#include <cmath>

#include "errors.hpp"
#include "strfmt.hpp"

namespace longrun {

namespace {

// (e^{c L2} - e^{c L1}) / c, continuous through c = 0 where it equals
// L2 - L1.  This is the integral of v^{c-1} between e^{L1} and e^{L2}.
double powdiff(double c, double l1, double l2) {
  if (c == 0.0) return l2 - l1;
  return (std::expm1(c * l2) - std::expm1(c * l1)) / c;
}

// E[log(1+fu)] for u uniform on [lb, ub], f > 0.
double kt_uniform(double lb, double ub, double f) {
  double v1 = 1.0 + f * lb;
  double v2 = 1.0 + f * ub;
  return (v2 * std::log(v2) - v1 * std::log(v1)) / (f * (ub - lb)) - 1.0;
}

// E[(log(1+fu))^2] for u uniform on [lb, ub], f > 0.  Antiderivative of
// (log v)^2 is v((log v)^2 - 2 log v + 2).
double kt_uniform_sq(double lb, double ub, double f) {
  auto anti = [](double v) {
    double l = std::log(v);
    return v * (l * l - 2.0 * l + 2.0);
  };
  double v1 = 1.0 + f * lb;
  double v2 = 1.0 + f * ub;
  return (anti(v2) - anti(v1)) / (f * (ub - lb));
}

// E[(R^g - 1)/g] for R = 1+fu, u uniform; exact for every g < 0 and stable
// both at g -> 0 and g = -1 (the two forms trade the troublesome factor).
double vg_uniform(double g, double lb, double ub, double f) {
  double l1 = std::log1p(f * lb);
  double l2 = std::log1p(f * ub);
  if (g > -0.5) {
    // G = (v2 a2 - v1 a1) / ((g+1)(v2 - v1)) with a = expm1(gL)/g - 1
    double v1 = 1.0 + f * lb;
    double v2 = 1.0 + f * ub;
    double a1 = std::expm1(g * l1) / g - 1.0;
    double a2 = std::expm1(g * l2) / g - 1.0;
    return (v2 * a2 - v1 * a1) / ((g + 1.0) * (v2 - v1));
  }
  double mean_pow = powdiff(g + 1.0, l1, l2) / (f * (ub - lb));
  return (mean_pow - 1.0) / g;
}

// psi_inv''(1): curvature of the inverse MGF at R = 1, shared by the small-f
// expansion of the growth derivative.
double inv_mgf_curvature_at_one(const ClockModel& clock) {
  switch (clock.kind()) {
    case ClockKind::degenerate:
      return -1.0;
    case ClockKind::gamma:
      return clock.gamma_exponent() - 1.0;
    case ClockKind::inverse_gaussian:
      return -(1.0 + clock.theta());
  }
  return -1.0;
}

double finite_support_growth(const ClockModel& clock, const BetModel& bet, double f) {
  double g = 0.0;
  for (auto [r, p] : bet.outcomes()) g += p * clock.inv_mgf(1.0 + f * r);
  return g;
}

double inv_mgf_derivative(const ClockModel& clock, double r) {
  switch (clock.kind()) {
    case ClockKind::degenerate:
      return 1.0 / r;
    case ClockKind::gamma:
      return std::exp((clock.gamma_exponent() - 1.0) * std::log(r));
    case ClockKind::inverse_gaussian:
      return (1.0 - std::log(r) / clock.ig_shape()) / r;
  }
  return 0.0;
}

}  // namespace

double growth_kt(const BetModel& bet, double f) {
  bet.require_admissible(f);
  if (f == 0.0) return 0.0;
  if (const auto* u = bet.as_uniform()) return kt_uniform(u->lb, u->ub, f);
  double g = 0.0;
  for (auto [r, p] : bet.outcomes()) g += p * std::log1p(f * r);
  return g;
}

double growth_cc(const ClockModel& clock, const BetModel& bet, double f) {
  if (clock.kind() == ClockKind::degenerate) return growth_kt(bet, f);
  bet.require_admissible(f);
  if (f == 0.0) return 0.0;
  if (bet.finite_support()) return finite_support_growth(clock, bet, f);

  const auto* u = bet.as_uniform();
  if (clock.kind() == ClockKind::gamma) {
    return vg_uniform(clock.gamma_exponent(), u->lb, u->ub, f);
  }
  // inverse-Gaussian: psi_inv(R) = log R - (log R)^2 / (2 lambda), both
  // moments of log(1+fu) have exact antiderivatives.
  double lambda = clock.ig_shape();
  double top = std::exp(lambda);
  double r_max = 1.0 + f * u->ub;
  if (r_max > top) {
    throw Error(Errc::branch, "inverse-Gaussian inversion requires gross returns <= e^lambda = " + dtos(top) +
                                  ", got " + dtos(r_max));
  }
  return kt_uniform(u->lb, u->ub, f) - kt_uniform_sq(u->lb, u->ub, f) / (2.0 * lambda);
}

double growth_cc_derivative(const ClockModel& clock, const BetModel& bet, double f) {
  bet.require_admissible(f);
  double mean_u = bet.mean_unit_return();
  if (f == 0.0) return mean_u;
  if (f < 1e-7) {
    // first-order expansion around f = 0 avoids the cancellation in the
    // closed forms when the two support endpoints coincide to rounding
    return mean_u + f * inv_mgf_curvature_at_one(clock) * bet.mean_square_unit_return();
  }

  if (bet.finite_support()) {
    double d = 0.0;
    for (auto [r, p] : bet.outcomes()) d += p * r * inv_mgf_derivative(clock, 1.0 + f * r);
    return d;
  }

  const auto* u = bet.as_uniform();
  double lb = u->lb, ub = u->ub;
  double l1 = std::log1p(f * lb);
  double l2 = std::log1p(f * ub);
  double width = ub - lb;
  // E[u/(1+fu)] = (f(ub-lb) - (L2-L1)) / (f^2 (ub-lb))
  double d_log = (f * width - (l2 - l1)) / (f * f * width);
  switch (clock.kind()) {
    case ClockKind::degenerate:
      return d_log;
    case ClockKind::gamma: {
      double g = clock.gamma_exponent();
      return (powdiff(g + 1.0, l1, l2) - powdiff(g, l1, l2)) / (f * f * width);
    }
    case ClockKind::inverse_gaussian: {
      // E[u log v / v] = [v log v - v - (log v)^2/2] / f^2 per unit width
      auto anti = [](double v) {
        double l = std::log(v);
        return v * l - v - 0.5 * l * l;
      };
      double v1 = 1.0 + f * lb;
      double v2 = 1.0 + f * ub;
      double cross = (anti(v2) - anti(v1)) / (f * f * width);
      return d_log - cross / clock.ig_shape();
    }
  }
  throw Error(Errc::invalid_argument, "unknown clock kind");
}

GrowthCurve growth_curve(const ClockModel& clock, const BetModel& bet, std::span<const double> f_grid) {
  GrowthCurve curve{model_label(clock), {}, clock, bet};
  curve.points.reserve(f_grid.size());
  double prev = -1.0;
  for (double f : f_grid) {
    if (f <= prev) {
      throw Error(Errc::invalid_argument, "growth curve grid must be strictly increasing near f = " + dtos(f));
    }
    prev = f;
    try {
      curve.points.push_back({f, growth_cc(clock, bet, f)});
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (curve point f = " + dtos(f) + ")");
    }
  }
  return curve;
}

}  // namespace longrun
