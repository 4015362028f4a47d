// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "accept.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "growth.hpp"
#include "strfmt.hpp"

namespace longrun {

namespace {

void check_xy(double x, double y) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(Errc::invalid_argument, "distortion stress level x must be >= 0, got " + dtos(x));
  }
  if (!(y >= 0.0)) {
    throw Error(Errc::invalid_argument, "distortion argument must be >= 0, got " + dtos(y));
  }
}

constexpr double kIndexCap = 1e3;

}  // namespace

double DistortionFamily::apply(double x, double y) const {
  check_xy(x, y);
  return std::pow(y, 1.0 + x);
}

double DistortionFamily::invert(double x, double y) const {
  check_xy(x, y);
  return std::pow(y, 1.0 / (1.0 + x));
}

double distorted_mgf(const ClockModel& clock, const DistortionFamily& fam, double x, double s) {
  double psi = clock.mgf(s);
  if (x == 0.0) return psi;
  return fam.invert(x, psi);
}

double distorted_growth(const ClockModel& clock, const DistortionFamily& fam, double x, const BetModel& bet,
                        double f) {
  double g = growth_cc(clock, bet, f);
  if (x == 0.0) return g;  // g_0 is the identity
  double psi;
  try {
    psi = clock.mgf(g);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("distorted_growth: growth rate G = ") + dtos(g) +
                              " left the MGF domain: " + e.what());
  }
  double stressed = fam.invert(x, psi);
  try {
    return clock.inv_mgf(stressed);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("distorted_growth: stressed mean ") + dtos(stressed) +
                              " left the inversion domain: " + e.what());
  }
}

AcceptabilityResult acceptability_index(const ClockModel& clock, const DistortionFamily& fam, const BetModel& bet,
                                        double f, double hurdle) {
  if (!(hurdle >= 1.0) || !std::isfinite(hurdle)) {
    throw Error(Errc::invalid_argument, "acceptability hurdle must be >= 1, got " + dtos(hurdle));
  }
  double g = growth_cc(clock, bet, f);
  AcceptabilityResult out;
  if (hurdle == 1.0) {
    // g_x(1) = 1 makes the comparison x-independent: pure sign test of G
    out.is_infinite = g >= 0.0;
    out.index = out.is_infinite ? std::numeric_limits<double>::infinity() : 0.0;
    return out;
  }
  double psi = clock.mgf(g);
  auto clears = [&](double x) { return fam.invert(x, psi) >= hurdle; };
  if (!clears(0.0)) {
    out.index = 0.0;
    return out;
  }
  if (clears(kIndexCap)) {
    out.index = kIndexCap;
    return out;
  }
  double lo = 0.0, hi = kIndexCap;
  while (hi - lo > 1e-8) {
    double mid = 0.5 * (lo + hi);
    if (clears(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.index = 0.5 * (lo + hi);
  return out;
}

}  // namespace longrun
