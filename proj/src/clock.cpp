// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "clock.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"
#include "strfmt.hpp"

namespace longrun {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_theta(double theta) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw Error(Errc::invalid_argument, "clock variance theta must be finite and >= 0, got " + dtos(theta));
  }
}
}  // namespace

ClockModel ClockModel::degenerate() { return ClockModel(ClockKind::degenerate, 0.0); }

ClockModel ClockModel::gamma(double theta) {
  check_theta(theta);
  if (theta == 0.0) {
    throw Error(Errc::invalid_argument, "gamma clock requires theta > 0; use the degenerate clock for theta = 0");
  }
  return ClockModel(ClockKind::gamma, theta);
}

ClockModel ClockModel::inverse_gaussian(double theta) {
  check_theta(theta);
  if (theta == 0.0) {
    throw Error(Errc::invalid_argument,
                "inverse-Gaussian clock requires theta > 0; use the degenerate clock for theta = 0");
  }
  return ClockModel(ClockKind::inverse_gaussian, theta);
}

ClockModel ClockModel::make(ClockKind kind, double theta) {
  switch (kind) {
    case ClockKind::degenerate:
      check_theta(theta);
      if (theta != 0.0) {
        throw Error(Errc::invalid_argument, "degenerate clock has theta = 0, got " + dtos(theta));
      }
      return degenerate();
    case ClockKind::gamma:
      return gamma(theta);
    case ClockKind::inverse_gaussian:
      return inverse_gaussian(theta);
  }
  throw Error(Errc::invalid_argument, "unknown clock kind");
}

double ClockModel::mgf(double s) const {
  if (!std::isfinite(s)) throw Error(Errc::domain, "MGF argument must be finite, got " + dtos(s));
  switch (kind_) {
    case ClockKind::degenerate:
      return std::exp(s);
    case ClockKind::gamma: {
      // (1 - theta s)^(-1/theta); log1p keeps small-theta evaluations exact.
      double sup = 1.0 / theta_;
      if (s >= sup) {
        throw Error(Errc::domain,
                    "gamma clock MGF requires s < 1/theta = " + dtos(sup) + ", got s = " + dtos(s));
      }
      return std::exp(-std::log1p(-theta_ * s) / theta_);
    }
    case ClockKind::inverse_gaussian: {
      // exp(lambda (1 - sqrt(1 - 2s/lambda))) rewritten as
      // exp(2s / (1 + sqrt(1 - 2s/lambda))): same value, no cancellation.
      double lambda = ig_shape();
      double sup = 0.5 * lambda;
      if (s > sup) {
        throw Error(Errc::domain, "inverse-Gaussian clock MGF requires s <= lambda/2 = " + dtos(sup) +
                                      ", got s = " + dtos(s));
      }
      return std::exp(2.0 * s / (1.0 + std::sqrt(1.0 - 2.0 * s / lambda)));
    }
  }
  throw Error(Errc::invalid_argument, "unknown clock kind");
}

double ClockModel::inv_mgf(double r) const {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(Errc::domain, "inv_mgf requires R > 0, got " + dtos(r));
  }
  switch (kind_) {
    case ClockKind::degenerate:
      return std::log(r);
    case ClockKind::gamma: {
      // (R^gamma - 1)/gamma via expm1: stays accurate down to theta ~ 1e-16.
      double g = gamma_exponent();
      return std::expm1(g * std::log(r)) / g;
    }
    case ClockKind::inverse_gaussian: {
      double lambda = ig_shape();
      double lr = std::log(r);
      if (lr > lambda) {
        throw Error(Errc::branch, "inverse-Gaussian inversion requires log R <= lambda = " + dtos(lambda) +
                                      ", got log R = " + dtos(lr));
      }
      return lr - lr * lr / (2.0 * lambda);
    }
  }
  throw Error(Errc::invalid_argument, "unknown clock kind");
}

double ClockModel::mgf_domain_sup() const {
  switch (kind_) {
    case ClockKind::degenerate:
      return kInf;
    case ClockKind::gamma:
      return 1.0 / theta_;
    case ClockKind::inverse_gaussian:
      return 0.5 * ig_shape();
  }
  throw Error(Errc::invalid_argument, "unknown clock kind");
}

double ClockModel::sample_increment(RngStream& rng) const {
  switch (kind_) {
    case ClockKind::degenerate:
      return 1.0;
    case ClockKind::gamma:
      // shape 1/theta, scale theta: mean 1, variance theta
      return rng.gamma_variate(1.0 / theta_, theta_);
    case ClockKind::inverse_gaussian:
      return rng.inverse_gaussian_variate(1.0, ig_shape());
  }
  throw Error(Errc::invalid_argument, "unknown clock kind");
}

std::string model_label(const ClockModel& clock) {
  switch (clock.kind()) {
    case ClockKind::degenerate:
      return "KT";
    case ClockKind::gamma:
      return "VG(" + dtos(clock.theta()) + ")";
    case ClockKind::inverse_gaussian:
      return "IG(" + dtos(clock.theta()) + ")";
  }
  return "?";
}

const char* clock_kind_name(ClockKind kind) {
  switch (kind) {
    case ClockKind::degenerate:
      return "degenerate";
    case ClockKind::gamma:
      return "gamma";
    case ClockKind::inverse_gaussian:
      return "inverse_gaussian";
  }
  return "?";
}

}  // namespace longrun
