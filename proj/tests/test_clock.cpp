// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "clock.hpp"
#include "errors.hpp"
#include "rng.hpp"

using longrun::ClockKind;
using longrun::ClockModel;
using longrun::Errc;
using longrun::Error;
using longrun::RngStream;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("clock construction enforces the theta/kind pairing") {
  CHECK(ClockModel::degenerate().theta() == 0.0);
  CHECK(ClockModel::gamma(0.5).theta() == 0.5);
  CHECK(ClockModel::gamma(0.5).gamma_exponent() == -0.5);
  CHECK(ClockModel::inverse_gaussian(0.5).ig_shape() == 2.0);

  CHECK_THROWS_AS(ClockModel::gamma(0.0), Error);
  CHECK_THROWS_AS(ClockModel::inverse_gaussian(0.0), Error);
  CHECK_THROWS_AS(ClockModel::gamma(-0.1), Error);
  CHECK_THROWS_AS(ClockModel::make(ClockKind::degenerate, 0.5), Error);
  CHECK_THROWS_AS(ClockModel::gamma(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK(ClockModel::make(ClockKind::gamma, 0.25).kind() == ClockKind::gamma);
}

TEST_CASE("mgf closed forms") {
  // degenerate: psi(s) = e^s
  CHECK(ClockModel::degenerate().mgf(0.3) == doctest::Approx(1.349858807576003).epsilon(1e-14));
  // psi(0) = 1 exactly for every kind
  CHECK(ClockModel::degenerate().mgf(0.0) == 1.0);
  CHECK(ClockModel::gamma(0.5).mgf(0.0) == 1.0);
  CHECK(ClockModel::inverse_gaussian(0.5).mgf(0.0) == 1.0);
  // gamma theta=0.5 at s=0.1: (1-0.05)^(-2)
  CHECK(ClockModel::gamma(0.5).mgf(0.1) == doctest::Approx(1.1080332409972299).epsilon(1e-14));
  // IG theta=0.5 (lambda=2) at s=0.5: exp(2 - sqrt(2))
  CHECK(ClockModel::inverse_gaussian(0.5).mgf(0.5) == doctest::Approx(1.7964031893232337).epsilon(1e-14));
  // gamma theta=0.5 at s=0.5: (1-0.25)^(-2) = 16/9
  CHECK(ClockModel::gamma(0.5).mgf(0.5) == doctest::Approx(16.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("mgf domain bounds are enforced, not clamped") {
  CHECK(ClockModel::degenerate().mgf_domain_sup() == kInf);
  CHECK(ClockModel::gamma(0.5).mgf_domain_sup() == 2.0);
  CHECK(ClockModel::inverse_gaussian(0.5).mgf_domain_sup() == 1.0);

  // gamma bound is strict
  CHECK_THROWS_AS(ClockModel::gamma(0.5).mgf(2.0), Error);
  CHECK_THROWS_AS(ClockModel::gamma(0.5).mgf(2.5), Error);
  CHECK_NOTHROW(ClockModel::gamma(0.5).mgf(1.999999));
  // IG bound is attained
  CHECK(ClockModel::inverse_gaussian(0.5).mgf(1.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(ClockModel::inverse_gaussian(0.5).mgf(1.0 + 1e-9), Error);
  // error message names the bound
  try {
    ClockModel::gamma(0.5).mgf(3.0);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::domain);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("inv_mgf closed forms and branch checks") {
  // psi_inv(1) = 0 exactly for every kind
  CHECK(ClockModel::degenerate().inv_mgf(1.0) == 0.0);
  CHECK(ClockModel::gamma(0.5).inv_mgf(1.0) == 0.0);
  CHECK(ClockModel::inverse_gaussian(0.5).inv_mgf(1.0) == 0.0);
  // gamma theta=0.5 at R=1.1: (1.1^-0.5 - 1)/(-0.5)
  CHECK(ClockModel::gamma(0.5).inv_mgf(1.1) == doctest::Approx(0.09307482150881537).epsilon(1e-14));
  // IG theta=0.5 at R=1.1: log1.1 - (log1.1)^2/4
  CHECK(ClockModel::inverse_gaussian(0.5).inv_mgf(1.1) == doctest::Approx(0.09303917221074168).epsilon(1e-14));

  CHECK_THROWS_AS(ClockModel::gamma(0.5).inv_mgf(0.0), Error);
  CHECK_THROWS_AS(ClockModel::gamma(0.5).inv_mgf(-1.0), Error);
  // IG branch: log R must stay below lambda
  CHECK_NOTHROW(ClockModel::inverse_gaussian(0.5).inv_mgf(std::exp(2.0) * 0.999));
  try {
    ClockModel::inverse_gaussian(0.5).inv_mgf(std::exp(2.1));
    FAIL("expected branch error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::branch);
  }
}

TEST_CASE("round trip inv_mgf(mgf(s)) = s on 100-point grids") {
  std::vector<ClockModel> clocks = {ClockModel::degenerate(), ClockModel::gamma(0.5),
                                    ClockModel::gamma(1.3), ClockModel::inverse_gaussian(0.5),
                                    ClockModel::inverse_gaussian(0.2)};
  for (const auto& clock : clocks) {
    double sup = clock.mgf_domain_sup();
    double hi = std::isfinite(sup) ? sup * 0.999 : 5.0;
    double lo = -5.0;
    for (int i = 0; i < 100; ++i) {
      double s = lo + (hi - lo) * i / 99.0;
      CAPTURE(s);
      CHECK(clock.inv_mgf(clock.mgf(s)) == doctest::Approx(s).epsilon(1e-10));
    }
  }
}

TEST_CASE("Jensen ordering: psi(s) >= e^s with equality only when degenerate") {
  for (double theta : {0.1, 0.5, 1.0}) {
    for (const auto& clock : {ClockModel::gamma(theta), ClockModel::inverse_gaussian(theta)}) {
      double sup = clock.mgf_domain_sup();
      for (int i = 0; i < 60; ++i) {
        double s = -3.0 + (sup * 0.95 + 3.0) * i / 59.0;
        CAPTURE(theta);
        CAPTURE(s);
        CHECK(clock.mgf(s) >= std::exp(s) * (1.0 - 1e-14));
        if (std::abs(s) > 0.05) CHECK(clock.mgf(s) > std::exp(s));
      }
    }
  }
  ClockModel deg = ClockModel::degenerate();
  for (double s : {-1.0, 0.0, 0.7}) CHECK(deg.mgf(s) == doctest::Approx(std::exp(s)).epsilon(1e-15));
}

TEST_CASE("mgf and inv_mgf are strictly increasing") {
  for (const auto& clock : {ClockModel::degenerate(), ClockModel::gamma(0.5),
                            ClockModel::inverse_gaussian(0.5)}) {
    double sup = clock.mgf_domain_sup();
    double hi = std::isfinite(sup) ? sup * 0.999 : 4.0;
    double prev_mgf = 0.0;
    for (int i = 0; i <= 80; ++i) {
      double s = -4.0 + (hi + 4.0) * i / 80.0;
      double v = clock.mgf(s);
      CHECK(v > prev_mgf);
      prev_mgf = v;
    }
    double prev_inv = -std::numeric_limits<double>::infinity();
    for (double r = 0.25; r <= 4.0; r += 0.25) {
      double v = clock.inv_mgf(r);
      CHECK(v > prev_inv);
      prev_inv = v;
    }
  }
}

TEST_CASE("mean-1 clock: psi'(0) = 1 by central difference") {
  const double h = 1e-6;
  for (const auto& clock : {ClockModel::degenerate(), ClockModel::gamma(0.5), ClockModel::gamma(2.0),
                            ClockModel::inverse_gaussian(0.5)}) {
    double d = (clock.mgf(h) - clock.mgf(-h)) / (2.0 * h);
    CHECK(d == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("small-theta gamma inversion converges to the logarithm without cancellation") {
  for (double theta : {1e-4, 1e-6}) {
    ClockModel clock = ClockModel::gamma(theta);
    double worst = 0.0;
    for (int i = 0; i <= 150; ++i) {
      double r = 0.5 + 1.5 * i / 150.0;
      worst = std::max(worst, std::abs(clock.inv_mgf(r) - std::log(r)));
    }
    CAPTURE(theta);
    CHECK(worst <= 5.0 * theta);
  }
}

TEST_CASE("sample_increment moments match the clock law") {
  const std::size_t n = 1'000'000;

  SUBCASE("degenerate returns 1 always") {
    RngStream rng(42, 0);
    ClockModel clock = ClockModel::degenerate();
    for (int i = 0; i < 10; ++i) CHECK(clock.sample_increment(rng) == 1.0);
  }

  for (auto [name, clock] : {std::pair<const char*, ClockModel>{"gamma", ClockModel::gamma(0.5)},
                             std::pair<const char*, ClockModel>{"ig", ClockModel::inverse_gaussian(0.5)}}) {
    CAPTURE(name);
    RngStream rng(42, 1);
    double sum = 0.0, sum_sq = 0.0;
    double min_v = kInf;
    for (std::size_t i = 0; i < n; ++i) {
      double z = clock.sample_increment(rng);
      sum += z;
      sum_sq += z * z;
      min_v = std::min(min_v, z);
    }
    double mean = sum / n;
    double var = sum_sq / n - mean * mean;
    CHECK(min_v > 0.0);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.003));
    CHECK(var == doctest::Approx(0.5).epsilon(0.02));
  }
}

TEST_CASE("substreams are reproducible and order-independent") {
  ClockModel clock = ClockModel::gamma(0.5);
  RngStream a(7, 3), b(7, 3), c(7, 4);
  double a1 = clock.sample_increment(a);
  double b1 = clock.sample_increment(b);
  CHECK(a1 == b1);
  CHECK(clock.sample_increment(c) != a1);
}

TEST_CASE("model labels") {
  CHECK(model_label(ClockModel::degenerate()) == "KT");
  CHECK(model_label(ClockModel::gamma(0.5)) == "VG(0.5)");
  CHECK(model_label(ClockModel::inverse_gaussian(0.25)) == "IG(0.25)");
}
