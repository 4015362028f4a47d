// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "accept.hpp"
#include "bet.hpp"
#include "clock.hpp"
#include "errors.hpp"
#include "growth.hpp"

using longrun::AcceptabilityResult;
using longrun::BetModel;
using longrun::ClockModel;
using longrun::DistortionFamily;
using longrun::Errc;
using longrun::Error;
using longrun::acceptability_index;
using longrun::distorted_growth;
using longrun::distorted_mgf;
using longrun::growth_cc;

namespace {
const BetModel kBern53 = BetModel::bernoulli(0.53);
const DistortionFamily kPower = DistortionFamily::power();
}  // namespace

TEST_CASE("power family fixed points and inversion") {
  for (double x : {0.0, 0.3, 1.0, 7.5}) {
    CHECK(kPower.apply(x, 0.0) == 0.0);
    CHECK(kPower.apply(x, 1.0) == 1.0);
    CHECK(kPower.invert(x, 1.0) == 1.0);
    for (double y : {1e-6, 0.1, 1.0, 3.0, 1e3}) {
      CHECK(kPower.apply(x, kPower.invert(x, y)) == doctest::Approx(y).epsilon(1e-12));
    }
    // conservatism: g_x(y) >= y above 1, so the inverse pulls values down
    for (double y : {1.0, 1.5, 10.0}) {
      CHECK(kPower.apply(x, y) >= y * (1.0 - 1e-15));
      CHECK(kPower.invert(x, y) <= y * (1.0 + 1e-15));
    }
  }
  CHECK_THROWS_AS(kPower.apply(-0.5, 1.0), Error);
  CHECK_THROWS_AS(kPower.invert(0.5, -1.0), Error);
}

TEST_CASE("distorted MGF") {
  ClockModel vg = ClockModel::gamma(0.5);
  // x = 0 leaves the MGF untouched
  for (double s : {-1.0, 0.0, 0.5, 1.2}) CHECK(distorted_mgf(vg, kPower, 0.0, s) == vg.mgf(s));
  // s = 0 is pinned at 1 for every stress level
  for (double x : {0.0, 1.0, 10.0}) CHECK(distorted_mgf(vg, kPower, x, 0.0) == 1.0);
  // psi(0.5)^(1/2) = sqrt(16/9) = 4/3
  CHECK(distorted_mgf(vg, kPower, 1.0, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  // the stressed expectation never exceeds the reference measure's value
  for (double s : {0.0, 0.3, 0.9, 1.5}) {
    for (double x : {0.0, 0.5, 2.0, 20.0}) {
      CHECK(distorted_mgf(vg, kPower, x, s) <= vg.mgf(s) * (1.0 + 1e-15));
    }
  }
  // nonincreasing in x for s >= 0
  double prev = std::numeric_limits<double>::infinity();
  for (double x : {0.0, 0.5, 1.0, 4.0}) {
    double v = distorted_mgf(vg, kPower, x, 0.7);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  CHECK_THROWS_AS(distorted_mgf(vg, kPower, 1.0, 3.0), Error);  // outside MGF domain
}

TEST_CASE("distorted growth") {
  ClockModel vg = ClockModel::gamma(0.5);
  double g = growth_cc(vg, kBern53, 0.06);
  // x = 0 reduction is exact
  CHECK(distorted_growth(vg, kPower, 0.0, kBern53, 0.06) == g);
  // f = 0 is a fixed point for every stress level
  for (double x : {0.0, 1.0, 25.0}) CHECK(distorted_growth(vg, kPower, x, kBern53, 0.0) == 0.0);
  // independently: psi_inv(psi(G)^(1/4)) at x = 3
  CHECK(distorted_growth(vg, kPower, 3.0, kBern53, 0.06) ==
        doctest::Approx(0.00022529166890193446).epsilon(1e-12));
  double stressed = distorted_growth(vg, kPower, 3.0, kBern53, 0.06);
  CHECK(stressed > 0.0);
  CHECK(stressed < g);
  // monotone in x when G >= 0
  double prev = g;
  for (double x : {0.5, 1.0, 3.0, 10.0}) {
    double v = distorted_growth(vg, kPower, x, kBern53, 0.06);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  // sign preserved on the ruin side
  double bad = distorted_growth(vg, kPower, 2.0, kBern53, 0.12);
  CHECK(bad < 0.0);
  CHECK(bad > growth_cc(vg, kBern53, 0.12));
}

TEST_CASE("acceptability index: unit hurdle dichotomy") {
  ClockModel vg = ClockModel::gamma(0.5);
  AcceptabilityResult fav = acceptability_index(vg, kPower, kBern53, 0.06, 1.0);
  CHECK(fav.is_infinite);
  CHECK(std::isinf(fav.index));
  AcceptabilityResult ruin = acceptability_index(vg, kPower, kBern53, 0.12, 1.0);
  CHECK_FALSE(ruin.is_infinite);
  CHECK(ruin.index == 0.0);
  CHECK_THROWS_AS(acceptability_index(vg, kPower, kBern53, 0.06, 0.99), Error);
}

TEST_CASE("acceptability index: real hurdle found by bisection") {
  ClockModel vg = ClockModel::gamma(0.5);
  AcceptabilityResult r = acceptability_index(vg, kPower, kBern53, 0.06, 1.0005);
  REQUIRE_FALSE(r.is_infinite);
  // closed form root: log(psi(G))/log(hurdle) - 1
  CHECK(r.index == doctest::Approx(0.80288544268812889).epsilon(2e-8));
  // verify by substitution
  double psi = vg.mgf(growth_cc(vg, kBern53, 0.06));
  CHECK(std::pow(psi, 1.0 / (1.0 + r.index)) == doctest::Approx(1.0005).epsilon(1e-8));

  // a hurdle the investment cannot clear at any stress level
  AcceptabilityResult none = acceptability_index(vg, kPower, kBern53, 0.06, 1.01);
  CHECK(none.index == 0.0);

  // strictly decreasing in the hurdle
  double h1 = acceptability_index(vg, kPower, kBern53, 0.06, 1.0003).index;
  double h2 = acceptability_index(vg, kPower, kBern53, 0.06, 1.0005).index;
  double h3 = acceptability_index(vg, kPower, kBern53, 0.06, 1.0008).index;
  CHECK(h1 > h2);
  CHECK(h2 > h3);
}

TEST_CASE("index is nonincreasing in f between the optimum and the boundary") {
  ClockModel vg = ClockModel::gamma(0.5);
  double prev = std::numeric_limits<double>::infinity();
  for (double f : {0.045, 0.055, 0.065, 0.075}) {
    AcceptabilityResult r = acceptability_index(vg, kPower, kBern53, f, 1.0001);
    REQUIRE_FALSE(r.is_infinite);
    CHECK(r.index <= prev + 1e-9);
    prev = r.index;
  }
}
