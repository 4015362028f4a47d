// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "bet.hpp"
#include "clock.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "mc.hpp"

using longrun::BetModel;
using longrun::ClockModel;
using longrun::Error;
using longrun::PathRecord;
using longrun::SimConfig;
using longrun::SimMode;
using longrun::SimResult;
using longrun::simulate;
using longrun::verify_covariance_vanishing;

namespace {
const BetModel kBern53 = BetModel::bernoulli(0.53);

SimConfig base_config(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  SimConfig cfg;
  cfg.periods = n;
  cfg.paths = m;
  cfg.seed = seed;
  return cfg;
}
}  // namespace

TEST_CASE("config validation") {
  SimConfig cfg = base_config(0, 10, 1);
  CHECK_THROWS_AS(simulate(ClockModel::degenerate(), kBern53, 0.05, cfg), Error);
  cfg = base_config(10, 10, 1);
  cfg.ruin_floor = 1.5;
  CHECK_THROWS_AS(simulate(ClockModel::degenerate(), kBern53, 0.05, cfg), Error);
  cfg = base_config(10, 10, 1);
  cfg.growth_ceiling = 0.9;
  CHECK_THROWS_AS(simulate(ClockModel::degenerate(), kBern53, 0.05, cfg), Error);
  // clock_only drift must respect the MGF domain
  cfg = base_config(10, 10, 1);
  cfg.mode = SimMode::clock_only;
  cfg.s_bar = 5.0;  // above 1/theta = 2
  CHECK_THROWS_AS(simulate(ClockModel::gamma(0.5), cfg), Error);
}

TEST_CASE("no randomness left: sure bet under the degenerate clock") {
  BetModel sure = BetModel::discrete({0.06}, {1.0});
  SimConfig cfg = base_config(250, 3, 9);
  std::vector<PathRecord> recs;
  SimResult res = simulate(ClockModel::degenerate(), sure, 1.0, cfg, &recs);
  for (const auto& r : recs) {
    CHECK(r.log_terminal_wealth / 250.0 == doctest::Approx(std::log(1.06)).epsilon(1e-13));
    CHECK(r.tau == doctest::Approx(250.0).epsilon(1e-15));
    CHECK(r.sample_cov == 0.0);
  }
  CHECK(res.geo_mean_growth == doctest::Approx(1.06).epsilon(1e-12));
  CHECK(res.per_path_growth.median == doctest::Approx(1.06).epsilon(1e-12));
}

TEST_CASE("single Bernoulli path tracks the Kelly growth rate") {
  SimConfig cfg = base_config(1000, 1, 31);
  std::vector<PathRecord> recs;
  simulate(ClockModel::degenerate(), kBern53, 0.06, cfg, &recs);
  double g_kt = longrun::growth_kt(kBern53, 0.06);
  // binomial sampling error: ~4 sigma of the per-period log-return spread
  double sigma = std::sqrt(0.53 * 0.47) * (std::log(1.06) - std::log(0.94));
  CHECK(std::abs(recs[0].log_terminal_wealth / 1000.0 - g_kt) < 4.0 * sigma / std::sqrt(1000.0));
}

TEST_CASE("clock_only geometric mean matches the MGF identity") {
  // gamma clock: psi(0.5) = (1 - 0.25)^-2 = 16/9
  SimConfig cfg = base_config(20, 100'000, 2026);
  cfg.mode = SimMode::clock_only;
  cfg.s_bar = 0.5;
  SimResult res = simulate(ClockModel::gamma(0.5), cfg);
  CHECK(res.geo_mean_growth == doctest::Approx(16.0 / 9.0).epsilon(0.01));
  CHECK(res.tau_over_n_mean == doctest::Approx(1.0).epsilon(0.01));
  CHECK(res.sample_cov_mean == 0.0);

  // IG clock: psi(0.4) = exp(2(1 - sqrt(0.6)))
  cfg.s_bar = 0.4;
  SimResult ig = simulate(ClockModel::inverse_gaussian(0.5), cfg);
  CHECK(ig.geo_mean_growth == doctest::Approx(1.5695777929666937).epsilon(0.01));
}

TEST_CASE("per-path decomposition: log growth = cov + mean drift x clock average") {
  SimConfig cfg = base_config(500, 50, 5);
  std::vector<PathRecord> recs;
  simulate(ClockModel::gamma(0.5), kBern53, 0.06, cfg, &recs);
  for (const auto& r : recs) {
    double per_period = r.log_terminal_wealth / 500.0;
    double reconstructed = r.sample_cov + r.mean_drift * r.tau / 500.0;
    CHECK(per_period == doctest::Approx(reconstructed).epsilon(1e-12));
  }
}

TEST_CASE("simulation is bit-reproducible and prefix-stable in the path count") {
  SimConfig cfg = base_config(200, 100, 123);
  std::vector<PathRecord> a, b;
  SimResult ra = simulate(ClockModel::gamma(0.5), kBern53, 0.06, cfg, &a);
  SimResult rb = simulate(ClockModel::gamma(0.5), kBern53, 0.06, cfg, &b);
  CHECK(ra.geo_mean_growth > 0.0);
  CHECK(ra.tau_over_n_mean > 0.0);
  CHECK(ra.geo_mean_growth == rb.geo_mean_growth);
  CHECK(ra.per_path_growth.median == rb.per_path_growth.median);
  CHECK(ra.sample_cov_mean == rb.sample_cov_mean);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].log_terminal_wealth == b[i].log_terminal_wealth);
  }

  cfg.paths = 40;
  std::vector<PathRecord> prefix;
  simulate(ClockModel::gamma(0.5), kBern53, 0.06, cfg, &prefix);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    CHECK(prefix[i].log_terminal_wealth == a[i].log_terminal_wealth);
    CHECK(prefix[i].tau == a[i].tau);
    CHECK(prefix[i].sample_cov == a[i].sample_cov);
  }
}

TEST_CASE("median per-path growth converges to exp(G)") {
  SimConfig cfg = base_config(100'000, 200, 404);
  SimResult res = simulate(ClockModel::gamma(0.5), kBern53, 0.06, cfg);
  double g = longrun::growth_cc(ClockModel::gamma(0.5), kBern53, 0.06);
  // per-period std of sZ from the closed forms
  double s_w = 2.0 * (1.0 - 1.0 / std::sqrt(1.06));
  double s_l = 2.0 * (1.0 - 1.0 / std::sqrt(0.94));
  double es2 = 0.53 * s_w * s_w + 0.47 * s_l * s_l;
  double sigma = std::sqrt(es2 * 1.5 - g * g);
  CHECK(std::abs(res.per_path_growth.median - std::exp(g)) < 10.0 * sigma / std::sqrt(100'000.0));
}

TEST_CASE("ruin fraction is monotone across the threshold") {
  double prev = -1.0;
  for (double f : {0.04, 0.07, 0.09, 0.12}) {
    SimConfig cfg = base_config(5000, 200, 808);
    cfg.ruin_floor = 1.0 - 1e-9;
    cfg.growth_ceiling = 1.0 + 1e-9;
    SimResult res = simulate(ClockModel::gamma(0.5), kBern53, f, cfg);
    CHECK(res.ruin_fraction >= prev);
    CHECK(res.ruin_fraction + res.ceiling_fraction <= 1.0);
    prev = res.ruin_fraction;
  }
}

TEST_CASE("log-space accumulation survives enormous terminal wealth") {
  SimConfig cfg = base_config(400, 50, 11);
  cfg.mode = SimMode::clock_only;
  cfg.s_bar = 1.99;  // per-period factor psi(1.99) ~ 1e4
  SimResult res = simulate(ClockModel::gamma(0.5), cfg);
  CHECK(std::isfinite(res.geo_mean_growth));
  CHECK(res.geo_mean_growth > 1.0);
}

TEST_CASE("sample covariance concentrates at zero") {
  // degenerate clock: Z = 1 identically, covariance vanishes exactly
  std::vector<std::uint64_t> n_one = {50};
  auto deg_rows = verify_covariance_vanishing(ClockModel::degenerate(), kBern53, 0.06, n_one, 64, 3);
  CHECK(deg_rows[0].mean_abs_cov == 0.0);

  // gamma clock at N = 10^4: below 3 sigma_s sigma_Z / sqrt(N)
  std::vector<std::uint64_t> n_grid = {10'000};
  auto rows = verify_covariance_vanishing(ClockModel::gamma(0.5), kBern53, 0.06, n_grid, 1000, 3);
  double s_w = 2.0 * (1.0 - 1.0 / std::sqrt(1.06));
  double s_l = 2.0 * (1.0 - 1.0 / std::sqrt(0.94));
  double sigma_s = std::sqrt(0.53 * 0.47) * (s_w - s_l);
  CHECK(rows[0].mean_abs_cov <= 3.0 * sigma_s * std::sqrt(0.5) / 100.0);

  // CLT scaling: quadrupling sqrt(N) quarters the mean |cov|
  std::vector<std::uint64_t> pair = {100, 1600};
  auto scaling = verify_covariance_vanishing(ClockModel::gamma(0.5), kBern53, 0.06, pair, 2000, 17);
  double ratio = scaling[0].mean_abs_cov / scaling[1].mean_abs_cov;
  CHECK(ratio > 4.0 / 1.5);
  CHECK(ratio < 4.0 * 1.5);
  CHECK(scaling[0].mean_abs_cov > scaling[1].mean_abs_cov);
}

TEST_CASE("clock_only overload rejects full mode") {
  SimConfig cfg = base_config(10, 10, 1);
  cfg.mode = SimMode::full;
  CHECK_THROWS_AS(simulate(ClockModel::gamma(0.5), cfg), Error);
}
