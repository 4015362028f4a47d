// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "mc.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "rng.hpp"
#include "strfmt.hpp"

namespace longrun {

namespace {

class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void validate_config(const ClockModel& clock, const SimConfig& cfg) {
  if (cfg.periods < 1 || cfg.paths < 1) {
    throw Error(Errc::config, "simulation requires periods >= 1 and paths >= 1");
  }
  if (!(cfg.ruin_floor > 0.0) || !(cfg.ruin_floor < 1.0)) {
    throw Error(Errc::config, "ruin_floor must lie in (0, 1), got " + dtos(cfg.ruin_floor));
  }
  if (!(cfg.growth_ceiling > 1.0)) {
    throw Error(Errc::config, "growth_ceiling must exceed 1, got " + dtos(cfg.growth_ceiling));
  }
  if (cfg.mode == SimMode::clock_only) {
    // also rejects s_bar at/above the MGF domain boundary
    clock.mgf(cfg.s_bar);
  }
}

// Bet outcome sampler mapping each draw straight to the per-period drift
// s = psi_inv(R).  Finite-support drifts are precomputed; the uniform
// variant validates its support endpoints once and inverts per draw.
class DriftSampler {
 public:
  DriftSampler(const ClockModel& clock, const BetModel& bet, double f) : clock_(clock), f_(f) {
    bet.require_admissible(f);
    if (bet.finite_support()) {
      double cum = 0.0;
      for (auto [r, p] : bet.outcomes()) {
        cum += p;
        cum_probs_.push_back(cum);
        drifts_.push_back(clock.inv_mgf(1.0 + f * r));
      }
      cum_probs_.back() = 1.0;
    } else {
      const auto* u = bet.as_uniform();
      lb_ = u->lb;
      width_ = u->ub - u->lb;
      clock.inv_mgf(1.0 + f * u->lb);
      clock.inv_mgf(1.0 + f * u->ub);
      uniform_ = true;
    }
  }

  double draw(RngStream& rng) const {
    double u = rng.uniform01();
    if (!uniform_) {
      for (std::size_t i = 0; i + 1 < cum_probs_.size(); ++i) {
        if (u < cum_probs_[i]) return drifts_[i];
      }
      return drifts_.back();
    }
    return clock_.inv_mgf(1.0 + f_ * (lb_ + width_ * u));
  }

 private:
  const ClockModel& clock_;
  double f_;
  bool uniform_ = false;
  double lb_ = 0.0, width_ = 0.0;
  std::vector<double> cum_probs_;
  std::vector<double> drifts_;
};

PathRecord run_path(const ClockModel& clock, const DriftSampler* sampler, const SimConfig& cfg,
                    std::uint64_t path_index) {
  RngStream rng(cfg.seed, path_index);
  const std::uint64_t n = cfg.periods;
  double sum_sz = 0.0, sum_s = 0.0, sum_z = 0.0;
  if (cfg.mode == SimMode::clock_only) {
    for (std::uint64_t i = 0; i < n; ++i) sum_z += clock.sample_increment(rng);
    return {cfg.s_bar * sum_z, sum_z, 0.0, cfg.s_bar};
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    double s = sampler->draw(rng);
    double z = clock.sample_increment(rng);
    sum_sz += s * z;
    sum_s += s;
    sum_z += z;
  }
  double inv_n = 1.0 / static_cast<double>(n);
  double cov = sum_sz * inv_n - (sum_s * inv_n) * (sum_z * inv_n);
  return {sum_sz, sum_z, cov, sum_s * inv_n};
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  double pos = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

SimResult reduce(const std::vector<PathRecord>& recs, const SimConfig& cfg) {
  const double n = static_cast<double>(cfg.periods);
  const double m = static_cast<double>(recs.size());
  const double log_floor = std::log(cfg.ruin_floor);
  const double log_ceiling = std::log(cfg.growth_ceiling);

  double max_log = -std::numeric_limits<double>::infinity();
  for (const auto& r : recs) max_log = std::max(max_log, r.log_terminal_wealth);

  KahanSum exp_sum, growth_sum, cov_sum, tau_sum;
  std::vector<double> growths;
  growths.reserve(recs.size());
  std::size_t ruined = 0, above = 0;
  for (const auto& r : recs) {
    exp_sum.add(std::exp(r.log_terminal_wealth - max_log));
    double g = std::exp(r.log_terminal_wealth / n);
    growths.push_back(g);
    growth_sum.add(g);
    cov_sum.add(r.sample_cov);
    tau_sum.add(r.tau / n);
    if (r.log_terminal_wealth < log_floor) ++ruined;
    if (r.log_terminal_wealth > log_ceiling) ++above;
  }
  std::sort(growths.begin(), growths.end());

  SimResult out;
  out.geo_mean_growth = std::exp((max_log + std::log(exp_sum.value() / m)) / n);
  out.per_path_growth.mean = growth_sum.value() / m;
  out.per_path_growth.median = quantile(growths, 0.5);
  out.per_path_growth.q05 = quantile(growths, 0.05);
  out.per_path_growth.q25 = quantile(growths, 0.25);
  out.per_path_growth.q75 = quantile(growths, 0.75);
  out.per_path_growth.q95 = quantile(growths, 0.95);
  out.sample_cov_mean = cov_sum.value() / m;
  out.tau_over_n_mean = tau_sum.value() / m;
  out.ruin_fraction = static_cast<double>(ruined) / m;
  out.ceiling_fraction = static_cast<double>(above) / m;
  return out;
}

}  // namespace

SimResult simulate(const ClockModel& clock, const BetModel& bet, double f, const SimConfig& config,
                   std::vector<PathRecord>* records) {
  validate_config(clock, config);
  std::vector<PathRecord> recs;
  recs.reserve(config.paths);
  if (config.mode == SimMode::clock_only) {
    for (std::uint64_t j = 0; j < config.paths; ++j) recs.push_back(run_path(clock, nullptr, config, j));
  } else {
    DriftSampler sampler(clock, bet, f);
    for (std::uint64_t j = 0; j < config.paths; ++j) recs.push_back(run_path(clock, &sampler, config, j));
  }
  SimResult out = reduce(recs, config);
  if (records) *records = std::move(recs);
  return out;
}

SimResult simulate(const ClockModel& clock, const SimConfig& config, std::vector<PathRecord>* records) {
  if (config.mode != SimMode::clock_only) {
    throw Error(Errc::config, "bet-free simulate() overload requires clock_only mode");
  }
  // any placeholder bet works: clock_only paths never touch it
  return simulate(clock, BetModel::bernoulli(0.5), 0.0, config, records);
}

std::vector<CovarianceRow> verify_covariance_vanishing(const ClockModel& clock, const BetModel& bet, double f,
                                                       std::span<const std::uint64_t> n_grid, std::uint64_t paths,
                                                       std::uint64_t seed) {
  if (paths < 1 || n_grid.empty()) {
    throw Error(Errc::config, "covariance scan requires paths >= 1 and a non-empty horizon grid");
  }
  DriftSampler sampler(clock, bet, f);
  std::vector<CovarianceRow> rows;
  rows.reserve(n_grid.size());
  for (std::size_t k = 0; k < n_grid.size(); ++k) {
    SimConfig cfg;
    cfg.periods = n_grid[k];
    cfg.paths = paths;
    cfg.seed = seed;
    cfg.mode = SimMode::full;
    if (cfg.periods < 1) throw Error(Errc::config, "covariance scan horizons must be >= 1");
    KahanSum abs_cov;
    for (std::uint64_t j = 0; j < paths; ++j) {
      PathRecord rec = run_path(clock, &sampler, cfg, k * paths + j);
      abs_cov.add(std::abs(rec.sample_cov));
    }
    rows.push_back({n_grid[k], abs_cov.value() / static_cast<double>(paths)});
  }
  return rows;
}

}  // namespace longrun
