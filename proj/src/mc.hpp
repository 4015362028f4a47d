// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_MC_HPP
#define LONGRUN_MC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bet.hpp"
#include "clock.hpp"

namespace longrun {

enum class SimMode { full, clock_only };

struct SimConfig {
  std::uint64_t periods = 1000;
  std::uint64_t paths = 1;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::full;
  double s_bar = 0.0;           // fixed per-period drift, clock_only mode
  double ruin_floor = 0.5;      // must be < 1
  double growth_ceiling = 2.0;  // must be > 1
};

struct PathRecord {
  double log_terminal_wealth;  // log(W_N / W_0)
  double tau;                  // cumulated clock over the path
  double sample_cov;           // per-path sample covariance of (s_i, Z_i)
  double mean_drift;           // per-path average of the drifts s_i
};

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double q05 = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  double q95 = 0.0;
};

struct SimResult {
  double geo_mean_growth = 0.0;    // (mean over paths of W_N/W_0)^(1/N)
  SummaryStats per_path_growth;    // stats of (W_N/W_0)^(1/N)
  double sample_cov_mean = 0.0;
  double tau_over_n_mean = 0.0;
  double ruin_fraction = 0.0;      // W_N/W_0 < ruin_floor
  double ceiling_fraction = 0.0;   // W_N/W_0 > growth_ceiling
};

/// Simulate subordinated wealth paths.  In full mode each period draws a bet
/// outcome R, maps it to the drift s = psi_inv(R) that reproduces R as the
/// clock-average gross return, draws a clock increment Z and accrues s Z in
/// log space.  In clock_only mode the drift is pinned at config.s_bar and
/// only the clock is random.  Path j consumes the (seed, j) substream, so
/// results are bit-reproducible and independent of the total path count.
/// `records`, when non-null, receives one entry per path.
SimResult simulate(const ClockModel& clock, const BetModel& bet, double f, const SimConfig& config,
                   std::vector<PathRecord>* records = nullptr);

/// clock_only convenience: no bet involved.
SimResult simulate(const ClockModel& clock, const SimConfig& config, std::vector<PathRecord>* records = nullptr);

struct CovarianceRow {
  std::uint64_t periods;
  double mean_abs_cov;
};

/// Measure how fast the per-path sample covariance of (s, Z) concentrates
/// at zero as the horizon grows.
std::vector<CovarianceRow> verify_covariance_vanishing(const ClockModel& clock, const BetModel& bet, double f,
                                                       std::span<const std::uint64_t> n_grid, std::uint64_t paths,
                                                       std::uint64_t seed);

}  // namespace longrun

#endif  // LONGRUN_MC_HPP
