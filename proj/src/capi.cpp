// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "longrun/longrun.h"

#include <cstring>
#include <string>
#include <vector>

#include "accept.hpp"
#include "bet.hpp"
#include "clock.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "mc.hpp"
#include "rng.hpp"
#include "solve.hpp"

using longrun::BetModel;
using longrun::ClockModel;
using longrun::Errc;
using longrun::Error;

extern "C" {

struct lr_clock {
  ClockModel rep;
};

struct lr_bet {
  BetModel rep;
};

}  // extern "C"

namespace {

thread_local std::string t_last_error;

lr_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
      return LR_ERR_INVALID_ARGUMENT;
    case Errc::domain:
      return LR_ERR_DOMAIN;
    case Errc::branch:
      return LR_ERR_BRANCH;
    case Errc::no_convergence:
      return LR_ERR_NO_CONVERGENCE;
    case Errc::config:
      return LR_ERR_CONFIG;
  }
  return LR_ERR_INTERNAL;
}

template <typename Fn>
lr_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return LR_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LR_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return LR_ERR_INTERNAL;
  }
}

lr_status fail_invalid(const char* msg) {
  t_last_error = msg;
  return LR_ERR_INVALID_ARGUMENT;
}

longrun::ClockKind to_kind(lr_clock_kind kind) {
  switch (kind) {
    case LR_CLOCK_DEGENERATE:
      return longrun::ClockKind::degenerate;
    case LR_CLOCK_GAMMA:
      return longrun::ClockKind::gamma;
    case LR_CLOCK_INVERSE_GAUSSIAN:
      return longrun::ClockKind::inverse_gaussian;
  }
  throw Error(Errc::invalid_argument, "unknown clock kind code");
}

longrun::SolveOptions to_options(const lr_solve_options* opts) {
  longrun::SolveOptions o;
  if (opts != nullptr) {
    o.f_tol = opts->f_tol;
    o.search_upper = opts->search_upper;
    o.max_iterations = opts->max_iterations;
    o.use_golden = opts->use_golden != 0;
  }
  return o;
}

void fill_result(const longrun::SolveResult& r, lr_solve_result* out) {
  out->f_star = r.f_star;
  out->g_at_f_star = r.g_at_f_star;
  out->has_ruin_threshold = r.has_ruin_threshold ? 1 : 0;
  out->f_c = r.f_c;
  out->iterations = r.iterations;
  out->opt_residual = r.opt_residual;
  out->root_residual = r.root_residual;
  out->opt_bracket_lo = r.opt_bracket_lo;
  out->opt_bracket_hi = r.opt_bracket_hi;
  out->root_bracket_lo = r.root_bracket_lo;
  out->root_bracket_hi = r.root_bracket_hi;
}

longrun::SimConfig to_config(const lr_sim_config* config) {
  longrun::SimConfig c;
  c.periods = config->periods;
  c.paths = config->paths;
  c.seed = config->seed;
  c.mode = config->mode == LR_SIM_CLOCK_ONLY ? longrun::SimMode::clock_only : longrun::SimMode::full;
  c.s_bar = config->s_bar;
  c.ruin_floor = config->ruin_floor;
  c.growth_ceiling = config->growth_ceiling;
  return c;
}

longrun::DistortionFamily to_family(lr_distortion_kind kind) {
  if (kind != LR_DISTORTION_POWER) throw Error(Errc::invalid_argument, "unknown distortion kind code");
  return longrun::DistortionFamily::power();
}

}  // namespace

extern "C" {

const char* lr_status_name(lr_status status) {
  switch (status) {
    case LR_OK:
      return "ok";
    case LR_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case LR_ERR_DOMAIN:
      return "domain";
    case LR_ERR_BRANCH:
      return "branch";
    case LR_ERR_NO_CONVERGENCE:
      return "no_convergence";
    case LR_ERR_CONFIG:
      return "config";
    case LR_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* lr_last_error_message(void) { return t_last_error.c_str(); }

const char* lr_version(void) { return "0.1.0"; }

lr_status lr_clock_create(lr_clock_kind kind, double theta, lr_clock** out) {
  if (out == nullptr) return fail_invalid("out pointer is null");
  return guarded([&] { *out = new lr_clock{ClockModel::make(to_kind(kind), theta)}; });
}

void lr_clock_destroy(lr_clock* clock) { delete clock; }

lr_clock_kind lr_clock_get_kind(const lr_clock* clock) {
  switch (clock->rep.kind()) {
    case longrun::ClockKind::degenerate:
      return LR_CLOCK_DEGENERATE;
    case longrun::ClockKind::gamma:
      return LR_CLOCK_GAMMA;
    case longrun::ClockKind::inverse_gaussian:
      return LR_CLOCK_INVERSE_GAUSSIAN;
  }
  return LR_CLOCK_DEGENERATE;
}

double lr_clock_get_theta(const lr_clock* clock) { return clock->rep.theta(); }

lr_status lr_clock_mgf(const lr_clock* clock, double s, double* out) {
  if (clock == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = clock->rep.mgf(s); });
}

lr_status lr_clock_inv_mgf(const lr_clock* clock, double r, double* out) {
  if (clock == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = clock->rep.inv_mgf(r); });
}

lr_status lr_clock_mgf_domain_sup(const lr_clock* clock, double* out) {
  if (clock == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = clock->rep.mgf_domain_sup(); });
}

lr_status lr_clock_sample(const lr_clock* clock, uint64_t seed, uint64_t stream, size_t n, double* out) {
  if (clock == nullptr || (out == nullptr && n > 0)) return fail_invalid("null pointer");
  return guarded([&] {
    longrun::RngStream rng(seed, stream);
    for (size_t i = 0; i < n; ++i) out[i] = clock->rep.sample_increment(rng);
  });
}

lr_status lr_bet_create_bernoulli(double p, lr_bet** out) {
  if (out == nullptr) return fail_invalid("out pointer is null");
  return guarded([&] { *out = new lr_bet{BetModel::bernoulli(p)}; });
}

lr_status lr_bet_create_uniform(double lb, double ub, lr_bet** out) {
  if (out == nullptr) return fail_invalid("out pointer is null");
  return guarded([&] { *out = new lr_bet{BetModel::uniform_return(lb, ub)}; });
}

lr_status lr_bet_create_discrete(const double* returns, const double* probs, size_t n, lr_bet** out) {
  if (out == nullptr || returns == nullptr || probs == nullptr) return fail_invalid("null pointer");
  return guarded([&] {
    *out = new lr_bet{BetModel::discrete(std::vector<double>(returns, returns + n),
                                         std::vector<double>(probs, probs + n))};
  });
}

void lr_bet_destroy(lr_bet* bet) { delete bet; }

lr_status lr_bet_max_fraction(const lr_bet* bet, double* out) {
  if (bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = bet->rep.max_fraction(); });
}

lr_status lr_bet_outcome_count(const lr_bet* bet, size_t* out) {
  if (bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = bet->rep.finite_support() ? bet->rep.outcomes().size() : 0; });
}

lr_status lr_bet_gross_returns(const lr_bet* bet, double f, double* returns, double* probs, size_t cap,
                               size_t* n_out) {
  if (bet == nullptr || returns == nullptr || probs == nullptr || n_out == nullptr) {
    return fail_invalid("null pointer");
  }
  return guarded([&] {
    auto support = bet->rep.gross_returns(f);
    if (support.size() > cap) {
      throw Error(Errc::invalid_argument, "gross_returns buffer too small: need " +
                                              std::to_string(support.size()) + " slots");
    }
    for (size_t i = 0; i < support.size(); ++i) {
      returns[i] = support[i].first;
      probs[i] = support[i].second;
    }
    *n_out = support.size();
  });
}

lr_status lr_bet_gross_return_interval(const lr_bet* bet, double f, double* lo, double* hi) {
  if (bet == nullptr || lo == nullptr || hi == nullptr) return fail_invalid("null pointer");
  return guarded([&] {
    auto [a, b] = bet->rep.gross_return_interval(f);
    *lo = a;
    *hi = b;
  });
}

lr_status lr_growth_kt(const lr_bet* bet, double f, double* out) {
  if (bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = longrun::growth_kt(bet->rep, f); });
}

lr_status lr_growth_cc(const lr_clock* clock, const lr_bet* bet, double f, double* out) {
  if (clock == nullptr || bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = longrun::growth_cc(clock->rep, bet->rep, f); });
}

lr_status lr_growth_cc_derivative(const lr_clock* clock, const lr_bet* bet, double f, double* out) {
  if (clock == nullptr || bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = longrun::growth_cc_derivative(clock->rep, bet->rep, f); });
}

lr_status lr_growth_curve(const lr_clock* clock, const lr_bet* bet, const double* f_grid, size_t n,
                          double* g_out) {
  if (clock == nullptr || bet == nullptr || (n > 0 && (f_grid == nullptr || g_out == nullptr))) {
    return fail_invalid("null pointer");
  }
  return guarded([&] {
    longrun::GrowthCurve curve = longrun::growth_curve(clock->rep, bet->rep, {f_grid, n});
    for (size_t i = 0; i < n; ++i) g_out[i] = curve.points[i].g;
  });
}

lr_status lr_model_label(const lr_clock* clock, char* buf, size_t cap) {
  if (clock == nullptr || buf == nullptr) return fail_invalid("null pointer");
  return guarded([&] {
    std::string label = longrun::model_label(clock->rep);
    if (label.size() + 1 > cap) {
      throw Error(Errc::invalid_argument, "label buffer too small: need " + std::to_string(label.size() + 1));
    }
    std::memcpy(buf, label.c_str(), label.size() + 1);
  });
}

void lr_solve_options_init(lr_solve_options* opts) {
  if (opts == nullptr) return;
  longrun::SolveOptions defaults;
  opts->f_tol = defaults.f_tol;
  opts->search_upper = defaults.search_upper;
  opts->max_iterations = defaults.max_iterations;
  opts->use_golden = defaults.use_golden ? 1 : 0;
}

lr_status lr_optimal_fraction(const lr_clock* clock, const lr_bet* bet, const lr_solve_options* opts,
                              lr_solve_result* out) {
  if (clock == nullptr || bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { fill_result(longrun::optimal_fraction(clock->rep, bet->rep, to_options(opts)), out); });
}

lr_status lr_ruin_threshold(const lr_clock* clock, const lr_bet* bet, const lr_solve_options* opts,
                            lr_solve_result* out) {
  if (clock == nullptr || bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { fill_result(longrun::ruin_threshold(clock->rep, bet->rep, to_options(opts)), out); });
}

lr_status lr_calibrate_uniform_bounds(double target_f_star, double target_growth, double* lb_out,
                                      double* ub_out) {
  if (lb_out == nullptr || ub_out == nullptr) return fail_invalid("null pointer");
  return guarded([&] {
    longrun::CalibrationResult r = longrun::calibrate_uniform_bounds(target_f_star, target_growth);
    *lb_out = r.lb;
    *ub_out = r.ub;
  });
}

void lr_sim_config_init(lr_sim_config* config) {
  if (config == nullptr) return;
  longrun::SimConfig defaults;
  config->periods = defaults.periods;
  config->paths = defaults.paths;
  config->seed = defaults.seed;
  config->mode = LR_SIM_FULL;
  config->s_bar = defaults.s_bar;
  config->ruin_floor = defaults.ruin_floor;
  config->growth_ceiling = defaults.growth_ceiling;
}

lr_status lr_simulate(const lr_clock* clock, const lr_bet* bet, double f, const lr_sim_config* config,
                      lr_sim_result* out, double* path_log_wealth, double* path_tau, double* path_cov) {
  if (clock == nullptr || config == nullptr || out == nullptr) return fail_invalid("null pointer");
  if (bet == nullptr && config->mode != LR_SIM_CLOCK_ONLY) {
    return fail_invalid("bet may be null only in clock_only mode");
  }
  return guarded([&] {
    longrun::SimConfig cfg = to_config(config);
    std::vector<longrun::PathRecord> records;
    bool want_paths = path_log_wealth != nullptr || path_tau != nullptr || path_cov != nullptr;
    longrun::SimResult r = bet == nullptr
                               ? longrun::simulate(clock->rep, cfg, want_paths ? &records : nullptr)
                               : longrun::simulate(clock->rep, bet->rep, f, cfg, want_paths ? &records : nullptr);
    out->geo_mean_growth = r.geo_mean_growth;
    out->growth_mean = r.per_path_growth.mean;
    out->growth_median = r.per_path_growth.median;
    out->growth_q05 = r.per_path_growth.q05;
    out->growth_q25 = r.per_path_growth.q25;
    out->growth_q75 = r.per_path_growth.q75;
    out->growth_q95 = r.per_path_growth.q95;
    out->sample_cov_mean = r.sample_cov_mean;
    out->tau_over_n_mean = r.tau_over_n_mean;
    out->ruin_fraction = r.ruin_fraction;
    out->ceiling_fraction = r.ceiling_fraction;
    if (want_paths) {
      for (size_t i = 0; i < records.size(); ++i) {
        if (path_log_wealth) path_log_wealth[i] = records[i].log_terminal_wealth;
        if (path_tau) path_tau[i] = records[i].tau;
        if (path_cov) path_cov[i] = records[i].sample_cov;
      }
    }
  });
}

lr_status lr_covariance_scan(const lr_clock* clock, const lr_bet* bet, double f, const uint64_t* n_grid,
                             size_t n_count, uint64_t paths, uint64_t seed, double* mean_abs_cov_out) {
  if (clock == nullptr || bet == nullptr || n_grid == nullptr || mean_abs_cov_out == nullptr) {
    return fail_invalid("null pointer");
  }
  return guarded([&] {
    auto rows = longrun::verify_covariance_vanishing(clock->rep, bet->rep, f, {n_grid, n_count}, paths, seed);
    for (size_t i = 0; i < rows.size(); ++i) mean_abs_cov_out[i] = rows[i].mean_abs_cov;
  });
}

lr_status lr_distortion_apply(lr_distortion_kind kind, double x, double y, double* out) {
  if (out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = to_family(kind).apply(x, y); });
}

lr_status lr_distortion_invert(lr_distortion_kind kind, double x, double y, double* out) {
  if (out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = to_family(kind).invert(x, y); });
}

lr_status lr_distorted_mgf(const lr_clock* clock, lr_distortion_kind kind, double x, double s, double* out) {
  if (clock == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = longrun::distorted_mgf(clock->rep, to_family(kind), x, s); });
}

lr_status lr_distorted_growth(const lr_clock* clock, lr_distortion_kind kind, double x, const lr_bet* bet,
                              double f, double* out) {
  if (clock == nullptr || bet == nullptr || out == nullptr) return fail_invalid("null pointer");
  return guarded([&] { *out = longrun::distorted_growth(clock->rep, to_family(kind), x, bet->rep, f); });
}

lr_status lr_acceptability_index(const lr_clock* clock, lr_distortion_kind kind, const lr_bet* bet, double f,
                                 double hurdle, double* index_out, int* is_infinite_out) {
  if (clock == nullptr || bet == nullptr || index_out == nullptr || is_infinite_out == nullptr) {
    return fail_invalid("null pointer");
  }
  return guarded([&] {
    longrun::AcceptabilityResult r =
        longrun::acceptability_index(clock->rep, to_family(kind), bet->rep, f, hurdle);
    *index_out = r.index;
    *is_infinite_out = r.is_infinite ? 1 : 0;
  });
}

}  // extern "C"
