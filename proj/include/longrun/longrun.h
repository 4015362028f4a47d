/* Copyright 2026 the longrun authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * longrun: long-run investment growth under stochastic clocks.
 *
 * C interface over the longrun core.  All functions return lr_status;
 * results come back through out-parameters.  On failure the out-parameters
 * are untouched and lr_last_error_message() (thread-local) describes what
 * went wrong.  Handles are created/destroyed explicitly and are immutable
 * after creation, so they may be shared across threads.
 */

#ifndef LONGRUN_H
#define LONGRUN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LONGRUN_API __declspec(dllexport)
#else
#define LONGRUN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lr_status {
  LR_OK = 0,
  LR_ERR_INVALID_ARGUMENT = 1, /* malformed model or parameter */
  LR_ERR_DOMAIN = 2,           /* input outside an analytic domain */
  LR_ERR_BRANCH = 3,           /* inversion branch not valid */
  LR_ERR_NO_CONVERGENCE = 4,   /* iterative solver exhausted */
  LR_ERR_CONFIG = 5,           /* inconsistent run configuration */
  LR_ERR_INTERNAL = 6
} lr_status;

LONGRUN_API const char* lr_status_name(lr_status status);

/* Message for the most recent failure on this thread; empty string if none. */
LONGRUN_API const char* lr_last_error_message(void);

LONGRUN_API const char* lr_version(void);

/* ---------------- clocks ---------------- */

typedef struct lr_clock lr_clock;

typedef enum lr_clock_kind {
  LR_CLOCK_DEGENERATE = 0,
  LR_CLOCK_GAMMA = 1,
  LR_CLOCK_INVERSE_GAUSSIAN = 2
} lr_clock_kind;

/* theta is the variance of the mean-1 unit clock increment; it must be 0
 * exactly for the degenerate kind and positive otherwise. */
LONGRUN_API lr_status lr_clock_create(lr_clock_kind kind, double theta, lr_clock** out);
LONGRUN_API void lr_clock_destroy(lr_clock* clock);
LONGRUN_API lr_clock_kind lr_clock_get_kind(const lr_clock* clock);
LONGRUN_API double lr_clock_get_theta(const lr_clock* clock);

/* psi(s) = E[exp(s Z)] */
LONGRUN_API lr_status lr_clock_mgf(const lr_clock* clock, double s, double* out);
/* psi^{-1}(r); r > 0, and log r <= lambda for the inverse-Gaussian kind */
LONGRUN_API lr_status lr_clock_inv_mgf(const lr_clock* clock, double r, double* out);
/* supremum of the MGF domain (+infinity for the degenerate kind) */
LONGRUN_API lr_status lr_clock_mgf_domain_sup(const lr_clock* clock, double* out);
/* n unit-period increments from substream (seed, stream) */
LONGRUN_API lr_status lr_clock_sample(const lr_clock* clock, uint64_t seed, uint64_t stream, size_t n,
                                      double* out);

/* ---------------- bets ---------------- */

typedef struct lr_bet lr_bet;

LONGRUN_API lr_status lr_bet_create_bernoulli(double p, lr_bet** out);
LONGRUN_API lr_status lr_bet_create_uniform(double lb, double ub, lr_bet** out);
LONGRUN_API lr_status lr_bet_create_discrete(const double* returns, const double* probs, size_t n, lr_bet** out);
LONGRUN_API void lr_bet_destroy(lr_bet* bet);

/* least upper bound on admissible fractions (may be +infinity) */
LONGRUN_API lr_status lr_bet_max_fraction(const lr_bet* bet, double* out);
/* number of outcomes; 0 for the continuous (uniform) variant */
LONGRUN_API lr_status lr_bet_outcome_count(const lr_bet* bet, size_t* out);
/* gross returns and probabilities at fraction f (finite support only);
 * cap is the capacity of both buffers */
LONGRUN_API lr_status lr_bet_gross_returns(const lr_bet* bet, double f, double* returns, double* probs,
                                           size_t cap, size_t* n_out);
/* support interval of the gross return at f (uniform variant only) */
LONGRUN_API lr_status lr_bet_gross_return_interval(const lr_bet* bet, double f, double* lo, double* hi);

/* ---------------- growth rates ---------------- */

LONGRUN_API lr_status lr_growth_kt(const lr_bet* bet, double f, double* out);
LONGRUN_API lr_status lr_growth_cc(const lr_clock* clock, const lr_bet* bet, double f, double* out);
LONGRUN_API lr_status lr_growth_cc_derivative(const lr_clock* clock, const lr_bet* bet, double f, double* out);
/* g_out[i] = growth_cc at f_grid[i]; the grid must be strictly increasing */
LONGRUN_API lr_status lr_growth_curve(const lr_clock* clock, const lr_bet* bet, const double* f_grid, size_t n,
                                      double* g_out);
/* "KT", "VG(theta)" or "IG(theta)", written into buf (NUL-terminated) */
LONGRUN_API lr_status lr_model_label(const lr_clock* clock, char* buf, size_t cap);

/* ---------------- solving ---------------- */

typedef struct lr_solve_options {
  double f_tol;        /* absolute tolerance on f (default 1e-10) */
  double search_upper; /* search bound for unbounded bets (default 10) */
  int max_iterations;  /* default 200 */
  int use_golden;      /* nonzero: derivative-free golden-section path */
} lr_solve_options;

LONGRUN_API void lr_solve_options_init(lr_solve_options* opts);

typedef struct lr_solve_result {
  double f_star;
  double g_at_f_star;
  int has_ruin_threshold;
  double f_c; /* +infinity when has_ruin_threshold == 0 */
  int iterations;
  double opt_residual;  /* dG/df at f_star */
  double root_residual; /* G at f_c */
  double opt_bracket_lo, opt_bracket_hi;
  double root_bracket_lo, root_bracket_hi;
} lr_solve_result;

LONGRUN_API lr_status lr_optimal_fraction(const lr_clock* clock, const lr_bet* bet,
                                          const lr_solve_options* opts, lr_solve_result* out);
LONGRUN_API lr_status lr_ruin_threshold(const lr_clock* clock, const lr_bet* bet, const lr_solve_options* opts,
                                        lr_solve_result* out);

/* Recover uniform bounds whose Kelly-Thorp optimum hits the targets. */
LONGRUN_API lr_status lr_calibrate_uniform_bounds(double target_f_star, double target_growth, double* lb_out,
                                                  double* ub_out);

/* ---------------- Monte Carlo ---------------- */

typedef enum lr_sim_mode { LR_SIM_FULL = 0, LR_SIM_CLOCK_ONLY = 1 } lr_sim_mode;

typedef struct lr_sim_config {
  uint64_t periods;
  uint64_t paths;
  uint64_t seed;
  lr_sim_mode mode;
  double s_bar;          /* fixed drift, clock_only mode */
  double ruin_floor;     /* < 1 */
  double growth_ceiling; /* > 1 */
} lr_sim_config;

LONGRUN_API void lr_sim_config_init(lr_sim_config* config);

typedef struct lr_sim_result {
  double geo_mean_growth;
  double growth_mean, growth_median;
  double growth_q05, growth_q25, growth_q75, growth_q95;
  double sample_cov_mean;
  double tau_over_n_mean;
  double ruin_fraction;
  double ceiling_fraction;
} lr_sim_result;

/* bet may be NULL in clock_only mode.  The optional per-path buffers (each
 * of capacity config->paths, any may be NULL) receive log(W_N/W_0), the
 * cumulated clock and the per-path sample covariance of (s, Z). */
LONGRUN_API lr_status lr_simulate(const lr_clock* clock, const lr_bet* bet, double f,
                                  const lr_sim_config* config, lr_sim_result* out, double* path_log_wealth,
                                  double* path_tau, double* path_cov);

/* mean |cov(s,Z)| at each horizon in n_grid (full mode, M paths each) */
LONGRUN_API lr_status lr_covariance_scan(const lr_clock* clock, const lr_bet* bet, double f,
                                         const uint64_t* n_grid, size_t n_count, uint64_t paths, uint64_t seed,
                                         double* mean_abs_cov_out);

/* ---------------- acceptability ---------------- */

typedef enum lr_distortion_kind { LR_DISTORTION_POWER = 0 } lr_distortion_kind;

/* forward map g_x(y) and inverse g_x^{-1}(y) */
LONGRUN_API lr_status lr_distortion_apply(lr_distortion_kind kind, double x, double y, double* out);
LONGRUN_API lr_status lr_distortion_invert(lr_distortion_kind kind, double x, double y, double* out);

/* pseudo-MGF g_x^{-1}(psi(s)) of the distorted clock law */
LONGRUN_API lr_status lr_distorted_mgf(const lr_clock* clock, lr_distortion_kind kind, double x, double s,
                                       double* out);
/* distorted growth rate psi^{-1}(g_x^{-1}(psi(G(f)))) */
LONGRUN_API lr_status lr_distorted_growth(const lr_clock* clock, lr_distortion_kind kind, double x,
                                          const lr_bet* bet, double f, double* out);
/* sup { x >= 0 : distorted geometric-mean return >= hurdle }; hurdle >= 1.
 * *is_infinite_out is nonzero when the index is +infinity. */
LONGRUN_API lr_status lr_acceptability_index(const lr_clock* clock, lr_distortion_kind kind, const lr_bet* bet,
                                             double f, double hurdle, double* index_out, int* is_infinite_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LONGRUN_H */
