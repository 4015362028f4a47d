// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0
//
// longrun CLI: growth curves, optimal fractions and ruin thresholds, the
// variance-gamma leverage table, Monte Carlo runs and acceptability indexes,
// emitted as CSV/JSON.  Talks to the core exclusively through the C API.
//
// Exit codes: 0 success, 2 configuration error, 3 numeric/domain error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "longrun/longrun.h"

using nlohmann::json;

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

// config/validation failures exit 2, numeric failures exit 3
void check(lr_status status, int exit_code) {
  if (status != LR_OK) {
    fail(exit_code, std::string(lr_status_name(status)) + ": " + lr_last_error_message());
  }
}

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ---------------- handles ----------------

struct Clock {
  lr_clock* h = nullptr;
  Clock() = default;
  Clock(lr_clock_kind kind, double theta) { check(lr_clock_create(kind, theta, &h), 2); }
  Clock(Clock&& other) noexcept : h(other.h) { other.h = nullptr; }
  Clock& operator=(Clock&& other) noexcept {
    std::swap(h, other.h);
    return *this;
  }
  Clock(const Clock&) = delete;
  Clock& operator=(const Clock&) = delete;
  ~Clock() { lr_clock_destroy(h); }
};

struct Bet {
  lr_bet* h = nullptr;
  Bet() = default;
  Bet(Bet&& other) noexcept : h(other.h) { other.h = nullptr; }
  Bet& operator=(Bet&& other) noexcept {
    std::swap(h, other.h);
    return *this;
  }
  Bet(const Bet&) = delete;
  Bet& operator=(const Bet&) = delete;
  ~Bet() { lr_bet_destroy(h); }
};

lr_clock_kind parse_clock_kind(const std::string& name) {
  if (name == "degenerate" || name == "kt") return LR_CLOCK_DEGENERATE;
  if (name == "gamma" || name == "vg") return LR_CLOCK_GAMMA;
  if (name == "ig" || name == "inverse_gaussian" || name == "inverse-gaussian") {
    return LR_CLOCK_INVERSE_GAUSSIAN;
  }
  fail(2, "unknown clock kind '" + name + "' (expected degenerate|gamma|ig)");
}

std::string model_label(const Clock& clock) {
  char buf[64];
  check(lr_model_label(clock.h, buf, sizeof buf), 3);
  return buf;
}

// ---------------- options ----------------

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::vector<std::string> clock_tokens;
  double theta = 0.0;
  std::string bet_kind;
  double p = kUnset;
  double lb = kUnset;
  double ub = kUnset;
  std::string outcomes;

  double f = kUnset;
  double f_min = 0.0;
  double f_max = kUnset;
  double f_step = kUnset;

  std::uint64_t periods = 1000;
  std::uint64_t paths = 1000;
  std::uint64_t seed = 0;
  std::string mode = "full";
  double s_bar = kUnset;
  double ruin_floor = 0.5;
  double growth_ceiling = 2.0;
  std::string paths_out;

  double hurdle = 1.0;
  double x = 0.0;

  std::string reference;
  std::string format;  // per-command default applied later
  std::string out = "-";
  std::string config_path;

  // json-config plumbing: option handle + setter per flat key
  std::map<std::string, CLI::Option*> handles;
  std::map<std::string, std::function<void(const json&)>> setters;
};

template <typename T>
void bind_opt(Options& o, CLI::App* cmd, const std::string& flag, const std::string& key, T& var,
          const std::string& desc) {
  o.handles[key] = cmd->add_option(flag, var, desc);
  o.setters[key] = [&var, key](const json& v) {
    try {
      var = v.get<T>();
    } catch (const json::exception&) {
      fail(2, "config key '" + key + "' has the wrong type");
    }
  };
}

void bind_clock_list(Options& o, CLI::App* cmd) {
  o.handles["clock"] = cmd->add_option("--clock", o.clock_tokens,
                                       "clock spec, repeatable: degenerate|gamma|ig, optionally kind:theta");
  o.setters["clock"] = [&o](const json& v) {
    o.clock_tokens.clear();
    if (v.is_string()) {
      o.clock_tokens.push_back(v.get<std::string>());
    } else if (v.is_array()) {
      for (const auto& item : v) o.clock_tokens.push_back(item.get<std::string>());
    } else {
      fail(2, "config key 'clock' must be a string or array of strings");
    }
  };
}

void merge_config_file(Options& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) fail(2, "cannot open config file: " + o.config_path);
  json cfg = json::parse(in, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object()) fail(2, "config file is not a JSON object: " + o.config_path);
  for (const auto& [key, value] : cfg.items()) {
    auto setter = o.setters.find(key);
    if (setter == o.setters.end()) fail(2, "unknown config key '" + key + "'");
    if (o.handles[key]->count() > 0) continue;  // command-line flags win
    setter->second(value);
  }
}

// ---------------- model construction ----------------

struct ClockSpec {
  lr_clock_kind kind;
  double theta;
};

ClockSpec parse_clock_token(const std::string& token, double default_theta) {
  auto colon = token.find(':');
  if (colon == std::string::npos) return {parse_clock_kind(token), default_theta};
  std::string kind = token.substr(0, colon);
  std::string rest = token.substr(colon + 1);
  try {
    return {parse_clock_kind(kind), std::stod(rest)};
  } catch (const std::exception&) {
    fail(2, "bad theta in clock spec '" + token + "'");
  }
}

std::vector<Clock> make_clocks(const Options& o, std::size_t max_count) {
  if (o.clock_tokens.empty()) fail(2, "missing --clock");
  if (o.clock_tokens.size() > max_count) fail(2, "this command accepts a single --clock");
  std::vector<Clock> clocks;
  for (const auto& token : o.clock_tokens) {
    ClockSpec spec = parse_clock_token(token, o.theta);
    clocks.emplace_back(spec.kind, spec.theta);
  }
  return clocks;
}

Bet make_bet(const Options& o) {
  if (o.bet_kind.empty()) fail(2, "missing --bet (bernoulli|uniform|discrete)");
  Bet bet;
  if (o.bet_kind == "bernoulli") {
    if (std::isnan(o.p)) fail(2, "bernoulli bet requires --p");
    check(lr_bet_create_bernoulli(o.p, &bet.h), 2);
  } else if (o.bet_kind == "uniform") {
    if (std::isnan(o.lb) || std::isnan(o.ub)) fail(2, "uniform bet requires --lb and --ub");
    check(lr_bet_create_uniform(o.lb, o.ub, &bet.h), 2);
  } else if (o.bet_kind == "discrete") {
    if (o.outcomes.empty()) fail(2, "discrete bet requires --outcomes r:p,r:p,...");
    std::vector<double> rs, ps;
    std::stringstream ss(o.outcomes);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) fail(2, "bad outcome '" + item + "' (expected return:probability)");
      try {
        rs.push_back(std::stod(item.substr(0, colon)));
        ps.push_back(std::stod(item.substr(colon + 1)));
      } catch (const std::exception&) {
        fail(2, "bad outcome '" + item + "'");
      }
    }
    check(lr_bet_create_discrete(rs.data(), ps.data(), rs.size(), &bet.h), 2);
  } else {
    fail(2, "unknown bet kind '" + o.bet_kind + "'");
  }
  return bet;
}

// ---------------- output ----------------

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(2, "cannot open output file: " + path);
  out << payload;
  if (!out) fail(2, "failed writing output file: " + path);
}

std::string pick_format(const Options& o, const std::string& fallback) {
  std::string f = o.format.empty() ? fallback : o.format;
  if (f != "csv" && f != "json") fail(2, "unknown format '" + f + "' (expected csv|json)");
  return f;
}

json clock_json(const Clock& clock) {
  const char* names[] = {"degenerate", "gamma", "inverse_gaussian"};
  return {{"kind", names[lr_clock_get_kind(clock.h)]}, {"theta", lr_clock_get_theta(clock.h)}};
}

json bet_json(const Options& o) {
  json j;
  j["kind"] = o.bet_kind;
  if (o.bet_kind == "bernoulli") j["p"] = o.p;
  if (o.bet_kind == "uniform") {
    j["lb"] = o.lb;
    j["ub"] = o.ub;
  }
  if (o.bet_kind == "discrete") j["outcomes"] = o.outcomes;
  return j;
}

// ---------------- subcommands ----------------

std::vector<double> build_grid(const Options& o) {
  if (std::isnan(o.f_max) || std::isnan(o.f_step)) fail(2, "curve requires --f-max and --f-step");
  if (!(o.f_step > 0.0)) fail(2, "--f-step must be positive");
  if (!(o.f_min >= 0.0) || !(o.f_max >= o.f_min)) fail(2, "need 0 <= --f-min <= --f-max");
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    double f = o.f_min + static_cast<double>(k) * o.f_step;
    if (f > o.f_max + 1e-9 * o.f_step) break;
    grid.push_back(f);
    if (grid.size() > 1'000'000) fail(2, "f grid exceeds 1e6 points");
  }
  return grid;
}

int cmd_curve(Options& o) {
  merge_config_file(o);
  std::vector<Clock> clocks = make_clocks(o, 16);
  Bet bet = make_bet(o);
  std::vector<double> grid = build_grid(o);
  std::string format = pick_format(o, "csv");

  struct CurveData {
    std::string label;
    std::vector<double> g;
  };
  std::vector<CurveData> curves;
  for (const Clock& clock : clocks) {
    CurveData data;
    data.label = model_label(clock);
    data.g.resize(grid.size());
    check(lr_growth_curve(clock.h, bet.h, grid.data(), grid.size(), data.g.data()), 3);
    curves.push_back(std::move(data));
  }

  std::string payload;
  if (format == "csv") {
    std::string csv = "f,G,model_label\n";
    for (const CurveData& c : curves) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv += fmt_double(grid[i]) + "," + fmt_double(c.g[i]) + "," + c.label + "\n";
      }
    }
    payload = csv;
  } else {
    json j;
    j["bet"] = bet_json(o);
    j["curves"] = json::array();
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      json points = json::array();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        points.push_back({{"f", grid[i]}, {"g", curves[ci].g[i]}});
      }
      j["curves"].push_back({{"model", curves[ci].label}, {"points", points}});
    }
    payload = j.dump(2) + "\n";
  }
  write_output(o.out, payload);
  return 0;
}

json solve_result_json(const lr_solve_result& r) {
  json j;
  j["f_star"] = r.f_star;
  j["g_at_f_star"] = r.g_at_f_star;
  j["has_ruin_threshold"] = r.has_ruin_threshold != 0;
  if (r.has_ruin_threshold) {
    j["f_c"] = r.f_c;
  } else {
    j["f_c"] = nullptr;
  }
  j["iterations"] = r.iterations;
  j["opt_residual"] = r.opt_residual;
  j["root_residual"] = r.root_residual;
  j["opt_bracket"] = {r.opt_bracket_lo, r.opt_bracket_hi};
  j["root_bracket"] = {r.root_bracket_lo, r.root_bracket_hi};
  return j;
}

int cmd_solve(Options& o) {
  merge_config_file(o);
  std::vector<Clock> clocks = make_clocks(o, 1);
  Bet bet = make_bet(o);
  std::string format = pick_format(o, "json");

  lr_solve_result res;
  check(lr_ruin_threshold(clocks[0].h, bet.h, nullptr, &res), 3);

  std::string payload;
  if (format == "json") {
    json j = solve_result_json(res);
    j["clock"] = clock_json(clocks[0]);
    j["bet"] = bet_json(o);
    j["model"] = model_label(clocks[0]);
    payload = j.dump(2) + "\n";
  } else {
    payload = "model,f_star,g_at_f_star,f_c\n" + model_label(clocks[0]) + "," + fmt_double(res.f_star) + "," +
              fmt_double(res.g_at_f_star) + "," +
              (res.has_ruin_threshold ? fmt_double(res.f_c) : std::string()) + "\n";
  }
  write_output(o.out, payload);
  return 0;
}

// Bundled reference rows for the leverage table; overridable via --reference.
struct TableRow {
  std::string market;
  std::string sample;
  double theta;
  double fc;
  double f_star;
  double g_at_kt;
  double g_at_star;  // NaN for the theta = 0 baseline row
};

std::vector<TableRow> builtin_reference() {
  return {
      {"DJIA HPR", "Jan-73/Dec-93", 0.636, 0.7675, 0.3933, 0.0173, 0.0287},
      {"DJIA ex-1987", "Jan-73/Dec-93", 0.584, 0.7886, 0.4061, 0.0198, 0.0297},
      {"S&P 500 MCC", "Jan-92/Sept-94", 0.730, 0.7266, 0.3720, 0.0129, 0.0272},
      {"S&P 500 SEN", "Jan-77/Dec-81", 0.422, 0.8694, 0.4517, 0.0274, 0.0331},
      {"S&P 500 SEN", "Jan-77/Dec-81", 0.382, 0.8941, 0.4646, 0.0293, 0.0341},
      {"Rotando-Thorp baseline", "", 0.0, 1.171, 0.635, 0.0471, kUnset},
  };
}

std::vector<TableRow> load_reference(const std::string& path) {
  if (path.empty()) return builtin_reference();
  std::ifstream in(path);
  if (!in) fail(2, "cannot open reference file: " + path);
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    while (cells.size() < 7) cells.push_back("");
    try {
      TableRow row;
      row.market = cells[0];
      row.sample = cells[1];
      row.theta = std::stod(cells[2]);
      row.fc = std::stod(cells[3]);
      row.f_star = std::stod(cells[4]);
      row.g_at_kt = std::stod(cells[5]);
      row.g_at_star = cells[6].empty() ? kUnset : std::stod(cells[6]);
      rows.push_back(row);
    } catch (const std::exception&) {
      fail(2, "bad reference row: " + line);
    }
  }
  if (rows.empty()) fail(2, "reference file has no rows: " + path);
  return rows;
}

int cmd_table1(Options& o) {
  merge_config_file(o);
  std::string format = pick_format(o, "csv");
  if (format != "csv") fail(2, "table1 writes CSV only");
  std::vector<TableRow> reference = load_reference(o.reference);

  const TableRow* baseline = nullptr;
  for (const TableRow& row : reference) {
    if (row.theta == 0.0) baseline = &row;
  }
  if (baseline == nullptr) fail(2, "reference table needs a theta = 0 baseline row");

  double lb = 0.0, ub = 0.0;
  check(lr_calibrate_uniform_bounds(baseline->f_star, baseline->g_at_kt, &lb, &ub), 3);
  Bet bet;
  check(lr_bet_create_uniform(lb, ub, &bet.h), 3);
  Clock degenerate(LR_CLOCK_DEGENERATE, 0.0);
  lr_solve_result kt;
  check(lr_ruin_threshold(degenerate.h, bet.h, nullptr, &kt), 3);

  std::string csv;
  csv += "# variance-gamma leverage table for the calibrated uniform-return market model\n";
  csv += "# calibrated bounds: lb=" + fmt_double(lb) + " ub=" + fmt_double(ub) +
         " (targets f_star=" + fmt_double(baseline->f_star) + " growth=" + fmt_double(baseline->g_at_kt) +
         " under the degenerate clock)\n";
  csv +=
      "market,sample,theta,fc,fc_ref,fc_delta,f_star,f_star_ref,f_star_delta,"
      "g_at_kt_optimum,g_at_kt_optimum_ref,g_at_kt_optimum_delta,"
      "g_at_vg_optimum,g_at_vg_optimum_ref,g_at_vg_optimum_delta\n";

  auto triple = [](double got, double ref) {
    return fmt_double(got) + "," + fmt_double(ref) + "," + fmt_double(got - ref);
  };
  for (const TableRow& row : reference) {
    if (row.theta == 0.0) {
      csv += row.market + "," + row.sample + ",0," + triple(kt.f_c, row.fc) + "," +
             triple(kt.f_star, row.f_star) + "," + triple(kt.g_at_f_star, row.g_at_kt) + ",,,\n";
      continue;
    }
    Clock vg(LR_CLOCK_GAMMA, row.theta);
    lr_solve_result res;
    check(lr_ruin_threshold(vg.h, bet.h, nullptr, &res), 3);
    double g_at_kt = 0.0;
    check(lr_growth_cc(vg.h, bet.h, kt.f_star, &g_at_kt), 3);
    csv += row.market + "," + row.sample + "," + fmt_double(row.theta) + "," + triple(res.f_c, row.fc) + "," +
           triple(res.f_star, row.f_star) + "," + triple(g_at_kt, row.g_at_kt) + "," +
           triple(res.g_at_f_star, row.g_at_star) + "\n";
  }
  write_output(o.out, csv);
  return 0;
}

int cmd_simulate(Options& o) {
  merge_config_file(o);
  std::vector<Clock> clocks = make_clocks(o, 1);
  std::string format = pick_format(o, "json");
  if (format != "json") fail(2, "simulate writes JSON only");

  lr_sim_config cfg;
  lr_sim_config_init(&cfg);
  cfg.periods = o.periods;
  cfg.paths = o.paths;
  cfg.seed = o.seed;
  cfg.ruin_floor = o.ruin_floor;
  cfg.growth_ceiling = o.growth_ceiling;
  if (o.mode == "full") {
    cfg.mode = LR_SIM_FULL;
  } else if (o.mode == "clock_only") {
    cfg.mode = LR_SIM_CLOCK_ONLY;
  } else {
    fail(2, "unknown mode '" + o.mode + "' (expected full|clock_only)");
  }

  Bet bet;
  double f = 0.0;
  if (cfg.mode == LR_SIM_FULL) {
    bet = make_bet(o);
    if (std::isnan(o.f)) fail(2, "full mode requires --f");
    f = o.f;
  } else {
    if (std::isnan(o.s_bar)) fail(2, "clock_only mode requires --s-bar");
    cfg.s_bar = o.s_bar;
  }

  bool dump = !o.paths_out.empty();
  if (dump && cfg.paths > 10'000'000) fail(2, "--paths-out limited to 1e7 paths");
  std::vector<double> logw, tau, cov;
  if (dump) {
    logw.resize(cfg.paths);
    tau.resize(cfg.paths);
    cov.resize(cfg.paths);
  }

  lr_sim_result res;
  check(lr_simulate(clocks[0].h, bet.h, f, &cfg, &res, dump ? logw.data() : nullptr,
                    dump ? tau.data() : nullptr, dump ? cov.data() : nullptr),
        3);

  json j;
  j["clock"] = clock_json(clocks[0]);
  j["mode"] = o.mode;
  if (cfg.mode == LR_SIM_FULL) {
    j["bet"] = bet_json(o);
    j["f"] = f;
  } else {
    j["s_bar"] = cfg.s_bar;
  }
  j["periods"] = cfg.periods;
  j["paths"] = cfg.paths;
  j["seed"] = cfg.seed;
  j["ruin_floor"] = cfg.ruin_floor;
  j["growth_ceiling"] = cfg.growth_ceiling;
  j["geo_mean_growth"] = res.geo_mean_growth;
  j["per_path_growth"] = {{"mean", res.growth_mean}, {"median", res.growth_median},
                          {"q05", res.growth_q05},   {"q25", res.growth_q25},
                          {"q75", res.growth_q75},   {"q95", res.growth_q95}};
  j["sample_cov_mean"] = res.sample_cov_mean;
  j["tau_over_n_mean"] = res.tau_over_n_mean;
  j["ruin_fraction"] = res.ruin_fraction;
  j["ceiling_fraction"] = res.ceiling_fraction;

  // assemble every payload before touching any file
  std::string paths_csv;
  if (dump) {
    paths_csv = "path_index,log_terminal_wealth,tau_N,cov\n";
    for (std::uint64_t i = 0; i < cfg.paths; ++i) {
      paths_csv += std::to_string(i) + "," + fmt_double(logw[i]) + "," + fmt_double(tau[i]) + "," +
                   fmt_double(cov[i]) + "\n";
    }
  }
  write_output(o.out, j.dump(2) + "\n");
  if (dump) write_output(o.paths_out, paths_csv);
  return 0;
}

int cmd_accept(Options& o) {
  merge_config_file(o);
  std::vector<Clock> clocks = make_clocks(o, 1);
  Bet bet = make_bet(o);
  std::string format = pick_format(o, "json");
  if (format != "json") fail(2, "accept writes JSON only");
  if (std::isnan(o.f)) fail(2, "accept requires --f");

  double index = 0.0;
  int infinite = 0;
  check(lr_acceptability_index(clocks[0].h, LR_DISTORTION_POWER, bet.h, o.f, o.hurdle, &index, &infinite), 3);
  double growth = 0.0;
  check(lr_growth_cc(clocks[0].h, bet.h, o.f, &growth), 3);
  double distorted = 0.0;
  check(lr_distorted_growth(clocks[0].h, LR_DISTORTION_POWER, o.x, bet.h, o.f, &distorted), 3);

  json j;
  j["clock"] = clock_json(clocks[0]);
  j["bet"] = bet_json(o);
  j["f"] = o.f;
  j["hurdle"] = o.hurdle;
  if (infinite) {
    j["index"] = "inf";
  } else {
    j["index"] = index;
  }
  j["x"] = o.x;
  j["growth_cc"] = growth;
  j["distorted_growth"] = distorted;
  write_output(o.out, j.dump(2) + "\n");
  return 0;
}

void add_common(Options& o, CLI::App* cmd) {
  bind_clock_list(o, cmd);
  bind_opt(o, cmd, "--theta", "theta", o.theta, "clock variance (when the clock spec has no :theta)");
  bind_opt(o, cmd, "--bet", "bet", o.bet_kind, "bet kind: bernoulli|uniform|discrete");
  bind_opt(o, cmd, "--p", "p", o.p, "Bernoulli success probability");
  bind_opt(o, cmd, "--lb", "lb", o.lb, "uniform per-unit return lower bound");
  bind_opt(o, cmd, "--ub", "ub", o.ub, "uniform per-unit return upper bound");
  bind_opt(o, cmd, "--outcomes", "outcomes", o.outcomes, "discrete outcomes r:p,r:p,...");
  bind_opt(o, cmd, "--format", "format", o.format, "output format: csv|json");
  bind_opt(o, cmd, "--out", "out", o.out, "output path ('-' = stdout)");
  o.handles["config"] = cmd->add_option("--config", o.config_path, "flat JSON config file (flags override)");
  o.setters["config"] = [](const json&) { fail(2, "config files cannot nest 'config'"); };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"long-run investment growth under stochastic clocks"};
  app.require_subcommand(1);

  Options curve_opts, solve_opts, table_opts, sim_opts, accept_opts;

  CLI::App* curve = app.add_subcommand("curve", "sample growth curves over an f grid");
  add_common(curve_opts, curve);
  bind_opt(curve_opts, curve, "--f-min", "f_min", curve_opts.f_min, "grid start (default 0)");
  bind_opt(curve_opts, curve, "--f-max", "f_max", curve_opts.f_max, "grid end");
  bind_opt(curve_opts, curve, "--f-step", "f_step", curve_opts.f_step, "grid step");

  CLI::App* solve = app.add_subcommand("solve", "optimal fraction and ruin threshold");
  add_common(solve_opts, solve);

  CLI::App* table = app.add_subcommand("table1", "reproduce the variance-gamma leverage table");
  add_common(table_opts, table);
  bind_opt(table_opts, table, "--reference", "reference", table_opts.reference,
       "reference CSV (default: bundled values)");

  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo wealth paths");
  add_common(sim_opts, sim);
  bind_opt(sim_opts, sim, "--f", "f", sim_opts.f, "investment fraction");
  bind_opt(sim_opts, sim, "--periods", "periods", sim_opts.periods, "periods per path");
  bind_opt(sim_opts, sim, "--paths", "paths", sim_opts.paths, "number of paths");
  bind_opt(sim_opts, sim, "--seed", "seed", sim_opts.seed, "RNG seed");
  bind_opt(sim_opts, sim, "--mode", "mode", sim_opts.mode, "full|clock_only");
  bind_opt(sim_opts, sim, "--s-bar", "s_bar", sim_opts.s_bar, "fixed drift (clock_only)");
  bind_opt(sim_opts, sim, "--ruin-floor", "ruin_floor", sim_opts.ruin_floor, "ruin floor (< 1)");
  bind_opt(sim_opts, sim, "--growth-ceiling", "growth_ceiling", sim_opts.growth_ceiling, "growth ceiling (> 1)");
  bind_opt(sim_opts, sim, "--paths-out", "paths_out", sim_opts.paths_out, "per-path CSV dump path");

  CLI::App* accept = app.add_subcommand("accept", "acceptability index and distorted growth");
  add_common(accept_opts, accept);
  bind_opt(accept_opts, accept, "--f", "f", accept_opts.f, "investment fraction");
  bind_opt(accept_opts, accept, "--hurdle", "hurdle", accept_opts.hurdle, "hurdle on the distorted mean (>= 1)");
  bind_opt(accept_opts, accept, "--x", "x", accept_opts.x, "stress level for the distorted growth output");

  try {
    app.parse(argc, argv);
    if (curve->parsed()) return cmd_curve(curve_opts);
    if (solve->parsed()) return cmd_solve(solve_opts);
    if (table->parsed()) return cmd_table1(table_opts);
    if (sim->parsed()) return cmd_simulate(sim_opts);
    if (accept->parsed()) return cmd_accept(accept_opts);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
