// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LONGRUN_BET_HPP
#define LONGRUN_BET_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace longrun {

/// Win probability p: gross return 1+f with probability p, 1-f with 1-p.
struct BernoulliBet {
  double p;
};

/// Per-unit-wagered return u uniform on [lb, ub]; gross return 1 + f u.
struct UniformReturnBet {
  double lb;
  double ub;
};

/// Finite set of per-unit return multipliers r_i with probabilities.
struct DiscreteBet {
  std::vector<double> returns;
  std::vector<double> probs;
};

/// One-period bet: maps an investment fraction f to a distribution of
/// strictly positive gross returns.  Admissible fractions are
/// 0 <= f < max_fraction(), which keeps the worst-case gross return positive.
class BetModel {
 public:
  static BetModel bernoulli(double p);
  static BetModel uniform_return(double lb, double ub);
  static BetModel discrete(std::vector<double> returns, std::vector<double> probs);

  /// Least upper bound on admissible fractions; +infinity when no outcome
  /// loses money.
  double max_fraction() const;

  /// Throws Errc::domain when f is outside [0, max_fraction()).
  void require_admissible(double f) const;

  bool finite_support() const;

  /// (gross return, probability) pairs at fraction f.  Finite-support
  /// variants only.
  std::vector<std::pair<double, double>> gross_returns(double f) const;

  /// Support interval of the gross return at fraction f (uniform variant).
  std::pair<double, double> gross_return_interval(double f) const;

  /// Per-unit outcome pairs (r_i, p_i) independent of f; finite support only.
  const std::vector<std::pair<double, double>>& outcomes() const;

  /// E[u]: the one-sided derivative of every growth functional at f = 0.
  double mean_unit_return() const;

  /// E[u^2], used by the small-f expansions of the growth derivatives.
  double mean_square_unit_return() const;

  /// Largest per-unit return multiplier in the support.
  double max_unit_return() const;

  const BernoulliBet* as_bernoulli() const { return std::get_if<BernoulliBet>(&model_); }
  const UniformReturnBet* as_uniform() const { return std::get_if<UniformReturnBet>(&model_); }
  const DiscreteBet* as_discrete() const { return std::get_if<DiscreteBet>(&model_); }

  std::string describe() const;

 private:
  explicit BetModel(std::variant<BernoulliBet, UniformReturnBet, DiscreteBet> m);

  std::variant<BernoulliBet, UniformReturnBet, DiscreteBet> model_;
  std::vector<std::pair<double, double>> outcome_pairs_;  // finite support cache
};

}  // namespace longrun

#endif  // LONGRUN_BET_HPP
