// Copyright 2026 the longrun authors
// SPDX-License-Identifier: Apache-2.0

#include "bet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "errors.hpp"
#include "strfmt.hpp"

namespace longrun {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BetModel::BetModel(std::variant<BernoulliBet, UniformReturnBet, DiscreteBet> m) : model_(std::move(m)) {
  if (const auto* b = std::get_if<BernoulliBet>(&model_)) {
    outcome_pairs_ = {{1.0, b->p}, {-1.0, 1.0 - b->p}};
  } else if (const auto* d = std::get_if<DiscreteBet>(&model_)) {
    outcome_pairs_.reserve(d->returns.size());
    for (std::size_t i = 0; i < d->returns.size(); ++i) {
      outcome_pairs_.emplace_back(d->returns[i], d->probs[i]);
    }
  }
}

BetModel BetModel::bernoulli(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(Errc::invalid_argument, "Bernoulli bet requires 0 < p < 1, got " + dtos(p));
  }
  return BetModel(BernoulliBet{p});
}

BetModel BetModel::uniform_return(double lb, double ub) {
  if (!std::isfinite(lb) || !std::isfinite(ub) || !(lb < ub)) {
    throw Error(Errc::invalid_argument,
                "uniform-return bet requires finite LB < UB, got [" + dtos(lb) + ", " + dtos(ub) + "]");
  }
  return BetModel(UniformReturnBet{lb, ub});
}

BetModel BetModel::discrete(std::vector<double> returns, std::vector<double> probs) {
  if (returns.empty() || returns.size() != probs.size()) {
    throw Error(Errc::invalid_argument, "discrete bet requires matching non-empty outcome and probability lists");
  }
  double total = 0.0;
  std::set<double> seen;
  for (std::size_t i = 0; i < returns.size(); ++i) {
    if (!std::isfinite(returns[i])) {
      throw Error(Errc::invalid_argument, "discrete bet outcome must be finite, got " + dtos(returns[i]));
    }
    if (!(probs[i] > 0.0)) {
      throw Error(Errc::invalid_argument, "discrete bet probabilities must be strictly positive, got " + dtos(probs[i]));
    }
    if (!seen.insert(returns[i]).second) {
      throw Error(Errc::invalid_argument, "discrete bet outcomes must be distinct, repeated " + dtos(returns[i]));
    }
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(Errc::invalid_argument, "discrete bet probabilities must sum to 1, got " + dtos(total));
  }
  return BetModel(DiscreteBet{std::move(returns), std::move(probs)});
}

double BetModel::max_fraction() const {
  if (const auto* b = std::get_if<BernoulliBet>(&model_)) {
    (void)b;
    return 1.0;
  }
  if (const auto* u = std::get_if<UniformReturnBet>(&model_)) {
    return u->lb < 0.0 ? -1.0 / u->lb : kInf;
  }
  const auto& d = std::get<DiscreteBet>(model_);
  double bound = kInf;
  for (double r : d.returns) {
    if (r < 0.0) bound = std::min(bound, -1.0 / r);
  }
  return bound;
}

void BetModel::require_admissible(double f) const {
  double bound = max_fraction();
  if (!(f >= 0.0) || !(f < bound) || !std::isfinite(f)) {
    throw Error(Errc::domain,
                "fraction f = " + dtos(f) + " outside admissible range [0, " + dtos(bound) + ")");
  }
}

bool BetModel::finite_support() const { return !std::holds_alternative<UniformReturnBet>(model_); }

std::vector<std::pair<double, double>> BetModel::gross_returns(double f) const {
  require_admissible(f);
  if (!finite_support()) {
    throw Error(Errc::invalid_argument, "gross_returns: uniform-return bet has continuous support; "
                                        "use gross_return_interval");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(outcome_pairs_.size());
  for (auto [r, p] : outcome_pairs_) out.emplace_back(1.0 + f * r, p);
  return out;
}

std::pair<double, double> BetModel::gross_return_interval(double f) const {
  require_admissible(f);
  const auto* u = std::get_if<UniformReturnBet>(&model_);
  if (u == nullptr) {
    throw Error(Errc::invalid_argument, "gross_return_interval: bet has finite support; use gross_returns");
  }
  return {1.0 + f * u->lb, 1.0 + f * u->ub};
}

const std::vector<std::pair<double, double>>& BetModel::outcomes() const {
  if (!finite_support()) {
    throw Error(Errc::invalid_argument, "outcomes: uniform-return bet has continuous support");
  }
  return outcome_pairs_;
}

double BetModel::mean_unit_return() const {
  if (const auto* u = std::get_if<UniformReturnBet>(&model_)) return 0.5 * (u->lb + u->ub);
  double m = 0.0;
  for (auto [r, p] : outcome_pairs_) m += p * r;
  return m;
}

double BetModel::mean_square_unit_return() const {
  if (const auto* u = std::get_if<UniformReturnBet>(&model_)) {
    return (u->ub * u->ub + u->ub * u->lb + u->lb * u->lb) / 3.0;
  }
  double m = 0.0;
  for (auto [r, p] : outcome_pairs_) m += p * r * r;
  return m;
}

double BetModel::max_unit_return() const {
  if (const auto* u = std::get_if<UniformReturnBet>(&model_)) return u->ub;
  double m = -kInf;
  for (auto [r, p] : outcome_pairs_) m = std::max(m, r);
  return m;
}

std::string BetModel::describe() const {
  if (const auto* b = std::get_if<BernoulliBet>(&model_)) return "bernoulli(p=" + dtos(b->p) + ")";
  if (const auto* u = std::get_if<UniformReturnBet>(&model_)) {
    return "uniform(lb=" + dtos(u->lb) + ", ub=" + dtos(u->ub) + ")";
  }
  const auto& d = std::get<DiscreteBet>(model_);
  std::string s = "discrete(";
  for (std::size_t i = 0; i < d.returns.size(); ++i) {
    if (i) s += ", ";
    s += dtos(d.returns[i]) + ":" + dtos(d.probs[i]);
  }
  return s + ")";
}

}  // namespace longrun
