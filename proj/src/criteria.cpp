// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "iqaoa/error.hpp"
#include "text.hpp"

namespace iqaoa {

namespace {

// Slack for cumulative-weight comparisons; shot weights k/shots summed in
// different orders can land a few ulps below an exact threshold.
constexpr double kCumulativeSlack = 1e-12;

void check_fraction(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    fail(ErrorCode::InvalidArgument, "percentile fraction must lie in (0, 1), got " +
                                         text::shortest(q));
  }
}

}  // namespace

// --- CostDistribution ------------------------------------------------------

CostDistribution::CostDistribution(std::vector<CostWeight> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CostWeight& a, const CostWeight& b) { return a.cost < b.cost; });
  double total = 0.0;
  for (const auto& e : entries) {
    if (!std::isfinite(e.cost) || !std::isfinite(e.weight) || e.weight < 0.0) {
      fail(ErrorCode::InvalidArgument, "cost distribution entries must be finite, weights >= 0");
    }
    total += e.weight;
    if (e.weight == 0.0) continue;
    if (!entries_.empty() && entries_.back().cost == e.cost) {
      entries_.back().weight += e.weight;
    } else {
      entries_.push_back(e);
    }
  }
  if (entries_.empty()) fail(ErrorCode::EmptyDistribution, "cost distribution is empty");
  if (std::abs(total - 1.0) > 1e-9) {
    fail(ErrorCode::InvalidArgument,
         "cost distribution weights sum to " + text::shortest(total) + ", expected 1");
  }
}

CostDistribution CostDistribution::from_masses(const std::map<double, double>& mass_by_cost) {
  double total = 0.0;
  for (const auto& [cost, mass] : mass_by_cost) total += mass;
  if (!(total > 0.0)) fail(ErrorCode::EmptyDistribution, "cost distribution is empty");
  std::vector<CostWeight> entries;
  entries.reserve(mass_by_cost.size());
  for (const auto& [cost, mass] : mass_by_cost) entries.push_back({cost, mass / total});
  return CostDistribution(std::move(entries));
}

double CostDistribution::weight_of(double cost) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), cost,
                             [](const CostWeight& e, double c) { return e.cost < c; });
  return (it != entries_.end() && it->cost == cost) ? it->weight : 0.0;
}

// --- RankPolicy ------------------------------------------------------------

RankPolicy RankPolicy::parse(std::string_view text) {
  if (text == "modulo") return modulo();
  if (text == "discard") return discard();
  constexpr std::string_view prefix = "penalty=";
  if (text.substr(0, prefix.size()) == prefix) {
    const double c = text::to_double(text.substr(prefix.size()), "penalty cost");
    if (!std::isfinite(c) || c < 0.0) {
      fail(ErrorCode::InvalidArgument, "penalty cost must be finite and non-negative");
    }
    return with_penalty(c);
  }
  fail(ErrorCode::InvalidArgument,
       "unknown rank policy '" + std::string(text) + "' (modulo|discard|penalty=<c>)");
}

std::string RankPolicy::to_string() const {
  switch (mode) {
    case Mode::Modulo: return "modulo";
    case Mode::Discard: return "discard";
    case Mode::Penalty: return "penalty=" + text::shortest(penalty);
  }
  return {};
}

// --- RankCostLookup --------------------------------------------------------

RankCostLookup::RankCostLookup(const TspInstance& inst)
    : inst_(inst), rank_count_(factorial(inst.size())), max_cost_(0.0) {
  if (inst.size() <= kMaxEnumerationSize) {
    table_ = rank_cost_table(inst);
    max_cost_ = *std::max_element(table_.begin(), table_.end());
  } else {
    max_cost_ = tour_cost_upper_bound(inst);
  }
}

double RankCostLookup::cost(std::uint64_t rank) const {
  if (rank >= rank_count_) {
    fail(ErrorCode::OutOfRange, "rank " + std::to_string(rank) + " out of range");
  }
  if (!table_.empty()) return table_[rank];
  return rank_cost(Rank(rank, inst_.size()), inst_);
}

std::optional<std::uint64_t> RankCostLookup::rank_for(std::uint64_t outcome,
                                                      const RankPolicy& policy) const {
  if (outcome < rank_count_) return outcome;
  if (policy.mode == RankPolicy::Mode::Modulo) return outcome % rank_count_;
  return std::nullopt;
}

namespace {

void check_policy(const RankPolicy& policy, const RankCostLookup& lookup) {
  if (policy.mode == RankPolicy::Mode::Penalty && policy.penalty < lookup.max_cost()) {
    fail(ErrorCode::InvalidArgument,
         "penalty cost " + text::shortest(policy.penalty) + " is below the " +
             (lookup.tabulated() ? "maximum tour cost " : "tour cost upper bound ") +
             text::shortest(lookup.max_cost()));
  }
}

}  // namespace

CostDistribution histogram_to_costs(const ShotHistogram& h, const RankCostLookup& lookup,
                                    const RankPolicy& policy) {
  check_policy(policy, lookup);
  std::map<double, std::uint64_t> counts;
  std::uint64_t kept = 0;
  for (const auto& [outcome, count] : h.counts) {
    if (count == 0) continue;
    const auto rank = lookup.rank_for(outcome, policy);
    if (rank) {
      counts[lookup.cost(*rank)] += count;
    } else if (policy.mode == RankPolicy::Mode::Penalty) {
      counts[policy.penalty] += count;
    } else {
      continue;
    }
    kept += count;
  }
  if (kept == 0) {
    fail(ErrorCode::EmptyDistribution, "no measurement outcome maps to a valid rank");
  }
  std::vector<CostWeight> entries;
  entries.reserve(counts.size());
  for (const auto& [cost, count] : counts) {
    entries.push_back({cost, static_cast<double>(count) / static_cast<double>(kept)});
  }
  return CostDistribution(std::move(entries));
}

CostDistribution histogram_to_costs(const ShotHistogram& h, const TspInstance& inst,
                                    const RankPolicy& policy) {
  return histogram_to_costs(h, RankCostLookup(inst), policy);
}

CostDistribution exact_distribution(std::span<const double> probs, const RankCostLookup& lookup,
                                    const RankPolicy& policy) {
  const auto q = qubit_count(lookup.instance().size());
  if (probs.size() != (std::size_t{1} << q)) {
    fail(ErrorCode::InvalidArgument, "distribution has " + std::to_string(probs.size()) +
                                         " outcomes, instance needs 2^" + std::to_string(q));
  }
  check_policy(policy, lookup);
  std::map<double, double> mass;
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    const double p = probs[x];
    if (p == 0.0) continue;
    const auto rank = lookup.rank_for(x, policy);
    if (rank) {
      mass[lookup.cost(*rank)] += p;
    } else if (policy.mode == RankPolicy::Mode::Penalty) {
      mass[policy.penalty] += p;
    }
  }
  return CostDistribution::from_masses(mass);
}

CostDistribution exact_distribution(const StateVector& state, const RankCostLookup& lookup,
                                    const RankPolicy& policy) {
  const auto q = qubit_count(lookup.instance().size());
  if (state.qubits() != q) {
    fail(ErrorCode::InvalidArgument, "state has " + std::to_string(state.qubits()) +
                                         " qubits, instance needs " + std::to_string(q));
  }
  return exact_distribution(probabilities(state), lookup, policy);
}

CostDistribution exact_distribution(const StateVector& state, const TspInstance& inst,
                                    const RankPolicy& policy) {
  return exact_distribution(state, RankCostLookup(inst), policy);
}

// --- statistics ------------------------------------------------------------

double mean(const CostDistribution& dist) {
  double m = 0.0;
  for (const auto& e : dist.entries()) m += e.cost * e.weight;
  return m;
}

double percentile(const CostDistribution& dist, double q) {
  check_fraction(q);
  double cumulative = 0.0;
  for (const auto& e : dist.entries()) {
    cumulative += e.weight;
    if (cumulative >= q - kCumulativeSlack) return e.cost;
  }
  return dist.max_cost();
}

double mean_below_percentile(const CostDistribution& dist, double q) {
  const double threshold = percentile(dist, q);
  double weight = 0.0;
  double weighted = 0.0;
  for (const auto& e : dist.entries()) {
    if (e.cost > threshold) break;
    weight += e.weight;
    weighted += e.cost * e.weight;
  }
  return weighted / weight;
}

// --- CriterionSpec ---------------------------------------------------------

CriterionSpec::CriterionSpec(std::vector<CriterionTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "criterion needs at least one term");
  for (const auto& t : terms_) {
    if (!(t.weight > 0.0) || !std::isfinite(t.weight)) {
      fail(ErrorCode::InvalidArgument, "criterion term weights must be positive");
    }
    if (t.kind != CriterionTerm::Kind::Mean) check_fraction(t.fraction);
  }
}

CriterionSpec CriterionSpec::parse(std::string_view text) {
  std::vector<CriterionTerm> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find_first_of("+,", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    start = end + 1;
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) fail(ErrorCode::Parse, "empty term in criterion '" + std::string(text) + "'");

    CriterionTerm term;
    if (auto star = token.find('*'); star != std::string_view::npos) {
      term.weight = text::to_double(token.substr(star + 1), "criterion weight");
      token = token.substr(0, star);
    }
    if (token == "mean") {
      term.kind = CriterionTerm::Kind::Mean;
    } else if (token.substr(0, 3) == "mbp") {
      term.kind = CriterionTerm::Kind::MeanBelowPercentile;
      term.fraction = text::to_double(token.substr(3), "percentile fraction");
    } else if (token.substr(0, 1) == "p") {
      term.kind = CriterionTerm::Kind::Percentile;
      term.fraction = text::to_double(token.substr(1), "percentile fraction");
    } else {
      fail(ErrorCode::Parse, "unknown criterion term '" + std::string(token) +
                                 "' (expected mean, p<q> or mbp<q>)");
    }
    terms.push_back(term);
    if (end == text.size()) break;
  }
  return CriterionSpec(std::move(terms));
}

CriterionSpec CriterionSpec::decile_plus_mean() {
  return CriterionSpec({{CriterionTerm::Kind::MeanBelowPercentile, 0.10, 1.0},
                        {CriterionTerm::Kind::Mean, 0.0, 1.0}});
}

std::string CriterionSpec::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    switch (t.kind) {
      case CriterionTerm::Kind::Mean: out += "mean"; break;
      case CriterionTerm::Kind::Percentile: out += "p" + text::shortest(t.fraction); break;
      case CriterionTerm::Kind::MeanBelowPercentile:
        out += "mbp" + text::shortest(t.fraction);
        break;
    }
    if (t.weight != 1.0) out += "*" + text::shortest(t.weight);
  }
  return out;
}

double evaluate(const CostDistribution& dist, const CriterionSpec& spec) {
  double total = 0.0;
  for (const auto& t : spec.terms()) {
    double v = 0.0;
    switch (t.kind) {
      case CriterionTerm::Kind::Mean: v = mean(dist); break;
      case CriterionTerm::Kind::Percentile: v = percentile(dist, t.fraction); break;
      case CriterionTerm::Kind::MeanBelowPercentile:
        v = mean_below_percentile(dist, t.fraction);
        break;
    }
    total += t.weight * v;
  }
  return total;
}

}  // namespace iqaoa
