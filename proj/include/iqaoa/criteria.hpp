// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Measurement outcomes -> tour-cost distributions, and the scalar criteria
// minimized by the angle optimizer (mean, lower-tail percentile, mean of
// the lower tail, and weighted sums of those).

#ifndef IQAOA_CRITERIA_HPP
#define IQAOA_CRITERIA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iqaoa/qsim.hpp"
#include "iqaoa/tsp.hpp"

namespace iqaoa {

struct CostWeight {
  double cost = 0.0;
  double weight = 0.0;
  friend bool operator==(const CostWeight&, const CostWeight&) = default;
};

/// Probability-weighted set of tour costs, ascending by cost, distinct
/// costs, positive weights summing to 1 within 1e-9.
class CostDistribution {
 public:
  /// Sorts, merges equal costs and drops zero weights. Weights must sum to
  /// 1 within 1e-9; throws EmptyDistribution when nothing is left.
  explicit CostDistribution(std::vector<CostWeight> entries);

  /// Normalizes arbitrary non-negative masses.
  static CostDistribution from_masses(const std::map<double, double>& mass_by_cost);

  const std::vector<CostWeight>& entries() const noexcept { return entries_; }
  double min_cost() const { return entries_.front().cost; }
  double max_cost() const { return entries_.back().cost; }
  /// Weight on exactly `cost` (0 if absent).
  double weight_of(double cost) const;

 private:
  std::vector<CostWeight> entries_;
};

/// What to do with outcomes x >= n! (the register holds 2^q >= n! states).
struct RankPolicy {
  enum class Mode { Modulo, Discard, Penalty };
  Mode mode = Mode::Modulo;
  double penalty = 0.0;

  static RankPolicy modulo() { return {}; }
  static RankPolicy discard() { return {Mode::Discard, 0.0}; }
  static RankPolicy with_penalty(double cost) { return {Mode::Penalty, cost}; }

  /// "modulo", "discard" or "penalty=<c>".
  static RankPolicy parse(std::string_view text);
  std::string to_string() const;
};

/// Rank -> tour cost lookup. Precomputes the whole table when n is small
/// enough to enumerate, otherwise decodes each rank on demand.
class RankCostLookup {
 public:
  explicit RankCostLookup(const TspInstance& inst);

  const TspInstance& instance() const noexcept { return inst_; }
  std::uint64_t rank_count() const noexcept { return rank_count_; }
  double cost(std::uint64_t rank) const;
  /// Exact maximum tour cost when tabulated, otherwise an upper bound.
  double max_cost() const noexcept { return max_cost_; }
  bool tabulated() const noexcept { return !table_.empty(); }

  /// Rank an outcome maps to under `policy`; nullopt if it is discarded or
  /// replaced by the penalty cost.
  std::optional<std::uint64_t> rank_for(std::uint64_t outcome, const RankPolicy& policy) const;

 private:
  TspInstance inst_;
  std::uint64_t rank_count_;
  std::vector<double> table_;
  double max_cost_;
};

CostDistribution histogram_to_costs(const ShotHistogram& h, const RankCostLookup& lookup,
                                    const RankPolicy& policy);
CostDistribution histogram_to_costs(const ShotHistogram& h, const TspInstance& inst,
                                    const RankPolicy& policy);

CostDistribution exact_distribution(const StateVector& state, const RankCostLookup& lookup,
                                    const RankPolicy& policy);
CostDistribution exact_distribution(const StateVector& state, const TspInstance& inst,
                                    const RankPolicy& policy);
/// probs[x] is the probability of measuring outcome x.
CostDistribution exact_distribution(std::span<const double> probs, const RankCostLookup& lookup,
                                    const RankPolicy& policy);

double mean(const CostDistribution& dist);

/// Weighted nearest rank: smallest cost whose cumulative weight >= q.
double percentile(const CostDistribution& dist, double q);

/// Mean of the costs <= percentile(dist, q); the threshold cost's whole
/// weight is included.
double mean_below_percentile(const CostDistribution& dist, double q);

struct CriterionTerm {
  enum class Kind { Mean, Percentile, MeanBelowPercentile };
  Kind kind = Kind::Mean;
  double fraction = 0.0;  // unused for Mean
  double weight = 1.0;
};

class CriterionSpec {
 public:
  explicit CriterionSpec(std::vector<CriterionTerm> terms);

  /// Terms `mean`, `p<q>`, `mbp<q>`, each optionally `*<weight>`, joined
  /// by `+` or `,`. Example: "mbp0.10+mean".
  static CriterionSpec parse(std::string_view text);
  /// Lower-decile mean plus mean.
  static CriterionSpec decile_plus_mean();

  const std::vector<CriterionTerm>& terms() const noexcept { return terms_; }
  std::string to_string() const;

 private:
  std::vector<CriterionTerm> terms_;
};

double evaluate(const CostDistribution& dist, const CriterionSpec& spec);

}  // namespace iqaoa

#endif  // IQAOA_CRITERIA_HPP
