// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Text documents produced for the CLI: the JSON run report, brute-force
// summaries and CSV side files. Key order in JSON output is fixed.

#ifndef IQAOA_REPORT_HPP
#define IQAOA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "iqaoa/criteria.hpp"
#include "iqaoa/optimizer.hpp"
#include "iqaoa/tsp.hpp"

namespace iqaoa {

struct InstanceSource {
  std::string path;
  std::uint64_t digest = 0;  // FNV-1a of the file bytes
};

/// Most frequent (exact mode: most probable) outcome that maps to a rank
/// under the policy; ties go to the smaller outcome.
struct BestOutcome {
  std::uint64_t outcome = 0;
  std::uint64_t rank = 0;
  double weight = 0.0;  // shot count, or probability in exact mode
};

std::optional<BestOutcome> best_outcome(const GraspResult& result, const RankCostLookup& lookup,
                                        const RankPolicy& policy);

std::string solve_report_json(const TspInstance& inst, const InstanceSource& source,
                              const GraspConfig& cfg, const GraspResult& result,
                              const std::optional<BruteForceSummary>& reference);

/// "cost,probability" rows by descending probability.
std::string cost_table_csv(const CostDistribution& dist);

std::string brute_force_json(const TspInstance& inst, const BruteForceSummary& summary);

/// "cost,count" rows by ascending cost.
std::string cost_frequency_csv(const BruteForceSummary& summary);

/// One row per observed outcome: outcome,rank,permutation,cost,count,probability.
/// Discarded outcomes leave rank, permutation and cost empty.
std::string sample_csv(const ShotHistogram& h, const RankCostLookup& lookup,
                       const RankPolicy& policy);

/// Exact variant: one row per outcome with nonzero probability, empty count.
std::string exact_sample_csv(std::span<const double> probs, const RankCostLookup& lookup,
                             const RankPolicy& policy);

/// "rank=.. digits=(..) perm=[..] perm1=[..]".
std::string codec_line(const Rank& rank);

/// q-bit outcome, most significant bit first.
std::string outcome_bits(std::uint64_t outcome, std::size_t qubits);

}  // namespace iqaoa

#endif  // IQAOA_REPORT_HPP
