// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "text.hpp"

namespace iqaoa {

namespace {

using Json = nlohmann::ordered_json;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json perm_json(const Permutation& p) {
  const auto e = p.elems();
  return Json(std::vector<std::uint32_t>(e.begin(), e.end()));
}

std::string perm_field(const Permutation& p) {
  std::string out;
  for (auto e : p.elems()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::vector<CostWeight> by_descending_weight(const CostDistribution& dist) {
  auto rows = dist.entries();
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CostWeight& a, const CostWeight& b) { return a.weight > b.weight; });
  return rows;
}

Json config_json(const GraspConfig& cfg) {
  Json c;
  c["np"] = cfg.starts;
  c["ne"] = cfg.els_iterations;
  c["nd1"] = cfg.children_phase1;
  c["nd2"] = cfg.children_phase2;
  c["layers"] = cfg.layers;
  c["shots_search"] = cfg.shots_search;
  c["shots_final"] = cfg.shots_final;
  c["delta_init"] = cfg.delta_init;
  c["delta_floor_init"] = cfg.delta_floor_init;
  c["delta_shrink"] = cfg.delta_shrink;
  c["local_search_budget"] = cfg.local_search_budget;
  c["criterion"] = cfg.criterion.to_string();
  c["policy"] = cfg.policy.to_string();
  c["seed"] = cfg.master_seed;
  c["exact"] = cfg.exact;
  c["reeval"] = cfg.reeval;
  c["threads"] = cfg.threads;
  return c;
}

}  // namespace

std::string outcome_bits(std::uint64_t outcome, std::size_t qubits) {
  std::string bits(qubits, '0');
  for (std::size_t j = 0; j < qubits; ++j) {
    if ((outcome >> j) & 1U) bits[qubits - 1 - j] = '1';
  }
  return bits;
}

std::optional<BestOutcome> best_outcome(const GraspResult& result, const RankCostLookup& lookup,
                                        const RankPolicy& policy) {
  std::optional<BestOutcome> best;
  auto consider = [&](std::uint64_t outcome, double weight) {
    if (weight <= 0.0) return;
    const auto rank = lookup.rank_for(outcome, policy);
    if (!rank) return;
    if (!best || weight > best->weight) best = BestOutcome{outcome, *rank, weight};
  };
  if (result.final_histogram) {
    for (const auto& [outcome, count] : result.final_histogram->counts) {
      consider(outcome, static_cast<double>(count));
    }
  } else {
    for (std::uint64_t x = 0; x < result.final_probabilities.size(); ++x) {
      consider(x, result.final_probabilities[x]);
    }
  }
  return best;
}

std::string solve_report_json(const TspInstance& inst, const InstanceSource& source,
                              const GraspConfig& cfg, const GraspResult& result,
                              const std::optional<BruteForceSummary>& reference) {
  const RankCostLookup lookup(inst);
  const auto& best = result.optimization.best;
  const auto& dist = result.final_distribution;

  Json doc;
  doc["instance"] = {{"n", inst.size()}, {"source", source.path}, {"fnv1a64", hex64(source.digest)}};
  doc["config"] = config_json(cfg);
  doc["qubits"] = result.qubits;
  doc["gate_count"] = gate_count(result.qubits, cfg.layers);
  doc["evaluations"] = result.optimization.evaluations;
  doc["best_params"] = {{"beta", best.params.beta()},
                        {"gamma", best.params.gamma()},
                        {"score", best.score}};

  if (const auto top = best_outcome(result, lookup, cfg.policy)) {
    const auto perm = rank_to_perm(Rank(top->rank, inst.size()));
    Json b;
    b["outcome"] = top->outcome;
    b["bits"] = outcome_bits(top->outcome, result.qubits);
    b["rank"] = top->rank;
    b["permutation"] = perm_json(perm);
    b["permutation_1based"] = perm.one_based();
    b["cost"] = tour_cost(perm, inst);
    if (result.final_histogram) {
      b["count"] = static_cast<std::uint64_t>(top->weight);
    } else {
      b["probability"] = top->weight;
    }
    doc["best_sample"] = std::move(b);
  } else {
    doc["best_sample"] = nullptr;
  }

  Json table = Json::array();
  for (const auto& row : by_descending_weight(dist)) {
    table.push_back({{"cost", row.cost}, {"probability", row.weight}});
  }
  doc["cost_table"] = std::move(table);

  if (result.final_histogram) {
    Json hist = Json::array();
    for (const auto& [outcome, count] : result.final_histogram->counts) {
      hist.push_back({{"outcome", outcome}, {"count", count}});
    }
    doc["histogram"] = std::move(hist);
  } else {
    doc["histogram"] = nullptr;
  }

  Json summary;
  summary["mean"] = mean(dist);
  summary["median"] = percentile(dist, 0.5);
  summary["criterion"] = evaluate(dist, cfg.criterion);
  if (reference) {
    summary["optimal_cost"] = reference->optimal_cost;
    summary["optimal_mass"] = dist.weight_of(reference->optimal_cost);
    summary["uniform_optimal_mass"] = static_cast<double>(reference->optimal_ranks.size()) /
                                      static_cast<double>(factorial(inst.size()));
  }
  doc["summary"] = std::move(summary);

  const auto& opt = result.optimization;
  doc["timings_ms"] = {{"phase1", opt.phase1_ms},
                       {"phase2", opt.phase2_ms},
                       {"final", result.final_ms},
                       {"total", opt.phase1_ms + opt.phase2_ms + result.final_ms}};
  return doc.dump(2) + "\n";
}

std::string cost_table_csv(const CostDistribution& dist) {
  std::string out = "cost,probability\n";
  for (const auto& row : by_descending_weight(dist)) {
    out += text::shortest(row.cost) + "," + text::shortest(row.weight) + "\n";
  }
  return out;
}

std::string brute_force_json(const TspInstance& inst, const BruteForceSummary& summary) {
  Json doc;
  doc["n"] = inst.size();
  doc["permutations"] = factorial(inst.size());
  doc["optimal_cost"] = summary.optimal_cost;
  doc["optimal_count"] = summary.optimal_ranks.size();
  Json optima = Json::array();
  for (auto r : summary.optimal_ranks) {
    const auto perm = rank_to_perm(Rank(r, inst.size()));
    optima.push_back({{"rank", r},
                      {"permutation", perm_json(perm)},
                      {"permutation_1based", perm.one_based()}});
  }
  doc["optimal"] = std::move(optima);
  doc["distinct_cost_count"] = summary.distinct_cost_count;
  doc["max_cost"] = summary.max_cost;
  return doc.dump(2) + "\n";
}

std::string cost_frequency_csv(const BruteForceSummary& summary) {
  std::string out = "cost,count\n";
  for (const auto& [cost, count] : summary.cost_frequency) {
    out += text::shortest(cost) + "," + std::to_string(count) + "\n";
  }
  return out;
}

namespace {

std::string sample_row(std::uint64_t outcome, const RankCostLookup& lookup,
                       const RankPolicy& policy, const std::string& count, double probability) {
  std::string row = std::to_string(outcome) + ",";
  if (const auto rank = lookup.rank_for(outcome, policy)) {
    const auto n = lookup.instance().size();
    row += std::to_string(*rank) + "," + perm_field(rank_to_perm(Rank(*rank, n))) + "," +
           text::shortest(lookup.cost(*rank));
  } else if (policy.mode == RankPolicy::Mode::Penalty) {
    row += ",," + text::shortest(policy.penalty);
  } else {
    row += ",,";
  }
  return row + "," + count + "," + text::shortest(probability) + "\n";
}

}  // namespace

std::string sample_csv(const ShotHistogram& h, const RankCostLookup& lookup,
                       const RankPolicy& policy) {
  std::string out = "outcome,rank,permutation,cost,count,probability\n";
  for (const auto& [outcome, count] : h.counts) {
    out += sample_row(outcome, lookup, policy, std::to_string(count),
                      static_cast<double>(count) / static_cast<double>(h.total_shots));
  }
  return out;
}

std::string exact_sample_csv(std::span<const double> probs, const RankCostLookup& lookup,
                             const RankPolicy& policy) {
  std::string out = "outcome,rank,permutation,cost,count,probability\n";
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    if (probs[x] > 0.0) out += sample_row(x, lookup, policy, "", probs[x]);
  }
  return out;
}

std::string codec_line(const Rank& rank) {
  const auto digits = rank_to_factoradic(rank);
  const auto perm = rank_to_perm(rank);
  std::string d = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) d += ',';
    d += std::to_string(digits.digits()[i]);
  }
  d += ')';
  return "n=" + std::to_string(rank.n()) + " rank=" + std::to_string(rank.value()) +
         " digits=" + d + " perm=" + format_sequence(perm.elems()) +
         " perm1=" + format_sequence(perm.one_based());
}

}  // namespace iqaoa
