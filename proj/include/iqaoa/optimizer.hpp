// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Continuous GRASP x ELS over ansatz angles.
//
// A run has two phases. Phase 1 draws `starts` uniform angle vectors and
// improves each with ELS over both beta and gamma. Phase 2 restarts ELS
// `starts` times from gamma-perturbed copies of the phase-1 incumbent with
// beta frozen. Each ELS iteration spawns `children` perturbed copies of the
// current point, refines them with a step-ladder local search, and adopts
// the best child unconditionally; the best point ever seen is returned.
//
// Randomness is addressed, never shared: every start, ELS iteration and
// child owns a substream derived from the master seed, so results do not
// depend on thread scheduling.

#ifndef IQAOA_OPTIMIZER_HPP
#define IQAOA_OPTIMIZER_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "iqaoa/criteria.hpp"
#include "iqaoa/qsim.hpp"
#include "iqaoa/seeding.hpp"
#include "iqaoa/tsp.hpp"

namespace iqaoa {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct GraspConfig {
  std::size_t starts = 20;            // np
  std::size_t els_iterations = 5;     // ne
  std::size_t children_phase1 = 3;    // nd, joint beta/gamma phase
  std::size_t children_phase2 = 5;    // nd, gamma-only phase
  std::size_t layers = 2;             // p
  std::uint64_t shots_search = 40;
  std::uint64_t shots_final = 1000;
  double delta_init = 0.1;
  double delta_floor_init = 0.001;
  double delta_shrink = 10.0;
  /// Neighbor trials per rung of the local-search step ladder.
  std::size_t local_search_budget = 10;
  CriterionSpec criterion = CriterionSpec::decile_plus_mean();
  RankPolicy policy = RankPolicy::modulo();
  std::uint64_t master_seed = kDefaultSeed;
  /// Score exact probabilities instead of sampled shots.
  bool exact = false;
  /// Sampled evaluations per score, averaged.
  std::size_t reeval = 1;
  std::size_t threads = 1;

  /// Throws InvalidArgument on a violated invariant.
  void validate() const;
};

struct ParamMask {
  bool beta = true;
  bool gamma = true;

  static constexpr ParamMask both() { return {true, true}; }
  static constexpr ParamMask gamma_only() { return {false, true}; }
};

struct EvaluatedParams {
  AnsatzParams params;
  double score = 0.0;
  std::uint64_t eval_seed = 0;
};

/// Score to minimize for given angles and evaluation seed.
using Objective = std::function<double(const AnsatzParams&, std::uint64_t)>;

/// Called after every objective evaluation. Must be thread-safe when the
/// optimizer runs with more than one thread.
using EvaluationObserver = std::function<void(const EvaluatedParams&)>;

/// Everything a search step needs besides its own random stream.
struct SearchContext {
  const Objective& objective;
  std::atomic<std::uint64_t>* evaluations = nullptr;
  const EvaluationObserver* observer = nullptr;

  /// Scores `params` with a fresh evaluation seed drawn from `rng`.
  EvaluatedParams evaluate(const AnsatzParams& params, Rng& rng) const;
};

/// Scores angles on a TSP instance: build the state, sample (or take exact
/// probabilities), map outcomes to tour costs, apply the criterion.
class Evaluator {
 public:
  Evaluator(const TspInstance& inst, const GraspConfig& cfg);

  double operator()(const AnsatzParams& params, std::uint64_t eval_seed) const;

  /// Cost distribution at `params`: exact, or from `shots` seeded shots.
  CostDistribution distribution(const AnsatzParams& params, std::uint64_t shots,
                                std::uint64_t seed) const;

  std::size_t qubits() const noexcept { return qubits_; }
  const RankCostLookup& lookup() const noexcept { return lookup_; }

 private:
  RankCostLookup lookup_;
  std::size_t qubits_;
  std::uint64_t shots_;
  CriterionSpec criterion_;
  RankPolicy policy_;
  bool exact_;
  std::size_t reeval_;
};

/// 2p angles, each uniform on [0, 2*pi).
AnsatzParams random_params(std::size_t layers, Rng& rng);

/// Adds an independent uniform draw from [-delta, delta] to every masked
/// coordinate; unmasked coordinates are returned bit-identical.
AnsatzParams neighbor(const AnsatzParams& params, double delta, ParamMask mask, Rng& rng);

/// Number of rungs delta_hi, delta_hi/10, ... that stay >= delta_lo.
std::size_t ladder_rungs(double delta_hi, double delta_lo);

/// First-improvement hill climbing down the step ladder; up to `budget`
/// neighbor trials per rung. Never returns a worse score than `start`.
EvaluatedParams local_search(const EvaluatedParams& start, ParamMask mask, double delta_hi,
                             double delta_lo, std::size_t budget, const SearchContext& ctx,
                             Rng& rng);

struct ElsSettings {
  std::size_t iterations = 5;
  std::size_t children = 3;
  double delta_init = 0.1;
  double delta_floor_init = 0.001;
  double delta_shrink = 10.0;
  std::size_t budget = 10;
};

/// Evolutionary local search from `current`. Child c of iteration i uses
/// substream derive_seed(stream_seed, {i, c}).
EvaluatedParams els(const EvaluatedParams& current, const ElsSettings& settings,
                    ParamMask mask, const SearchContext& ctx, std::uint64_t stream_seed);

struct OptimizationResult {
  EvaluatedParams best;
  EvaluatedParams phase1_best;
  std::uint64_t evaluations = 0;
  /// (evaluations so far, best score so far) after each start, in phase
  /// then start order.
  std::vector<std::pair<std::uint64_t, double>> best_trace;
  double phase1_ms = 0.0;
  double phase2_ms = 0.0;
};

/// Two-phase GRASP x ELS against an arbitrary objective.
OptimizationResult optimize_angles(const Objective& objective, const GraspConfig& cfg,
                                   const EvaluationObserver* observer = nullptr);

struct GraspResult {
  OptimizationResult optimization;
  /// Final distribution at the best angles (shots_final shots, or exact).
  CostDistribution final_distribution;
  /// Final measurement histogram; empty in exact mode.
  std::optional<ShotHistogram> final_histogram;
  /// Outcome probabilities at the best angles, exact mode only.
  std::vector<double> final_probabilities;
  std::size_t qubits = 0;
  double final_ms = 0.0;
};

GraspResult grasp_els(const TspInstance& inst, const GraspConfig& cfg,
                      const EvaluationObserver* observer = nullptr);

}  // namespace iqaoa

#endif  // IQAOA_OPTIMIZER_HPP
