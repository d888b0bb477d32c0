// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "iqaoa/error.hpp"

namespace iqaoa {

namespace {

// Substream tags under the master seed.
constexpr std::uint64_t kPhase1 = 1;
constexpr std::uint64_t kPhase2 = 2;
constexpr std::uint64_t kFinal = 3;
constexpr std::uint64_t kStartStream = 0;
constexpr std::uint64_t kElsStream = 1;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const auto workers = std::min(threads, count);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct StartOutcome {
  std::optional<EvaluatedParams> result;
  std::uint64_t evaluations = 0;
};

// Index of the lowest score; ties go to the lower index.
std::size_t argmin_score(const std::vector<StartOutcome>& outcomes) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].result->score < outcomes[best].result->score) best = i;
  }
  return best;
}

}  // namespace

void GraspConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidArgument, std::string("invalid configuration: ") + what);
  };
  require(starts >= 1, "np must be >= 1");
  require(els_iterations >= 1, "ne must be >= 1");
  require(children_phase1 >= 1 && children_phase2 >= 1, "nd1 and nd2 must be >= 1");
  require(layers >= 1, "layers must be >= 1");
  require(shots_search >= 1 && shots_final >= 1, "shot counts must be >= 1");
  require(delta_floor_init > 0.0 && delta_floor_init <= delta_init,
          "need 0 < delta floor <= initial delta");
  require(delta_shrink > 1.0, "delta shrink factor must exceed 1");
  require(reeval >= 1, "reeval must be >= 1");
  require(threads >= 1, "threads must be >= 1");
}

EvaluatedParams SearchContext::evaluate(const AnsatzParams& params, Rng& rng) const {
  const std::uint64_t seed = rng();
  EvaluatedParams e{params, objective(params, seed), seed};
  if (evaluations) evaluations->fetch_add(1, std::memory_order_relaxed);
  if (observer && *observer) (*observer)(e);
  return e;
}

Evaluator::Evaluator(const TspInstance& inst, const GraspConfig& cfg)
    : lookup_(inst),
      qubits_(qubit_count(inst.size())),
      shots_(cfg.shots_search),
      criterion_(cfg.criterion),
      policy_(cfg.policy),
      exact_(cfg.exact),
      reeval_(cfg.reeval) {}

double Evaluator::operator()(const AnsatzParams& params, std::uint64_t eval_seed) const {
  // Search-time scoring uses the product form; the final distribution is
  // built by the full statevector sweep.
  const auto probs = product_probabilities(params, qubits_);
  if (exact_) return evaluate(exact_distribution(probs, lookup_, policy_), criterion_);
  double total = 0.0;
  for (std::size_t r = 0; r < reeval_; ++r) {
    const auto seed = r == 0 ? eval_seed : derive_seed(eval_seed, {r});
    const auto h = sample_probabilities(probs, shots_, seed);
    total += evaluate(histogram_to_costs(h, lookup_, policy_), criterion_);
  }
  return total / static_cast<double>(reeval_);
}

CostDistribution Evaluator::distribution(const AnsatzParams& params, std::uint64_t shots,
                                         std::uint64_t seed) const {
  const auto probs = product_probabilities(params, qubits_);
  if (exact_) return exact_distribution(probs, lookup_, policy_);
  return histogram_to_costs(sample_probabilities(probs, shots, seed), lookup_, policy_);
}

AnsatzParams random_params(std::size_t layers, Rng& rng) {
  if (layers == 0) fail(ErrorCode::InvalidArgument, "layers must be >= 1");
  std::vector<double> beta(layers), gamma(layers);
  for (auto& a : beta) a = uniform01(rng) * kTwoPi;
  for (auto& a : gamma) a = uniform01(rng) * kTwoPi;
  return AnsatzParams(std::move(beta), std::move(gamma));
}

AnsatzParams neighbor(const AnsatzParams& params, double delta, ParamMask mask, Rng& rng) {
  if (!(delta > 0.0)) fail(ErrorCode::InvalidArgument, "neighbor step must be positive");
  if (!mask.beta && !mask.gamma) fail(ErrorCode::InvalidArgument, "empty parameter mask");
  auto beta = params.beta();
  auto gamma = params.gamma();
  auto perturb = [&](std::vector<double>& angles) {
    for (auto& a : angles) a += (2.0 * uniform01(rng) - 1.0) * delta;
  };
  if (mask.beta) perturb(beta);
  if (mask.gamma) perturb(gamma);
  return AnsatzParams(std::move(beta), std::move(gamma));
}

std::size_t ladder_rungs(double delta_hi, double delta_lo) {
  std::size_t rungs = 0;
  // Relative slack so 0.1 / 10 / 10 still counts as reaching 0.001.
  for (double d = delta_hi; d >= delta_lo * (1.0 - 1e-9); d /= 10.0) ++rungs;
  return rungs;
}

EvaluatedParams local_search(const EvaluatedParams& start, ParamMask mask, double delta_hi,
                             double delta_lo, std::size_t budget, const SearchContext& ctx,
                             Rng& rng) {
  if (!(delta_lo > 0.0) || delta_hi < delta_lo) {
    fail(ErrorCode::InvalidArgument, "local search needs delta_hi >= delta_lo > 0");
  }
  EvaluatedParams current = start;
  if (budget == 0) return current;
  const auto rungs = ladder_rungs(delta_hi, delta_lo);
  double delta = delta_hi;
  for (std::size_t rung = 0; rung < rungs; ++rung, delta /= 10.0) {
    for (std::size_t trial = 0; trial < budget; ++trial) {
      auto candidate = ctx.evaluate(neighbor(current.params, delta, mask, rng), rng);
      if (candidate.score < current.score) current = std::move(candidate);
    }
  }
  return current;
}

EvaluatedParams els(const EvaluatedParams& current, const ElsSettings& settings,
                    ParamMask mask, const SearchContext& ctx, std::uint64_t stream_seed) {
  if (settings.iterations == 0 || settings.children == 0) {
    fail(ErrorCode::InvalidArgument, "ELS needs ne >= 1 and nd >= 1");
  }
  EvaluatedParams best = current;
  EvaluatedParams incumbent = current;
  double floor = settings.delta_floor_init;
  for (std::size_t it = 0; it < settings.iterations; ++it) {
    std::optional<EvaluatedParams> best_child;
    for (std::size_t c = 0; c < settings.children; ++c) {
      Rng rng(derive_seed(stream_seed, {it, c}));
      auto child = ctx.evaluate(neighbor(incumbent.params, settings.delta_init, mask, rng), rng);
      child = local_search(child, mask, settings.delta_init, floor, settings.budget, ctx, rng);
      if (!best_child || child.score < best_child->score) best_child = std::move(child);
    }
    incumbent = std::move(*best_child);
    if (incumbent.score < best.score) best = incumbent;
    floor /= settings.delta_shrink;
  }
  return best;
}

OptimizationResult optimize_angles(const Objective& objective, const GraspConfig& cfg,
                                   const EvaluationObserver* observer) {
  cfg.validate();
  const ElsSettings base{cfg.els_iterations, cfg.children_phase1, cfg.delta_init,
                         cfg.delta_floor_init, cfg.delta_shrink, cfg.local_search_budget};
  ElsSettings phase2_settings = base;
  phase2_settings.children = cfg.children_phase2;

  std::uint64_t evaluations = 0;
  std::vector<std::pair<std::uint64_t, double>> trace;
  double running_best = 0.0;
  auto record = [&](const std::vector<StartOutcome>& outcomes) {
    for (const auto& o : outcomes) {
      evaluations += o.evaluations;
      if (trace.empty() || o.result->score < running_best) running_best = o.result->score;
      trace.emplace_back(evaluations, running_best);
    }
  };

  // Phase 1: uniform random starts, joint beta/gamma search.
  auto t0 = Clock::now();
  std::vector<StartOutcome> phase1(cfg.starts);
  parallel_for(cfg.starts, cfg.threads, [&](std::size_t s) {
    std::atomic<std::uint64_t> count{0};
    const SearchContext ctx{objective, &count, observer};
    Rng rng(derive_seed(cfg.master_seed, {kPhase1, s, kStartStream}));
    const auto start = ctx.evaluate(random_params(cfg.layers, rng), rng);
    phase1[s].result = els(start, base, ParamMask::both(), ctx,
                           derive_seed(cfg.master_seed, {kPhase1, s, kElsStream}));
    phase1[s].evaluations = count.load();
  });
  record(phase1);
  const auto incumbent = *phase1[argmin_score(phase1)].result;
  const double phase1_ms = elapsed_ms(t0);

  // Phase 2: gamma-only restarts around the phase-1 incumbent.
  t0 = Clock::now();
  std::vector<StartOutcome> phase2(cfg.starts);
  parallel_for(cfg.starts, cfg.threads, [&](std::size_t r) {
    std::atomic<std::uint64_t> count{0};
    const SearchContext ctx{objective, &count, observer};
    Rng rng(derive_seed(cfg.master_seed, {kPhase2, r, kStartStream}));
    const auto start = ctx.evaluate(
        neighbor(incumbent.params, cfg.delta_init, ParamMask::gamma_only(), rng), rng);
    phase2[r].result = els(start, phase2_settings, ParamMask::gamma_only(), ctx,
                           derive_seed(cfg.master_seed, {kPhase2, r, kElsStream}));
    phase2[r].evaluations = count.load();
  });
  record(phase2);
  const double phase2_ms = elapsed_ms(t0);

  const auto& challenger = *phase2[argmin_score(phase2)].result;
  return OptimizationResult{challenger.score < incumbent.score ? challenger : incumbent,
                            incumbent,
                            evaluations,
                            std::move(trace),
                            phase1_ms,
                            phase2_ms};
}

GraspResult grasp_els(const TspInstance& inst, const GraspConfig& cfg,
                      const EvaluationObserver* observer) {
  cfg.validate();
  const Evaluator evaluator(inst, cfg);
  const Objective objective = [&evaluator](const AnsatzParams& p, std::uint64_t seed) {
    return evaluator(p, seed);
  };
  auto optimization = optimize_angles(objective, cfg, observer);

  const auto t0 = Clock::now();
  const auto state = build_state(optimization.best.params, evaluator.qubits());
  std::optional<ShotHistogram> histogram;
  std::vector<double> probs;
  auto final_dist = [&] {
    if (cfg.exact) {
      probs = probabilities(state);
      return exact_distribution(state, evaluator.lookup(), cfg.policy);
    }
    histogram = sample(state, cfg.shots_final, derive_seed(cfg.master_seed, {kFinal}));
    return histogram_to_costs(*histogram, evaluator.lookup(), cfg.policy);
  }();
  GraspResult result{std::move(optimization), std::move(final_dist), std::move(histogram),
                     std::move(probs), evaluator.qubits(), 0.0};
  result.final_ms = elapsed_ms(t0);
  return result;
}

}  // namespace iqaoa
