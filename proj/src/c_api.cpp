// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/iqaoa.h"

#include <charconv>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <string_view>

#include "iqaoa/criteria.hpp"
#include "iqaoa/error.hpp"
#include "iqaoa/instance_io.hpp"
#include "iqaoa/optimizer.hpp"
#include "iqaoa/permrank.hpp"
#include "iqaoa/qsim.hpp"
#include "iqaoa/report.hpp"
#include "iqaoa/tsp.hpp"
#include "text.hpp"

struct iqaoa_instance {
  iqaoa::TspInstance inst;
  iqaoa::InstanceSource source;
};

struct iqaoa_config {
  iqaoa::GraspConfig cfg;
};

struct iqaoa_bruteforce {
  iqaoa::TspInstance inst;
  iqaoa::BruteForceSummary summary;
};

struct iqaoa_result {
  iqaoa::TspInstance inst;
  iqaoa::GraspConfig cfg;
  iqaoa::GraspResult result;
  std::string report;
};

namespace {

thread_local std::string last_error;

struct StatusError {
  iqaoa_status_t status;
  std::string message;
};

template <class T>
T& deref(T* p, const char* what) {
  if (p == nullptr) throw StatusError{IQAOA_ERR_NULL_POINTER, std::string(what) + " is NULL"};
  return *p;
}

template <class Body>
iqaoa_status_t guarded(Body&& body) noexcept {
  try {
    body();
    return IQAOA_OK;
  } catch (const StatusError& e) {
    last_error = e.message;
    return e.status;
  } catch (const iqaoa::Error& e) {
    last_error = e.what();
    return static_cast<iqaoa_status_t>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return IQAOA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IQAOA_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return IQAOA_ERR_INTERNAL;
  }
}

void copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
  deref(needed, "needed");
  *needed = text.size() + 1;
  if (buf == nullptr) return;
  if (cap < text.size() + 1) {
    throw StatusError{IQAOA_ERR_BUFFER_TOO_SMALL,
                      "buffer holds " + std::to_string(cap) + " bytes, need " +
                          std::to_string(text.size() + 1)};
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
}

template <class U>
U parse_unsigned(std::string_view s, std::string_view key) {
  U v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    iqaoa::fail(iqaoa::ErrorCode::Parse,
                "value '" + std::string(s) + "' for '" + std::string(key) +
                    "' is not a non-negative integer");
  }
  return v;
}

bool parse_bool(std::string_view s, std::string_view key) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  iqaoa::fail(iqaoa::ErrorCode::Parse,
              "value '" + std::string(s) + "' for '" + std::string(key) + "' is not a boolean");
}

void set_config(iqaoa::GraspConfig& c, std::string_view key, std::string_view value) {
  using iqaoa::text::to_double;
  if (key == "np") c.starts = parse_unsigned<std::size_t>(value, key);
  else if (key == "ne") c.els_iterations = parse_unsigned<std::size_t>(value, key);
  else if (key == "nd1") c.children_phase1 = parse_unsigned<std::size_t>(value, key);
  else if (key == "nd2") c.children_phase2 = parse_unsigned<std::size_t>(value, key);
  else if (key == "layers") c.layers = parse_unsigned<std::size_t>(value, key);
  else if (key == "shots-search") c.shots_search = parse_unsigned<std::uint64_t>(value, key);
  else if (key == "shots-final") c.shots_final = parse_unsigned<std::uint64_t>(value, key);
  else if (key == "delta-init") c.delta_init = to_double(value, key);
  else if (key == "delta-floor") c.delta_floor_init = to_double(value, key);
  else if (key == "delta-shrink") c.delta_shrink = to_double(value, key);
  else if (key == "budget") c.local_search_budget = parse_unsigned<std::size_t>(value, key);
  else if (key == "criterion") c.criterion = iqaoa::CriterionSpec::parse(value);
  else if (key == "policy") c.policy = iqaoa::RankPolicy::parse(value);
  else if (key == "seed") c.master_seed = parse_unsigned<std::uint64_t>(value, key);
  else if (key == "exact") c.exact = parse_bool(value, key);
  else if (key == "reeval") c.reeval = parse_unsigned<std::size_t>(value, key);
  else if (key == "threads") c.threads = parse_unsigned<std::size_t>(value, key);
  else iqaoa::fail(iqaoa::ErrorCode::InvalidArgument, "unknown configuration key '" +
                                                          std::string(key) + "'");
}

}  // namespace

extern "C" {

const char* iqaoa_version(void) { return "0.1.0"; }

const char* iqaoa_status_string(iqaoa_status_t status) {
  switch (status) {
    case IQAOA_OK: return "ok";
    case IQAOA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IQAOA_ERR_OUT_OF_RANGE: return "out of range";
    case IQAOA_ERR_PARSE: return "parse error";
    case IQAOA_ERR_IO: return "i/o error";
    case IQAOA_ERR_INVALID_INSTANCE: return "invalid instance";
    case IQAOA_ERR_BUDGET: return "enumeration budget exceeded";
    case IQAOA_ERR_EMPTY_DISTRIBUTION: return "empty distribution";
    case IQAOA_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case IQAOA_ERR_NULL_POINTER: return "null pointer";
    case IQAOA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* iqaoa_last_error(void) { return last_error.c_str(); }

// ---- instances -------------------------------------------------------------

iqaoa_status_t iqaoa_instance_load(const char* path, const char* format, iqaoa_instance_t* out) {
  return guarded([&] {
    deref(out, "out") = nullptr;
    const std::string file(&deref(path, "path"));
    const auto fmt = format ? iqaoa::parse_instance_format(format) : iqaoa::InstanceFormat::Auto;
    auto inst = iqaoa::load_instance(file, fmt);
    const auto digest = iqaoa::fnv1a64(iqaoa::read_file(file));
    *out = new iqaoa_instance{std::move(inst), {file, digest}};
  });
}

iqaoa_status_t iqaoa_instance_from_matrix(size_t n, const double* distances,
                                          iqaoa_instance_t* out) {
  return guarded([&] {
    deref(out, "out") = nullptr;
    const double* d = &deref(distances, "distances");
    *out = new iqaoa_instance{iqaoa::TspInstance(n, std::vector<double>(d, d + n * n)),
                              {"<memory>", 0}};
  });
}

iqaoa_status_t iqaoa_instance_destroy(iqaoa_instance_t inst) {
  return guarded([&] { delete inst; });
}

iqaoa_status_t iqaoa_instance_size(iqaoa_instance_t inst, size_t* n) {
  return guarded([&] { deref(n, "n") = deref(inst, "instance").inst.size(); });
}

iqaoa_status_t iqaoa_instance_distance(iqaoa_instance_t inst, size_t from, size_t to,
                                       double* out) {
  return guarded([&] {
    const auto& i = deref(inst, "instance").inst;
    if (from >= i.size() || to >= i.size()) {
      iqaoa::fail(iqaoa::ErrorCode::OutOfRange, "customer index out of range");
    }
    deref(out, "out") = i.distance(from, to);
  });
}

iqaoa_status_t iqaoa_instance_digest(iqaoa_instance_t inst, uint64_t* out) {
  return guarded([&] { deref(out, "out") = deref(inst, "instance").source.digest; });
}

iqaoa_status_t iqaoa_tour_cost(iqaoa_instance_t inst, const uint32_t* perm, size_t len,
                               double* cost) {
  return guarded([&] {
    const uint32_t* p = &deref(perm, "perm");
    iqaoa::Permutation sigma(std::vector<std::uint32_t>(p, p + len));
    deref(cost, "cost") = iqaoa::tour_cost(sigma, deref(inst, "instance").inst);
  });
}

iqaoa_status_t iqaoa_rank_cost(iqaoa_instance_t inst, uint64_t rank, double* cost) {
  return guarded([&] {
    const auto& i = deref(inst, "instance").inst;
    deref(cost, "cost") = iqaoa::rank_cost(iqaoa::Rank(rank, i.size()), i);
  });
}

// ---- codec -----------------------------------------------------------------

iqaoa_status_t iqaoa_factorial(size_t k, uint64_t* out) {
  return guarded([&] { deref(out, "out") = iqaoa::factorial(k); });
}

iqaoa_status_t iqaoa_rank_to_perm(size_t n, uint64_t rank, uint32_t* perm_out) {
  return guarded([&] {
    deref(perm_out, "perm_out");
    const auto perm = iqaoa::rank_to_perm(iqaoa::Rank(rank, n));
    std::copy(perm.elems().begin(), perm.elems().end(), perm_out);
  });
}

iqaoa_status_t iqaoa_perm_to_rank(const uint32_t* perm, size_t n, uint64_t* rank) {
  return guarded([&] {
    const uint32_t* p = &deref(perm, "perm");
    deref(rank, "rank") =
        iqaoa::perm_to_rank(iqaoa::Permutation(std::vector<std::uint32_t>(p, p + n))).value();
  });
}

iqaoa_status_t iqaoa_rank_to_factoradic(size_t n, uint64_t rank, uint32_t* digits_out) {
  return guarded([&] {
    deref(digits_out, "digits_out");
    const auto f = iqaoa::rank_to_factoradic(iqaoa::Rank(rank, n));
    std::copy(f.digits().begin(), f.digits().end(), digits_out);
  });
}

iqaoa_status_t iqaoa_factoradic_to_rank(const uint32_t* digits, size_t n, uint64_t* rank) {
  return guarded([&] {
    const uint32_t* d = &deref(digits, "digits");
    deref(rank, "rank") =
        iqaoa::factoradic_to_rank(
            iqaoa::SubexceedantFunction(std::vector<std::uint32_t>(d, d + n)))
            .value();
  });
}

iqaoa_status_t iqaoa_codec_describe(size_t n, uint64_t rank, char* buf, size_t cap,
                                    size_t* needed) {
  return guarded([&] { copy_out(iqaoa::codec_line(iqaoa::Rank(rank, n)), buf, cap, needed); });
}

// ---- circuit ---------------------------------------------------------------

iqaoa_status_t iqaoa_qubit_count(size_t customers, size_t* qubits) {
  return guarded([&] { deref(qubits, "qubits") = iqaoa::qubit_count(customers); });
}

iqaoa_status_t iqaoa_gate_count(size_t qubits, size_t layers, size_t* gates) {
  return guarded([&] { deref(gates, "gates") = iqaoa::gate_count(qubits, layers); });
}

iqaoa_status_t iqaoa_state_probabilities(size_t qubits, const double* angles,
                                         size_t angle_count, double* probs_out) {
  return guarded([&] {
    const double* a = &deref(angles, "angles");
    deref(probs_out, "probs_out");
    const auto params = iqaoa::AnsatzParams::from_flat(std::span<const double>(a, angle_count));
    const auto probs = iqaoa::probabilities(iqaoa::build_state(params, qubits));
    std::copy(probs.begin(), probs.end(), probs_out);
  });
}

// ---- brute force -----------------------------------------------------------

iqaoa_status_t iqaoa_bruteforce_run(iqaoa_instance_t inst, iqaoa_bruteforce_t* out) {
  return guarded([&] {
    deref(out, "out") = nullptr;
    const auto& i = deref(inst, "instance").inst;
    *out = new iqaoa_bruteforce{i, iqaoa::brute_force(i)};
  });
}

iqaoa_status_t iqaoa_bruteforce_destroy(iqaoa_bruteforce_t bf) {
  return guarded([&] { delete bf; });
}

iqaoa_status_t iqaoa_bruteforce_optimal_cost(iqaoa_bruteforce_t bf, double* cost) {
  return guarded([&] { deref(cost, "cost") = deref(bf, "bruteforce").summary.optimal_cost; });
}

iqaoa_status_t iqaoa_bruteforce_optimal_ranks(iqaoa_bruteforce_t bf, uint64_t* ranks, size_t cap,
                                              size_t* count) {
  return guarded([&] {
    const auto& optima = deref(bf, "bruteforce").summary.optimal_ranks;
    deref(count, "count") = optima.size();
    if (ranks == nullptr) return;
    if (cap < optima.size()) {
      throw StatusError{IQAOA_ERR_BUFFER_TOO_SMALL, "rank buffer too small"};
    }
    std::copy(optima.begin(), optima.end(), ranks);
  });
}

iqaoa_status_t iqaoa_bruteforce_distinct_costs(iqaoa_bruteforce_t bf, size_t* count) {
  return guarded(
      [&] { deref(count, "count") = deref(bf, "bruteforce").summary.distinct_cost_count; });
}

iqaoa_status_t iqaoa_bruteforce_summary_json(iqaoa_bruteforce_t bf, char* buf, size_t cap,
                                             size_t* needed) {
  return guarded([&] {
    const auto& b = deref(bf, "bruteforce");
    copy_out(iqaoa::brute_force_json(b.inst, b.summary), buf, cap, needed);
  });
}

iqaoa_status_t iqaoa_bruteforce_histogram_csv(iqaoa_bruteforce_t bf, char* buf, size_t cap,
                                              size_t* needed) {
  return guarded([&] {
    copy_out(iqaoa::cost_frequency_csv(deref(bf, "bruteforce").summary), buf, cap, needed);
  });
}

// ---- configuration ---------------------------------------------------------

iqaoa_status_t iqaoa_config_create(iqaoa_config_t* out) {
  return guarded([&] { deref(out, "out") = new iqaoa_config{}; });
}

iqaoa_status_t iqaoa_config_destroy(iqaoa_config_t cfg) {
  return guarded([&] { delete cfg; });
}

iqaoa_status_t iqaoa_config_set(iqaoa_config_t cfg, const char* key, const char* value) {
  return guarded([&] {
    auto& c = deref(cfg, "config").cfg;
    set_config(c, &deref(key, "key"), &deref(value, "value"));
  });
}

// ---- sampling --------------------------------------------------------------

iqaoa_status_t iqaoa_sample_csv(iqaoa_instance_t inst, iqaoa_config_t cfg, const double* angles,
                                size_t angle_count, uint64_t shots, uint64_t seed, char* buf,
                                size_t cap, size_t* needed) {
  return guarded([&] {
    const auto& i = deref(inst, "instance").inst;
    const iqaoa::GraspConfig c = cfg ? cfg->cfg : iqaoa::GraspConfig{};
    const double* a = &deref(angles, "angles");
    const auto params = iqaoa::AnsatzParams::from_flat(std::span<const double>(a, angle_count));
    const iqaoa::RankCostLookup lookup(i);
    const auto state = iqaoa::build_state(params, iqaoa::qubit_count(i.size()));
    if (c.exact) {
      const auto probs = iqaoa::probabilities(state);
      copy_out(iqaoa::exact_sample_csv(probs, lookup, c.policy), buf, cap, needed);
    } else {
      const auto h = iqaoa::sample(state, shots, seed);
      copy_out(iqaoa::sample_csv(h, lookup, c.policy), buf, cap, needed);
    }
  });
}

// ---- solve -----------------------------------------------------------------

iqaoa_status_t iqaoa_solve(iqaoa_instance_t inst, iqaoa_config_t cfg, int with_reference,
                           iqaoa_result_t* out) {
  return guarded([&] {
    deref(out, "out") = nullptr;
    const auto& in = deref(inst, "instance");
    const iqaoa::GraspConfig c = cfg ? cfg->cfg : iqaoa::GraspConfig{};
    auto result = iqaoa::grasp_els(in.inst, c);
    std::optional<iqaoa::BruteForceSummary> reference;
    if (with_reference) reference = iqaoa::brute_force(in.inst);
    auto report = iqaoa::solve_report_json(in.inst, in.source, c, result, reference);
    *out = new iqaoa_result{in.inst, c, std::move(result), std::move(report)};
  });
}

iqaoa_status_t iqaoa_result_destroy(iqaoa_result_t res) {
  return guarded([&] { delete res; });
}

iqaoa_status_t iqaoa_result_best_score(iqaoa_result_t res, double* score) {
  return guarded(
      [&] { deref(score, "score") = deref(res, "result").result.optimization.best.score; });
}

iqaoa_status_t iqaoa_result_best_angles(iqaoa_result_t res, double* angles, size_t cap,
                                        size_t* count) {
  return guarded([&] {
    const auto flat = deref(res, "result").result.optimization.best.params.flat();
    deref(count, "count") = flat.size();
    if (angles == nullptr) return;
    if (cap < flat.size()) throw StatusError{IQAOA_ERR_BUFFER_TOO_SMALL, "angle buffer too small"};
    std::copy(flat.begin(), flat.end(), angles);
  });
}

iqaoa_status_t iqaoa_result_evaluations(iqaoa_result_t res, uint64_t* count) {
  return guarded(
      [&] { deref(count, "count") = deref(res, "result").result.optimization.evaluations; });
}

iqaoa_status_t iqaoa_result_cost_probability(iqaoa_result_t res, double cost,
                                             double* probability) {
  return guarded([&] {
    deref(probability, "probability") =
        deref(res, "result").result.final_distribution.weight_of(cost);
  });
}

iqaoa_status_t iqaoa_result_mean_cost(iqaoa_result_t res, double* mean) {
  return guarded(
      [&] { deref(mean, "mean") = iqaoa::mean(deref(res, "result").result.final_distribution); });
}

iqaoa_status_t iqaoa_result_median_cost(iqaoa_result_t res, double* median) {
  return guarded([&] {
    deref(median, "median") =
        iqaoa::percentile(deref(res, "result").result.final_distribution, 0.5);
  });
}

iqaoa_status_t iqaoa_result_report_json(iqaoa_result_t res, char* buf, size_t cap,
                                        size_t* needed) {
  return guarded([&] { copy_out(deref(res, "result").report, buf, cap, needed); });
}

iqaoa_status_t iqaoa_result_cost_table_csv(iqaoa_result_t res, char* buf, size_t cap,
                                           size_t* needed) {
  return guarded([&] {
    copy_out(iqaoa::cost_table_csv(deref(res, "result").result.final_distribution), buf, cap,
             needed);
  });
}

}  // extern "C"
