// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the solver only through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iqaoa/iqaoa.h"

namespace {

struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(iqaoa_status_t status) {
  if (status != IQAOA_OK) {
    throw ApiError(std::string(iqaoa_status_string(status)) + ": " + iqaoa_last_error());
  }
}

// Two-call buffer protocol: query the size, then copy.
template <class Call>
std::string fetch_text(Call&& call) {
  size_t needed = 0;
  check(call(nullptr, 0, &needed));
  std::string text(needed, '\0');
  check(call(text.data(), text.size(), &needed));
  text.resize(needed - 1);
  return text;
}

template <class T, iqaoa_status_t (*Destroy)(T)>
struct Handle {
  T h = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (h) Destroy(h);
  }
};

using Instance = Handle<iqaoa_instance_t, iqaoa_instance_destroy>;
using Config = Handle<iqaoa_config_t, iqaoa_config_destroy>;
using BruteForce = Handle<iqaoa_bruteforce_t, iqaoa_bruteforce_destroy>;
using Result = Handle<iqaoa_result_t, iqaoa_result_destroy>;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ApiError("cannot write '" + path + "'");
  out << text;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    T v{};
    if (!(is >> v) || !(is >> std::ws).eof()) {
      throw ApiError(std::string("malformed ") + what + " list '" + text + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ApiError(std::string("empty ") + what + " list");
  return values;
}

struct InstanceArgs {
  std::string path;
  std::string format = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--instance", path, "Instance file (CSV or JSON)")->required()->type_name("PATH");
    cmd->add_option("--format", format, "Instance format (default: by extension)")
        ->check(CLI::IsMember({"csv", "json", "auto"}));
  }

  void load(Instance& inst) const { check(iqaoa_instance_load(path.c_str(), format.c_str(), &inst.h)); }
};

// Flags forwarded verbatim to iqaoa_config_set when given.
struct ConfigArgs {
  std::vector<std::pair<std::string, CLI::Option*>> options;
  // Fixed size so option bindings stay valid.
  std::vector<std::string> storage = std::vector<std::string>(32);
  CLI::Option* exact_flag = nullptr;

  void add(CLI::App* cmd, const std::string& key, const std::string& type,
           const std::string& help) {
    auto& slot = storage.at(options.size());
    options.emplace_back(key, cmd->add_option("--" + key, slot, help)->type_name(type));
  }

  void apply(iqaoa_config_t cfg) const {
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i].second->count() > 0) {
        check(iqaoa_config_set(cfg, options[i].first.c_str(), storage[i].c_str()));
      }
    }
    if (exact_flag && exact_flag->count() > 0) check(iqaoa_config_set(cfg, "exact", "true"));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indirect QAOA solver for the traveling salesman problem"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(iqaoa_version()));

  // solve
  auto* solve = app.add_subcommand("solve", "Optimize circuit angles and report the final distribution");
  InstanceArgs solve_instance;
  solve_instance.add_to(solve);
  ConfigArgs solve_cfg;
  solve_cfg.add(solve, "layers", "INT", "Ansatz layers p (default 2)");
  solve_cfg.add(solve, "np", "INT", "GRASP starts (default 20)");
  solve_cfg.add(solve, "ne", "INT", "ELS iterations (default 5)");
  solve_cfg.add(solve, "nd1", "INT", "ELS children, joint beta/gamma phase (default 3)");
  solve_cfg.add(solve, "nd2", "INT", "ELS children, gamma-only phase (default 5)");
  solve_cfg.add(solve, "shots-search", "INT", "Shots per evaluation during search (default 40)");
  solve_cfg.add(solve, "shots-final", "INT", "Shots for the final distribution (default 1000)");
  solve_cfg.add(solve, "criterion", "SPEC", "Criterion, e.g. mbp0.10+mean (default)");
  solve_cfg.add(solve, "policy", "POLICY", "Out-of-range outcomes: modulo|discard|penalty=<c>");
  solve_cfg.add(solve, "seed", "UINT64", "Master seed");
  solve_cfg.add(solve, "reeval", "INT", "Sampled evaluations averaged per score (default 1)");
  solve_cfg.add(solve, "budget", "INT", "Local-search trials per step size (default 10)");
  solve_cfg.add(solve, "delta-init", "FLOAT", "Initial step in radians (default 0.1)");
  solve_cfg.add(solve, "delta-floor", "FLOAT", "Initial smallest step (default 0.001)");
  solve_cfg.add(solve, "delta-shrink", "FLOAT", "Floor divisor per ELS iteration (default 10)");
  solve_cfg.add(solve, "threads", "INT", "Worker threads for independent starts (default 1)");
  solve_cfg.exact_flag = solve->add_flag("--exact", "Use exact probabilities instead of shots");
  bool solve_reference = false;
  solve->add_flag("--reference", solve_reference,
                  "Add brute-force optimum statistics to the summary (n <= 10)");
  std::string solve_output;
  std::string solve_costs;
  solve->add_option("--output", solve_output, "Report path (default stdout)");
  solve->add_option("--cost-histogram", solve_costs, "Write the final cost table as CSV");

  // brute-force
  auto* brute = app.add_subcommand("brute-force", "Enumerate every tour (n <= 10)");
  InstanceArgs brute_instance;
  brute_instance.add_to(brute);
  std::string brute_output;
  std::string brute_costs;
  brute->add_option("--output", brute_output, "Summary path (default stdout)");
  brute->add_option("--cost-histogram", brute_costs, "Write cost,count CSV for all tours");

  // codec
  auto* codec = app.add_subcommand("codec", "Convert between ranks and permutations");
  std::size_t codec_n = 0;
  std::uint64_t codec_rank = 0;
  std::string codec_perm;
  std::string codec_perm1;
  codec->add_option("--n", codec_n, "Permutation length (required with --rank)");
  auto* rank_opt = codec->add_option("--rank", codec_rank, "Rank to decode");
  auto* perm_opt = codec->add_option("--perm", codec_perm, "0-indexed permutation, e.g. 1,3,0,2");
  auto* perm1_opt = codec->add_option("--perm1", codec_perm1, "1-indexed permutation, e.g. 2,4,1,3");
  rank_opt->excludes(perm_opt)->excludes(perm1_opt);
  perm_opt->excludes(perm1_opt);

  // sample
  auto* samp = app.add_subcommand("sample", "Sample the circuit at explicit angles");
  InstanceArgs sample_instance;
  sample_instance.add_to(samp);
  std::string sample_angles;
  std::size_t sample_layers = 0;
  std::uint64_t sample_shots = 1000;
  std::string sample_output;
  ConfigArgs sample_cfg;
  samp->add_option("--angles", sample_angles, "beta_1..beta_p,gamma_1..gamma_p")->required();
  samp->add_option("--layers", sample_layers, "Expected layer count (checks the angle list)");
  samp->add_option("--shots", sample_shots, "Shot count (default 1000)");
  std::uint64_t sample_seed = 20240601;
  samp->add_option("--seed", sample_seed, "Sampling seed")->type_name("UINT64");
  sample_cfg.add(samp, "policy", "POLICY", "Out-of-range outcomes: modulo|discard|penalty=<c>");
  sample_cfg.exact_flag = samp->add_flag("--exact", "Emit exact probabilities");
  samp->add_option("--output", sample_output, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      Instance inst;
      solve_instance.load(inst);
      Config cfg;
      check(iqaoa_config_create(&cfg.h));
      solve_cfg.apply(cfg.h);
      Result res;
      check(iqaoa_solve(inst.h, cfg.h, solve_reference ? 1 : 0, &res.h));
      write_output(solve_output, fetch_text([&](char* b, size_t c, size_t* n) {
                     return iqaoa_result_report_json(res.h, b, c, n);
                   }));
      if (!solve_costs.empty()) {
        write_output(solve_costs, fetch_text([&](char* b, size_t c, size_t* n) {
                       return iqaoa_result_cost_table_csv(res.h, b, c, n);
                     }));
      }
    } else if (*brute) {
      Instance inst;
      brute_instance.load(inst);
      BruteForce bf;
      check(iqaoa_bruteforce_run(inst.h, &bf.h));
      write_output(brute_output, fetch_text([&](char* b, size_t c, size_t* n) {
                     return iqaoa_bruteforce_summary_json(bf.h, b, c, n);
                   }));
      if (!brute_costs.empty()) {
        write_output(brute_costs, fetch_text([&](char* b, size_t c, size_t* n) {
                       return iqaoa_bruteforce_histogram_csv(bf.h, b, c, n);
                     }));
      }
    } else if (*codec) {
      std::uint64_t rank = codec_rank;
      std::size_t n = codec_n;
      if (perm_opt->count() || perm1_opt->count()) {
        auto perm = parse_list<std::uint32_t>(perm_opt->count() ? codec_perm : codec_perm1,
                                              "permutation");
        if (perm1_opt->count()) {
          for (auto& e : perm) {
            if (e == 0) throw ApiError("1-indexed permutation contains 0");
            --e;
          }
        }
        if (n != 0 && n != perm.size()) throw ApiError("--n does not match permutation length");
        n = perm.size();
        check(iqaoa_perm_to_rank(perm.data(), perm.size(), &rank));
      } else if (!rank_opt->count() || n == 0) {
        throw ApiError("codec needs --n with --rank, or --perm/--perm1");
      }
      std::cout << fetch_text([&](char* b, size_t c, size_t* len) {
        return iqaoa_codec_describe(n, rank, b, c, len);
      }) << "\n";
    } else if (*samp) {
      Instance inst;
      sample_instance.load(inst);
      const auto angles = parse_list<double>(sample_angles, "angle");
      if (sample_layers != 0 && angles.size() != 2 * sample_layers) {
        throw ApiError("expected " + std::to_string(2 * sample_layers) + " angles, got " +
                       std::to_string(angles.size()));
      }
      Config cfg;
      check(iqaoa_config_create(&cfg.h));
      sample_cfg.apply(cfg.h);
      write_output(sample_output, fetch_text([&](char* b, size_t c, size_t* n) {
                     return iqaoa_sample_csv(inst.h, cfg.h, angles.data(), angles.size(),
                                             sample_shots, sample_seed, b, c, n);
                   }));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
