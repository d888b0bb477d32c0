// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Noise-free convex objective for exercising the search machinery.

#ifndef IQAOA_TESTS_SURROGATE_HPP
#define IQAOA_TESTS_SURROGATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "iqaoa/optimizer.hpp"

namespace iqaoa::testing {

// Sum of (angle - 1)^2 over all canonical angles; minimum 0 at all ones.
inline double surrogate(const AnsatzParams& p, std::uint64_t /*seed*/) {
  double s = 0.0;
  for (double a : p.flat()) s += (a - 1.0) * (a - 1.0);
  return s;
}

inline double max_distance_to_optimum(const AnsatzParams& p) {
  double worst = 0.0;
  for (double a : p.flat()) worst = std::max(worst, std::abs(a - 1.0));
  return worst;
}

// Search settings for the surrogate: wider first step so a start anywhere
// in [0, 2pi) can travel to the minimum.
inline GraspConfig surrogate_config(std::uint64_t seed) {
  GraspConfig cfg;
  cfg.master_seed = seed;
  cfg.delta_init = 1.0;
  cfg.local_search_budget = 20;
  return cfg;
}

}  // namespace iqaoa::testing

#endif  // IQAOA_TESTS_SURROGATE_HPP
