// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IQAOA_TSP_HPP
#define IQAOA_TSP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "iqaoa/permrank.hpp"

namespace iqaoa {

/// Directed distance matrix over n customers. Square, zero diagonal,
/// finite non-negative entries; symmetry is not required.
class TspInstance {
 public:
  /// Row-major n*n matrix.
  TspInstance(std::size_t n, std::vector<double> distances);
  explicit TspInstance(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double distance(std::size_t from, std::size_t to) const { return d_[from * n_ + to]; }
  const std::vector<double>& matrix() const noexcept { return d_; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

/// Largest instance brute_force and rank_cost_table will enumerate.
inline constexpr std::size_t kMaxEnumerationSize = 10;

/// Closed tour cost, including the return edge sigma[n-1] -> sigma[0].
double tour_cost(const Permutation& sigma, const TspInstance& inst);

/// Cost of the tour with lexicographic rank x.
double rank_cost(const Rank& x, const TspInstance& inst);

/// Cost of every rank 0..n!-1, in rank order. n <= kMaxEnumerationSize.
std::vector<double> rank_cost_table(const TspInstance& inst);

struct BruteForceSummary {
  double optimal_cost = 0.0;
  double max_cost = 0.0;
  /// Ascending.
  std::vector<std::uint64_t> optimal_ranks;
  std::size_t distinct_cost_count = 0;
  std::map<double, std::uint64_t> cost_frequency;
};

BruteForceSummary brute_force(const TspInstance& inst);

/// Cheap upper bound on any tour cost: sum over rows of the row maximum.
double tour_cost_upper_bound(const TspInstance& inst);

}  // namespace iqaoa

#endif  // IQAOA_TSP_HPP
