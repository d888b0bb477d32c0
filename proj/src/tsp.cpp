// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iqaoa/error.hpp"

namespace iqaoa {

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> flat;
  flat.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      fail(ErrorCode::InvalidInstance,
           "distance matrix is not square: row " + std::to_string(i) + " has " +
               std::to_string(rows[i].size()) + " entries, expected " +
               std::to_string(rows.size()));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return flat;
}

double closed_tour(std::span<const std::uint32_t> tour, const TspInstance& inst) {
  const std::size_t n = tour.size();
  double cost = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) cost += inst.distance(tour[i], tour[i + 1]);
  cost += inst.distance(tour[n - 1], tour[0]);
  return cost;
}

}  // namespace

TspInstance::TspInstance(std::size_t n, std::vector<double> distances)
    : n_(n), d_(std::move(distances)) {
  if (n_ == 0) fail(ErrorCode::InvalidInstance, "instance has no customers");
  if (d_.size() != n_ * n_) {
    fail(ErrorCode::InvalidInstance,
         "distance matrix is not square: " + std::to_string(d_.size()) +
             " entries for n = " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = d_[i * n_ + j];
      const std::string where = "d[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!std::isfinite(v)) fail(ErrorCode::InvalidInstance, where + " is not finite");
      if (v < 0.0) fail(ErrorCode::InvalidInstance, where + " is negative");
      if (i == j && v != 0.0) fail(ErrorCode::InvalidInstance, where + " (diagonal) is nonzero");
    }
  }
}

TspInstance::TspInstance(const std::vector<std::vector<double>>& rows)
    : TspInstance(rows.size(), flatten(rows)) {}

double tour_cost(const Permutation& sigma, const TspInstance& inst) {
  if (sigma.size() != inst.size()) {
    fail(ErrorCode::InvalidArgument,
         "tour length " + std::to_string(sigma.size()) + " does not match n = " +
             std::to_string(inst.size()));
  }
  return closed_tour(sigma.elems(), inst);
}

double rank_cost(const Rank& x, const TspInstance& inst) {
  if (x.n() != inst.size()) {
    fail(ErrorCode::InvalidArgument, "rank length does not match instance size");
  }
  return tour_cost(rank_to_perm(x), inst);
}

std::vector<double> rank_cost_table(const TspInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kMaxEnumerationSize) {
    fail(ErrorCode::Budget, "enumeration of " + std::to_string(n) +
                                "! tours exceeds the budget (n <= " +
                                std::to_string(kMaxEnumerationSize) + ")");
  }
  std::vector<double> table;
  table.reserve(factorial(n));
  std::vector<std::uint32_t> tour(n);
  std::iota(tour.begin(), tour.end(), 0u);
  // next_permutation walks lexicographic order, so position == rank.
  do {
    table.push_back(closed_tour(tour, inst));
  } while (std::next_permutation(tour.begin(), tour.end()));
  return table;
}

BruteForceSummary brute_force(const TspInstance& inst) {
  const auto table = rank_cost_table(inst);
  BruteForceSummary s;
  s.optimal_cost = *std::min_element(table.begin(), table.end());
  s.max_cost = *std::max_element(table.begin(), table.end());
  for (std::uint64_t r = 0; r < table.size(); ++r) {
    ++s.cost_frequency[table[r]];
    if (table[r] == s.optimal_cost) s.optimal_ranks.push_back(r);
  }
  s.distinct_cost_count = s.cost_frequency.size();
  return s;
}

double tour_cost_upper_bound(const TspInstance& inst) {
  double bound = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    double row_max = 0.0;
    for (std::size_t j = 0; j < inst.size(); ++j) row_max = std::max(row_max, inst.distance(i, j));
    bound += row_max;
  }
  return bound;
}

}  // namespace iqaoa
