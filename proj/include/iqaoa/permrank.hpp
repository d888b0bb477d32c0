// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Bijections between permutation ranks, factorial-base digit strings
// (subexceedant functions / Lehmer codes) and permutations. Ranks follow
// lexicographic order: rank 0 is the identity, rank n!-1 the reversal.

#ifndef IQAOA_PERMRANK_HPP
#define IQAOA_PERMRANK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace iqaoa {

/// Largest n for which n! fits in 64 bits.
inline constexpr std::size_t kMaxFactorialArg = 20;

/// k! for k <= 20; throws OutOfRange above that.
std::uint64_t factorial(std::size_t k);

/// A rearrangement of {0, ..., n-1}, n >= 1.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> elems);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return elems_.size(); }
  std::span<const std::uint32_t> elems() const noexcept { return elems_; }
  std::uint32_t operator[](std::size_t i) const { return elems_[i]; }

  /// Same permutation with labels shifted to 1..n (display only).
  std::vector<std::uint32_t> one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> elems_;
};

/// Digits stored most significant first: [f(n-1), f(n-2), ..., f(0)],
/// with 0 <= f(i) <= i.
class SubexceedantFunction {
 public:
  explicit SubexceedantFunction(std::vector<std::uint32_t> digits);

  std::size_t size() const noexcept { return digits_.size(); }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }

  /// f(i), the coefficient of i! in the factorial-base expansion.
  std::uint32_t at(std::size_t i) const { return digits_[digits_.size() - 1 - i]; }

  friend bool operator==(const SubexceedantFunction&,
                         const SubexceedantFunction&) = default;

 private:
  std::vector<std::uint32_t> digits_;
};

/// Index of a permutation of length n in lexicographic order.
class Rank {
 public:
  Rank(std::uint64_t value, std::size_t n);

  std::uint64_t value() const noexcept { return value_; }
  std::size_t n() const noexcept { return n_; }

  friend bool operator==(const Rank&, const Rank&) = default;

 private:
  std::uint64_t value_;
  std::size_t n_;
};

SubexceedantFunction rank_to_factoradic(const Rank& x);
Rank factoradic_to_rank(const SubexceedantFunction& f);

SubexceedantFunction perm_to_subexceedant(const Permutation& sigma);
Permutation subexceedant_to_perm(const SubexceedantFunction& f);

Permutation rank_to_perm(const Rank& x);
Rank perm_to_rank(const Permutation& sigma);

/// "[a, b, c]" rendering used by reports and the CLI.
std::string format_sequence(std::span<const std::uint32_t> values);

}  // namespace iqaoa

#endif  // IQAOA_PERMRANK_HPP
