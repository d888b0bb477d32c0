// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/permrank.hpp"

#include <sstream>

#include "iqaoa/error.hpp"

namespace iqaoa {

std::uint64_t factorial(std::size_t k) {
  if (k > kMaxFactorialArg) {
    fail(ErrorCode::OutOfRange,
         "factorial(" + std::to_string(k) + ") overflows 64 bits");
  }
  std::uint64_t result = 1;
  for (std::size_t i = 2; i <= k; ++i) result *= i;
  return result;
}

Permutation::Permutation(std::vector<std::uint32_t> elems)
    : elems_(std::move(elems)) {
  if (elems_.empty()) {
    fail(ErrorCode::InvalidArgument, "permutation must have at least one element");
  }
  std::vector<bool> seen(elems_.size(), false);
  for (auto e : elems_) {
    if (e >= elems_.size() || seen[e]) {
      fail(ErrorCode::InvalidArgument,
           "not a permutation of 0.." + std::to_string(elems_.size() - 1) +
               ": " + format_sequence(elems_));
    }
    seen[e] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(e));
}

std::vector<std::uint32_t> Permutation::one_based() const {
  std::vector<std::uint32_t> out(elems_);
  for (auto& e : out) ++e;
  return out;
}

SubexceedantFunction::SubexceedantFunction(std::vector<std::uint32_t> digits)
    : digits_(std::move(digits)) {
  if (digits_.empty()) {
    fail(ErrorCode::InvalidArgument, "subexceedant function must be non-empty");
  }
  const std::size_t n = digits_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = n - 1 - k;
    if (digits_[k] > i) {
      fail(ErrorCode::InvalidArgument,
           "digit f(" + std::to_string(i) + ") = " + std::to_string(digits_[k]) +
               " exceeds " + std::to_string(i));
    }
  }
}

Rank::Rank(std::uint64_t value, std::size_t n) : value_(value), n_(n) {
  if (n == 0 || n > kMaxFactorialArg) {
    fail(ErrorCode::OutOfRange,
         "permutation length " + std::to_string(n) + " outside 1.." +
             std::to_string(kMaxFactorialArg));
  }
  if (value >= factorial(n)) {
    fail(ErrorCode::OutOfRange, "rank " + std::to_string(value) +
                                    " out of range for n = " + std::to_string(n));
  }
}

SubexceedantFunction rank_to_factoradic(const Rank& x) {
  const std::size_t n = x.n();
  std::vector<std::uint32_t> digits(n);
  std::uint64_t rest = x.value();
  // Radix i+1 at place i; digits filled from the least significant end.
  for (std::size_t i = 0; i < n; ++i) {
    digits[n - 1 - i] = static_cast<std::uint32_t>(rest % (i + 1));
    rest /= (i + 1);
  }
  return SubexceedantFunction(std::move(digits));
}

Rank factoradic_to_rank(const SubexceedantFunction& f) {
  const std::size_t n = f.size();
  if (n > kMaxFactorialArg) {
    fail(ErrorCode::OutOfRange, "digit string too long for a 64-bit rank");
  }
  std::uint64_t value = 0;
  // Horner evaluation: ((f(n-1)) * (n-1) + f(n-2)) * (n-2) + ...
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = n - 1 - k;
    value = value * (i + 1) + f.digits()[k];
  }
  return Rank(value, n);
}

SubexceedantFunction perm_to_subexceedant(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::uint32_t> digits(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t smaller_after = 0;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (sigma[k] < sigma[j]) ++smaller_after;
    }
    digits[j] = smaller_after;
  }
  return SubexceedantFunction(std::move(digits));
}

Permutation subexceedant_to_perm(const SubexceedantFunction& f) {
  const std::size_t n = f.size();
  std::vector<std::uint32_t> available(n);
  for (std::size_t i = 0; i < n; ++i) available[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> out;
  out.reserve(n);
  for (auto d : f.digits()) {
    if (d >= available.size()) {
      fail(ErrorCode::InvalidArgument, "digit out of range for remaining values");
    }
    out.push_back(available[d]);
    available.erase(available.begin() + d);
  }
  return Permutation(std::move(out));
}

Permutation rank_to_perm(const Rank& x) {
  return subexceedant_to_perm(rank_to_factoradic(x));
}

Rank perm_to_rank(const Permutation& sigma) {
  return factoradic_to_rank(perm_to_subexceedant(sigma));
}

std::string format_sequence(std::span<const std::uint32_t> values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i];
  }
  os << ']';
  return os.str();
}

}  // namespace iqaoa
