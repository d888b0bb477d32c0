// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "iqaoa/error.hpp"
#include "iqaoa/permrank.hpp"
#include "iqaoa/seeding.hpp"

using namespace iqaoa;

namespace {

std::vector<std::uint32_t> digits_of(const SubexceedantFunction& f) {
  return {f.digits().begin(), f.digits().end()};
}

std::vector<std::uint32_t> elems_of(const Permutation& p) {
  return {p.elems().begin(), p.elems().end()};
}

ErrorCode code_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an iqaoa::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("permrank") {

TEST_CASE("factorial values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(4) == 24);
  CHECK(factorial(8) == 40320);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK(code_of([] { factorial(21); }) == ErrorCode::OutOfRange);
}

TEST_CASE("rank to factorial digits") {
  CHECK(digits_of(rank_to_factoradic(Rank(208, 6))) == std::vector<std::uint32_t>{1, 3, 2, 2, 0, 0});
  CHECK(digits_of(rank_to_factoradic(Rank(10, 4))) == std::vector<std::uint32_t>{1, 2, 0, 0});
  CHECK(digits_of(rank_to_factoradic(Rank(0, 5))) == std::vector<std::uint32_t>{0, 0, 0, 0, 0});
  CHECK(code_of([] { Rank(720, 6); }) == ErrorCode::OutOfRange);
}

TEST_CASE("factorial digits to rank") {
  CHECK(factoradic_to_rank(SubexceedantFunction({1, 3, 2, 2, 0, 0})).value() == 208);
  CHECK(factoradic_to_rank(SubexceedantFunction({0, 0, 0, 0})).value() == 0);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    std::vector<std::uint32_t> maximal(n);
    std::uint64_t expected = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t i = n - 1 - k;
      maximal[k] = i;
      expected += i * factorial(i);
    }
    CHECK(factoradic_to_rank(SubexceedantFunction(maximal)).value() == expected);
    CHECK(expected == factorial(n) - 1);
  }
  CHECK(code_of([] { SubexceedantFunction({0, 2, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("permutation to digits") {
  CHECK(digits_of(perm_to_subexceedant(Permutation({2, 1, 0, 3}))) ==
        std::vector<std::uint32_t>{2, 1, 0, 0});
  CHECK(digits_of(perm_to_subexceedant(Permutation({5, 1, 4, 0, 2, 3}))) ==
        std::vector<std::uint32_t>{5, 1, 3, 0, 0, 0});
  CHECK(digits_of(perm_to_subexceedant(Permutation::identity(7))) ==
        std::vector<std::uint32_t>(7, 0));
}

TEST_CASE("digits to permutation") {
  CHECK(elems_of(subexceedant_to_perm(SubexceedantFunction({5, 1, 3, 0, 0, 0}))) ==
        std::vector<std::uint32_t>{5, 1, 4, 0, 2, 3});
  CHECK(elems_of(subexceedant_to_perm(SubexceedantFunction({1, 2, 0, 0}))) ==
        std::vector<std::uint32_t>{1, 3, 0, 2});
  CHECK(subexceedant_to_perm(SubexceedantFunction({0, 0, 0})) == Permutation::identity(3));
}

TEST_CASE("rank and permutation anchors") {
  CHECK(elems_of(rank_to_perm(Rank(10, 4))) == std::vector<std::uint32_t>{1, 3, 0, 2});
  CHECK(elems_of(rank_to_perm(Rank(701, 6))) == std::vector<std::uint32_t>{5, 4, 0, 3, 2, 1});
  CHECK(rank_to_perm(Rank(701, 6)).one_based() == std::vector<std::uint32_t>{6, 5, 1, 4, 3, 2});
  CHECK(rank_to_perm(Rank(0, 8)) == Permutation::identity(8));
  CHECK(perm_to_rank(Permutation({1, 3, 0, 2})).value() == 10);
  CHECK(perm_to_rank(Permutation::identity(9)).value() == 0);
  CHECK(perm_to_rank(Permutation({0, 3, 2, 1, 5, 4})).value() == 55);
}

TEST_CASE("ranks of neighbouring four-element permutations") {
  CHECK(elems_of(rank_to_perm(Rank(12, 4))) == std::vector<std::uint32_t>{2, 0, 1, 3});
  CHECK(perm_to_rank(Permutation({2, 1, 0, 3})).value() == 14);
}

TEST_CASE("rank order is lexicographic") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0U);
    std::uint64_t expected = 0;
    do {
      REQUIRE(perm_to_rank(Permutation(p)).value() == expected);
      ++expected;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(expected == factorial(n));
  }
}

TEST_CASE("round trip over random ranks up to n = 20") {
  Rng rng(7);
  for (std::size_t n = 2; n <= 20; ++n) {
    for (int t = 0; t < 200; ++t) {
      const auto value = rng() % factorial(n);
      const Rank x(value, n);
      REQUIRE(perm_to_rank(rank_to_perm(x)) == x);
      REQUIRE(factoradic_to_rank(rank_to_factoradic(x)) == x);
    }
  }
}

TEST_CASE("digit bound holds for every n = 6 rank") {
  for (std::uint64_t v = 0; v < 720; ++v) {
    const auto f = rank_to_factoradic(Rank(v, 6));
    for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(f.at(i) <= i);
  }
}

TEST_CASE("invalid permutations are rejected") {
  CHECK(code_of([] { Permutation({0, 0, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Permutation({0, 3, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Permutation(std::vector<std::uint32_t>{}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sequence formatting") {
  const std::vector<std::uint32_t> v{1, 3, 0, 2};
  CHECK(format_sequence(v) == "[1, 3, 0, 2]");
}

}  // TEST_SUITE
