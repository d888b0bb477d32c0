// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "dense_oracle.hpp"
#include "iqaoa/error.hpp"
#include "iqaoa/qsim.hpp"
#include "iqaoa/seeding.hpp"

using namespace iqaoa;
using std::numbers::pi;

namespace {

AnsatzParams random_angles(std::size_t layers, Rng& rng) {
  std::vector<double> beta(layers), gamma(layers);
  for (auto& a : beta) a = uniform01(rng) * kTwoPi;
  for (auto& a : gamma) a = uniform01(rng) * kTwoPi;
  return AnsatzParams(beta, gamma);
}

double max_amplitude_error(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.dimension(); ++x) {
    worst = std::max(worst, std::abs(a.amplitudes()[x] - b.amplitudes()[x]));
  }
  return worst;
}

}  // namespace

TEST_SUITE("qsim") {

TEST_CASE("qubit and gate counts") {
  CHECK(qubit_count(2) == 1);
  CHECK(qubit_count(6) == 10);
  CHECK(qubit_count(8) == 16);
  CHECK(gate_count(16, 2) == 80);
  CHECK(gate_count(10, 1) == 30);
  CHECK_THROWS_AS(qubit_count(1), Error);
  CHECK_THROWS_AS(qubit_count(13), Error);
}

TEST_CASE("angles are canonical") {
  CHECK(canonical_angle(0.0) == 0.0);
  CHECK(canonical_angle(kTwoPi) == 0.0);
  CHECK(canonical_angle(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK(canonical_angle(7.0) == doctest::Approx(7.0 - kTwoPi));
  const auto p = AnsatzParams::from_flat(std::vector<double>{0.1, 0.2, -1.0, 9.0});
  CHECK(p.layers() == 2);
  CHECK(p.beta()[1] == 0.2);
  for (double a : p.flat()) CHECK((a >= 0.0 && a < kTwoPi));
  CHECK_THROWS_AS(AnsatzParams({0.1}, {0.2, 0.3}), Error);
  CHECK_THROWS_AS(AnsatzParams::from_flat(std::vector<double>{0.1, 0.2, 0.3}), Error);
}

TEST_CASE("uniform preparation") {
  const auto one = prepare_uniform(1);
  CHECK(one.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  const auto two = prepare_uniform(2);
  for (auto a : two.amplitudes()) CHECK(a == std::complex<double>(0.5, 0.0));
  for (double p : probabilities(prepare_uniform(10))) CHECK(p == doctest::Approx(1.0 / 1024));
  for (double p : probabilities(prepare_uniform(3))) CHECK(p == doctest::Approx(0.125));
}

TEST_CASE("phase separator") {
  auto s = prepare_uniform(2);
  const auto before = s;
  apply_phase_separator(s, 0.0);
  CHECK(max_amplitude_error(s, before) == 0.0);

  auto t = prepare_uniform(2);
  apply_phase_separator(t, pi / 2);
  for (std::size_t x = 0; x < 4; ++x) {
    const auto expected = 0.5 * std::exp(std::complex<double>(0.0, -pi / 2 * double(x)));
    CHECK(std::abs(t.amplitudes()[x] - expected) < 1e-12);
  }

  for (std::size_t q : {4U, 12U, 20U}) {
    auto u = prepare_uniform(q);
    const auto ref = u;
    apply_phase_separator(u, kTwoPi);
    CHECK(max_amplitude_error(u, ref) < 1e-10);
  }
}

TEST_CASE("mixer") {
  auto s = prepare_uniform(3);
  const auto ref = s;
  apply_mixer(s, 0.0);
  CHECK(max_amplitude_error(s, ref) == 0.0);

  auto b = StateVector::basis(4, 5);
  apply_mixer(b, pi / 2);
  const auto probs = probabilities(b);
  CHECK(probs[15 ^ 5] == doctest::Approx(1.0));

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    auto u = prepare_uniform(5);
    apply_mixer(u, uniform01(rng) * kTwoPi);
    for (double p : probabilities(u)) CHECK(p == doctest::Approx(1.0 / 32).epsilon(1e-12));
  }
}

TEST_CASE("two-qubit dense matrix example") {
  const AnsatzParams params({pi / 4}, {pi / 2});
  const auto state = build_state(params, 2);
  const auto dense = iqaoa::testing::dense_ansatz(params, 2);
  for (std::size_t x = 0; x < 4; ++x) CHECK(std::abs(state.amplitudes()[x] - dense[x]) < 1e-12);
}

TEST_CASE("build state matches dense matrices for q <= 4") {
  Rng rng(2024);
  for (std::size_t q = 1; q <= 4; ++q) {
    for (int t = 0; t < 25; ++t) {
      const auto params = random_angles(1 + t % 3, rng);
      const auto state = build_state(params, q);
      const auto dense = iqaoa::testing::dense_ansatz(params, q);
      for (std::size_t x = 0; x < dense.size(); ++x) {
        REQUIRE(std::abs(state.amplitudes()[x] - dense[x]) < 1e-9);
      }
    }
  }
}

TEST_CASE("zero phase angles leave probabilities uniform") {
  Rng rng(9);
  for (std::size_t q : {3U, 10U}) {
    const auto state = build_state(AnsatzParams({uniform01(rng) * 6, uniform01(rng) * 6}, {0.0, 0.0}), q);
    const double u = 1.0 / static_cast<double>(state.dimension());
    for (double p : probabilities(state)) REQUIRE(std::abs(p - u) < 1e-12);
  }
}

TEST_CASE("norm is preserved up to 16 qubits") {
  Rng rng(17);
  for (std::size_t q : {1U, 6U, 11U, 16U}) {
    const auto state = build_state(random_angles(2, rng), q);
    CHECK(std::abs(state.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("product form agrees with the statevector sweep") {
  Rng rng(31);
  for (std::size_t q : {1U, 5U, 10U, 13U}) {
    for (int t = 0; t < 5; ++t) {
      const auto params = random_angles(1 + t % 3, rng);
      const auto swept = probabilities(build_state(params, q));
      const auto product = product_probabilities(params, q);
      REQUIRE(product.size() == swept.size());
      for (std::size_t x = 0; x < swept.size(); ++x) REQUIRE(std::abs(product[x] - swept[x]) < 1e-13);
    }
  }
}

TEST_CASE("sampling") {
  const auto basis = StateVector::basis(3, 5);
  const auto h = sample(basis, 100, 1);
  CHECK(h.total_shots == 100);
  CHECK(h.counts.size() == 1);
  CHECK(h.counts.at(5) == 100);

  const auto uniform = prepare_uniform(1);
  const auto big = sample(uniform, 1000000, 42);
  const double f0 = static_cast<double>(big.counts.at(0)) / 1e6;
  CHECK(std::abs(f0 - 0.5) < 0.002);

  const auto a = sample(prepare_uniform(6), 500, 77);
  const auto b = sample(prepare_uniform(6), 500, 77);
  CHECK(a.counts == b.counts);
  const auto c = sample(prepare_uniform(6), 500, 78);
  CHECK(a.counts != c.counts);

  CHECK_THROWS_AS(sample(uniform, 0, 1), Error);
}

TEST_CASE("sampled frequencies approach probabilities") {
  Rng rng(123);
  for (std::size_t q = 1; q <= 10; ++q) {
    const auto probs = probabilities(build_state(random_angles(2, rng), q));
    // The sampling error of a spread-out state grows like sqrt(2^q / shots).
    const std::uint64_t shots = q <= 6 ? 100000 : 1000000;
    const auto h = sample_probabilities(probs, shots, derive_seed(q, {0}));
    double tv = 0.0;
    for (std::uint64_t x = 0; x < probs.size(); ++x) {
      const auto it = h.counts.find(x);
      const double f = it == h.counts.end() ? 0.0 : double(it->second) / double(shots);
      tv += std::abs(f - probs[x]);
    }
    CHECK(tv / 2 < 0.02);
  }
}

TEST_CASE("sampling never returns zero-probability outcomes") {
  const std::vector<double> probs{0.0, 0.5, 0.0, 0.5, 0.0, 0.0};
  const auto h = sample_probabilities(probs, 10000, 3);
  for (const auto& [outcome, count] : h.counts) CHECK((outcome == 1 || outcome == 3));
}

TEST_CASE("invalid states") {
  CHECK_THROWS_AS(StateVector(2, std::vector<Amplitude>(3)), Error);
  CHECK_THROWS_AS(StateVector::basis(2, 4), Error);
  CHECK_THROWS_AS(prepare_uniform(0), Error);
  CHECK_THROWS_AS(prepare_uniform(25), Error);
}

}  // TEST_SUITE
