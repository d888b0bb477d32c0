// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iqaoa/error.hpp"
#include "iqaoa/permrank.hpp"
#include "iqaoa/seeding.hpp"

namespace iqaoa {

double canonical_angle(double radians) {
  if (!std::isfinite(radians)) fail(ErrorCode::InvalidArgument, "angle is not finite");
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // r + 2*pi can round up to exactly 2*pi for tiny negative inputs.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

AnsatzParams::AnsatzParams(std::vector<double> beta, std::vector<double> gamma)
    : beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (beta_.empty()) fail(ErrorCode::InvalidArgument, "ansatz needs at least one layer");
  if (beta_.size() != gamma_.size()) {
    fail(ErrorCode::InvalidArgument, "beta and gamma must have the same length (got " +
                                         std::to_string(beta_.size()) + " and " +
                                         std::to_string(gamma_.size()) + ")");
  }
  for (auto& a : beta_) a = canonical_angle(a);
  for (auto& a : gamma_) a = canonical_angle(a);
}

AnsatzParams AnsatzParams::from_flat(std::span<const double> angles) {
  if (angles.empty() || angles.size() % 2 != 0) {
    fail(ErrorCode::InvalidArgument,
         "angle list must hold 2*layers values, got " + std::to_string(angles.size()));
  }
  const auto p = angles.size() / 2;
  return AnsatzParams({angles.begin(), angles.begin() + p}, {angles.begin() + p, angles.end()});
}

std::vector<double> AnsatzParams::flat() const {
  std::vector<double> out(beta_);
  out.insert(out.end(), gamma_.begin(), gamma_.end());
  return out;
}

StateVector::StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
  if (qubits_ < 1 || qubits_ > kMaxQubits) {
    fail(ErrorCode::OutOfRange, "qubit count " + std::to_string(qubits_) + " outside 1.." +
                                    std::to_string(kMaxQubits));
  }
  if (amps_.size() != (std::size_t{1} << qubits_)) {
    fail(ErrorCode::InvalidArgument, "state needs 2^q amplitudes");
  }
}

StateVector StateVector::basis(std::size_t qubits, std::uint64_t index) {
  if (qubits < 1 || qubits > kMaxQubits) {
    fail(ErrorCode::OutOfRange, "qubit count " + std::to_string(qubits) + " outside 1.." +
                                    std::to_string(kMaxQubits));
  }
  const std::size_t dim = std::size_t{1} << qubits;
  if (index >= dim) fail(ErrorCode::OutOfRange, "basis index outside the register");
  std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(qubits, std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::size_t qubit_count(std::size_t customers) {
  if (customers < 2 || customers > 12) {
    fail(ErrorCode::OutOfRange,
         "customer count " + std::to_string(customers) + " outside supported range 2..12");
  }
  const auto states = factorial(customers);
  std::size_t q = 0;
  while ((std::uint64_t{1} << q) < states) ++q;
  return q;
}

std::size_t gate_count(std::size_t qubits, std::size_t layers) {
  return qubits * (2 * layers + 1);
}

StateVector prepare_uniform(std::size_t qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    fail(ErrorCode::OutOfRange, "qubit count " + std::to_string(qubits) + " outside 1.." +
                                    std::to_string(kMaxQubits));
  }
  const std::size_t dim = std::size_t{1} << qubits;
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(qubits, std::vector<Amplitude>(dim, Amplitude{a, 0.0}));
}

void apply_phase_separator(StateVector& state, double gamma) {
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  for (std::size_t j = 0; j < state.qubits(); ++j) {
    const std::size_t stride = std::size_t{1} << j;
    // gamma * 2^j is exact; fmod keeps the trig argument small.
    const double theta = std::fmod(gamma * static_cast<double>(stride), kTwoPi);
    const double pr = std::cos(theta);
    const double pim = -std::sin(theta);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t k = base + stride; k < base + 2 * stride; ++k) {
        const Amplitude a = amps[k];
        amps[k] = {a.real() * pr - a.imag() * pim, a.real() * pim + a.imag() * pr};
      }
    }
  }
}

void apply_mixer(StateVector& state, double beta) {
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  for (std::size_t j = 0; j < state.qubits(); ++j) {
    const std::size_t stride = std::size_t{1} << j;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t k0 = base; k0 < base + stride; ++k0) {
        const Amplitude a0 = amps[k0];
        const Amplitude a1 = amps[k0 + stride];
        // [[c, -i s], [-i s, c]]
        amps[k0] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        amps[k0 + stride] = {s * a0.imag() + c * a1.real(), -s * a0.real() + c * a1.imag()};
      }
    }
  }
}

StateVector build_state(const AnsatzParams& params, std::size_t qubits) {
  auto state = prepare_uniform(qubits);
  for (std::size_t k = 0; k < params.layers(); ++k) {
    apply_phase_separator(state, params.gamma()[k]);
    apply_mixer(state, params.beta()[k]);
  }
  return state;
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> out;
  out.reserve(state.dimension());
  for (const auto& a : state.amplitudes()) out.push_back(std::norm(a));
  return out;
}

std::vector<std::array<Amplitude, 2>> qubit_factors(const AnsatzParams& params,
                                                    std::size_t qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    fail(ErrorCode::OutOfRange, "qubit count must be in 1.." + std::to_string(kMaxQubits));
  }
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<std::array<Amplitude, 2>> factors(qubits, {Amplitude{h, 0.0}, Amplitude{h, 0.0}});
  for (std::size_t j = 0; j < qubits; ++j) {
    auto& [a0, a1] = factors[j];
    const double weight = static_cast<double>(std::size_t{1} << j);
    for (std::size_t k = 0; k < params.layers(); ++k) {
      a1 *= std::polar(1.0, -std::fmod(params.gamma()[k] * weight, kTwoPi));
      const double c = std::cos(params.beta()[k]);
      const double s = std::sin(params.beta()[k]);
      const Amplitude minus_is{0.0, -s};
      const Amplitude b0 = c * a0 + minus_is * a1;
      const Amplitude b1 = minus_is * a0 + c * a1;
      a0 = b0;
      a1 = b1;
    }
  }
  return factors;
}

std::vector<double> product_probabilities(const AnsatzParams& params, std::size_t qubits) {
  const auto factors = qubit_factors(params, qubits);
  std::vector<double> probs(std::size_t{1} << qubits);
  probs[0] = 1.0;
  // Kronecker doubling: after step j the first 2^(j+1) entries cover qubits 0..j.
  for (std::size_t j = 0; j < qubits; ++j) {
    const std::size_t half = std::size_t{1} << j;
    const double p0 = std::norm(factors[j][0]);
    const double p1 = std::norm(factors[j][1]);
    for (std::size_t x = 0; x < half; ++x) {
      probs[x + half] = probs[x] * p1;
      probs[x] *= p0;
    }
  }
  return probs;
}

ShotHistogram sample_probabilities(std::span<const double> probs, std::uint64_t shots,
                                   std::uint64_t seed) {
  if (shots == 0) fail(ErrorCode::InvalidArgument, "shot count must be at least 1");
  if (probs.empty()) fail(ErrorCode::InvalidArgument, "cannot sample an empty distribution");
  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
  const double total = cumulative.back();
  if (!(total > 0.0)) fail(ErrorCode::InvalidArgument, "distribution has no mass");

  std::size_t last_positive = probs.size() - 1;
  while (last_positive > 0 && probs[last_positive] <= 0.0) --last_positive;

  Rng rng(seed);
  ShotHistogram h;
  h.total_shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng) * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx > last_positive) idx = last_positive;
    ++h.counts[idx];
  }
  return h;
}

ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  const auto probs = probabilities(state);
  return sample_probabilities(probs, shots, seed);
}

}  // namespace iqaoa
