// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Statevector simulation of the rank-encoded ansatz. Basis state |x> holds
// the rank x directly (qubit j carries bit j of x). Each layer applies the
// diagonal phase separator e^{-i gamma x}, realized as one phase gate per
// qubit, followed by the transverse-field mixer e^{-i beta X} on every qubit.

#ifndef IQAOA_QSIM_HPP
#define IQAOA_QSIM_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <vector>

namespace iqaoa {

using Amplitude = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr std::size_t kMaxQubits = 24;

/// Reduces an angle into [0, 2*pi). Idempotent on already-reduced values.
double canonical_angle(double radians);

/// Layer count p with p mixer angles (beta) and p phase angles (gamma),
/// reduced into [0, 2*pi) on construction.
class AnsatzParams {
 public:
  AnsatzParams(std::vector<double> beta, std::vector<double> gamma);

  /// Flat layout [beta_1..beta_p, gamma_1..gamma_p].
  static AnsatzParams from_flat(std::span<const double> angles);

  std::size_t layers() const noexcept { return beta_.size(); }
  const std::vector<double>& beta() const noexcept { return beta_; }
  const std::vector<double>& gamma() const noexcept { return gamma_; }
  std::vector<double> flat() const;

  friend bool operator==(const AnsatzParams&, const AnsatzParams&) = default;

 private:
  std::vector<double> beta_;
  std::vector<double> gamma_;
};

class StateVector {
 public:
  StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes);

  /// Computational basis state |index>.
  static StateVector basis(std::size_t qubits, std::uint64_t index);

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  double norm() const;

 private:
  std::size_t qubits_;
  std::vector<Amplitude> amps_;
};

/// Smallest q with 2^q >= n!, for 2 <= n <= 12.
std::size_t qubit_count(std::size_t customers);

/// Elementary single-qubit gates in the ansatz: q Hadamards plus q phase
/// and q mixer gates per layer.
std::size_t gate_count(std::size_t qubits, std::size_t layers);

/// Hadamard on every qubit of |0...0>. 1 <= q <= 24.
StateVector prepare_uniform(std::size_t qubits);

void apply_phase_separator(StateVector& state, double gamma);
void apply_mixer(StateVector& state, double beta);

/// Layers k = 1..p, phase separator then mixer, on the uniform state.
StateVector build_state(const AnsatzParams& params, std::size_t qubits);

std::vector<double> probabilities(const StateVector& state);

/// The ansatz has no entangling gates, so its output is a product of
/// single-qubit states. Entry j holds qubit j's amplitudes for |0> and |1>.
std::vector<std::array<Amplitude, 2>> qubit_factors(const AnsatzParams& params,
                                                    std::size_t qubits);

/// Same distribution as probabilities(build_state(params, qubits)), in
/// O(p*q + 2^q) instead of O(p*q*2^q). Agrees to rounding (about 1e-15).
std::vector<double> product_probabilities(const AnsatzParams& params, std::size_t qubits);

struct ShotHistogram {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total_shots = 0;
};

/// Draws `shots` outcomes by inverse-CDF sampling. Deterministic in
/// (state, shots, seed).
ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);
ShotHistogram sample_probabilities(std::span<const double> probs, std::uint64_t shots,
                                   std::uint64_t seed);

}  // namespace iqaoa

#endif  // IQAOA_QSIM_HPP
