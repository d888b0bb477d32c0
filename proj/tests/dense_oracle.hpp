// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference for the ansatz: explicit 2^q x 2^q matrices
// multiplied onto |0...0>. Only practical for a handful of qubits.

#ifndef IQAOA_TESTS_DENSE_ORACLE_HPP
#define IQAOA_TESTS_DENSE_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "iqaoa/qsim.hpp"

namespace iqaoa::testing {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = a.size(), rb = b.size();
  Matrix out(ra * rb, std::vector<Complex>(ra * rb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return out;
}

// Qubit 0 is the least significant bit, so it is the rightmost factor.
inline Matrix tensor_power(const Matrix& m, std::size_t q) {
  Matrix out{{Complex{1.0, 0.0}}};
  for (std::size_t j = 0; j < q; ++j) out = kron(m, out);
  return out;
}

inline std::vector<Complex> multiply(const Matrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline std::vector<Complex> dense_ansatz(const AnsatzParams& params, std::size_t q) {
  const std::size_t dim = std::size_t{1} << q;
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> v(dim);
  v[0] = 1.0;
  const Matrix hadamard{{h, h}, {h, -h}};
  v = multiply(tensor_power(hadamard, q), v);
  for (std::size_t k = 0; k < params.layers(); ++k) {
    Matrix phase(dim, std::vector<Complex>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
      phase[x][x] = std::exp(Complex{0.0, -params.gamma()[k] * static_cast<double>(x)});
    }
    v = multiply(phase, v);
    const double c = std::cos(params.beta()[k]);
    const double s = std::sin(params.beta()[k]);
    const Matrix rx{{c, Complex{0.0, -s}}, {Complex{0.0, -s}, c}};
    v = multiply(tensor_power(rx, q), v);
  }
  return v;
}

}  // namespace iqaoa::testing

#endif  // IQAOA_TESTS_DENSE_ORACLE_HPP
