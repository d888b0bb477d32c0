// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

// Shared instances for the test binaries.

#ifndef IQAOA_TESTS_FIXTURES_HPP
#define IQAOA_TESTS_FIXTURES_HPP

#include <string>

#include "iqaoa/instance_io.hpp"
#include "iqaoa/tsp.hpp"

namespace iqaoa::testing {

inline std::string data_path(const std::string& name) {
  return std::string(IQAOA_DATA_DIR) + "/" + name;
}

inline const TspInstance& six_customers() {
  static const TspInstance inst = load_instance(data_path("tsp6.csv"));
  return inst;
}

inline const TspInstance& eight_customers() {
  static const TspInstance inst = load_instance(data_path("tsp8.json"));
  return inst;
}

}  // namespace iqaoa::testing

#endif  // IQAOA_TESTS_FIXTURES_HPP
