// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IQAOA_SRC_TEXT_HPP
#define IQAOA_SRC_TEXT_HPP

#include <charconv>
#include <string>
#include <string_view>

#include "iqaoa/error.hpp"

namespace iqaoa::text {

/// Shortest round-tripping decimal form.
inline std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// Whole-string double parse; throws Parse with `what` in the message.
inline double to_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::Parse, "malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace iqaoa::text

#endif  // IQAOA_SRC_TEXT_HPP
