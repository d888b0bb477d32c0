// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IQAOA_ERROR_HPP
#define IQAOA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace iqaoa {

/// Error categories. Values mirror the C API status codes.
enum class ErrorCode : int {
  InvalidArgument = 1,
  OutOfRange = 2,
  Parse = 3,
  Io = 4,
  InvalidInstance = 5,
  Budget = 6,
  EmptyDistribution = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace iqaoa

#endif  // IQAOA_ERROR_HPP
