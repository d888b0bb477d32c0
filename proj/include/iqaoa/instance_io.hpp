// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IQAOA_INSTANCE_IO_HPP
#define IQAOA_INSTANCE_IO_HPP

#include <string>
#include <string_view>

#include "iqaoa/tsp.hpp"

namespace iqaoa {

enum class InstanceFormat { Auto, Csv, Json };

/// "csv", "json" or "auto"; throws InvalidArgument otherwise.
InstanceFormat parse_instance_format(std::string_view name);

/// CSV: n lines of n comma-separated numbers, row i = distances from i.
TspInstance parse_instance_csv(std::string_view text);

/// JSON: {"n": <int>, "d": [[row 0], ..., [row n-1]]}.
TspInstance parse_instance_json(std::string_view text);

/// Auto picks JSON for a ".json" extension and CSV otherwise.
TspInstance load_instance(const std::string& path, InstanceFormat format = InstanceFormat::Auto);

/// Whole file as bytes; throws Io if unreadable.
std::string read_file(const std::string& path);

/// 64-bit FNV-1a digest, used to fingerprint instance files in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace iqaoa

#endif  // IQAOA_INSTANCE_IO_HPP
