// Copyright 2026 The iqaoa Authors
// SPDX-License-Identifier: Apache-2.0

#include "iqaoa/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iqaoa/error.hpp"

namespace iqaoa {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view field, std::size_t line, std::size_t col) {
  field = trim(field);
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::Parse, "malformed number '" + std::string(field) + "' at line " +
                               std::to_string(line) + ", column " + std::to_string(col));
  }
  return value;
}

}  // namespace

InstanceFormat parse_instance_format(std::string_view name) {
  if (name == "csv") return InstanceFormat::Csv;
  if (name == "json") return InstanceFormat::Json;
  if (name == "auto") return InstanceFormat::Auto;
  fail(ErrorCode::InvalidArgument, "unknown instance format '" + std::string(name) + "'");
}

TspInstance parse_instance_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    std::size_t col = 1;
    while (true) {
      const auto comma = line.find(',', start);
      const auto field = line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                           : comma - start);
      row.push_back(parse_number(field, line_no, col));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
      ++col;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorCode::Parse, "CSV instance is empty");
  return TspInstance(rows);
}

TspInstance parse_instance_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON instance: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("d")) {
    fail(ErrorCode::Parse, "JSON instance must be an object with keys \"n\" and \"d\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    fail(ErrorCode::Parse, "JSON instance: \"n\" must be a positive integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  const auto& d = doc["d"];
  if (!d.is_array()) fail(ErrorCode::Parse, "JSON instance: \"d\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_array()) {
      fail(ErrorCode::Parse, "JSON instance: row " + std::to_string(i) + " is not an array");
    }
    std::vector<double> row;
    for (const auto& v : d[i]) {
      if (!v.is_number()) {
        fail(ErrorCode::Parse, "JSON instance: non-numeric entry in row " + std::to_string(i));
      }
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    fail(ErrorCode::InvalidInstance, "distance matrix is not square: \"n\" = " +
                                         std::to_string(n) + " but \"d\" has " +
                                         std::to_string(rows.size()) + " rows");
  }
  return TspInstance(rows);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TspInstance load_instance(const std::string& path, InstanceFormat format) {
  const auto text = read_file(path);
  if (format == InstanceFormat::Auto) {
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    format = json ? InstanceFormat::Json : InstanceFormat::Csv;
  }
  return format == InstanceFormat::Json ? parse_instance_json(text) : parse_instance_csv(text);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace iqaoa
