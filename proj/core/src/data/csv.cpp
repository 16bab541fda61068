// Copyright 2026 The synth-audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synthaudit/data/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "synthaudit/error.hpp"

namespace synthaudit::data {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

Dataset read_csv(std::istream& in, const CsvOptions& options) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("CSV input is empty (no header)");
  std::vector<std::string> names;
  for (auto field : split_fields(trim(line))) {
    auto name = trim(field);
    if (name.empty()) throw ParseError("empty column name in header");
    names.emplace_back(name);
  }

  std::vector<double> values;
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    auto view = trim(line);
    if (view.empty()) continue;
    ++data_row;
    auto fields = split_fields(view);
    if (fields.size() != names.size()) {
      throw DataError("row " + std::to_string(data_row) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(names.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      auto cell = trim(fields[c]);
      if (cell.empty()) {
        throw DataError("missing value at row " + std::to_string(data_row) +
                        ", column '" + names[c] + "'");
      }
      if (cell.front() == '+') cell.remove_prefix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError("non-numeric value '" + std::string(trim(fields[c])) +
                         "' at row " + std::to_string(data_row) + ", column '" +
                         names[c] + "'");
      }
      if (!std::isfinite(v)) {
        throw DataError("non-finite value at row " + std::to_string(data_row) +
                        ", column '" + names[c] + "'");
      }
      values.push_back(v);
    }
  }

  const std::size_t cols = names.size();
  std::vector<Column> columns;
  columns.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    bool binary = options.infer_binary && data_row > 0;
    for (std::size_t r = 0; binary && r < data_row; ++r) {
      const double v = values[r * cols + c];
      binary = (v == 0.0 || v == 1.0);
    }
    columns.push_back({names[c], binary ? ColumnKind::kBinary : ColumnKind::kContinuous});
  }
  return Dataset(Schema(std::move(columns)),
                 numcore::RealMatrix(data_row, cols, std::move(values)));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_csv(in, options);
}

void write_csv(std::ostream& out, const Dataset& data) {
  const auto& schema = data.schema();
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (c) out << ',';
    out << schema[c].name;
  }
  out << '\n';
  for (std::size_t r = 0; r < data.rows(); ++r) {
    auto row = data.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

void save_csv(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_csv(out, data);
}

}  // namespace synthaudit::data
