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

#include "synthaudit/data/dataset.hpp"

#include <set>
#include <utility>

#include "synthaudit/error.hpp"

namespace synthaudit::data {

Schema::Schema(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::set<std::string> seen;
  for (const auto& c : columns_) {
    if (!seen.insert(c.name).second) {
      throw SchemaError("duplicate column name '" + c.name + "'");
    }
  }
}

Schema Schema::continuous(std::size_t count, const std::string& prefix) {
  std::vector<Column> cols;
  cols.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    cols.push_back({prefix + std::to_string(i), ColumnKind::kContinuous});
  }
  return Schema(std::move(cols));
}

std::optional<std::size_t> Schema::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Schema::require_index(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw SchemaError("no column named '" + name + "'");
  return *idx;
}

Dataset::Dataset(Schema schema, numcore::RealMatrix values,
                 std::optional<StandardizationParams> standardization)
    : schema_(std::move(schema)),
      values_(std::move(values)),
      standardization_(std::move(standardization)) {
  if (!values_.empty() && values_.cols() != schema_.size()) {
    throw SchemaError("dataset has " + std::to_string(values_.cols()) +
                      " columns but schema names " +
                      std::to_string(schema_.size()));
  }
}

Dataset Dataset::select_rows(std::span<const std::size_t> indices) const {
  return Dataset(schema_, values_.select_rows(indices), standardization_);
}

Dataset Dataset::with_values(numcore::RealMatrix values) const {
  return Dataset(schema_, std::move(values), standardization_);
}

Dataset concat(const Dataset& a, const Dataset& b) {
  if (!(a.schema() == b.schema())) throw SchemaError("concat: schemas differ");
  if (a.standardization() != b.standardization()) {
    throw SchemaError("concat: standardization states differ");
  }
  return a.with_values(numcore::vstack(a.values(), b.values()));
}

Dataset dequantize_binary(const Dataset& data, numcore::SeededRng& rng,
                          double half_width) {
  std::vector<double> values(data.values().values().begin(),
                             data.values().values().end());
  const std::size_t cols = data.cols();
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (data.schema()[c].kind == ColumnKind::kBinary) {
        values[r * cols + c] += rng.uniform(-half_width, half_width);
      }
    }
  }
  return data.with_values(numcore::RealMatrix(data.rows(), cols, std::move(values)));
}

}  // namespace synthaudit::data
