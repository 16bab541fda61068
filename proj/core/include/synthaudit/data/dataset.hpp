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

#ifndef SYNTHAUDIT_DATA_DATASET_HPP_
#define SYNTHAUDIT_DATA_DATASET_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synthaudit/numcore/matrix.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::data {

enum class ColumnKind { kContinuous, kBinary };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::kContinuous;

  friend bool operator==(const Column&, const Column&) = default;
};

class Schema {
 public:
  Schema() = default;
  // Throws SchemaError on duplicate names.
  explicit Schema(std::vector<Column> columns);

  // Continuous columns named prefix0, prefix1, ...
  static Schema continuous(std::size_t count, const std::string& prefix = "x");

  std::size_t size() const noexcept { return columns_.size(); }
  const Column& operator[](std::size_t i) const { return columns_[i]; }
  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Column> columns_;
};

// Per-column affine map x -> (x - mean) / scale.
struct StandardizationParams {
  std::vector<double> mean;
  std::vector<double> scale;

  friend bool operator==(const StandardizationParams&,
                         const StandardizationParams&) = default;
};

class Dataset {
 public:
  Dataset() = default;
  // Throws SchemaError if the column counts disagree.
  Dataset(Schema schema, numcore::RealMatrix values,
          std::optional<StandardizationParams> standardization = std::nullopt);

  const Schema& schema() const noexcept { return schema_; }
  const numcore::RealMatrix& values() const noexcept { return values_; }
  std::size_t rows() const noexcept { return values_.rows(); }
  std::size_t cols() const noexcept { return schema_.size(); }
  bool empty() const noexcept { return values_.rows() == 0; }
  std::span<const double> row(std::size_t r) const { return values_.row(r); }

  bool standardized() const noexcept { return standardization_.has_value(); }
  const std::optional<StandardizationParams>& standardization() const noexcept {
    return standardization_;
  }

  Dataset select_rows(std::span<const std::size_t> indices) const;
  Dataset with_values(numcore::RealMatrix values) const;

 private:
  Schema schema_;
  numcore::RealMatrix values_;
  std::optional<StandardizationParams> standardization_;
};

// Rows of both sets; schemas and standardization state must match.
Dataset concat(const Dataset& a, const Dataset& b);

// Adds U(-half_width, half_width) noise to binary columns only.
Dataset dequantize_binary(const Dataset& data, numcore::SeededRng& rng,
                          double half_width = 0.05);

}  // namespace synthaudit::data

#endif  // SYNTHAUDIT_DATA_DATASET_HPP_
