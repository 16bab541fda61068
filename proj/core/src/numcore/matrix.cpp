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

#include "synthaudit/numcore/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synthaudit/error.hpp"

namespace synthaudit::numcore {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols,
                       std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw DimensionError("matrix " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " given " +
                         std::to_string(values_.size()) + " values");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw NumericError("non-finite matrix entry at row " +
                         std::to_string(i / std::max<std::size_t>(cols_, 1)) +
                         ", column " +
                         std::to_string(i % std::max<std::size_t>(cols_, 1)));
    }
  }
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return RealMatrix();
  const std::size_t cols = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw DimensionError("ragged rows: expected " + std::to_string(cols) +
                           " columns, got " + std::to_string(r.size()));
    }
    values.insert(values.end(), r.begin(), r.end());
  }
  return RealMatrix(rows.size(), cols, std::move(values));
}

RealMatrix RealMatrix::column_vector(std::span<const double> values) {
  return RealMatrix(values.size(), 1,
                    std::vector<double>(values.begin(), values.end()));
}

std::vector<double> RealMatrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index out of range");
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RealMatrix RealMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * cols_);
  for (std::size_t idx : indices) {
    if (idx >= rows_) throw DimensionError("row index out of range");
    auto r = row(idx);
    out.insert(out.end(), r.begin(), r.end());
  }
  RealMatrix m;
  m.rows_ = indices.size();
  m.cols_ = cols_;
  m.values_ = std::move(out);
  return m;
}

RealMatrix vstack(const RealMatrix& top, const RealMatrix& bottom) {
  if (top.empty()) return bottom;
  if (bottom.empty()) return top;
  if (top.cols() != bottom.cols()) {
    throw DimensionError("vstack column mismatch");
  }
  std::vector<double> values(top.values().begin(), top.values().end());
  values.insert(values.end(), bottom.values().begin(), bottom.values().end());
  return RealMatrix(top.rows() + bottom.rows(), top.cols(), std::move(values));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("distance between unequal dims");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace synthaudit::numcore
