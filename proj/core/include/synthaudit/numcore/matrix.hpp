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

#ifndef SYNTHAUDIT_NUMCORE_MATRIX_HPP_
#define SYNTHAUDIT_NUMCORE_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace synthaudit::numcore {

// Dense row-major matrix of finite doubles. Values are fixed at
// construction; every transformation returns a new matrix.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionError on a size mismatch, NumericError on NaN/inf.
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static RealMatrix column_vector(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  double operator()(std::size_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double> column(std::size_t c) const;

  RealMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// Rows of `top` followed by rows of `bottom`; column counts must agree.
RealMatrix vstack(const RealMatrix& top, const RealMatrix& bottom);

double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace synthaudit::numcore

#endif  // SYNTHAUDIT_NUMCORE_MATRIX_HPP_
