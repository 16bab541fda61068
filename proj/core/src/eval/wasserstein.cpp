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

#include "synthaudit/eval/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "synthaudit/error.hpp"

namespace synthaudit::eval {

double wasserstein_1d(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw SizeError("wasserstein_1d needs equal-size samples");
  if (a.empty()) throw SizeError("wasserstein_1d needs non-empty samples");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double total = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) total += std::abs(sa[i] - sb[i]);
  return total / static_cast<double>(sa.size());
}

double wasserstein_utility(const data::Dataset& d_syn, const data::Dataset& d_holdout,
                           numcore::SeededRng& rng) {
  if (!(d_syn.schema() == d_holdout.schema())) {
    throw SchemaError("wasserstein_utility: synthetic and holdout schemas differ");
  }
  if (d_syn.empty() || d_holdout.empty()) {
    throw SizeError("wasserstein_utility needs non-empty inputs");
  }
  const std::size_t n = std::min(d_syn.rows(), d_holdout.rows());
  auto shrink = [&](const data::Dataset& d) {
    if (d.rows() == n) return d.values();
    const auto idx = rng.sample_without_replacement(d.rows(), n);
    return d.values().select_rows(idx);
  };
  const auto a = shrink(d_syn);
  const auto b = shrink(d_holdout);
  double total = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) total += wasserstein_1d(a.column(c), b.column(c));
  return total / static_cast<double>(a.cols());
}

}  // namespace synthaudit::eval
