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

#include "synthaudit/data/split.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "synthaudit/error.hpp"

namespace synthaudit::data {

ExperimentSplit make_split(const Dataset& data, std::size_t n_mem,
                           std::size_t n_ref, std::size_t n_test,
                           numcore::SeededRng& rng) {
  if (n_test % 2 != 0) throw SizeError("n_test must be even");
  const std::size_t half = n_test / 2;
  if (n_mem == 0 || n_ref == 0 || n_test == 0) {
    throw SizeError("n_mem, n_ref and n_test must be positive");
  }
  if (half > n_mem) {
    throw SizeError("n_test/2 = " + std::to_string(half) +
                    " exceeds n_mem = " + std::to_string(n_mem));
  }
  if (n_mem + n_ref + half > data.rows()) {
    throw SizeError("split needs " + std::to_string(n_mem + n_ref + half) +
                    " rows, dataset has " + std::to_string(data.rows()));
  }

  const auto perm = rng.permutation(data.rows());
  ExperimentSplit split;
  split.mem_rows.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n_mem));
  // Non-members come right after the members so that D_mem and D_test do
  // not depend on n_ref.
  split.ref_rows.assign(perm.begin() + static_cast<std::ptrdiff_t>(n_mem + half),
                        perm.begin() + static_cast<std::ptrdiff_t>(n_mem + half + n_ref));

  std::vector<std::size_t> candidates;
  std::vector<std::uint8_t> candidate_labels;
  candidates.reserve(n_test);
  for (std::size_t i : rng.sample_without_replacement(n_mem, half)) {
    candidates.push_back(split.mem_rows[i]);
    candidate_labels.push_back(1);
  }
  for (std::size_t i = 0; i < half; ++i) {
    candidates.push_back(perm[n_mem + i]);
    candidate_labels.push_back(0);
  }
  const auto order = rng.permutation(n_test);
  split.test_rows.reserve(n_test);
  split.labels.reserve(n_test);
  for (std::size_t i : order) {
    split.test_rows.push_back(candidates[i]);
    split.labels.push_back(candidate_labels[i]);
  }

  split.d_mem = data.select_rows(split.mem_rows);
  split.d_ref = data.select_rows(split.ref_rows);
  split.d_test = data.select_rows(split.test_rows);
  return split;
}

std::size_t shifted_group0_count(double p_group0, std::size_t n_ref) {
  return static_cast<std::size_t>(std::llround(p_group0 * static_cast<double>(n_ref)));
}

Dataset shifted_reference(const Dataset& pool, const RowPredicate& group0,
                          double p_group0, std::size_t n_ref,
                          numcore::SeededRng& rng) {
  if (!(p_group0 >= 0.0 && p_group0 <= 1.0)) {
    throw ParameterError("p_group0 must lie in [0, 1]");
  }
  const auto bits = evaluate_predicate(pool, group0);
  std::vector<std::size_t> stratum0;
  std::vector<std::size_t> stratum1;
  for (std::size_t r = 0; r < bits.size(); ++r) {
    (bits[r] ? stratum0 : stratum1).push_back(r);
  }
  const std::size_t k0 = shifted_group0_count(p_group0, n_ref);
  const std::size_t k1 = n_ref - k0;
  if (k0 > stratum0.size()) {
    throw SizeError("shifted reference needs " + std::to_string(k0) +
                    " rows with " + group0.to_string() + ", pool has " +
                    std::to_string(stratum0.size()));
  }
  if (k1 > stratum1.size()) {
    throw SizeError("shifted reference needs " + std::to_string(k1) +
                    " rows without " + group0.to_string() + ", pool has " +
                    std::to_string(stratum1.size()));
  }
  std::vector<std::size_t> chosen;
  chosen.reserve(n_ref);
  for (std::size_t i : rng.sample_without_replacement(stratum0.size(), k0)) {
    chosen.push_back(stratum0[i]);
  }
  for (std::size_t i : rng.sample_without_replacement(stratum1.size(), k1)) {
    chosen.push_back(stratum1[i]);
  }
  std::sort(chosen.begin(), chosen.end());
  return pool.select_rows(chosen);
}

}  // namespace synthaudit::data
