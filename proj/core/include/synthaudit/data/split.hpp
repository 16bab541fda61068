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

#ifndef SYNTHAUDIT_DATA_SPLIT_HPP_
#define SYNTHAUDIT_DATA_SPLIT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/predicate.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::data {

// One audit run's data. Test rows are half members (label 1, drawn from
// d_mem) and half fresh rows (label 0), shuffled together.
struct ExperimentSplit {
  Dataset d_mem;
  Dataset d_ref;
  Dataset d_test;
  std::vector<std::uint8_t> labels;

  // Row indices into the source dataset, kept for disjointness checks.
  std::vector<std::size_t> mem_rows;
  std::vector<std::size_t> ref_rows;
  std::vector<std::size_t> test_rows;
};

// Draws d_mem, d_ref and the non-member half of the test set from one
// shuffled permutation of `data`. Throws SizeError if n_test is odd, if
// n_test / 2 > n_mem, or if the rows do not suffice.
ExperimentSplit make_split(const Dataset& data, std::size_t n_mem,
                           std::size_t n_ref, std::size_t n_test,
                           numcore::SeededRng& rng);

// Number of group-0 rows a shifted reference of size n_ref contains.
std::size_t shifted_group0_count(double p_group0, std::size_t n_ref);

// Reference set of n_ref rows from `pool` with exactly
// shifted_group0_count(p_group0, n_ref) rows satisfying `group0` (A=0)
// and the remainder from the other stratum. Each stratum is sampled without
// replacement; selected rows keep their pool order.
Dataset shifted_reference(const Dataset& pool, const RowPredicate& group0,
                          double p_group0, std::size_t n_ref,
                          numcore::SeededRng& rng);

}  // namespace synthaudit::data

#endif  // SYNTHAUDIT_DATA_SPLIT_HPP_
