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

#ifndef SYNTHAUDIT_DATA_PREDICATE_HPP_
#define SYNTHAUDIT_DATA_PREDICATE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "synthaudit/data/dataset.hpp"

namespace synthaudit::data {

enum class CompareOp { kLess, kLessEqual, kGreater, kGreaterEqual, kEqual, kNotEqual };

// Single-column threshold test such as "x0>2.5" or "smoker==1".
struct RowPredicate {
  std::string column;
  CompareOp op = CompareOp::kGreater;
  double threshold = 0.0;

  // Grammar: <column><op><number>, op in {<, <=, >, >=, ==, !=}. Whitespace
  // around tokens is ignored. Throws ParseError.
  static RowPredicate parse(const std::string& text);

  bool evaluate(double value) const;
  std::string to_string() const;
};

// Per-row membership of the minority group (1 = minority).
struct SubgroupMask {
  std::vector<std::uint8_t> bits;
  std::string description;

  std::size_t size() const noexcept { return bits.size(); }
  std::size_t count() const;
};

// Evaluates the predicate on every row; throws SchemaError if the column
// does not exist.
std::vector<std::uint8_t> evaluate_predicate(const Dataset& data,
                                             const RowPredicate& predicate);

SubgroupMask make_subgroup_mask(const Dataset& data, const RowPredicate& predicate);

}  // namespace synthaudit::data

#endif  // SYNTHAUDIT_DATA_PREDICATE_HPP_
