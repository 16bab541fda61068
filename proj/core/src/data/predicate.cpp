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

#include "synthaudit/data/predicate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <string_view>

#include "synthaudit/data/csv.hpp"
#include "synthaudit/error.hpp"

namespace synthaudit::data {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

struct OpToken {
  std::string_view text;
  CompareOp op;
};

// Two-character operators first so "<=" is not read as "<".
constexpr OpToken kOps[] = {
    {"<=", CompareOp::kLessEqual}, {">=", CompareOp::kGreaterEqual},
    {"==", CompareOp::kEqual},     {"!=", CompareOp::kNotEqual},
    {"<", CompareOp::kLess},       {">", CompareOp::kGreater},
};

std::string_view op_text(CompareOp op) {
  for (const auto& t : kOps) {
    if (t.op == op) return t.text;
  }
  return "?";
}

}  // namespace

RowPredicate RowPredicate::parse(const std::string& text) {
  const std::string_view view(text);
  for (const auto& token : kOps) {
    const auto pos = view.find(token.text);
    if (pos == std::string_view::npos) continue;
    auto column = trim(view.substr(0, pos));
    auto number = trim(view.substr(pos + token.text.size()));
    if (column.empty() || number.empty()) break;
    double threshold = 0.0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), threshold);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw ParseError("predicate '" + text + "': threshold is not a number");
    }
    return RowPredicate{std::string(column), token.op, threshold};
  }
  throw ParseError("predicate '" + text + "' is not of the form <column><op><number>");
}

bool RowPredicate::evaluate(double value) const {
  switch (op) {
    case CompareOp::kLess:
      return value < threshold;
    case CompareOp::kLessEqual:
      return value <= threshold;
    case CompareOp::kGreater:
      return value > threshold;
    case CompareOp::kGreaterEqual:
      return value >= threshold;
    case CompareOp::kEqual:
      return value == threshold;
    case CompareOp::kNotEqual:
      return value != threshold;
  }
  return false;
}

std::string RowPredicate::to_string() const {
  return column + std::string(op_text(op)) + format_double(threshold);
}

std::size_t SubgroupMask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::vector<std::uint8_t> evaluate_predicate(const Dataset& data,
                                             const RowPredicate& predicate) {
  const std::size_t col = data.schema().require_index(predicate.column);
  std::vector<std::uint8_t> bits(data.rows());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    bits[r] = predicate.evaluate(data.values()(r, col)) ? 1 : 0;
  }
  return bits;
}

SubgroupMask make_subgroup_mask(const Dataset& data, const RowPredicate& predicate) {
  return SubgroupMask{evaluate_predicate(data, predicate), predicate.to_string()};
}

}  // namespace synthaudit::data
