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

#ifndef SYNTHAUDIT_ATTACKS_SCORES_HPP_
#define SYNTHAUDIT_ATTACKS_SCORES_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace synthaudit::attacks {

// Per-test-row membership scores; larger means more member-like.
struct AttackScores {
  std::string attacker;
  std::vector<double> scores;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t size() const noexcept { return scores.size(); }
};

// Throws NumericError if any score is non-finite.
void check_finite(const AttackScores& scores);

// CSV with header "row_id,score", one line per test row.
void write_scores_csv(std::ostream& out, const AttackScores& scores);
std::vector<double> read_scores_csv(std::istream& in);

}  // namespace synthaudit::attacks

#endif  // SYNTHAUDIT_ATTACKS_SCORES_HPP_
