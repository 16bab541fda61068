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

#include "synthaudit/attacks/scores.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "synthaudit/data/csv.hpp"
#include "synthaudit/error.hpp"

namespace synthaudit::attacks {

void check_finite(const AttackScores& scores) {
  for (std::size_t i = 0; i < scores.scores.size(); ++i) {
    if (!std::isfinite(scores.scores[i])) {
      throw NumericError(scores.attacker + ": non-finite score at test row " +
                         std::to_string(i));
    }
  }
}

void write_scores_csv(std::ostream& out, const AttackScores& scores) {
  out << "row_id,score\n";
  for (std::size_t i = 0; i < scores.scores.size(); ++i) {
    out << i << ',' << data::format_double(scores.scores[i]) << '\n';
  }
}

std::vector<double> read_scores_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "row_id,score") {
    throw ParseError("scores csv: expected header 'row_id,score'");
  }
  std::vector<double> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("scores csv: missing comma");
    if (std::stoull(line.substr(0, comma)) != out.size()) {
      throw ParseError("scores csv: row ids must be consecutive from 0");
    }
    out.push_back(std::stod(line.substr(comma + 1)));
  }
  return out;
}

}  // namespace synthaudit::attacks
