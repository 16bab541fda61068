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

#include "synthaudit/attacks/density_ratio.hpp"

#include <cmath>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::attacks {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericError(std::string(what) + " is non-finite at row " + std::to_string(i));
    }
  }
}

}  // namespace

AttackScores domias(std::span<const double> log_pg, std::span<const double> log_pr) {
  if (log_pg.size() != log_pr.size()) {
    throw DimensionError("domias: log_pG has " + std::to_string(log_pg.size()) +
                         " rows but log_pR has " + std::to_string(log_pr.size()));
  }
  require_finite(log_pg, "log_pG");
  require_finite(log_pr, "log_pR");
  AttackScores out{"domias", {}, nlohmann::json::object()};
  out.scores.resize(log_pg.size());
  for (std::size_t i = 0; i < log_pg.size(); ++i) out.scores[i] = log_pg[i] - log_pr[i];
  return out;
}

AttackScores eq1_only(std::span<const double> log_pg) {
  require_finite(log_pg, "log_pG");
  return {"eq1_only", std::vector<double>(log_pg.begin(), log_pg.end()),
          nlohmann::json::object()};
}

AttackScores gaussian_prior_domias(std::span<const double> log_pg,
                                   const data::Dataset& d_test, const PriorSpec& prior) {
  if (prior.features.empty()) throw ParameterError("prior needs at least one feature");
  if (log_pg.size() != d_test.rows()) {
    throw DimensionError("gaussian_prior_domias: log_pG length does not match test rows");
  }
  require_finite(log_pg, "log_pG");
  std::vector<std::size_t> columns;
  nlohmann::json meta = nlohmann::json::array();
  for (const auto& f : prior.features) {
    if (!(f.stddev > 0.0) || !std::isfinite(f.stddev) || !std::isfinite(f.mean)) {
      throw ParameterError("prior for '" + f.column + "' needs finite mean and stddev > 0");
    }
    columns.push_back(d_test.schema().require_index(f.column));
    meta.push_back({{"column", f.column}, {"mean", f.mean}, {"stddev", f.stddev}});
  }
  AttackScores out{"gaussian_prior_domias", {}, {{"prior", meta}}};
  out.scores.resize(log_pg.size());
  for (std::size_t i = 0; i < log_pg.size(); ++i) {
    const auto row = d_test.row(i);
    double log_pr = 0.0;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      log_pr += numcore::normal_log_pdf(row[columns[k]], prior.features[k].mean,
                                        prior.features[k].stddev);
    }
    out.scores[i] = log_pg[i] - log_pr;
  }
  return out;
}

}  // namespace synthaudit::attacks
