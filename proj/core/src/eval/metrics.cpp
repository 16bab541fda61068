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

#include "synthaudit/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::eval {
namespace {

void check_inputs(std::span<const double> scores, Labels labels) {
  if (scores.size() != labels.size()) {
    throw DimensionError("scores (" + std::to_string(scores.size()) + ") and labels (" +
                         std::to_string(labels.size()) + ") differ in length");
  }
  std::size_t positives = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > 1) throw ParameterError("labels must be 0 or 1");
    if (!std::isfinite(scores[i])) {
      throw NumericError("non-finite score at row " + std::to_string(i));
    }
    positives += labels[i];
  }
  if (positives == 0 || positives == labels.size()) {
    throw DegenerateLabelsError("labels contain a single class");
  }
}

}  // namespace

double auc(std::span<const double> scores, Labels labels) {
  check_inputs(scores, labels);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Twice the Mann-Whitney count, kept in integers so the result is exact.
  std::uint64_t twice = 0;
  std::uint64_t negatives_below = 0;
  std::uint64_t positives = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (labels[order[j]] ? pos : neg) += 1;
      ++j;
    }
    twice += pos * (2 * negatives_below + neg);
    negatives_below += neg;
    positives += pos;
    i = j;
  }
  const double pairs = 2.0 * static_cast<double>(positives) * static_cast<double>(negatives_below);
  return static_cast<double>(twice) / pairs;
}

double accuracy_at_median(std::span<const double> scores, Labels labels) {
  check_inputs(scores, labels);
  const double tau = numcore::median(scores);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    correct += static_cast<std::uint8_t>(scores[i] > tau) == labels[i];
  }
  return static_cast<double>(correct) / static_cast<double>(scores.size());
}

std::size_t top_count(double q, std::size_t n) {
  const auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n) - 1e-9));
  return std::clamp<std::size_t>(k, 1, n);
}

PrecisionCurve precision_quantile_curve(std::span<const double> scores, Labels labels,
                                        std::span<const double> q_grid) {
  if (q_grid.empty()) throw ParameterError("precision curve needs a non-empty q grid");
  for (double q : q_grid) {
    if (!(q > 0.0 && q <= 1.0)) throw ParameterError("q values must lie in (0, 1]");
  }
  check_inputs(scores, labels);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<std::size_t> hits_prefix(order.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    hits_prefix[i + 1] = hits_prefix[i] + labels[order[i]];
  }
  PrecisionCurve curve;
  for (double q : q_grid) {
    const std::size_t k = top_count(q, scores.size());
    curve.q.push_back(q);
    curve.precision.push_back(static_cast<double>(hits_prefix[k]) / static_cast<double>(k));
  }
  return curve;
}

std::vector<double> default_q_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(i / 20.0);
  return grid;
}

}  // namespace synthaudit::eval
