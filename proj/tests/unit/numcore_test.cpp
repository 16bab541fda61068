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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/adam.hpp"
#include "synthaudit/numcore/gradcheck.hpp"
#include "synthaudit/numcore/math.hpp"
#include "synthaudit/numcore/matrix.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace {

using namespace synthaudit;
using numcore::RealMatrix;
using numcore::SeededRng;

TEST(SplitMix, KnownAnswerForSeedZero) {
  std::uint64_t state = 0;
  EXPECT_EQ(numcore::splitmix64(state), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(numcore::splitmix64(state), 0x6e789e6aa1b965f4ULL);
}

TEST(SeededRng, SameSeedSameStream) {
  SeededRng a(42), b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.normal(), b.normal());
}

TEST(SeededRng, DifferentSeedsDiverge) {
  SeededRng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i) same += a.next_u64() == b.next_u64();
  EXPECT_EQ(same, 0);
}

TEST(SeededRng, UniformInUnitInterval) {
  SeededRng rng(7);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 20000.0, 0.5, 0.01);
}

TEST(SeededRng, BelowStaysInRangeAndCoversIt) {
  SeededRng rng(9);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_THROW(rng.below(0), ParameterError);
}

TEST(SeededRng, NormalMoments) {
  SeededRng rng(11);
  const int n = 50000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s / n, 0.0, 0.02);
  EXPECT_NEAR(s2 / n, 1.0, 0.03);
}

TEST(SeededRng, PermutationIsBijection) {
  SeededRng rng(3);
  auto p = rng.permutation(100);
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p[i], i);
}

TEST(SeededRng, SampleWithoutReplacementIsDistinct) {
  SeededRng rng(5);
  const auto s = rng.sample_without_replacement(50, 20);
  EXPECT_EQ(s.size(), 20u);
  EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 20u);
  for (auto v : s) EXPECT_LT(v, 50u);
  EXPECT_EQ(rng.sample_without_replacement(5, 5).size(), 5u);
  EXPECT_THROW(rng.sample_without_replacement(5, 6), SizeError);
}

TEST(SeededRng, ChildrenAreDeterministicAndDistinct) {
  const SeededRng root(123);
  auto a = root.child(0), b = root.child(0), c = root.child(1);
  EXPECT_EQ(a.seed(), b.seed());
  EXPECT_NE(a.seed(), c.seed());
  EXPECT_EQ(numcore::derive_seed(123, 4), numcore::derive_seed(123, 4));
  EXPECT_NE(numcore::derive_seed(123, 4), numcore::derive_seed(124, 4));
}

TEST(RealMatrix, ConstructionValidates) {
  EXPECT_THROW(RealMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(RealMatrix(1, 2, {1.0, std::nan("")}), NumericError);
  EXPECT_THROW(RealMatrix(1, 1, {INFINITY}), NumericError);
  EXPECT_THROW(RealMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST(RealMatrix, RowAccessAndSelection) {
  const auto m = RealMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(2, 1), 6.0);
  EXPECT_EQ(m.column(0), (std::vector<double>{1, 3, 5}));
  const std::vector<std::size_t> idx{2, 0};
  EXPECT_EQ(m.select_rows(idx), RealMatrix::from_rows({{5, 6}, {1, 2}}));
  EXPECT_EQ(numcore::vstack(m, m).rows(), 6u);
  EXPECT_DOUBLE_EQ(numcore::squared_distance(m.row(0), m.row(1)), 8.0);
}

TEST(Adam, ZeroGradientLeavesParametersUnchanged) {
  numcore::AdamState state(3, {});
  const std::vector<double> p{1.0, -2.0, 0.5};
  const std::vector<double> g(3, 0.0);
  EXPECT_EQ(numcore::adam_step(p, g, state), p);
}

TEST(Adam, FirstStepMovesByLearningRate) {
  numcore::AdamState state(1, {0.1});
  const std::vector<double> p{0.0};
  const std::vector<double> g{1.0};
  const auto next = numcore::adam_step(p, g, state);
  EXPECT_NEAR(next[0], -0.1, 1e-8);
  const auto after = numcore::adam_step(next, g, state);
  EXPECT_LT(after[0], next[0]);
  EXPECT_EQ(state.step_count(), 2u);
}

TEST(Adam, StepOpposesGradientSign) {
  SeededRng rng(17);
  std::vector<double> p(50), g(50);
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = rng.normal();
    g[i] = rng.normal();
  }
  numcore::AdamState state(p.size(), {});
  const auto next = numcore::adam_step(p, g, state);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (g[i] != 0.0) {
      EXPECT_LT((next[i] - p[i]) * g[i], 0.0) << i;
    }
  }
}

TEST(Adam, LengthMismatchIsDimensionError) {
  numcore::AdamState state(2, {});
  const std::vector<double> p{1.0, 2.0}, g{1.0};
  EXPECT_THROW(numcore::adam_step(p, g, state), DimensionError);
}

TEST(GradCheck, QuadraticExactGradientPasses) {
  auto loss = [](std::span<const double> p) { return 0.5 * p[0] * p[0]; };
  const std::vector<double> p{3.0}, g{3.0};
  const auto r = numcore::finite_diff_check(loss, p, g, 1e-6);
  EXPECT_TRUE(r.passed);
}

TEST(GradCheck, WrongGradientFailsWithExpectedError) {
  auto loss = [](std::span<const double> p) { return 0.5 * p[0] * p[0]; };
  const std::vector<double> p{3.0}, g{2.9};
  const auto r = numcore::finite_diff_check(loss, p, g, 1e-6);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.max_relative_error, 0.1 / 3.0, 1e-6);
}

TEST(GradCheck, NonFiniteLossIsNumericError) {
  auto loss = [](std::span<const double> p) { return std::log(p[0]); };
  const std::vector<double> p{0.0}, g{1.0};
  EXPECT_THROW(numcore::finite_diff_check(loss, p, g, 1e-4), NumericError);
}

TEST(Math, NormalLogPdfAtMode) {
  EXPECT_NEAR(numcore::normal_log_pdf(0.0, 0.0, 1.0), -0.5 * std::log(2.0 * M_PI), 1e-15);
  EXPECT_NEAR(numcore::normal_log_pdf(3.0, 1.0, 2.0),
              -0.5 * std::log(2.0 * M_PI) - std::log(2.0) - 0.5, 1e-15);
}

TEST(Math, LogSumExpIsStable) {
  const std::vector<double> v{1000.0, 1000.0};
  EXPECT_NEAR(numcore::log_sum_exp(v), 1000.0 + std::log(2.0), 1e-12);
  const std::vector<double> w{-1000.0, -1000.0 + std::log(3.0)};
  EXPECT_NEAR(numcore::log_sum_exp(w), -1000.0 + std::log(4.0), 1e-12);
}

TEST(Math, MedianConvention) {
  const std::vector<double> odd{3, 1, 2}, even{4, 1, 3, 2};
  EXPECT_EQ(numcore::median(odd), 2.0);
  EXPECT_EQ(numcore::median(even), 2.5);
}

}  // namespace
