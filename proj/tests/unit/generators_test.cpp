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
#include <limits>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "synthaudit/attacks/neighbours.hpp"
#include "synthaudit/error.hpp"
#include "synthaudit/eval/frontier.hpp"
#include "synthaudit/generators/generator.hpp"
#include "synthaudit/generators/scenario.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace {

using namespace synthaudit;
using generators::GeneratorKind;
using generators::GeneratorSpec;
using numcore::RealMatrix;
using numcore::SeededRng;

data::Dataset normal_dataset(std::size_t n, std::size_t d, SeededRng& rng) {
  std::vector<double> v(n * d);
  for (auto& x : v) x = rng.normal();
  return data::Dataset(data::Schema::continuous(d), RealMatrix(n, d, std::move(v)));
}

std::vector<double> row_vec(const RealMatrix& m, std::size_t r) {
  return {m.row(r).begin(), m.row(r).end()};
}

TEST(Generator, ParseKinds) {
  EXPECT_EQ(generators::parse_generator_kind("additive_noise"), GeneratorKind::kAdditiveNoise);
  EXPECT_EQ(generators::parse_generator_kind("smoothed_bootstrap"),
            GeneratorKind::kSmoothedBootstrap);
  EXPECT_EQ(generators::parse_generator_kind("gaussian_mle"), GeneratorKind::kGaussianMle);
  EXPECT_EQ(generators::parse_generator_kind("closed_form_scenario"),
            GeneratorKind::kClosedFormScenario);
  EXPECT_EQ(generators::to_string(GeneratorKind::kGaussianMle), "gaussian_mle");
  EXPECT_THROW(generators::parse_generator_kind("tvae"), ConfigError);
}

TEST(Generator, ZeroNoiseMemorizes) {
  SeededRng rng(1);
  const auto mem = normal_dataset(30, 2, rng);
  const auto syn = generators::generate({GeneratorKind::kAdditiveNoise, 0.0, 200}, mem, rng);
  ASSERT_EQ(syn.rows(), 200u);
  EXPECT_EQ(syn.schema(), mem.schema());
  std::multiset<std::vector<double>> members;
  for (std::size_t r = 0; r < mem.rows(); ++r) members.insert(row_vec(mem.values(), r));
  for (std::size_t r = 0; r < syn.rows(); ++r) {
    EXPECT_TRUE(members.count(row_vec(syn.values(), r))) << "row " << r;
  }
}

TEST(Generator, StandardNoiseGridAccepted) {
  SeededRng rng(2);
  const auto mem = normal_dataset(20, 2, rng);
  const auto grid = eval::standard_noise_grid();
  ASSERT_EQ(grid.size(), 12u);
  EXPECT_EQ(grid.front(), 0.7);
  EXPECT_EQ(grid.back(), 3.9);
  for (double sigma : grid) {
    const GeneratorSpec spec{GeneratorKind::kAdditiveNoise, sigma, 10};
    EXPECT_NO_THROW(generators::validate(spec));
    EXPECT_EQ(generators::generate(spec, mem, rng).rows(), 10u);
  }
}

TEST(Generator, Validation) {
  EXPECT_THROW(generators::validate({GeneratorKind::kAdditiveNoise, -0.1, 10}), ParameterError);
  EXPECT_THROW(generators::validate({GeneratorKind::kAdditiveNoise, 0.1, 0}), ParameterError);
  EXPECT_THROW(generators::validate({GeneratorKind::kSmoothedBootstrap, 0.0, 10}), ParameterError);
  EXPECT_THROW(generators::validate(
                   {GeneratorKind::kAdditiveNoise, std::numeric_limits<double>::infinity(), 10}),
               ParameterError);
  SeededRng rng(3);
  const auto mem = normal_dataset(10, 2, rng);
  EXPECT_THROW(generators::generate({GeneratorKind::kClosedFormScenario, 0.0, 10}, mem, rng),
               DimensionError);
}

TEST(Generator, GaussianMleMatchesMoments) {
  SeededRng rng(4);
  const auto mem = normal_dataset(10000, 3, rng);
  const auto syn = generators::generate({GeneratorKind::kGaussianMle, 0.0, 10000}, mem, rng);
  for (std::size_t c = 0; c < 3; ++c) {
    const auto col = syn.values().column(c);
    double mean = 0.0;
    for (double x : col) mean += x;
    mean /= col.size();
    double var = 0.0;
    for (double x : col) var += (x - mean) * (x - mean);
    var /= col.size();
    EXPECT_NEAR(mean, 0.0, 0.05);
    EXPECT_NEAR(var, 1.0, 0.1);
  }
}

TEST(Generator, GaussianMleIgnoresRowOrder) {
  SeededRng rng(5);
  const auto mem = normal_dataset(50, 2, rng);
  const auto perm = rng.permutation(50);
  const auto shuffled = mem.select_rows(perm);
  SeededRng a(9), b(9);
  const auto syn_a = generators::generate({GeneratorKind::kGaussianMle, 0.0, 20}, mem, a);
  const auto syn_b = generators::generate({GeneratorKind::kGaussianMle, 0.0, 20}, shuffled, b);
  EXPECT_EQ(syn_a.values(), syn_b.values());
}

TEST(Generator, DeterministicPerSeed) {
  SeededRng rng(6);
  const auto mem = normal_dataset(40, 2, rng);
  for (auto kind : {GeneratorKind::kAdditiveNoise, GeneratorKind::kSmoothedBootstrap,
                    GeneratorKind::kGaussianMle}) {
    SeededRng a(3), b(3);
    const GeneratorSpec spec{kind, 0.5, 25};
    EXPECT_EQ(generators::generate(spec, mem, a).values(),
              generators::generate(spec, mem, b).values());
  }
}

TEST(Generator, MemberDistanceGrowsWithNoise) {
  SeededRng rng(7);
  const auto mem = normal_dataset(100, 2, rng);
  double previous = -1.0;
  for (double sigma : {0.0, 0.1, 0.5, 2.0}) {
    SeededRng g(11);
    const auto syn = generators::generate({GeneratorKind::kAdditiveNoise, sigma, 2000}, mem, g);
    const auto dist = attacks::nearest_distances(syn.values(), mem.values());
    double mean = 0.0;
    for (double x : dist) mean += x;
    mean /= dist.size();
    EXPECT_GT(mean, previous) << "sigma " << sigma;
    previous = mean;
  }
}

TEST(Scenario, BimodalDensities) {
  SeededRng rng(8);
  const auto s = generators::bimodal_scenario(100, 300, rng);
  EXPECT_EQ(s.d_mem.rows(), 100u);
  EXPECT_EQ(s.d_syn.rows(), 300u);
  const double zero[] = {0.0}, four[] = {4.0};
  EXPECT_NEAR(s.p_r.log_density(zero), -0.9189385332, 1e-9);
  EXPECT_NEAR(s.p_g.log_density(four) - s.p_r.log_density(four),
              std::log(0.99742 / 0.0001338), 0.01);
  EXPECT_NEAR(s.p_g.log_density(four) - s.p_r.log_density(four), 8.916, 0.01);
  EXPECT_NEAR(s.p_g.log_density(zero) - s.p_r.log_density(zero), std::log(0.5), 1e-6);
  EXPECT_THROW(generators::bimodal_scenario(0, 10, rng), SizeError);
}

TEST(Scenario, GaussMixtureMeansOnCircle) {
  const auto p = generators::gauss_mixture_density(3);
  ASSERT_EQ(p.components().size(), 3u);
  double weight = 0.0;
  for (const auto& c : p.components()) {
    weight += c.weight;
    EXPECT_NEAR(std::hypot(c.mean[0], c.mean[1]), 2.5, 1e-12);
    EXPECT_EQ(c.mean[2], 0.0);
  }
  EXPECT_NEAR(weight, 1.0, 1e-15);
  SeededRng rng(9);
  EXPECT_EQ(generators::gauss_mixture_population(50, 3, rng).cols(), 3u);
}

TEST(Scenario, MinorityFraction) {
  SeededRng rng(10);
  const auto pop = generators::minority_mixture_population(20000, 2, 0.1, rng);
  std::size_t minority = 0;
  for (std::size_t r = 0; r < pop.rows(); ++r) {
    minority += pop.values()(r, 0) > generators::kMinorityThreshold;
  }
  // 0.9 * P(N(0,1) > 2.5) leaks across the threshold, as does 0.1 * P(N(5,1) < 2.5).
  EXPECT_NEAR(minority / 20000.0, 0.1, 0.01);
  EXPECT_THROW(generators::minority_mixture_population(10, 2, 0.0, rng), ParameterError);
  EXPECT_THROW(generators::minority_mixture_population(10, 2, 1.0, rng), ParameterError);
}

}  // namespace
