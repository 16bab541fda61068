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
#include <memory>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "synthaudit/attacks/density_ratio.hpp"
#include "synthaudit/attacks/logan.hpp"
#include "synthaudit/attacks/mlp.hpp"
#include "synthaudit/attacks/neighbours.hpp"
#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/density/pushforward.hpp"
#include "synthaudit/error.hpp"
#include "synthaudit/eval/metrics.hpp"
#include "synthaudit/generators/scenario.hpp"
#include "synthaudit/numcore/gradcheck.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace {

using namespace synthaudit;
using numcore::RealMatrix;
using numcore::SeededRng;

data::Dataset rows(std::size_t n, std::size_t d, std::vector<double> v) {
  return data::Dataset(data::Schema::continuous(d), RealMatrix(n, d, std::move(v)));
}

data::Dataset normal_dataset(std::size_t n, std::size_t d, double mean, double sd,
                             SeededRng& rng) {
  std::vector<double> v(n * d);
  for (auto& x : v) x = mean + sd * rng.normal();
  return rows(n, d, std::move(v));
}

std::vector<std::uint8_t> half_labels(std::size_t n) {
  std::vector<std::uint8_t> l(n, 0);
  std::fill(l.begin(), l.begin() + n / 2, 1);
  return l;
}

TEST(Domias, EqualDensitiesGiveZero) {
  const std::vector<double> lp = {-1.0, -2.5, 0.3};
  const auto s = attacks::domias(lp, lp);
  EXPECT_EQ(s.attacker, "domias");
  for (double x : s.scores) EXPECT_EQ(x, 0.0);
  EXPECT_THROW(attacks::domias(lp, std::vector<double>{1.0}), DimensionError);
}

TEST(Domias, ClosedFormScenarioValues) {
  const auto p_g = generators::bimodal_generator_density();
  const auto p_r = generators::bimodal_population_density();
  const auto test = RealMatrix(2, 1, {4.0, 0.0});
  const auto s = attacks::domias(p_g.log_density_rows(test), p_r.log_density_rows(test));
  EXPECT_NEAR(s.scores[0], 8.916, 0.01);
  EXPECT_NEAR(s.scores[1], -0.693147, 1e-6);
}

TEST(Domias, ConstantShiftOfReferenceKeepsAuc) {
  SeededRng rng(1);
  std::vector<double> lg(40), lr(40), lr_shift(40);
  for (std::size_t i = 0; i < 40; ++i) {
    lg[i] = rng.normal();
    lr[i] = rng.normal();
    lr_shift[i] = lr[i] + 3.0;
  }
  const auto labels = half_labels(40);
  const auto a = attacks::domias(lg, lr);
  const auto b = attacks::domias(lg, lr_shift);
  EXPECT_EQ(eval::auc(a.scores, labels), eval::auc(b.scores, labels));
}

TEST(Domias, RepresentationInvariance) {
  SeededRng rng(2);
  const auto s = generators::bimodal_scenario(200, 200, rng);
  auto p_g = std::make_shared<density::ClosedFormDensity>(s.p_g);
  auto p_r = std::make_shared<density::ClosedFormDensity>(s.p_r);
  const std::vector<density::FeatureTransform> g = {density::FeatureTransform::log_shift(10.0)};
  const density::PushforwardDensity q_g(p_g, g), q_r(p_r, g);

  // Test rows from both sources, kept inside the domain x > -10.
  const RealMatrix x = numcore::vstack(s.d_mem.values(), s.d_syn.values());
  const RealMatrix y = density::transform_rows(x, g);
  const auto before = attacks::domias(p_g->log_density_rows(x), p_r->log_density_rows(x));
  const auto after = attacks::domias(q_g.log_density_rows(y), q_r.log_density_rows(y));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    EXPECT_NEAR(before.scores[i], after.scores[i], 1e-9) << "row " << i;
  }

  const auto eq1_before = attacks::eq1_only(p_g->log_density_rows(x));
  const auto eq1_after = attacks::eq1_only(q_g.log_density_rows(y));
  bool flipped = false;
  for (std::size_t i = 0; i < x.rows() && !flipped; ++i) {
    for (std::size_t j = 0; j < x.rows() && !flipped; ++j) {
      flipped = eq1_before.scores[i] > eq1_before.scores[j] &&
                eq1_after.scores[i] < eq1_after.scores[j];
    }
  }
  EXPECT_TRUE(flipped);
}

TEST(Eq1Only, ConstantDensityGivesChanceAuc) {
  const std::vector<double> lp(10, -1.5);
  const auto s = attacks::eq1_only(lp);
  EXPECT_EQ(s.attacker, "eq1_only");
  EXPECT_EQ(eval::auc(s.scores, half_labels(10)), 0.5);
}

TEST(GaussianPrior, HandValue) {
  const auto test = rows(2, 1, {0.0, 1.0});
  const attacks::PriorSpec prior{{{"x0", 0.0, 1.0}}};
  const auto s = attacks::gaussian_prior_domias(std::vector<double>{-1.0, -1.0}, test, prior);
  EXPECT_NEAR(s.scores[0], -1.0 + 0.9189385332, 1e-9);
  EXPECT_NEAR(s.scores[0], -0.0811, 1e-4);
  EXPECT_NEAR(s.scores[1], -1.0 + 0.9189385332 + 0.5, 1e-9);
}

TEST(GaussianPrior, Errors) {
  const auto test = rows(1, 1, {0.0});
  const std::vector<double> lp = {-1.0};
  EXPECT_THROW(attacks::gaussian_prior_domias(lp, test, {{{"x0", 0.0, 0.0}}}), ParameterError);
  EXPECT_THROW(attacks::gaussian_prior_domias(lp, test, {{{"age", 0.0, 1.0}}}), SchemaError);
  EXPECT_THROW(attacks::gaussian_prior_domias(lp, test, {}), ParameterError);
}

TEST(Scores, CsvRoundTripAndFiniteness) {
  attacks::AttackScores s{"domias", {0.1, -2.5, 1e-300}, {}};
  std::stringstream out;
  attacks::write_scores_csv(out, s);
  EXPECT_EQ(out.str().substr(0, 13), "row_id,score\n");
  EXPECT_EQ(attacks::read_scores_csv(out), s.scores);
  s.scores.push_back(std::nan(""));
  EXPECT_THROW(attacks::check_finite(s), NumericError);
}

TEST(Mlp, ClassifierGradientMatchesFiniteDifferences) {
  SeededRng rng(3);
  attacks::Mlp net(3, {5, 4}, 1, rng);
  const auto x = normal_dataset(12, 3, 0.0, 1.0, rng).values();
  std::vector<double> t(12);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i % 2;
  const auto lg = net.classifier_loss(x, t);
  const auto check = numcore::finite_diff_check(
      [&](std::span<const double> p) {
        attacks::Mlp copy = net;
        copy.set_parameters(p);
        return copy.classifier_loss(x, t).loss;
      },
      net.parameters(), lg.gradient, 1e-5);
  EXPECT_TRUE(check.passed) << check.max_relative_error;
}

TEST(Mlp, InputGradientMatchesFiniteDifferences) {
  SeededRng rng(4);
  const attacks::Mlp net(2, {6, 6}, 1, rng);
  const RealMatrix x(1, 2, {0.3, -0.8});
  const auto grads = net.backward(x, RealMatrix(1, 1, {1.0}));
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<double> plus = {0.3, -0.8}, minus = plus;
    plus[j] += 1e-6;
    minus[j] -= 1e-6;
    const double numeric = (net.forward(RealMatrix(1, 2, plus))(0, 0) -
                            net.forward(RealMatrix(1, 2, minus))(0, 0)) /
                           2e-6;
    EXPECT_NEAR(grads.input(0, j), numeric, 1e-7);
  }
}

TEST(Mlp, BceWithLogits) {
  const auto r = attacks::bce_with_logits(std::vector<double>{0.0, 0.0},
                                          std::vector<double>{1.0, 0.0});
  EXPECT_NEAR(r.loss, std::log(2.0), 1e-15);
  EXPECT_NEAR(r.logit_grad[0], -0.25, 1e-15);
  EXPECT_NEAR(r.logit_grad[1], 0.25, 1e-15);
}

attacks::LoganConfig quick_logan() {
  attacks::LoganConfig c;
  c.hidden = 16;
  c.epochs = 60;
  c.batch = 32;
  c.learning_rate = 5e-3;
  return c;
}

TEST(Logan0, PrefersSyntheticMass) {
  SeededRng rng(5);
  const auto syn = normal_dataset(200, 1, 10.0, 0.1, rng);
  const auto test = rows(2, 1, {10.0, -10.0});
  const auto s = attacks::logan0(syn, test, quick_logan(), rng);
  EXPECT_EQ(s.attacker, "logan0");
  EXPECT_GT(s.scores[0], s.scores[1]);
}

TEST(Logan0, UntrainedDiscriminatorIsChance) {
  SeededRng rng(6);
  const auto syn = normal_dataset(100, 2, 0.0, 1.0, rng);
  const auto test = normal_dataset(400, 2, 0.0, 1.0, rng);
  auto c = quick_logan();
  c.epochs = 0;
  const auto s = attacks::logan0(syn, test, c, rng);
  const double a = eval::auc(s.scores, half_labels(400));
  EXPECT_GT(a, 0.35);
  EXPECT_LT(a, 0.65);
  EXPECT_THROW(attacks::logan0(rows(0, 2, {}), test, c, rng), SizeError);
}

TEST(LoganD1, SeparatesSyntheticFromReference) {
  SeededRng rng(7);
  const auto syn = normal_dataset(100, 1, 10.0, 0.1, rng);
  const auto ref = normal_dataset(100, 1, -10.0, 0.1, rng);
  const auto s = attacks::logan_d1(syn, ref, rows(2, 1, {10.0, -10.0}), quick_logan(), rng);
  EXPECT_EQ(s.attacker, "logan_d1");
  EXPECT_GT(s.scores[0], s.scores[1]);
  EXPECT_THROW(attacks::logan_d1(syn, rows(0, 1, {}), syn, quick_logan(), rng), SizeError);
}

TEST(LoganD1, NullDistributionIsChance) {
  double total = 0.0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    SeededRng rng(seed);
    const auto syn = normal_dataset(200, 2, 0.0, 1.0, rng);
    const auto ref = normal_dataset(200, 2, 0.0, 1.0, rng);
    const auto test = normal_dataset(200, 2, 0.0, 1.0, rng);
    auto c = quick_logan();
    c.epochs = 20;
    total += eval::auc(attacks::logan_d1(syn, ref, test, c, rng).scores, half_labels(200));
  }
  const double mean = total / 8.0;
  EXPECT_GE(mean, 0.4);
  EXPECT_LE(mean, 0.6);
}

TEST(Mc, HandExamples) {
  const auto syn = rows(2, 1, {0.1, 5.0});
  const auto test = rows(2, 1, {0.0, 100.0});
  EXPECT_EQ(attacks::mc_score(syn, test, {0.5, 0}).scores, (std::vector<double>{0.5, 0.0}));
  EXPECT_EQ(attacks::mc_score(syn, test, {1e6, 0}).scores, (std::vector<double>{1.0, 1.0}));
  EXPECT_THROW(attacks::mc_score(syn, test, {0.0, 0}), ParameterError);
  const auto s = attacks::mc_score(syn, test);
  EXPECT_DOUBLE_EQ(s.metadata.at("epsilon").get<double>(), 4.9);
}

TEST(Mc, MonotoneInEpsilonAndBounded) {
  SeededRng rng(8);
  const auto syn = normal_dataset(50, 2, 0.0, 1.0, rng);
  const auto test = normal_dataset(30, 2, 0.0, 1.0, rng);
  std::vector<double> previous(30, 0.0);
  for (double eps : {0.05, 0.2, 0.5, 1.0, 3.0}) {
    const auto s = attacks::mc_score(syn, test, {eps, 0});
    for (std::size_t i = 0; i < 30; ++i) {
      EXPECT_GE(s.scores[i], previous[i]);
      EXPECT_GE(s.scores[i], 0.0);
      EXPECT_LE(s.scores[i], 1.0);
    }
    previous = s.scores;
  }
}

TEST(Mc, PcaProjectionKeepsLeadingAxis) {
  const RealMatrix fit(4, 2, {-2.0, 0.1, -1.0, -0.1, 1.0, 0.1, 2.0, -0.1});
  const auto p = attacks::pca_project(fit, RealMatrix(1, 2, {3.0, 0.0}), 1);
  EXPECT_EQ(p.fit_on.cols(), 1u);
  EXPECT_NEAR(std::abs(p.other(0, 0)), 3.0, 1e-2);
  EXPECT_THROW(attacks::pca_project(fit, fit, 3), ParameterError);
}

TEST(GanLeaks, HandExamples) {
  SeededRng rng(9);
  EXPECT_EQ(attacks::ganleaks0(rows(1, 2, {3.0, 4.0}), rows(1, 2, {0.0, 0.0}), std::nullopt, rng)
                .scores[0],
            -5.0);
  EXPECT_EQ(attacks::ganleaks0(rows(2, 1, {1.0, -2.0}), rows(1, 1, {0.0}), 2, rng).scores[0],
            -1.0);
  EXPECT_EQ(attacks::ganleaks0(rows(2, 1, {1.0, -2.0}), rows(1, 1, {-2.0}), std::nullopt, rng)
                .scores[0],
            0.0);
  EXPECT_THROW(attacks::ganleaks0(rows(2, 1, {1.0, -2.0}), rows(1, 1, {0.0}), 0, rng),
               ParameterError);
  EXPECT_THROW(attacks::ganleaks0(rows(2, 1, {1.0, -2.0}), rows(1, 1, {0.0}), 3, rng),
               ParameterError);
}

TEST(GanLeaks, TranslationInvariant) {
  SeededRng rng(10);
  const auto syn = normal_dataset(40, 3, 0.0, 1.0, rng);
  const auto test = normal_dataset(20, 3, 0.0, 1.0, rng);
  auto shift = [](const data::Dataset& d) {
    std::vector<double> v(d.values().values().begin(), d.values().values().end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += (i % 3 == 0) ? 7.0 : -3.0;
    return rows(d.rows(), 3, std::move(v));
  };
  SeededRng a(1), b(1);
  const auto base = attacks::ganleaks0(syn, test, 25, a);
  const auto moved = attacks::ganleaks0(shift(syn), shift(test), 25, b);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(base.scores[i], moved.scores[i], 1e-12);
}

TEST(GanLeaksCal, Calibration) {
  SeededRng rng(11);
  const auto s = attacks::ganleaks_cal_from(rows(1, 1, {1.0}), rows(1, 1, {3.0}),
                                            rows(1, 1, {0.0}), std::nullopt, rng);
  EXPECT_EQ(s.scores[0], 2.0);
  const auto syn = normal_dataset(30, 2, 0.0, 1.0, rng);
  const auto test = normal_dataset(10, 2, 0.0, 1.0, rng);
  for (double x : attacks::ganleaks_cal_from(syn, syn, test, std::nullopt, rng).scores) {
    EXPECT_EQ(x, 0.0);
  }
  EXPECT_THROW(attacks::ganleaks_cal_from(syn, syn, test, 0, rng), ParameterError);
  const generators::GeneratorSpec ref_gen{generators::GeneratorKind::kAdditiveNoise, 0.1, 30};
  const auto cal = attacks::ganleaks_cal(syn, syn, test, std::nullopt, ref_gen, rng);
  EXPECT_EQ(cal.attacker, "ganleaks_cal");
  EXPECT_EQ(cal.size(), 10u);
}

}  // namespace
