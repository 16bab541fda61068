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

#include <cmath>
#include <filesystem>

#include <gtest/gtest.h>

#include "synthaudit/density/flow.hpp"
#include "synthaudit/error.hpp"
#include "synthaudit/numcore/gradcheck.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace {

using namespace synthaudit;
using density::FlowConfig;
using density::FlowModel;
using numcore::RealMatrix;
using numcore::SeededRng;

FlowConfig small_config() {
  FlowConfig c;
  c.flows = 2;
  c.layers = 2;
  c.hidden = 4;
  c.batch = 10;
  c.epochs = 5;
  return c;
}

RealMatrix normal_rows(std::size_t n, std::size_t d, SeededRng& rng) {
  std::vector<double> v(n * d);
  for (auto& x : v) x = rng.normal();
  return RealMatrix(n, d, std::move(v));
}

// Moves every parameter away from its initial value so no gradient
// coordinate is structurally tiny.
FlowModel perturbed_model(std::size_t dim, SeededRng& rng) {
  FlowModel model(dim, small_config(), rng);
  std::vector<double> p(model.parameters().begin(), model.parameters().end());
  for (auto& x : p) x += 0.3 * rng.normal();
  model.set_parameters(std::move(p));
  return model;
}

TEST(Flow, AnalyticGradientMatchesFiniteDifferences) {
  SeededRng rng(11);
  for (std::size_t dim : {1u, 2u, 3u}) {
    const FlowModel model = perturbed_model(dim, rng);
    const RealMatrix batch = normal_rows(12, dim, rng);
    const auto lg = model.loss_and_gradient(batch);
    EXPECT_NEAR(lg.loss, model.loss(batch), 1e-12);
    const auto check = numcore::finite_diff_check(
        [&](std::span<const double> p) { return model.loss_at(p, batch); }, model.parameters(),
        lg.gradient, 1e-4);
    EXPECT_TRUE(check.passed) << "dim " << dim << " worst " << check.worst_index << " rel "
                              << check.max_relative_error;
  }
}

TEST(Flow, OutputIsAutoregressive) {
  SeededRng rng(12);
  const FlowModel model = perturbed_model(3, rng);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> x = {rng.normal(), rng.normal(), rng.normal()};
    const auto base = model.forward(x);
    for (std::size_t j = 0; j < 3; ++j) {
      auto moved = x;
      moved[j] += 1.5;
      const auto out = model.forward(moved);
      for (std::size_t i = 0; i < j; ++i) EXPECT_EQ(out.z[i], base.z[i]);
      EXPECT_NE(out.z[j], base.z[j]);
    }
  }
}

TEST(Flow, LogDetMatchesNumericJacobianDiagonal) {
  SeededRng rng(13);
  for (std::size_t dim : {1u, 2u}) {
    const FlowModel model = perturbed_model(dim, rng);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x(dim);
      for (auto& v : x) v = 2.0 * rng.normal();
      const auto at = model.forward(x);
      double numeric = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double h = 1e-6;
        auto plus = x, minus = x;
        plus[i] += h;
        minus[i] -= h;
        const double dz = (model.forward(plus).z[i] - model.forward(minus).z[i]) / (2 * h);
        ASSERT_GT(dz, 0.0);
        numeric += std::log(dz);
      }
      EXPECT_NEAR(std::exp(numeric), std::exp(at.log_det), 1e-4 * std::exp(at.log_det));
    }
  }
}

TEST(Flow, LogDensityIsChangeOfVariables) {
  SeededRng rng(14);
  const FlowModel model = perturbed_model(2, rng);
  const std::vector<double> x = {0.4, -1.2};
  const auto t = model.forward(x);
  const double expected = -std::log(2 * M_PI) - 0.5 * (t.z[0] * t.z[0] + t.z[1] * t.z[1]) + t.log_det;
  EXPECT_NEAR(model.log_density(x), expected, 1e-12);
  const auto rows = model.log_density_rows(RealMatrix(1, 2, x));
  EXPECT_NEAR(rows[0], expected, 1e-12);
}

TEST(Flow, InitializationIsIdentity) {
  SeededRng rng(15);
  FlowConfig c;
  c.off_diagonal_init = 0.0;
  for (std::size_t dim : {1u, 3u}) {
    const FlowModel model(dim, c, rng);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> x(dim);
      for (auto& v : x) v = 3.0 * rng.normal();
      const auto out = model.forward(x);
      for (std::size_t i = 0; i < dim; ++i) EXPECT_NEAR(out.z[i], x[i], 1e-6);
      EXPECT_NEAR(out.log_det, 0.0, 1e-6);
    }
  }
}

TEST(Flow, InitialDensityIsStandardNormal) {
  SeededRng rng(21);
  const FlowModel model(1, FlowConfig{}, rng);
  EXPECT_NEAR(model.log_density(std::vector<double>{0.0}), -0.5 * std::log(2 * M_PI), 1e-6);
}

TEST(Flow, FiniteFarFromData) {
  SeededRng rng(16);
  const FlowModel model = perturbed_model(2, rng);
  for (double v : {-100.0, 100.0}) {
    const std::vector<double> x = {v, -v};
    EXPECT_TRUE(std::isfinite(model.log_density(x)));
  }
}

TEST(Flow, FitErrorsAndTrace) {
  SeededRng rng(17);
  auto c = small_config();
  c.batch = 50;
  EXPECT_THROW(density::flow_fit(normal_rows(49, 1, rng), c, rng), SizeError);
  c.learning_rate = 0.0;
  EXPECT_THROW(density::validate(c), ParameterError);
  c = small_config();
  c.polyak = 1.0;
  EXPECT_THROW(density::validate(c), ParameterError);
  c = small_config();
  const auto model = density::flow_fit(normal_rows(40, 1, rng), c, rng);
  EXPECT_EQ(model.loss_trace().size(), c.epochs);
  EXPECT_THROW(model.log_density(std::vector<double>{0.0, 0.0}), DimensionError);
}

TEST(Flow, TrainingReducesLossOnShiftedData) {
  SeededRng rng(18);
  std::vector<double> v(400);
  for (auto& x : v) x = 3.0 + 0.5 * rng.normal();
  const RealMatrix data(400, 1, v);
  auto c = small_config();
  c.epochs = 30;
  c.learning_rate = 0.01;
  SeededRng init = rng.child(0);
  const FlowModel start(1, c, init);
  const auto model = density::flow_fit(data, c, rng);
  EXPECT_LT(model.loss(data), start.loss(data) - 1.0);
}

TEST(Flow, AveragingOnlyChangesReturnedParameters) {
  SeededRng data_rng(20);
  const RealMatrix data = normal_rows(60, 2, data_rng);
  auto c = small_config();
  c.polyak = 0.0;
  SeededRng a(5), b(5);
  const auto last = density::flow_fit(data, c, a);
  c.polyak = 0.9;
  const auto averaged = density::flow_fit(data, c, b);
  EXPECT_EQ(last.loss_trace(), averaged.loss_trace());
  EXPECT_NE(std::vector<double>(last.parameters().begin(), last.parameters().end()),
            std::vector<double>(averaged.parameters().begin(), averaged.parameters().end()));
}

TEST(Flow, SaveLoadRoundTrip) {
  SeededRng rng(19);
  const FlowModel model = perturbed_model(2, rng);
  const auto path = std::filesystem::temp_directory_path() / "synthaudit_flow_test.json";
  model.save(path);
  const auto back = FlowModel::load(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.config(), model.config());
  ASSERT_EQ(back.num_parameters(), model.num_parameters());
  for (std::size_t i = 0; i < model.num_parameters(); ++i) {
    EXPECT_EQ(back.parameters()[i], model.parameters()[i]);
  }
  const std::vector<double> x = {0.3, 0.9};
  EXPECT_EQ(back.log_density(x), model.log_density(x));
  EXPECT_THROW(FlowModel(2, model.config(), std::vector<double>(3, 0.0), 0), DimensionError);
}

}  // namespace
