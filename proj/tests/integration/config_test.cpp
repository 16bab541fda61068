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

#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "synth_audit/config.hpp"
#include "synthaudit/error.hpp"

namespace {

using synth_audit::DensityBackend;
using synth_audit::parse_config;
using synthaudit::ConfigError;

synth_audit::RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

const std::string kMinimal =
    "[data]\nsource = gauss-mixture\n"
    "[attack]\nattackers = eq1_only, domias\n";

TEST(Config, MinimalUsesDefaults) {
  const auto c = parse(kMinimal);
  EXPECT_EQ(c.attackers, (std::vector<std::string>{"domias", "eq1_only"}));
  EXPECT_EQ(c.split.n_mem, 100u);
  EXPECT_EQ(c.split.n_ref, 2000u);
  EXPECT_EQ(c.split.n_test, 200u);
  EXPECT_EQ(c.backend_for("domias"), DensityBackend::kKde);
  EXPECT_EQ(c.q_grid.size(), 20u);
  EXPECT_FALSE(c.sweep.has_value());
  EXPECT_FALSE(c.shift.has_value());
}

TEST(Config, PerAttackerSections) {
  const auto c = parse(kMinimal +
                       "[domias]\ndensity = flow\n"
                       "[flow]\nepochs = 3\nhidden = 8\n"
                       "[kde]\nbandwidth = 0.25\n"
                       "[ganleaks0]\nk = all\n");
  EXPECT_EQ(c.backend_for("domias"), DensityBackend::kFlow);
  EXPECT_EQ(c.backend_for("eq1_only"), DensityBackend::kKde);
  EXPECT_EQ(c.flow.epochs, 3u);
  EXPECT_EQ(c.flow.hidden, 8u);
  EXPECT_EQ(c.kde_bandwidth, 0.25);
  EXPECT_FALSE(c.ganleaks0_k.has_value());
}

TEST(Config, PriorList) {
  const auto c = parse(
      "[data]\nsource = gauss-mixture\n"
      "[attack]\nattackers = gaussian_prior_domias\n"
      "[gaussian_prior_domias]\nprior = x0:0:1, x1:2.5:0.5\n");
  ASSERT_EQ(c.prior.features.size(), 2u);
  EXPECT_EQ(c.prior.features[1].column, "x1");
  EXPECT_EQ(c.prior.features[1].mean, 2.5);
  EXPECT_EQ(c.prior.features[1].stddev, 0.5);
  EXPECT_THROW(parse("[data]\nsource = gauss-mixture\n"
                     "[attack]\nattackers = gaussian_prior_domias\n"),
               ConfigError);
}

TEST(Config, RejectsUnknownNames) {
  EXPECT_THROW(parse(kMinimal + "[split]\nn_members = 3\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[extra]\nx = 1\n"), ConfigError);
  EXPECT_THROW(parse("[data]\nsource = gauss-mixture\n[attack]\nattackers = domias, tvae\n"),
               ConfigError);
  EXPECT_THROW(parse(kMinimal + "[generator]\nkind = ctgan\n"), ConfigError);
  EXPECT_THROW(parse("[data]\nsource = parquet\n[attack]\nattackers = domias\n"), ConfigError);
}

TEST(Config, RejectsZeroAttackers) {
  EXPECT_THROW(parse("[data]\nsource = gauss-mixture\n[attack]\nattackers =\n"), ConfigError);
  EXPECT_THROW(parse("[data]\nsource = gauss-mixture\n"), ConfigError);
}

TEST(Config, RejectsMalformedValues) {
  EXPECT_THROW(parse(kMinimal + "[split]\nn_mem = ten\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[split]\nn_test = 201\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[split]\nn_mem = 50\nn_test = 102\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[generator]\nknob = -1\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[eval]\nq_grid = 0.5, 1.5\n"), ConfigError);
}

TEST(Config, SweepNeedsExactlyOneKnob) {
  const auto c = parse(kMinimal + "[sweep]\nn_ref = 50, 500\n");
  ASSERT_TRUE(c.sweep.has_value());
  EXPECT_EQ(c.sweep->knob, "n_ref");
  EXPECT_EQ(c.sweep->values, (std::vector<double>{50, 500}));
  EXPECT_THROW(parse(kMinimal + "[sweep]\nn_mem = 50, 100\nknob = 0.1\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[sweep]\nn_ref = 50.5\n"), ConfigError);
}

TEST(Config, ClosedFormScenarioConsistency) {
  const std::string bimodal =
      "[data]\nsource = bimodal\n"
      "[split]\nn_mem = 100\nn_test = 100\n"
      "[generator]\nkind = closed_form_scenario\n";
  EXPECT_NO_THROW(parse(bimodal + "[attack]\nattackers = domias\ndensity = closed_form\n"));
  EXPECT_THROW(parse("[data]\nsource = bimodal\n[attack]\nattackers = domias\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "[generator]\nkind = closed_form_scenario\n"), ConfigError);
  EXPECT_THROW(parse(kMinimal + "density = closed_form\n"), ConfigError);
}

TEST(Config, ShiftNeedsDensityAttackers) {
  const std::string shift = "[shift]\npredicate = x0>2.5\np_group0 = 0, 0.5\n";
  EXPECT_NO_THROW(parse(kMinimal + shift));
  EXPECT_THROW(parse("[data]\nsource = gauss-mixture\n[attack]\nattackers = mc\n" + shift),
               ConfigError);
  EXPECT_THROW(parse(kMinimal + "[shift]\npredicate = x0>2.5\np_group0 = 1.5\n"), ConfigError);
}

TEST(Config, ShippedConfigsLoad) {
  for (const auto& entry : std::filesystem::directory_iterator(SYNTH_AUDIT_CONFIG_DIR)) {
    if (entry.path().extension() != ".ini") continue;
    EXPECT_NO_THROW(synth_audit::load_config(entry.path())) << entry.path();
  }
  EXPECT_THROW(synth_audit::load_config("/nonexistent/x.ini"), ConfigError);
}

TEST(Config, JsonEchoIsStable) {
  const auto a = parse(kMinimal);
  const auto b = parse(kMinimal);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_json().at("attack").at("attackers"), nlohmann::json({"domias", "eq1_only"}));
}

}  // namespace
