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

#include "synth_audit/pipeline.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

#include <spdlog/spdlog.h>

#include "synthaudit/attacks/density_ratio.hpp"
#include "synthaudit/attacks/logan.hpp"
#include "synthaudit/attacks/neighbours.hpp"
#include "synthaudit/data/csv.hpp"
#include "synthaudit/data/predicate.hpp"
#include "synthaudit/data/standardize.hpp"
#include "synthaudit/density/flow.hpp"
#include "synthaudit/density/kde.hpp"
#include "synthaudit/error.hpp"
#include "synthaudit/eval/wasserstein.hpp"
#include "synthaudit/generators/scenario.hpp"

namespace synth_audit {
namespace {

using synthaudit::data::Dataset;
using synthaudit::numcore::SeededRng;

Dataset rows_where(const Dataset& data, const synthaudit::data::RowPredicate& predicate,
                   bool wanted) {
  const auto bits = synthaudit::data::evaluate_predicate(data, predicate);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < bits.size(); ++r) {
    if (static_cast<bool>(bits[r]) == wanted) rows.push_back(r);
  }
  return data.select_rows(rows);
}

// Members are the rows the generator overfits on, so they follow the
// generator density; D_ref and non-members follow the population.
Experiment bimodal_experiment(const RunConfig& config, std::uint64_t seed) {
  const SeededRng root(seed);
  auto data_rng = root.child(kPopulationStream);
  auto split_rng = root.child(kSplitStream);
  auto gen_rng = root.child(kGeneratorStream);
  const auto p_r = synthaudit::generators::bimodal_population_density();
  const auto p_g = synthaudit::generators::bimodal_generator_density();
  const auto& s = config.split;
  const std::size_t half = s.n_test / 2;
  const auto schema = synthaudit::data::Schema::continuous(1);

  Experiment e;
  e.split.d_mem = Dataset(schema, p_g.sample(s.n_mem, data_rng));
  e.split.d_ref = Dataset(schema, p_r.sample(s.n_ref, data_rng));
  const Dataset non_members(schema, p_r.sample(half, data_rng));
  const auto pool = synthaudit::data::concat(e.split.d_mem, non_members);

  std::vector<std::size_t> candidates = split_rng.sample_without_replacement(s.n_mem, half);
  for (std::size_t i = 0; i < half; ++i) candidates.push_back(s.n_mem + i);
  for (std::size_t r = 0; r < s.n_mem; ++r) e.split.mem_rows.push_back(r);
  for (std::size_t i : split_rng.permutation(s.n_test)) {
    e.split.test_rows.push_back(candidates[i]);
    e.split.labels.push_back(i < half ? 1 : 0);
  }
  e.split.d_test = pool.select_rows(e.split.test_rows);

  synthaudit::generators::GeneratorSpec spec = config.generator;
  e.d_syn = synthaudit::generators::generate(spec, e.split.d_mem, gen_rng);
  return e;
}

struct DensityScores {
  std::vector<double> log_pg;
  std::vector<double> log_pr;
};

std::vector<double> log_density_of(const synthaudit::density::DensityModel& model,
                                   const Dataset& rows) {
  return model.log_density_rows(rows.values());
}

}  // namespace

Dataset load_population(const RunConfig& config, SeededRng& rng) {
  const auto& d = config.data;
  Dataset population;
  switch (d.source) {
    case DataSource::kCsv:
      population = synthaudit::data::load_csv(d.path, {d.infer_binary});
      break;
    case DataSource::kGaussMixture:
      population = synthaudit::generators::gauss_mixture_population(d.population, d.dim, rng);
      break;
    case DataSource::kMinorityMixture:
      population = synthaudit::generators::minority_mixture_population(
          d.population, d.dim, d.minority_fraction, rng);
      break;
    case DataSource::kBimodal:
      throw synthaudit::ConfigError("bimodal has no population table");
  }
  if (d.dequantize) population = synthaudit::data::dequantize_binary(population, rng, 0.05);
  return population;
}

Dataset synthesize(const synthaudit::generators::GeneratorSpec& spec, const Dataset& d_mem,
                   SeededRng& rng) {
  if (spec.kind == synthaudit::generators::GeneratorKind::kClosedFormScenario) {
    return synthaudit::generators::generate(spec, d_mem, rng);
  }
  const auto params = synthaudit::data::fit_standardization(d_mem);
  const auto d_mem_std = synthaudit::data::apply_standardization(d_mem, params);
  return synthaudit::data::destandardize(synthaudit::generators::generate(spec, d_mem_std, rng));
}

Experiment build_experiment(const RunConfig& config, std::uint64_t seed,
                            std::optional<double> p_group0) {
  if (config.data.source == DataSource::kBimodal) return bimodal_experiment(config, seed);
  const SeededRng root(seed);
  auto data_rng = root.child(kPopulationStream);
  auto split_rng = root.child(kSplitStream);
  auto gen_rng = root.child(kGeneratorStream);

  auto population = load_population(config, data_rng);
  std::optional<Dataset> group0;
  if (config.shift) {
    group0 = rows_where(population, config.shift->predicate, true);
    population = rows_where(population, config.shift->predicate, false);
  }
  Experiment e;
  e.split = synthaudit::data::make_split(population, config.split.n_mem, config.split.n_ref,
                                         config.split.n_test, split_rng);
  if (p_group0) {
    if (!config.shift) throw synthaudit::ConfigError("p_group0 given without [shift]");
    auto shift_rng = root.child(kShiftStream);
    const auto pool = synthaudit::data::concat(e.split.d_ref, *group0);
    e.split.d_ref = synthaudit::data::shifted_reference(pool, config.shift->predicate, *p_group0,
                                                        config.split.n_ref, shift_rng);
  }
  e.d_syn = synthesize(config.generator, e.split.d_mem, gen_rng);
  return e;
}

std::vector<synthaudit::attacks::AttackScores> run_attackers(const RunConfig& config,
                                                             const Experiment& experiment,
                                                             SeededRng& rng) {
  namespace attacks = synthaudit::attacks;
  namespace density = synthaudit::density;
  const auto& split = experiment.split;
  const auto ref_params = synthaudit::data::fit_standardization(split.d_ref);
  const auto d_ref = synthaudit::data::apply_standardization(split.d_ref, ref_params);
  const auto d_syn = synthaudit::data::apply_standardization(experiment.d_syn, ref_params);
  const auto d_test = synthaudit::data::apply_standardization(split.d_test, ref_params);

  std::map<DensityBackend, DensityScores> cache;
  auto densities = [&](DensityBackend backend) -> const DensityScores& {
    auto it = cache.find(backend);
    if (it != cache.end()) return it->second;
    DensityScores ds;
    switch (backend) {
      case DensityBackend::kKde: {
        const auto p_g = density::kde_fit(d_syn, config.kde_bandwidth);
        const auto p_r = density::kde_fit(d_ref, config.kde_bandwidth);
        ds = {log_density_of(p_g, d_test), log_density_of(p_r, d_test)};
        break;
      }
      case DensityBackend::kFlow: {
        auto flow_rng = rng.child(100);
        auto g_rng = flow_rng.child(0);
        auto r_rng = flow_rng.child(1);
        spdlog::debug("fitting flow p_G on {} rows", d_syn.rows());
        const auto p_g = density::flow_fit(d_syn, config.flow, g_rng);
        spdlog::debug("fitting flow p_R on {} rows", d_ref.rows());
        const auto p_r = density::flow_fit(d_ref, config.flow, r_rng);
        ds = {log_density_of(p_g, d_test), log_density_of(p_r, d_test)};
        break;
      }
      case DensityBackend::kClosedForm: {
        // Known densities are evaluated on raw rows.
        const auto p_g = synthaudit::generators::bimodal_generator_density();
        const auto p_r = synthaudit::generators::bimodal_population_density();
        ds = {log_density_of(p_g, split.d_test), log_density_of(p_r, split.d_test)};
        break;
      }
    }
    return cache.emplace(backend, std::move(ds)).first->second;
  };

  std::vector<attacks::AttackScores> out;
  const auto& names = known_attackers();
  for (const auto& name : config.attackers) {
    const auto index = static_cast<std::uint64_t>(
        std::find(names.begin(), names.end(), name) - names.begin());
    auto attacker_rng = rng.child(index);
    spdlog::debug("scoring attacker {}", name);
    attacks::AttackScores s;
    if (name == "domias") {
      const auto& ds = densities(config.domias_density);
      s = attacks::domias(ds.log_pg, ds.log_pr);
    } else if (name == "eq1_only") {
      s = attacks::eq1_only(densities(config.eq1_density).log_pg);
    } else if (name == "gaussian_prior_domias") {
      s = attacks::gaussian_prior_domias(densities(config.prior_density).log_pg, split.d_test,
                                         config.prior);
    } else if (name == "logan0") {
      s = attacks::logan0(d_syn, d_test, config.logan0, attacker_rng);
    } else if (name == "logan_d1") {
      s = attacks::logan_d1(d_syn, d_ref, d_test, config.logan_d1, attacker_rng);
    } else if (name == "mc") {
      s = attacks::mc_score(d_syn, d_test, config.mc);
    } else if (name == "ganleaks0") {
      s = attacks::ganleaks0(d_syn, d_test, config.ganleaks0_k, attacker_rng);
    } else if (name == "ganleaks_cal") {
      s = attacks::ganleaks_cal(d_syn, d_ref, d_test, config.ganleaks_cal_k,
                                config.cal_generator, attacker_rng);
    } else {
      throw synthaudit::ConfigError("unknown attacker '" + name + "'");
    }
    if (uses_density(name)) s.metadata["density"] = to_string(config.backend_for(name));
    attacks::check_finite(s);
    out.push_back(std::move(s));
  }
  return out;
}

SeedRun run_seed(const RunConfig& config, std::uint64_t seed, std::optional<double> p_group0) {
  const SeededRng root(seed);
  const auto experiment = build_experiment(config, seed, p_group0);
  auto attack_rng = root.child(kAttackStream);
  SeedRun run;
  run.seed = seed;
  run.scores = run_attackers(config, experiment, attack_rng);

  std::vector<synthaudit::data::SubgroupMask> masks;
  for (const auto& p : config.subgroups) {
    masks.push_back(synthaudit::data::make_subgroup_mask(experiment.split.d_test, p));
  }
  for (const auto& s : run.scores) {
    run.report.attackers.push_back(
        synthaudit::eval::evaluate_attacker(s, experiment.split.labels, config.q_grid, masks));
  }
  if (config.utility) {
    auto utility_rng = root.child(kUtilityStream);
    const auto params = synthaudit::data::fit_standardization(experiment.split.d_ref);
    run.report.wasserstein_to_holdout = synthaudit::eval::wasserstein_utility(
        synthaudit::data::apply_standardization(experiment.d_syn, params),
        synthaudit::data::apply_standardization(experiment.split.d_ref, params), utility_rng);
  }
  std::size_t members = 0;
  for (auto l : experiment.split.labels) members += l;
  run.report.metadata = {{"seed", seed},
                         {"rows", {{"d_mem", experiment.split.d_mem.rows()},
                                   {"d_ref", experiment.split.d_ref.rows()},
                                   {"d_syn", experiment.d_syn.rows()},
                                   {"d_test", experiment.split.d_test.rows()},
                                   {"test_members", members}}}};
  if (p_group0) run.report.metadata["p_group0"] = *p_group0;
  run.report.validate();
  return run;
}

}  // namespace synth_audit
