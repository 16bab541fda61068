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

#ifndef SYNTH_AUDIT_CONFIG_HPP_
#define SYNTH_AUDIT_CONFIG_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "synthaudit/attacks/density_ratio.hpp"
#include "synthaudit/attacks/logan.hpp"
#include "synthaudit/attacks/neighbours.hpp"
#include "synthaudit/data/predicate.hpp"
#include "synthaudit/density/flow.hpp"
#include "synthaudit/generators/generator.hpp"

namespace synth_audit {

enum class DataSource { kCsv, kGaussMixture, kMinorityMixture, kBimodal };
enum class DensityBackend { kKde, kFlow, kClosedForm };

std::string to_string(DataSource source);
std::string to_string(DensityBackend backend);

// Canonical attacker names, in the order they are scored and reported.
const std::vector<std::string>& known_attackers();
bool uses_density(const std::string& attacker);

struct DataConfig {
  DataSource source = DataSource::kGaussMixture;
  std::filesystem::path path;   // csv source only
  std::size_t dim = 2;          // built-in populations
  std::size_t population = 20000;
  double minority_fraction = 0.1;
  bool infer_binary = true;
  bool dequantize = false;
};

struct SplitConfig {
  std::size_t n_mem = 100;
  std::size_t n_ref = 2000;
  std::size_t n_test = 200;
};

struct SweepConfig {
  std::string knob;  // n_mem, knob, n_ref or n_syn
  std::vector<double> values;
};

struct ShiftConfig {
  synthaudit::data::RowPredicate predicate;  // rows matching it form group 0
  std::vector<double> p_group0;
};

struct RunConfig {
  DataConfig data;
  SplitConfig split;
  synthaudit::generators::GeneratorSpec generator{
      synthaudit::generators::GeneratorKind::kAdditiveNoise, 0.1, 2000};

  std::vector<std::string> attackers;
  DensityBackend density = DensityBackend::kKde;
  DensityBackend domias_density = DensityBackend::kKde;
  DensityBackend eq1_density = DensityBackend::kKde;
  DensityBackend prior_density = DensityBackend::kKde;
  synthaudit::attacks::PriorSpec prior;
  synthaudit::attacks::LoganConfig logan0;
  synthaudit::attacks::LoganConfig logan_d1;
  synthaudit::attacks::McConfig mc;
  std::optional<std::size_t> ganleaks0_k;
  std::optional<std::size_t> ganleaks_cal_k;
  synthaudit::generators::GeneratorSpec cal_generator;

  synthaudit::density::FlowConfig flow;
  std::optional<double> kde_bandwidth;

  std::optional<SweepConfig> sweep;
  std::optional<ShiftConfig> shift;
  std::vector<synthaudit::data::RowPredicate> subgroups;
  std::vector<double> q_grid;
  bool utility = true;

  DensityBackend backend_for(const std::string& attacker) const;
  nlohmann::json to_json() const;
};

// Parses the INI-style grammar documented in the README and validates every
// value. Unknown sections or keys, malformed values and inconsistent
// combinations raise ConfigError.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace synth_audit

#endif  // SYNTH_AUDIT_CONFIG_HPP_
