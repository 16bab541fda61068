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

#ifndef SYNTH_AUDIT_PIPELINE_HPP_
#define SYNTH_AUDIT_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "synth_audit/config.hpp"
#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/split.hpp"
#include "synthaudit/eval/report.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synth_audit {

// Every source of randomness in a run is a fixed child of the run seed.
enum RngStream : std::uint64_t {
  kPopulationStream = 0,
  kSplitStream = 1,
  kGeneratorStream = 2,
  kAttackStream = 3,
  kUtilityStream = 4,
  kShiftStream = 5,
};

// The split plus D_syn, all in raw (unstandardized) units.
struct Experiment {
  synthaudit::data::ExperimentSplit split;
  synthaudit::data::Dataset d_syn;
};

// Population rows for csv and the two mixture sources.
synthaudit::data::Dataset load_population(const RunConfig& config,
                                          synthaudit::numcore::SeededRng& rng);

// Builds the split for one seed. With [shift] present, members, test rows
// and the unshifted reference all come from rows *not* matching the shift
// predicate; p_group0 then swaps part of D_ref for matching rows.
Experiment build_experiment(const RunConfig& config, std::uint64_t seed,
                            std::optional<double> p_group0 = std::nullopt);

// D_syn from the configured generator. The generator sees D_mem
// standardized with its own statistics; its output is mapped back to raw
// units.
synthaudit::data::Dataset synthesize(const synthaudit::generators::GeneratorSpec& spec,
                                     const synthaudit::data::Dataset& d_mem,
                                     synthaudit::numcore::SeededRng& rng);

// Standardizes with D_ref statistics, fits the density models the attackers
// need and scores every configured attacker on the test rows.
std::vector<synthaudit::attacks::AttackScores> run_attackers(
    const RunConfig& config, const Experiment& experiment,
    synthaudit::numcore::SeededRng& rng);

struct SeedRun {
  std::uint64_t seed = 0;
  synthaudit::eval::AuditReport report;
  std::vector<synthaudit::attacks::AttackScores> scores;
};

SeedRun run_seed(const RunConfig& config, std::uint64_t seed,
                 std::optional<double> p_group0 = std::nullopt);

}  // namespace synth_audit

#endif  // SYNTH_AUDIT_PIPELINE_HPP_
