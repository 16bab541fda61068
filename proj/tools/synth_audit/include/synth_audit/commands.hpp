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

#ifndef SYNTH_AUDIT_COMMANDS_HPP_
#define SYNTH_AUDIT_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "synth_audit/config.hpp"
#include "synth_audit/pipeline.hpp"
#include "synthaudit/error.hpp"

namespace synth_audit {

struct CommandOptions {
  std::filesystem::path out = ".";
  std::vector<std::uint64_t> seeds{0};
  std::size_t jobs = 1;
};

// Output files keyed by file name, written only once every run succeeded.
using OutputFiles = std::map<std::string, std::string>;

OutputFiles cmd_audit(const RunConfig& config, const CommandOptions& options);
OutputFiles cmd_sweep(const RunConfig& config, const CommandOptions& options);
OutputFiles cmd_shift(const RunConfig& config, const CommandOptions& options);

// Writes each file through a temporary name and a rename.
void write_outputs(const std::filesystem::path& dir, const OutputFiles& files);

// Runs task(i) for i in [0, count) on up to `jobs` threads. Results keep
// index order; if tasks fail, the lowest-index failure is rethrown.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& task);

// 0 success, 1 config error, 2 data error, 3 numeric or training error.
int exit_code(synthaudit::ErrorKind kind);

std::vector<std::uint64_t> parse_seed_list(const std::string& text);

// Full command-line entry point.
int run_cli(int argc, char** argv);

}  // namespace synth_audit

#endif  // SYNTH_AUDIT_COMMANDS_HPP_
