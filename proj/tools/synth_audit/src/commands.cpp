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

#include "synth_audit/commands.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "synthaudit/version.hpp"

namespace synth_audit {
namespace {

using nlohmann::json;

// Shortest representation that reads back to the same double.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Sample standard deviation; 0 for a single value.
MeanStd mean_std(const std::vector<double>& v) {
  MeanStd m;
  for (double x : v) m.mean += x;
  m.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    for (double x : v) m.std += (x - m.mean) * (x - m.mean);
    m.std = std::sqrt(m.std / static_cast<double>(v.size() - 1));
  }
  return m;
}

json metadata(const std::string& command, const RunConfig& config,
              const CommandOptions& options) {
  return {{"software", {{"name", "synthaudit"}, {"version", synthaudit::kVersion}}},
          {"command", command},
          {"seeds", options.seeds},
          {"config", config.to_json()},
          {"conventions",
           {{"score", "log p_G(x) - log p_R(x) for density-ratio attackers"},
            {"standardization", "population std, fit on D_ref, applied to all sets"},
            {"auc_ties", "counted one half"},
            {"accuracy_threshold", "score > median of test scores"},
            {"precision_quantile", "top ceil(q*n) rows, ties in input order"},
            {"wasserstein", "mean of per-feature 1-d W1 after resampling to equal size"},
            {"std", "sample standard deviation over seeds"}}}};
}

std::vector<SeedRun> run_seeds(const RunConfig& config, const CommandOptions& options,
                               std::optional<double> p_group0 = std::nullopt) {
  std::vector<SeedRun> runs(options.seeds.size());
  parallel_for(runs.size(), options.jobs, [&](std::size_t i) {
    spdlog::info("seed {}: running", options.seeds[i]);
    runs[i] = run_seed(config, options.seeds[i], p_group0);
  });
  return runs;
}

struct GridPoint {
  double value = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> utility;
  std::vector<std::pair<std::string, double>> auc;
};

OutputFiles grid_outputs(const std::string& command, const std::string& knob,
                         const std::vector<double>& values, const std::vector<GridPoint>& points,
                         const RunConfig& config, const CommandOptions& options) {
  std::ostringstream csv;
  csv << "knob,value,seed,utility";
  for (const auto& a : config.attackers) csv << ",auc_" << a;
  csv << '\n';
  auto utility_field = [](const std::optional<double>& u) {
    return u ? format_double(*u) : std::string();
  };
  for (const auto& p : points) {
    csv << knob << ',' << format_double(p.value) << ',' << p.seed << ','
        << utility_field(p.utility);
    for (const auto& [name, v] : p.auc) csv << ',' << format_double(v);
    csv << '\n';
  }
  json aggregate = json::array();
  const std::size_t per_value = options.seeds.size();
  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    std::vector<MeanStd> auc_stats;
    for (std::size_t a = 0; a < config.attackers.size(); ++a) {
      std::vector<double> xs;
      for (std::size_t s = 0; s < per_value; ++s) xs.push_back(points[vi * per_value + s].auc[a].second);
      auc_stats.push_back(mean_std(xs));
    }
    std::optional<MeanStd> util;
    if (config.utility) {
      std::vector<double> xs;
      for (std::size_t s = 0; s < per_value; ++s) xs.push_back(*points[vi * per_value + s].utility);
      util = mean_std(xs);
    }
    for (const char* stat : {"mean", "std"}) {
      const bool mean = std::string(stat) == "mean";
      csv << knob << ',' << format_double(values[vi]) << ',' << stat << ',';
      if (util) csv << format_double(mean ? util->mean : util->std);
      for (const auto& m : auc_stats) csv << ',' << format_double(mean ? m.mean : m.std);
      csv << '\n';
    }
    json entry = {{"value", values[vi]}, {"auc", json::object()}};
    for (std::size_t a = 0; a < config.attackers.size(); ++a) {
      entry["auc"][config.attackers[a]] = {{"mean", auc_stats[a].mean}, {"std", auc_stats[a].std}};
    }
    if (util) entry["utility"] = {{"mean", util->mean}, {"std", util->std}};
    aggregate.push_back(entry);
  }

  json rows = json::array();
  for (const auto& p : points) {
    json r = {{"value", p.value}, {"seed", p.seed}, {"auc", json::object()}};
    for (const auto& [name, v] : p.auc) r["auc"][name] = v;
    r["utility"] = p.utility ? json(*p.utility) : json(nullptr);
    rows.push_back(r);
  }
  json report = {{"format", "synthaudit.sweep"},
                 {"version", 1},
                 {"knob", knob},
                 {"metadata", metadata(command, config, options)},
                 {"points", rows},
                 {"aggregate", aggregate}};
  return {{"sweep.csv", csv.str()}, {"report.json", report.dump(2) + "\n"}};
}

GridPoint to_point(double value, const SeedRun& run) {
  GridPoint p;
  p.value = value;
  p.seed = run.seed;
  p.utility = run.report.wasserstein_to_holdout;
  for (const auto& a : run.report.attackers) p.auc.emplace_back(a.attacker, a.auc);
  return p;
}

RunConfig with_knob(RunConfig config, const std::string& knob, double value) {
  const auto count = static_cast<std::size_t>(value);
  if (knob == "knob") {
    config.generator.knob = value;
  } else if (knob == "n_mem") {
    config.split.n_mem = count;
  } else if (knob == "n_ref") {
    config.split.n_ref = count;
  } else if (knob == "n_syn") {
    config.generator.n_syn = count;
  }
  return config;
}

}  // namespace

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(std::max<std::size_t>(jobs, 1), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

OutputFiles cmd_audit(const RunConfig& config, const CommandOptions& options) {
  const auto runs = run_seeds(config, options);
  OutputFiles files;
  const bool several = runs.size() > 1;
  std::ostringstream precision;
  precision << "seed,attacker,q,precision\n";
  json run_json = json::array();
  for (const auto& run : runs) {
    for (const auto& s : run.scores) {
      std::ostringstream csv;
      synthaudit::attacks::write_scores_csv(csv, s);
      const std::string name = several ? "scores_" + s.attacker + "_seed" +
                                             std::to_string(run.seed) + ".csv"
                                       : "scores_" + s.attacker + ".csv";
      files[name] = csv.str();
    }
    for (const auto& a : run.report.attackers) {
      for (std::size_t i = 0; i < a.precision.q.size(); ++i) {
        precision << run.seed << ',' << a.attacker << ',' << format_double(a.precision.q[i])
                  << ',' << format_double(a.precision.precision[i]) << '\n';
      }
    }
    run_json.push_back(run.report.to_json());
  }
  files["precision.csv"] = precision.str();

  json aggregate = json::object();
  for (std::size_t a = 0; a < config.attackers.size(); ++a) {
    std::vector<double> aucs;
    std::vector<double> accs;
    for (const auto& run : runs) {
      aucs.push_back(run.report.attackers[a].auc);
      accs.push_back(run.report.attackers[a].accuracy_at_median);
    }
    const auto au = mean_std(aucs);
    const auto ac = mean_std(accs);
    aggregate[config.attackers[a]] = {{"auc", {{"mean", au.mean}, {"std", au.std}}},
                                      {"accuracy_at_median", {{"mean", ac.mean}, {"std", ac.std}}}};
  }
  if (config.utility) {
    std::vector<double> us;
    for (const auto& run : runs) us.push_back(*run.report.wasserstein_to_holdout);
    const auto u = mean_std(us);
    aggregate["utility"] = {{"wasserstein_to_holdout", {{"mean", u.mean}, {"std", u.std}}}};
  }
  const json report = {{"format", "synthaudit.audit"},
                       {"version", 1},
                       {"metadata", metadata("audit", config, options)},
                       {"runs", run_json},
                       {"aggregate", aggregate}};
  files["report.json"] = report.dump(2) + "\n";
  return files;
}

OutputFiles cmd_sweep(const RunConfig& config, const CommandOptions& options) {
  if (!config.sweep) throw synthaudit::ConfigError("sweep needs a [sweep] section");
  const auto& values = config.sweep->values;
  const std::size_t n_seeds = options.seeds.size();
  std::vector<GridPoint> points(values.size() * n_seeds);
  parallel_for(points.size(), options.jobs, [&](std::size_t i) {
    const double value = values[i / n_seeds];
    const auto seed = options.seeds[i % n_seeds];
    spdlog::info("sweep {}={} seed {}", config.sweep->knob, value, seed);
    points[i] = to_point(value, run_seed(with_knob(config, config.sweep->knob, value), seed));
  });
  return grid_outputs("sweep", config.sweep->knob, values, points, config, options);
}

OutputFiles cmd_shift(const RunConfig& config, const CommandOptions& options) {
  if (!config.shift) throw synthaudit::ConfigError("shift needs a [shift] section");
  const auto& values = config.shift->p_group0;
  const std::size_t n_seeds = options.seeds.size();
  std::vector<GridPoint> points(values.size() * n_seeds);
  parallel_for(points.size(), options.jobs, [&](std::size_t i) {
    const double p = values[i / n_seeds];
    const auto seed = options.seeds[i % n_seeds];
    spdlog::info("shift p_group0={} seed {}", p, seed);
    points[i] = to_point(p, run_seed(config, seed, p));
  });
  return grid_outputs("shift", "p_group0", values, points, config, options);
}

void write_outputs(const std::filesystem::path& dir, const OutputFiles& files) {
  std::filesystem::create_directories(dir);
  // The report goes last so its presence marks a complete run.
  std::vector<std::pair<std::string, const std::string*>> order;
  for (const auto& [name, body] : files) {
    if (name != "report.json") order.emplace_back(name, &body);
  }
  if (auto it = files.find("report.json"); it != files.end()) order.emplace_back(it->first, &it->second);
  for (const auto& [name, body] : order) {
    const auto target = dir / name;
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << *body;
      if (!out) throw synthaudit::DataError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }
}

int exit_code(synthaudit::ErrorKind kind) {
  using synthaudit::ErrorKind;
  switch (kind) {
    case ErrorKind::kConfig:
    case ErrorKind::kParameter:
      return 1;
    case ErrorKind::kNumeric:
    case ErrorKind::kTrainingDiverged:
      return 3;
    default:
      return 2;
  }
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw synthaudit::ConfigError("--seed: '" + item + "' is not a non-negative integer");
    }
    seeds.push_back(v);
  }
  if (seeds.empty()) throw synthaudit::ConfigError("--seed needs at least one value");
  return seeds;
}

int run_cli(int argc, char** argv) {
  spdlog::drop("synth_audit");
  auto logger = spdlog::stderr_color_mt("synth_audit");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* level = std::getenv("SYNTH_AUDIT_LOG");
  const std::string lvl = level ? level : "info";
  if (lvl == "error") {
    spdlog::set_level(spdlog::level::err);
  } else if (lvl == "info") {
    spdlog::set_level(spdlog::level::info);
  } else if (lvl == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    spdlog::error("SYNTH_AUDIT_LOG must be error, info or debug, got '{}'", lvl);
    return 1;
  }

  CLI::App app{"Membership-inference audits of synthetic tabular data"};
  app.require_subcommand(1);
  std::string config_path;
  std::string seed_text = "0";
  std::string out_dir = ".";
  std::size_t jobs = 1;
  for (const char* name : {"audit", "sweep", "shift"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " command");
    sub->add_option("--config", config_path, "config file")->required();
    sub->add_option("--seed", seed_text, "seed or comma-separated seeds");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--jobs", jobs, "parallel runs")->check(CLI::PositiveNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto config = load_config(config_path);
    CommandOptions options{out_dir, parse_seed_list(seed_text), jobs};
    OutputFiles files;
    if (command == "audit") {
      files = cmd_audit(config, options);
    } else if (command == "sweep") {
      files = cmd_sweep(config, options);
    } else {
      files = cmd_shift(config, options);
    }
    write_outputs(options.out, files);
    spdlog::info("wrote {} files to {}", files.size(), options.out.string());
    return 0;
  } catch (const synthaudit::Error& e) {
    spdlog::error("{} error: {}", synthaudit::to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    spdlog::error("i/o error: {}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("error: {}", e.what());
    return 3;
  }
}

}  // namespace synth_audit
