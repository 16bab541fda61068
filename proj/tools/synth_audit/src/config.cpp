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

#include "synth_audit/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "synthaudit/error.hpp"
#include "synthaudit/eval/metrics.hpp"

namespace synth_audit {
namespace {

using boost::property_tree::ptree;
using synthaudit::ConfigError;

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"data", {"source", "path", "dim", "population", "minority_fraction", "infer_binary",
                "dequantize"}},
      {"split", {"n_mem", "n_ref", "n_test"}},
      {"generator", {"kind", "knob", "n_syn"}},
      {"attack", {"attackers", "density"}},
      {"domias", {"density"}},
      {"eq1_only", {"density"}},
      {"gaussian_prior_domias", {"density", "prior"}},
      {"logan0", {"hidden", "epochs", "batch", "learning_rate", "noise_dim"}},
      {"logan_d1", {"hidden", "epochs", "batch", "learning_rate"}},
      {"mc", {"epsilon", "pca_components"}},
      {"ganleaks0", {"k"}},
      {"ganleaks_cal", {"k", "generator_kind", "generator_knob"}},
      {"flow", {"flows", "layers", "hidden", "batch", "learning_rate", "epochs", "polyak"}},
      {"kde", {"bandwidth"}},
      {"sweep", {"n_mem", "knob", "n_ref", "n_syn"}},
      {"shift", {"predicate", "p_group0"}},
      {"subgroup", {"predicates"}},
      {"eval", {"q_grid", "utility"}},
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

class Values {
 public:
  explicit Values(const ptree& root) {
    for (const auto& [section, body] : root) {
      const auto allowed = allowed_keys().find(section);
      if (body.empty() && !body.data().empty()) {
        throw ConfigError("key '" + section + "' must be inside a [section]");
      }
      if (allowed == allowed_keys().end()) {
        throw ConfigError("unknown section [" + section + "]");
      }
      for (const auto& [key, value] : body) {
        if (!allowed->second.contains(key)) {
          throw ConfigError("unknown key '" + key + "' in [" + section + "]");
        }
        values_[section + "." + key] = trim(value.data());
      }
      sections_.insert(section);
    }
  }

  bool has_section(const std::string& s) const { return sections_.contains(s); }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    if (it->second.empty()) throw ConfigError(key + ": empty value");
    return it->second;
  }

  double real(const std::string& key, double fallback) const {
    auto v = get(key);
    return v ? parse_real(key, *v) : fallback;
  }

  std::optional<double> optional_real(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return parse_real(key, *v);
  }

  std::size_t count(const std::string& key, std::size_t fallback) const {
    auto v = get(key);
    return v ? parse_count(key, *v) : fallback;
  }

  bool flag(const std::string& key, bool fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw ConfigError(key + ": expected true or false, got '" + *v + "'");
  }

  std::vector<double> reals(const std::string& key) const {
    std::vector<double> out;
    auto v = get(key);
    if (!v) return out;
    for (const auto& item : split_list(*v)) out.push_back(parse_real(key, item));
    if (out.empty()) throw ConfigError(key + ": empty list");
    return out;
  }

  static double parse_real(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      throw ConfigError(key + ": '" + text + "' is not a finite number");
    }
    return value;
  }

  static std::size_t parse_count(const std::string& key, const std::string& text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw ConfigError(key + ": '" + text + "' is not a non-negative integer");
    }
    return value;
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> sections_;
};

DataSource parse_source(const std::string& s) {
  if (s == "csv") return DataSource::kCsv;
  if (s == "gauss-mixture") return DataSource::kGaussMixture;
  if (s == "gauss-mixture-minority") return DataSource::kMinorityMixture;
  if (s == "bimodal") return DataSource::kBimodal;
  throw ConfigError("data.source: unknown source '" + s + "'");
}

DensityBackend parse_backend(const std::string& key, const std::string& s) {
  if (s == "kde") return DensityBackend::kKde;
  if (s == "flow") return DensityBackend::kFlow;
  if (s == "closed_form") return DensityBackend::kClosedForm;
  throw ConfigError(key + ": unknown density backend '" + s + "'");
}

synthaudit::generators::GeneratorKind parse_kind(const std::string& key, const std::string& s) {
  try {
    return synthaudit::generators::parse_generator_kind(s);
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

synthaudit::data::RowPredicate parse_predicate(const std::string& key, const std::string& s) {
  try {
    return synthaudit::data::RowPredicate::parse(s);
  } catch (const synthaudit::Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

// Each entry is column:mean:stddev.
synthaudit::attacks::PriorSpec parse_prior(const std::string& text) {
  synthaudit::attacks::PriorSpec prior;
  for (const auto& item : split_list(text)) {
    const auto a = item.find(':');
    const auto b = item.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) {
      throw ConfigError("gaussian_prior_domias.prior: '" + item +
                        "' is not column:mean:stddev");
    }
    synthaudit::attacks::FeaturePrior f;
    f.column = trim(item.substr(0, a));
    f.mean = Values::parse_real("gaussian_prior_domias.prior", trim(item.substr(a + 1, b - a - 1)));
    f.stddev = Values::parse_real("gaussian_prior_domias.prior", trim(item.substr(b + 1)));
    if (!(f.stddev > 0.0)) {
      throw ConfigError("gaussian_prior_domias.prior: stddev for '" + f.column + "' must be > 0");
    }
    prior.features.push_back(std::move(f));
  }
  return prior;
}

std::optional<std::size_t> parse_k(const Values& v, const std::string& key) {
  auto text = v.get(key);
  if (!text || *text == "all") return std::nullopt;
  const auto k = Values::parse_count(key, *text);
  if (k == 0) throw ConfigError(key + ": k must be >= 1");
  return k;
}

synthaudit::attacks::LoganConfig parse_logan(const Values& v, const std::string& s) {
  synthaudit::attacks::LoganConfig c;
  c.hidden = v.count(s + ".hidden", c.hidden);
  c.epochs = v.count(s + ".epochs", c.epochs);
  c.batch = v.count(s + ".batch", c.batch);
  c.learning_rate = v.real(s + ".learning_rate", c.learning_rate);
  c.noise_dim = v.count(s + ".noise_dim", c.noise_dim);
  return c;
}

template <typename Fn>
void as_config_error(const std::string& what, Fn&& fn) {
  try {
    fn();
  } catch (const synthaudit::ParameterError& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

void validate(const RunConfig& c) {
  if (c.attackers.empty()) throw ConfigError("attack.attackers: at least one attacker is required");
  const bool bimodal = c.data.source == DataSource::kBimodal;
  if (c.data.source == DataSource::kCsv && c.data.path.empty()) {
    throw ConfigError("data.path is required when data.source = csv");
  }
  if (c.data.source != DataSource::kCsv && !c.data.path.empty()) {
    throw ConfigError("data.path is only valid when data.source = csv");
  }
  if (c.data.dim == 0) throw ConfigError("data.dim must be >= 1");
  if (bimodal && c.data.dim != 1) throw ConfigError("data.dim must be 1 for the bimodal scenario");
  if (!(c.data.minority_fraction > 0.0 && c.data.minority_fraction < 1.0)) {
    throw ConfigError("data.minority_fraction must lie in (0, 1)");
  }
  const bool scenario_generator =
      c.generator.kind == synthaudit::generators::GeneratorKind::kClosedFormScenario;
  if (bimodal != scenario_generator) {
    throw ConfigError("generator.kind = closed_form_scenario goes together with data.source = bimodal");
  }
  if (c.split.n_mem == 0) throw ConfigError("split.n_mem must be >= 1");
  if (c.split.n_ref == 0) throw ConfigError("split.n_ref must be >= 1");
  if (c.split.n_test < 2 || c.split.n_test % 2 != 0) {
    throw ConfigError("split.n_test must be even and >= 2");
  }
  if (c.split.n_test / 2 > c.split.n_mem) {
    throw ConfigError("split.n_test / 2 must not exceed split.n_mem");
  }
  as_config_error("generator", [&] { synthaudit::generators::validate(c.generator); });
  for (const auto& name : c.attackers) {
    if (!uses_density(name)) continue;
    if (c.backend_for(name) == DensityBackend::kClosedForm && !bimodal) {
      throw ConfigError(name + ".density = closed_form needs data.source = bimodal");
    }
  }
  auto has = [&](const std::string& a) {
    return std::find(c.attackers.begin(), c.attackers.end(), a) != c.attackers.end();
  };
  if (has("gaussian_prior_domias") && c.prior.features.empty()) {
    throw ConfigError("gaussian_prior_domias.prior is required for that attacker");
  }
  as_config_error("logan0", [&] { c.logan0.validate(); });
  as_config_error("logan_d1", [&] { c.logan_d1.validate(); });
  if (c.mc.epsilon && !(*c.mc.epsilon > 0.0)) throw ConfigError("mc.epsilon must be > 0");
  if (c.mc.pca_components > c.data.dim && c.data.source != DataSource::kCsv) {
    throw ConfigError("mc.pca_components exceeds data.dim");
  }
  if (has("ganleaks_cal")) {
    as_config_error("ganleaks_cal", [&] { synthaudit::generators::validate(c.cal_generator); });
    if (c.cal_generator.kind == synthaudit::generators::GeneratorKind::kClosedFormScenario &&
        !bimodal) {
      throw ConfigError("ganleaks_cal.generator_kind = closed_form_scenario needs bimodal");
    }
  }
  as_config_error("flow", [&] { synthaudit::density::validate(c.flow); });
  if (c.kde_bandwidth && !(*c.kde_bandwidth > 0.0)) throw ConfigError("kde.bandwidth must be > 0");
  for (double q : c.q_grid) {
    if (!(q > 0.0 && q <= 1.0)) throw ConfigError("eval.q_grid values must lie in (0, 1]");
  }
  if (c.sweep) {
    for (double value : c.sweep->values) {
      if (c.sweep->knob == "knob") {
        auto spec = c.generator;
        spec.knob = value;
        as_config_error("sweep.knob", [&] { synthaudit::generators::validate(spec); });
      } else if (value < 1.0 || value != std::floor(value)) {
        throw ConfigError("sweep." + c.sweep->knob + ": values must be positive integers");
      }
    }
  }
  if (c.shift) {
    if (bimodal) throw ConfigError("[shift] is not available for the bimodal scenario");
    for (double p : c.shift->p_group0) {
      if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("shift.p_group0 values must lie in [0, 1]");
    }
    if (!has("domias") || !has("eq1_only")) {
      throw ConfigError("[shift] runs need both domias and eq1_only in attack.attackers");
    }
  }
}

}  // namespace

std::string to_string(DataSource source) {
  switch (source) {
    case DataSource::kCsv:
      return "csv";
    case DataSource::kGaussMixture:
      return "gauss-mixture";
    case DataSource::kMinorityMixture:
      return "gauss-mixture-minority";
    case DataSource::kBimodal:
      return "bimodal";
  }
  return "unknown";
}

std::string to_string(DensityBackend backend) {
  switch (backend) {
    case DensityBackend::kKde:
      return "kde";
    case DensityBackend::kFlow:
      return "flow";
    case DensityBackend::kClosedForm:
      return "closed_form";
  }
  return "unknown";
}

const std::vector<std::string>& known_attackers() {
  static const std::vector<std::string> names = {
      "domias", "eq1_only", "gaussian_prior_domias", "logan0",
      "logan_d1", "mc", "ganleaks0", "ganleaks_cal"};
  return names;
}

bool uses_density(const std::string& attacker) {
  return attacker == "domias" || attacker == "eq1_only" || attacker == "gaussian_prior_domias";
}

DensityBackend RunConfig::backend_for(const std::string& attacker) const {
  if (attacker == "domias") return domias_density;
  if (attacker == "eq1_only") return eq1_density;
  if (attacker == "gaussian_prior_domias") return prior_density;
  return density;
}

nlohmann::json RunConfig::to_json() const {
  using nlohmann::json;
  auto optional_k = [](const std::optional<std::size_t>& k) {
    return k ? json(*k) : json("all");
  };
  json prior_json = json::array();
  for (const auto& f : prior.features) {
    prior_json.push_back({{"column", f.column}, {"mean", f.mean}, {"stddev", f.stddev}});
  }
  json subgroup_json = json::array();
  for (const auto& p : subgroups) subgroup_json.push_back(p.to_string());
  json out = {
      {"data",
       {{"source", to_string(data.source)},
        {"path", data.path.string()},
        {"dim", data.dim},
        {"population", data.population},
        {"minority_fraction", data.minority_fraction},
        {"infer_binary", data.infer_binary},
        {"dequantize", data.dequantize}}},
      {"split", {{"n_mem", split.n_mem}, {"n_ref", split.n_ref}, {"n_test", split.n_test}}},
      {"generator",
       {{"kind", synthaudit::generators::to_string(generator.kind)},
        {"knob", generator.knob},
        {"n_syn", generator.n_syn}}},
      {"attack", {{"attackers", attackers}, {"density", to_string(density)}}},
      {"domias", {{"density", to_string(domias_density)}}},
      {"eq1_only", {{"density", to_string(eq1_density)}}},
      {"gaussian_prior_domias", {{"density", to_string(prior_density)}, {"prior", prior_json}}},
      {"logan0", logan0.to_json()},
      {"logan_d1", logan_d1.to_json()},
      {"mc",
       {{"epsilon", mc.epsilon ? json(*mc.epsilon) : json("median_nn_distance")},
        {"pca_components", mc.pca_components}}},
      {"ganleaks0", {{"k", optional_k(ganleaks0_k)}}},
      {"ganleaks_cal",
       {{"k", optional_k(ganleaks_cal_k)},
        {"generator_kind", synthaudit::generators::to_string(cal_generator.kind)},
        {"generator_knob", cal_generator.knob}}},
      {"flow", synthaudit::density::to_json(flow)},
      {"kde", {{"bandwidth", kde_bandwidth ? json(*kde_bandwidth) : json("scott")}}},
      {"subgroup", {{"predicates", subgroup_json}}},
      {"eval", {{"q_grid", q_grid}, {"utility", utility}}},
  };
  if (sweep) out["sweep"] = {{"knob", sweep->knob}, {"values", sweep->values}};
  if (shift) {
    out["shift"] = {{"predicate", shift->predicate.to_string()}, {"p_group0", shift->p_group0}};
  }
  return out;
}

RunConfig parse_config(std::istream& in) {
  ptree root;
  try {
    boost::property_tree::ini_parser::read_ini(in, root);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  const Values v(root);
  RunConfig c;

  if (auto s = v.get("data.source")) c.data.source = parse_source(*s);
  if (auto s = v.get("data.path")) c.data.path = *s;
  c.data.dim = v.count("data.dim", c.data.source == DataSource::kBimodal ? 1 : c.data.dim);
  c.data.population = v.count("data.population", c.data.population);
  c.data.minority_fraction = v.real("data.minority_fraction", c.data.minority_fraction);
  c.data.infer_binary = v.flag("data.infer_binary", c.data.infer_binary);
  c.data.dequantize = v.flag("data.dequantize", c.data.dequantize);

  c.split.n_mem = v.count("split.n_mem", c.split.n_mem);
  c.split.n_ref = v.count("split.n_ref", c.split.n_ref);
  c.split.n_test = v.count("split.n_test", c.split.n_test);

  if (auto s = v.get("generator.kind")) c.generator.kind = parse_kind("generator.kind", *s);
  c.generator.knob = v.real("generator.knob", c.generator.knob);
  c.generator.n_syn = v.count("generator.n_syn", c.generator.n_syn);

  if (auto s = v.get("attack.attackers")) {
    std::set<std::string> seen;
    for (const auto& name : split_list(*s)) {
      const auto& known = known_attackers();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw ConfigError("attack.attackers: unknown attacker '" + name + "'");
      }
      if (!seen.insert(name).second) {
        throw ConfigError("attack.attackers: '" + name + "' listed twice");
      }
    }
    // Stored in canonical order.
    for (const auto& name : known_attackers()) {
      if (seen.contains(name)) c.attackers.push_back(name);
    }
  }
  if (auto s = v.get("attack.density")) c.density = parse_backend("attack.density", *s);
  c.domias_density = c.eq1_density = c.prior_density = c.density;
  if (auto s = v.get("domias.density")) c.domias_density = parse_backend("domias.density", *s);
  if (auto s = v.get("eq1_only.density")) c.eq1_density = parse_backend("eq1_only.density", *s);
  if (auto s = v.get("gaussian_prior_domias.density")) {
    c.prior_density = parse_backend("gaussian_prior_domias.density", *s);
  }
  if (auto s = v.get("gaussian_prior_domias.prior")) c.prior = parse_prior(*s);

  c.logan0 = parse_logan(v, "logan0");
  c.logan_d1 = parse_logan(v, "logan_d1");
  c.mc.epsilon = v.optional_real("mc.epsilon");
  c.mc.pca_components = v.count("mc.pca_components", 0);
  c.ganleaks0_k = parse_k(v, "ganleaks0.k");
  c.ganleaks_cal_k = parse_k(v, "ganleaks_cal.k");
  c.cal_generator = c.generator;
  if (auto s = v.get("ganleaks_cal.generator_kind")) {
    c.cal_generator.kind = parse_kind("ganleaks_cal.generator_kind", *s);
  }
  c.cal_generator.knob = v.real("ganleaks_cal.generator_knob", c.cal_generator.knob);

  c.flow.flows = v.count("flow.flows", c.flow.flows);
  c.flow.layers = v.count("flow.layers", c.flow.layers);
  c.flow.hidden = v.count("flow.hidden", c.flow.hidden);
  c.flow.batch = v.count("flow.batch", c.flow.batch);
  c.flow.learning_rate = v.real("flow.learning_rate", c.flow.learning_rate);
  c.flow.epochs = v.count("flow.epochs", c.flow.epochs);
  c.flow.polyak = v.real("flow.polyak", c.flow.polyak);
  c.kde_bandwidth = v.optional_real("kde.bandwidth");

  if (v.has_section("sweep")) {
    std::vector<std::string> knobs;
    for (const auto* k : {"n_mem", "knob", "n_ref", "n_syn"}) {
      if (v.get(std::string("sweep.") + k)) knobs.push_back(k);
    }
    if (knobs.size() != 1) {
      throw ConfigError("[sweep] must set exactly one of n_mem, knob, n_ref, n_syn (found " +
                        std::to_string(knobs.size()) + ")");
    }
    c.sweep = SweepConfig{knobs.front(), v.reals("sweep." + knobs.front())};
  }
  if (v.has_section("shift")) {
    auto predicate = v.get("shift.predicate");
    if (!predicate) throw ConfigError("shift.predicate is required in [shift]");
    auto grid = v.reals("shift.p_group0");
    if (grid.empty()) throw ConfigError("shift.p_group0 is required in [shift]");
    c.shift = ShiftConfig{parse_predicate("shift.predicate", *predicate), std::move(grid)};
  }
  if (auto s = v.get("subgroup.predicates")) {
    for (const auto& item : split_list(*s)) {
      c.subgroups.push_back(parse_predicate("subgroup.predicates", item));
    }
  }
  c.q_grid = v.reals("eval.q_grid");
  if (c.q_grid.empty()) c.q_grid = synthaudit::eval::default_q_grid();
  c.utility = v.flag("eval.utility", c.utility);

  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in);
}

}  // namespace synth_audit
