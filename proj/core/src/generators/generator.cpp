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

#include "synthaudit/generators/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "synthaudit/error.hpp"
#include "synthaudit/generators/scenario.hpp"

namespace synthaudit::generators {
namespace {

numcore::RealMatrix noisy_resample(const data::Dataset& d_mem, std::size_t n_syn,
                                   double stddev, numcore::SeededRng& rng) {
  const std::size_t d = d_mem.cols();
  std::vector<double> out;
  out.reserve(n_syn * d);
  for (std::size_t i = 0; i < n_syn; ++i) {
    const auto row = d_mem.row(static_cast<std::size_t>(rng.below(d_mem.rows())));
    for (std::size_t j = 0; j < d; ++j) {
      out.push_back(stddev > 0.0 ? row[j] + stddev * rng.normal() : row[j]);
    }
  }
  return numcore::RealMatrix(n_syn, d, std::move(out));
}

// Moments are accumulated over lexicographically sorted rows so the result
// does not depend on the row order of d_mem.
numcore::RealMatrix gaussian_mle_sample(const data::Dataset& d_mem, std::size_t n_syn,
                                        numcore::SeededRng& rng) {
  const std::size_t n = d_mem.rows();
  const auto d = static_cast<Eigen::Index>(d_mem.cols());
  std::vector<std::span<const double>> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) rows.push_back(d_mem.row(r));
  std::sort(rows.begin(), rows.end(), [](auto a, auto b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  for (const auto& r : rows) mean += Eigen::Map<const Eigen::VectorXd>(r.data(), d);
  mean /= static_cast<double>(n);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (const auto& r : rows) {
    const Eigen::VectorXd diff = Eigen::Map<const Eigen::VectorXd>(r.data(), d) - mean;
    cov.noalias() += diff * diff.transpose();
  }
  cov /= static_cast<double>(n);

  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  double ridge = 1e-12 * std::max(1.0, cov.diagonal().maxCoeff());
  for (int attempt = 0; llt.info() != Eigen::Success && attempt < 12; ++attempt) {
    llt.compute(cov + ridge * Eigen::MatrixXd::Identity(d, d));
    ridge *= 10.0;
  }
  if (llt.info() != Eigen::Success) {
    throw NumericError("gaussian_mle: covariance is not positive definite");
  }
  const Eigen::MatrixXd chol = llt.matrixL();

  std::vector<double> out;
  out.reserve(n_syn * static_cast<std::size_t>(d));
  Eigen::VectorXd noise(d);
  for (std::size_t i = 0; i < n_syn; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) noise(j) = rng.normal();
    const Eigen::VectorXd x = mean + chol * noise;
    out.insert(out.end(), x.data(), x.data() + d);
  }
  return numcore::RealMatrix(n_syn, static_cast<std::size_t>(d), std::move(out));
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kAdditiveNoise:
      return "additive_noise";
    case GeneratorKind::kSmoothedBootstrap:
      return "smoothed_bootstrap";
    case GeneratorKind::kGaussianMle:
      return "gaussian_mle";
    case GeneratorKind::kClosedFormScenario:
      return "closed_form_scenario";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (auto kind : {GeneratorKind::kAdditiveNoise, GeneratorKind::kSmoothedBootstrap,
                    GeneratorKind::kGaussianMle, GeneratorKind::kClosedFormScenario}) {
    if (to_string(kind) == name) return kind;
  }
  throw ConfigError("unknown generator kind '" + std::string(name) + "'");
}

void validate(const GeneratorSpec& spec) {
  if (spec.n_syn == 0) throw ParameterError("generator n_syn must be >= 1");
  if (!std::isfinite(spec.knob)) throw ParameterError("generator knob must be finite");
  switch (spec.kind) {
    case GeneratorKind::kAdditiveNoise:
      if (spec.knob < 0.0) throw ParameterError("additive noise stddev must be >= 0");
      break;
    case GeneratorKind::kSmoothedBootstrap:
      if (!(spec.knob > 0.0)) throw ParameterError("bootstrap bandwidth must be > 0");
      break;
    default:
      break;
  }
}

data::Dataset generate(const GeneratorSpec& spec, const data::Dataset& d_mem,
                       numcore::SeededRng& rng) {
  validate(spec);
  if (d_mem.empty()) throw SizeError("generator training set is empty");
  numcore::RealMatrix values;
  switch (spec.kind) {
    case GeneratorKind::kAdditiveNoise:
    case GeneratorKind::kSmoothedBootstrap:
      values = noisy_resample(d_mem, spec.n_syn, spec.knob, rng);
      break;
    case GeneratorKind::kGaussianMle:
      values = gaussian_mle_sample(d_mem, spec.n_syn, rng);
      break;
    case GeneratorKind::kClosedFormScenario:
      if (d_mem.cols() != 1) {
        throw DimensionError("closed_form_scenario generator is one-dimensional");
      }
      values = bimodal_generator_density().sample(spec.n_syn, rng);
      break;
  }
  return d_mem.with_values(std::move(values));
}

}  // namespace synthaudit::generators
