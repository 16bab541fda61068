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

#include "synthaudit/attacks/neighbours.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::attacks {
namespace {

void require_same_width(const data::Dataset& a, const data::Dataset& b, const char* what) {
  if (a.cols() != b.cols()) throw DimensionError(std::string(what) + ": column count mismatch");
}

std::size_t resolve_k(std::optional<std::size_t> k, std::size_t n_syn) {
  const std::size_t value = k.value_or(n_syn);
  if (value < 1 || value > n_syn) {
    throw ParameterError("ganleaks k must lie in [1, " + std::to_string(n_syn) + "], got " +
                         std::to_string(value));
  }
  return value;
}

numcore::RealMatrix subsample(const numcore::RealMatrix& m, std::size_t k,
                              numcore::SeededRng& rng) {
  if (k == m.rows()) return m;
  auto idx = rng.sample_without_replacement(m.rows(), k);
  return m.select_rows(idx);
}

}  // namespace

std::vector<double> nearest_distances(const numcore::RealMatrix& points,
                                      const numcore::RealMatrix& queries) {
  if (points.empty()) throw SizeError("nearest distance needs at least one point");
  if (points.cols() != queries.cols()) throw DimensionError("nearest distance width mismatch");
  std::vector<double> out(queries.rows());
  for (std::size_t q = 0; q < queries.rows(); ++q) {
    double best = std::numeric_limits<double>::infinity();
    const auto x = queries.row(q);
    for (std::size_t p = 0; p < points.rows(); ++p) {
      best = std::min(best, numcore::squared_distance(points.row(p), x));
    }
    out[q] = std::sqrt(best);
  }
  return out;
}

double default_mc_epsilon(const numcore::RealMatrix& syn) {
  std::vector<double> nearest;
  nearest.reserve(syn.rows());
  for (std::size_t i = 0; i < syn.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < syn.rows(); ++j) {
      const double d2 = numcore::squared_distance(syn.row(i), syn.row(j));
      if (d2 > 0.0) best = std::min(best, d2);
    }
    if (std::isfinite(best)) nearest.push_back(std::sqrt(best));
  }
  return nearest.empty() ? 1.0 : numcore::median(nearest);
}

PcaProjection pca_project(const numcore::RealMatrix& fit_on, const numcore::RealMatrix& other,
                          std::size_t components) {
  const std::size_t d = fit_on.cols();
  if (components == 0 || components > d) {
    throw ParameterError("pca components must lie in [1, " + std::to_string(d) + "]");
  }
  if (other.cols() != d) throw DimensionError("pca width mismatch");
  if (fit_on.rows() == 0) throw SizeError("pca needs at least one row");
  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto di = static_cast<Eigen::Index>(d);
  const RowMatrix a =
      Eigen::Map<const RowMatrix>(fit_on.values().data(), static_cast<Eigen::Index>(fit_on.rows()), di);
  const RowMatrix b =
      Eigen::Map<const RowMatrix>(other.values().data(), static_cast<Eigen::Index>(other.rows()), di);
  const Eigen::RowVectorXd mean = a.colwise().mean();
  const RowMatrix centred = a.rowwise() - mean;
  const Eigen::MatrixXd cov = centred.transpose() * centred / static_cast<double>(fit_on.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  // Eigenvalues come out ascending; take the trailing columns.
  const auto k = static_cast<Eigen::Index>(components);
  const Eigen::MatrixXd axes = eig.eigenvectors().rightCols(k).rowwise().reverse();
  auto project = [&](const RowMatrix& m) {
    const RowMatrix proj = (m.rowwise() - mean) * axes;
    return numcore::RealMatrix(static_cast<std::size_t>(proj.rows()), components,
                               std::vector<double>(proj.data(), proj.data() + proj.size()));
  };
  return {project(a), project(b)};
}

AttackScores mc_score(const data::Dataset& d_syn, const data::Dataset& d_test,
                      const McConfig& config) {
  if (d_syn.empty()) throw SizeError("mc: synthetic set is empty");
  require_same_width(d_syn, d_test, "mc");
  numcore::RealMatrix syn = d_syn.values();
  numcore::RealMatrix test = d_test.values();
  if (config.pca_components > 0) {
    auto proj = pca_project(syn, test, config.pca_components);
    syn = std::move(proj.fit_on);
    test = std::move(proj.other);
  }
  double eps = 0.0;
  if (config.epsilon) {
    eps = *config.epsilon;
    if (!(eps > 0.0) || std::isnan(eps)) throw ParameterError("mc epsilon must be > 0");
  } else {
    eps = default_mc_epsilon(syn);
  }
  const double eps2 = eps * eps;
  const double inv_n = 1.0 / static_cast<double>(syn.rows());
  AttackScores out{"mc", std::vector<double>(test.rows(), 0.0),
                   {{"epsilon", eps},
                    {"epsilon_source", config.epsilon ? "config" : "median_nn_distance"},
                    {"pca_components", config.pca_components}}};
  for (std::size_t i = 0; i < test.rows(); ++i) {
    std::size_t count = 0;
    for (std::size_t s = 0; s < syn.rows(); ++s) {
      if (numcore::squared_distance(syn.row(s), test.row(i)) < eps2) ++count;
    }
    out.scores[i] = static_cast<double>(count) * inv_n;
  }
  return out;
}

AttackScores ganleaks0(const data::Dataset& d_syn, const data::Dataset& d_test,
                       std::optional<std::size_t> k, numcore::SeededRng& rng) {
  if (d_syn.empty()) throw SizeError("ganleaks0: synthetic set is empty");
  require_same_width(d_syn, d_test, "ganleaks0");
  const std::size_t kk = resolve_k(k, d_syn.rows());
  auto dist = nearest_distances(subsample(d_syn.values(), kk, rng), d_test.values());
  for (auto& v : dist) v = -v;
  return {"ganleaks0", std::move(dist), {{"k", kk}}};
}

AttackScores ganleaks_cal_from(const data::Dataset& d_syn, const data::Dataset& reference_syn,
                               const data::Dataset& d_test, std::optional<std::size_t> k,
                               numcore::SeededRng& rng) {
  if (d_syn.empty()) throw SizeError("ganleaks_cal: synthetic set is empty");
  if (reference_syn.empty()) throw SizeError("ganleaks_cal: reference output is empty");
  require_same_width(d_syn, d_test, "ganleaks_cal");
  require_same_width(reference_syn, d_test, "ganleaks_cal");
  const std::size_t kk = resolve_k(k, d_syn.rows());
  const auto syn_dist = nearest_distances(subsample(d_syn.values(), kk, rng), d_test.values());
  const auto ref_dist = nearest_distances(reference_syn.values(), d_test.values());
  AttackScores out{"ganleaks_cal", std::vector<double>(d_test.rows()), {{"k", kk}}};
  for (std::size_t i = 0; i < out.scores.size(); ++i) out.scores[i] = ref_dist[i] - syn_dist[i];
  return out;
}

AttackScores ganleaks_cal(const data::Dataset& d_syn, const data::Dataset& d_ref,
                          const data::Dataset& d_test, std::optional<std::size_t> k,
                          const generators::GeneratorSpec& reference_generator,
                          numcore::SeededRng& rng) {
  if (d_syn.empty()) throw SizeError("ganleaks_cal: synthetic set is empty");
  if (d_ref.empty()) throw SizeError("ganleaks_cal: reference set is empty");
  const std::size_t kk = resolve_k(k, d_syn.rows());
  auto spec = reference_generator;
  spec.n_syn = kk;
  const auto reference_syn = generators::generate(spec, d_ref, rng);
  auto out = ganleaks_cal_from(d_syn, reference_syn, d_test, kk, rng);
  out.metadata["reference_generator"] = {{"kind", generators::to_string(spec.kind)},
                                         {"knob", spec.knob},
                                         {"n_syn", spec.n_syn}};
  return out;
}

}  // namespace synthaudit::attacks
