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

#include "synthaudit/attacks/mlp.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "synthaudit/error.hpp"

namespace synthaudit::attacks {
namespace {

using ColMatrix = Eigen::MatrixXd;
using RowMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                              Eigen::RowMajor>>;

// Rows of x become columns.
ColMatrix to_columns(const numcore::RealMatrix& x) {
  return RowMap(x.values().data(), static_cast<Eigen::Index>(x.rows()),
                static_cast<Eigen::Index>(x.cols()))
      .transpose();
}

numcore::RealMatrix from_columns(const ColMatrix& m) {
  std::vector<double> out(static_cast<std::size_t>(m.size()));
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      out.data(), m.cols(), m.rows()) = m.transpose();
  return numcore::RealMatrix(static_cast<std::size_t>(m.cols()),
                             static_cast<std::size_t>(m.rows()), std::move(out));
}

double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Mlp::Mlp(std::size_t input, std::vector<std::size_t> hidden, std::size_t output,
         numcore::SeededRng& rng) {
  if (input == 0 || output == 0) throw DimensionError("mlp needs non-empty input and output");
  widths_.push_back(input);
  for (auto h : hidden) {
    if (h == 0) throw ParameterError("mlp hidden width must be >= 1");
    widths_.push_back(h);
  }
  widths_.push_back(output);
  for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
    const std::size_t in = widths_[l];
    const std::size_t out = widths_[l + 1];
    const double limit = std::sqrt(6.0 / static_cast<double>(in + out));
    for (std::size_t k = 0; k < in * out; ++k) params_.push_back(rng.uniform(-limit, limit));
    params_.insert(params_.end(), out, 0.0);
  }
}

void Mlp::set_parameters(std::span<const double> params) {
  if (params.size() != params_.size()) {
    throw DimensionError("mlp expects " + std::to_string(params_.size()) + " parameters");
  }
  params_.assign(params.begin(), params.end());
}

numcore::RealMatrix Mlp::forward(const numcore::RealMatrix& x) const {
  if (x.cols() != input_dim()) throw DimensionError("mlp input width mismatch");
  ColMatrix a = to_columns(x);
  const double* p = params_.data();
  const std::size_t layers = widths_.size() - 1;
  for (std::size_t l = 0; l < layers; ++l) {
    const auto in = static_cast<Eigen::Index>(widths_[l]);
    const auto out = static_cast<Eigen::Index>(widths_[l + 1]);
    RowMap w(p, out, in);
    Eigen::Map<const Eigen::VectorXd> b(p + out * in, out);
    p += out * in + out;
    ColMatrix z = w * a;
    z.colwise() += b;
    a = (l + 1 < layers) ? ColMatrix(z.array().tanh()) : z;
  }
  return from_columns(a);
}

Mlp::Gradients Mlp::backward(const numcore::RealMatrix& x,
                             const numcore::RealMatrix& output_grad) const {
  if (x.cols() != input_dim()) throw DimensionError("mlp input width mismatch");
  if (output_grad.rows() != x.rows() || output_grad.cols() != output_dim()) {
    throw DimensionError("mlp output gradient shape mismatch");
  }
  const std::size_t layers = widths_.size() - 1;
  std::vector<ColMatrix> acts;
  std::vector<std::size_t> offsets;
  acts.push_back(to_columns(x));
  std::size_t offset = 0;
  for (std::size_t l = 0; l < layers; ++l) {
    const auto in = static_cast<Eigen::Index>(widths_[l]);
    const auto out = static_cast<Eigen::Index>(widths_[l + 1]);
    offsets.push_back(offset);
    RowMap w(params_.data() + offset, out, in);
    Eigen::Map<const Eigen::VectorXd> b(params_.data() + offset + out * in, out);
    offset += static_cast<std::size_t>(out * in + out);
    ColMatrix z = w * acts.back();
    z.colwise() += b;
    acts.push_back((l + 1 < layers) ? ColMatrix(z.array().tanh()) : z);
  }

  Gradients grads{std::vector<double>(params_.size(), 0.0), {}};
  ColMatrix g = to_columns(output_grad);
  for (std::size_t l = layers; l-- > 0;) {
    const auto in = static_cast<Eigen::Index>(widths_[l]);
    const auto out = static_cast<Eigen::Index>(widths_[l + 1]);
    if (l + 1 < layers) g = g.array() * (1.0 - acts[l + 1].array().square());
    double* gp = grads.parameters.data() + offsets[l];
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        gp, out, in) = g * acts[l].transpose();
    Eigen::Map<Eigen::VectorXd>(gp + out * in, out) = g.rowwise().sum();
    g = RowMap(params_.data() + offsets[l], out, in).transpose() * g;
  }
  grads.input = from_columns(g);
  return grads;
}

numcore::LossAndGradient Mlp::classifier_loss(const numcore::RealMatrix& x,
                                              std::span<const double> targets) const {
  if (output_dim() != 1) throw DimensionError("classifier loss needs a single output");
  const auto logits = forward(x);
  auto bce = bce_with_logits(logits.values(), targets);
  const numcore::RealMatrix upstream(x.rows(), 1, std::move(bce.logit_grad));
  return {bce.loss, backward(x, upstream).parameters};
}

BceResult bce_with_logits(std::span<const double> logits, std::span<const double> targets) {
  if (logits.size() != targets.size() || logits.empty()) {
    throw DimensionError("bce: logits and targets must have the same non-zero length");
  }
  const double inv_n = 1.0 / static_cast<double>(logits.size());
  BceResult out;
  out.logit_grad.resize(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out.loss += (softplus(logits[i]) - targets[i] * logits[i]) * inv_n;
    out.logit_grad[i] = (sigmoid(logits[i]) - targets[i]) * inv_n;
  }
  return out;
}

}  // namespace synthaudit::attacks
