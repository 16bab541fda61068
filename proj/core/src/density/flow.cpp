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

#include "synthaudit/density/flow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include <Eigen/Dense>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/adam.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::density {
namespace {

using Eigen::ArrayXXd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using detail::FlowLayerShape;

constexpr std::size_t kEvalChunk = 2048;

struct LayerCache {
  MatrixXd weights;
  MatrixXd diag_weights;
  MatrixXd h_in;
  MatrixXd g_in;
  ArrayXXd tanh_u;
  ArrayXXd act_grad;
  ArrayXXd diag_pre;  // diag_weights * g_in
  VectorXd gate;      // c = exp(theta) - 1
};

void build_weights(std::size_t dim, const FlowLayerShape& s,
                   std::span<const double> params, MatrixXd& w, MatrixXd& wd) {
  const auto rows = static_cast<Eigen::Index>(dim * s.out_block);
  const auto cols = static_cast<Eigen::Index>(dim * s.in_block);
  w.setZero(rows, cols);
  wd.setZero(rows, cols);
  const double inv_fan = 1.0 / static_cast<double>(s.in_block);
  std::size_t k = s.weight_offset;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / s.out_block;
    const auto diag_begin = static_cast<Eigen::Index>(i * s.in_block);
    const auto diag_end = static_cast<Eigen::Index>((i + 1) * s.in_block);
    for (Eigen::Index c = 0; c < diag_begin; ++c) w(r, c) = params[k++];
    for (Eigen::Index c = diag_begin; c < diag_end; ++c) {
      const double v = std::exp(params[k++]) * inv_fan;
      w(r, c) = v;
      wd(r, c) = v;
    }
  }
}

// Runs every flow on the columns of x. z receives the output, log_det the
// per-column log|det J|. Caches are filled when non-null.
void run_forward(std::size_t dim, std::size_t layers_per_flow,
                 const std::vector<FlowLayerShape>& shapes,
                 std::span<const double> params, const MatrixXd& x, MatrixXd& z,
                 VectorXd& log_det, std::vector<LayerCache>* caches) {
  const Eigen::Index batch = x.cols();
  MatrixXd h = x;
  log_det.setZero(batch);
  if (caches) caches->resize(shapes.size());
  LayerCache scratch;
  const std::size_t flows = shapes.size() / layers_per_flow;
  for (std::size_t f = 0; f < flows; ++f) {
    MatrixXd g = MatrixXd::Ones(static_cast<Eigen::Index>(dim), batch);
    for (std::size_t l = 0; l < layers_per_flow; ++l) {
      const std::size_t idx = f * layers_per_flow + l;
      const auto& s = shapes[idx];
      LayerCache& lc = caches ? (*caches)[idx] : scratch;
      build_weights(dim, s, params, lc.weights, lc.diag_weights);
      const auto units = static_cast<Eigen::Index>(dim * s.out_block);
      Eigen::Map<const VectorXd> bias(params.data() + s.bias_offset, units);
      MatrixXd u = lc.weights * h;
      u.colwise() += bias;
      ArrayXXd pre = (lc.diag_weights * g).array();
      if (caches) {
        lc.h_in = h;
        lc.g_in = g;
      }
      if (s.activation) {
        Eigen::Map<const VectorXd> theta(params.data() + s.act_offset, units);
        VectorXd gate = theta.array().exp() - 1.0;
        ArrayXXd t = u.array().tanh();
        ArrayXXd act_grad = 1.0 + (1.0 - t.square()).colwise() * gate.array();
        h = (u.array() + t.colwise() * gate.array()).matrix();
        g = (act_grad * pre).matrix();
        if (caches) {
          lc.tanh_u = std::move(t);
          lc.act_grad = std::move(act_grad);
          lc.gate = std::move(gate);
        }
      } else {
        h = std::move(u);
        g = pre.matrix();
      }
      if (caches) lc.diag_pre = std::move(pre);
    }
    log_det += g.array().log().colwise().sum().matrix().transpose();
  }
  z = std::move(h);
}

MatrixXd to_columns(const numcore::RealMatrix& rows, std::size_t begin, std::size_t end) {
  const auto d = static_cast<Eigen::Index>(rows.cols());
  Eigen::Map<const MatrixXd> all(rows.values().data(), d,
                                 static_cast<Eigen::Index>(rows.rows()));
  return all.middleCols(static_cast<Eigen::Index>(begin),
                        static_cast<Eigen::Index>(end - begin));
}

VectorXd log_likelihood(const MatrixXd& z, const VectorXd& log_det) {
  const double d = static_cast<double>(z.rows());
  return (-0.5 * z.colwise().squaredNorm().array().transpose() - d * numcore::kLogSqrt2Pi)
             .matrix() +
         log_det;
}

}  // namespace

void validate(const FlowConfig& c) {
  if (c.flows == 0 || c.layers == 0 || c.hidden == 0) {
    throw ParameterError("flow needs flows, layers and hidden >= 1");
  }
  if (c.batch == 0) {
    throw ParameterError("flow batch size must be positive");
  }
  if (!(c.learning_rate > 0.0)) throw ParameterError("flow learning rate must be positive");
  if (!(c.off_diagonal_init >= 0.0) || !(c.bias_init >= 0.0)) {
    throw ParameterError("flow init scales must be non-negative");
  }
  if (!(c.polyak >= 0.0 && c.polyak < 1.0)) {
    throw ParameterError("flow polyak decay must lie in [0, 1)");
  }
}

nlohmann::json to_json(const FlowConfig& c) {
  return {{"flows", c.flows},
          {"layers", c.layers},
          {"hidden", c.hidden},
          {"batch", c.batch},
          {"learning_rate", c.learning_rate},
          {"epochs", c.epochs},
          {"off_diagonal_init", c.off_diagonal_init},
          {"bias_init", c.bias_init},
          {"polyak", c.polyak}};
}

FlowConfig flow_config_from_json(const nlohmann::json& j) {
  FlowConfig c;
  c.flows = j.at("flows").get<std::size_t>();
  c.layers = j.at("layers").get<std::size_t>();
  c.hidden = j.at("hidden").get<std::size_t>();
  c.batch = j.at("batch").get<std::size_t>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.epochs = j.at("epochs").get<std::size_t>();
  c.off_diagonal_init = j.at("off_diagonal_init").get<double>();
  c.bias_init = j.at("bias_init").get<double>();
  c.polyak = j.value("polyak", c.polyak);
  return c;
}

FlowModel::FlowModel(std::size_t dim, FlowConfig config, numcore::SeededRng& rng)
    : dim_(dim), config_(config), seed_(rng.seed()) {
  if (dim_ == 0) throw DimensionError("flow needs dim >= 1");
  validate(config_);
  build_shapes();
  initialize(rng);
}

FlowModel::FlowModel(std::size_t dim, FlowConfig config, std::vector<double> params,
                     std::uint64_t seed)
    : dim_(dim), config_(config), seed_(seed) {
  if (dim_ == 0) throw DimensionError("flow needs dim >= 1");
  validate(config_);
  build_shapes();
  set_parameters(std::move(params));
}

void FlowModel::build_shapes() {
  shapes_.clear();
  std::size_t offset = 0;
  const std::size_t tri = dim_ * (dim_ + 1) / 2;
  for (std::size_t f = 0; f < config_.flows; ++f) {
    for (std::size_t l = 0; l <= config_.layers; ++l) {
      detail::FlowLayerShape s{};
      s.in_block = (l == 0) ? 1 : config_.hidden;
      s.out_block = (l == config_.layers) ? 1 : config_.hidden;
      s.activation = l != config_.layers;
      s.weight_offset = offset;
      s.weight_count = tri * s.in_block * s.out_block;
      offset += s.weight_count;
      s.bias_offset = offset;
      offset += dim_ * s.out_block;
      s.act_offset = offset;
      if (s.activation) offset += dim_ * s.out_block;
      shapes_.push_back(s);
    }
  }
  params_.assign(offset, 0.0);
}

void FlowModel::initialize(numcore::SeededRng& rng) {
  std::fill(params_.begin(), params_.end(), 0.0);
  for (const auto& s : shapes_) {
    std::size_t k = s.weight_offset;
    for (std::size_t r = 0; r < dim_ * s.out_block; ++r) {
      const std::size_t i = r / s.out_block;
      for (std::size_t c = 0; c < i * s.in_block; ++c) {
        params_[k++] = rng.normal(0.0, config_.off_diagonal_init);
      }
      k += s.in_block;  // diagonal block: raw 0 -> entries 1 / fan_in
    }
    if (!s.activation) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      double* block = params_.data() + s.bias_offset + i * s.out_block;
      double mean = 0.0;
      for (std::size_t u = 0; u < s.out_block; ++u) {
        block[u] = rng.uniform(-config_.bias_init, config_.bias_init);
        mean += block[u];
      }
      mean /= static_cast<double>(s.out_block);
      for (std::size_t u = 0; u < s.out_block; ++u) block[u] -= mean;
    }
  }
}

void FlowModel::set_parameters(std::vector<double> params) {
  if (params.size() != params_.size()) {
    throw DimensionError("flow expects " + std::to_string(params_.size()) +
                         " parameters, got " + std::to_string(params.size()));
  }
  params_ = std::move(params);
}

FlowModel::Transformed FlowModel::forward(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw DimensionError("expected " + std::to_string(dim_) + "-d point, got " +
                         std::to_string(x.size()));
  }
  MatrixXd in = Eigen::Map<const VectorXd>(x.data(), static_cast<Eigen::Index>(dim_));
  MatrixXd z;
  VectorXd log_det;
  run_forward(dim_, config_.layers + 1, shapes_, params_, in, z, log_det, nullptr);
  Transformed out;
  out.z.assign(z.data(), z.data() + dim_);
  out.log_det = log_det(0);
  return out;
}

double FlowModel::log_density(std::span<const double> x) const {
  const auto t = forward(x);
  double lp = t.log_det;
  for (double zi : t.z) lp += -0.5 * zi * zi - numcore::kLogSqrt2Pi;
  return lp;
}

std::vector<double> FlowModel::log_density_rows(const numcore::RealMatrix& x) const {
  if (x.cols() != dim_ && !x.empty()) {
    throw DimensionError("expected " + std::to_string(dim_) + " columns, got " +
                         std::to_string(x.cols()));
  }
  std::vector<double> out(x.rows());
  for (std::size_t begin = 0; begin < x.rows(); begin += kEvalChunk) {
    const std::size_t end = std::min(x.rows(), begin + kEvalChunk);
    MatrixXd z;
    VectorXd log_det;
    run_forward(dim_, config_.layers + 1, shapes_, params_, to_columns(x, begin, end), z,
                log_det, nullptr);
    const VectorXd ll = log_likelihood(z, log_det);
    for (std::size_t r = begin; r < end; ++r) out[r] = ll(static_cast<Eigen::Index>(r - begin));
  }
  return out;
}

double FlowModel::loss_at(std::span<const double> params,
                          const numcore::RealMatrix& batch) const {
  if (params.size() != params_.size()) throw DimensionError("flow parameter length mismatch");
  MatrixXd z;
  VectorXd log_det;
  run_forward(dim_, config_.layers + 1, shapes_, params, to_columns(batch, 0, batch.rows()),
              z, log_det, nullptr);
  return -log_likelihood(z, log_det).mean();
}

double FlowModel::loss(const numcore::RealMatrix& batch) const {
  return loss_at(params_, batch);
}

numcore::LossAndGradient FlowModel::loss_and_gradient(
    const numcore::RealMatrix& batch) const {
  if (batch.empty()) throw SizeError("flow loss on an empty batch");
  if (batch.cols() != dim_) throw DimensionError("flow batch has wrong dimension");
  const std::size_t layers_per_flow = config_.layers + 1;
  std::vector<LayerCache> caches;
  MatrixXd z;
  VectorXd log_det;
  run_forward(dim_, layers_per_flow, shapes_, params_, to_columns(batch, 0, batch.rows()), z,
              log_det, &caches);

  const double inv_b = 1.0 / static_cast<double>(batch.rows());
  numcore::LossAndGradient result;
  result.loss = -log_likelihood(z, log_det).mean();
  result.gradient.assign(params_.size(), 0.0);
  auto& grad = result.gradient;

  // d loss / d z for the Gaussian base term.
  MatrixXd dh = z * inv_b;
  for (std::size_t f = shapes_.size() / layers_per_flow; f-- > 0;) {
    // The flow's output diagonal derivative is the last layer's diag_pre.
    ArrayXXd dg = -inv_b / caches[f * layers_per_flow + layers_per_flow - 1].diag_pre;
    for (std::size_t l = layers_per_flow; l-- > 0;) {
      const std::size_t idx = f * layers_per_flow + l;
      const auto& s = shapes_[idx];
      const LayerCache& lc = caches[idx];
      MatrixXd du;
      ArrayXXd dpre;
      if (s.activation) {
        const ArrayXXd sech2 = 1.0 - lc.tanh_u.square();
        const ArrayXXd dact = dg * lc.diag_pre;
        du = (dh.array() * lc.act_grad +
              (dact * (-2.0 * lc.tanh_u * sech2)).colwise() * lc.gate.array())
                 .matrix();
        const VectorXd dgate = (dh.array() * lc.tanh_u + dact * sech2).rowwise().sum().matrix();
        for (Eigen::Index r = 0; r < dgate.size(); ++r) {
          grad[s.act_offset + static_cast<std::size_t>(r)] += dgate(r) * (lc.gate(r) + 1.0);
        }
        dpre = dg * lc.act_grad;
      } else {
        du = dh;
        dpre = dg;
      }
      const MatrixXd dw = du * lc.h_in.transpose();
      const MatrixXd dwd = dpre.matrix() * lc.g_in.transpose();
      std::size_t k = s.weight_offset;
      for (Eigen::Index r = 0; r < dw.rows(); ++r) {
        const std::size_t i = static_cast<std::size_t>(r) / s.out_block;
        const auto diag_begin = static_cast<Eigen::Index>(i * s.in_block);
        const auto diag_end = static_cast<Eigen::Index>((i + 1) * s.in_block);
        for (Eigen::Index c = 0; c < diag_begin; ++c) grad[k++] += dw(r, c);
        for (Eigen::Index c = diag_begin; c < diag_end; ++c) {
          grad[k++] += (dw(r, c) + dwd(r, c)) * lc.weights(r, c);
        }
        grad[s.bias_offset + static_cast<std::size_t>(r)] += du.row(r).sum();
      }
      dh = lc.weights.transpose() * du;
      dg = (lc.diag_weights.transpose() * dpre.matrix()).array();
    }
  }
  return result;
}

nlohmann::json FlowModel::to_json() const {
  return {{"format", "synthaudit.flow"},
          {"version", 1},
          {"dim", dim_},
          {"seed", seed_},
          {"config", density::to_json(config_)},
          {"params", params_},
          {"loss_trace", loss_trace_}};
}

FlowModel FlowModel::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "synthaudit.flow" || j.value("version", 0) != 1) {
    throw ParseError("not a version-1 flow model dump");
  }
  FlowModel model(j.at("dim").get<std::size_t>(), flow_config_from_json(j.at("config")),
                  j.at("params").get<std::vector<double>>(),
                  j.at("seed").get<std::uint64_t>());
  model.loss_trace_ = j.at("loss_trace").get<std::vector<double>>();
  return model;
}

void FlowModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << to_json().dump() << '\n';
}

FlowModel FlowModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("flow model file: ") + e.what());
  }
  return from_json(j);
}

FlowModel flow_fit(const numcore::RealMatrix& data, const FlowConfig& config,
                   numcore::SeededRng& rng) {
  validate(config);
  if (data.empty()) throw SizeError("cannot fit a flow on an empty dataset");
  if (data.rows() < config.batch) {
    throw SizeError("flow batch size " + std::to_string(config.batch) + " exceeds " +
                    std::to_string(data.rows()) + " rows");
  }
  FlowModel model(data.cols(), config, rng);
  numcore::AdamState adam(model.params_.size(),
                          numcore::AdamConfig{config.learning_rate, 0.9, 0.999, 1e-8});
  std::vector<double> average(model.params_.size(), 0.0);
  const double decay = config.polyak;
  std::size_t step = 0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const auto order = rng.permutation(data.rows());
    double total = 0.0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch) {
      const std::size_t end = std::min(order.size(), begin + config.batch);
      const std::span<const std::size_t> idx(order.data() + begin, end - begin);
      auto lg = model.loss_and_gradient(data.select_rows(idx));
      ++step;
      const bool finite =
          std::isfinite(lg.loss) &&
          std::all_of(lg.gradient.begin(), lg.gradient.end(),
                      [](double g) { return std::isfinite(g); });
      if (!finite) throw TrainingDivergedError(step, "flow negative log-likelihood is not finite");
      adam.apply(model.params_, lg.gradient);
      for (std::size_t i = 0; i < average.size(); ++i) {
        average[i] = decay * average[i] + (1.0 - decay) * model.params_[i];
      }
      total += lg.loss * static_cast<double>(idx.size());
    }
    model.loss_trace_.push_back(total / static_cast<double>(data.rows()));
  }
  if (decay > 0.0 && step > 0) {
    const double correction = 1.0 - std::pow(decay, static_cast<double>(step));
    for (std::size_t i = 0; i < average.size(); ++i) model.params_[i] = average[i] / correction;
  }
  return model;
}

FlowModel flow_fit(const data::Dataset& data, const FlowConfig& config,
                   numcore::SeededRng& rng) {
  return flow_fit(data.values(), config, rng);
}

}  // namespace synthaudit::density
