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

#ifndef SYNTHAUDIT_DENSITY_FLOW_HPP_
#define SYNTHAUDIT_DENSITY_FLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/density/density_model.hpp"
#include "synthaudit/numcore/gradcheck.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::density {

namespace detail {

// Layout of one block-masked layer inside the flat parameter vector.
struct FlowLayerShape {
  std::size_t in_block;
  std::size_t out_block;
  bool activation;
  std::size_t weight_offset;
  std::size_t weight_count;
  std::size_t bias_offset;
  std::size_t act_offset;
};

}  // namespace detail

// Defaults follow the block neural autoregressive flow settings used for
// tabular density estimation: 5 stacked flows of 3 hidden masked layers,
// 32 hidden units per input dimension, batch 50, Adam lr 0.01, 50 epochs.
struct FlowConfig {
  std::size_t flows = 5;
  std::size_t layers = 3;
  std::size_t hidden = 32;
  std::size_t batch = 50;
  double learning_rate = 0.01;
  std::size_t epochs = 50;
  // Std of the random off-diagonal weights at initialization.
  double off_diagonal_init = 0.01;
  // Half-width of the (block-centred) hidden biases at initialization.
  double bias_init = 2.0;
  // flow_fit returns the bias-corrected exponential moving average of the
  // Adam iterates with this decay per step; 0 returns the last iterate.
  double polyak = 0.998;

  friend bool operator==(const FlowConfig&, const FlowConfig&) = default;
};

// Throws ParameterError on zero sizes or non-positive learning rate.
void validate(const FlowConfig& config);
nlohmann::json to_json(const FlowConfig& config);
FlowConfig flow_config_from_json(const nlohmann::json& j);

/// Block neural autoregressive flow x -> z with a standard-normal base.
///
/// Each flow is a stack of block-masked linear maps. The weight matrix of a
/// layer is block lower-triangular over input dimensions; diagonal blocks
/// are elementwise exp(raw) / fan_in, hence strictly positive, and
/// off-diagonal blocks are unconstrained. Between layers every unit applies
/// the gated activation a(u) = u + c * tanh(u) with c = exp(theta) - 1 > -1,
/// which is strictly increasing and unbounded, so each flow is a bijection
/// of R^d whose Jacobian is lower-triangular with positive diagonal.
/// Flows are composed without permutations, so z_i depends on x_1..x_i only.
///
/// The diagonal derivatives dz_i/dx_i are propagated alongside the forward
/// pass through the diagonal blocks, so the log-determinant is exact and
/// never formed from a dense Jacobian. Gradients of the log-likelihood are
/// computed by an explicit reverse pass over the cached forward quantities.
///
/// At initialization raw diagonal weights and every theta are zero and the
/// hidden biases are centred per block, so each flow is the identity up to
/// the small off-diagonal weights and log|det J| = 0.
class FlowModel final : public DensityModel {
 public:
  FlowModel(std::size_t dim, FlowConfig config, numcore::SeededRng& rng);
  // Throws DimensionError if `params` has the wrong length.
  FlowModel(std::size_t dim, FlowConfig config, std::vector<double> params,
            std::uint64_t seed);

  std::size_t dim() const override { return dim_; }
  const FlowConfig& config() const noexcept { return config_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t num_parameters() const noexcept { return params_.size(); }
  std::span<const double> parameters() const noexcept { return params_; }
  void set_parameters(std::vector<double> params);
  const std::vector<double>& loss_trace() const noexcept { return loss_trace_; }

  double log_density(std::span<const double> x) const override;
  std::vector<double> log_density_rows(const numcore::RealMatrix& x) const override;

  struct Transformed {
    std::vector<double> z;
    double log_det = 0.0;
  };
  Transformed forward(std::span<const double> x) const;

  // Mean negative log-likelihood over the rows of `batch` and its exact
  // gradient with respect to parameters().
  numcore::LossAndGradient loss_and_gradient(const numcore::RealMatrix& batch) const;
  double loss(const numcore::RealMatrix& batch) const;
  double loss_at(std::span<const double> params, const numcore::RealMatrix& batch) const;

  nlohmann::json to_json() const;
  static FlowModel from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static FlowModel load(const std::filesystem::path& path);

 private:
  friend FlowModel flow_fit(const numcore::RealMatrix&, const FlowConfig&,
                            numcore::SeededRng&);

  void build_shapes();
  void initialize(numcore::SeededRng& rng);

  std::size_t dim_;
  FlowConfig config_;
  std::uint64_t seed_ = 0;
  std::vector<detail::FlowLayerShape> shapes_;  // flows * (layers + 1), flow-major
  std::vector<double> params_;
  std::vector<double> loss_trace_;
};

// Mini-batch Adam on the mean negative log-likelihood for exactly
// config.epochs epochs. The loss trace records the per-epoch mean loss of the
// raw iterates. Throws SizeError if rows < batch and
// TrainingDivergedError if a loss or gradient turns non-finite.
FlowModel flow_fit(const numcore::RealMatrix& data, const FlowConfig& config,
                   numcore::SeededRng& rng);
FlowModel flow_fit(const data::Dataset& data, const FlowConfig& config,
                   numcore::SeededRng& rng);

}  // namespace synthaudit::density

#endif  // SYNTHAUDIT_DENSITY_FLOW_HPP_
