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

#ifndef SYNTHAUDIT_ATTACKS_MLP_HPP_
#define SYNTHAUDIT_ATTACKS_MLP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "synthaudit/numcore/gradcheck.hpp"
#include "synthaudit/numcore/matrix.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::attacks {

// Fully connected network with tanh hidden layers and a linear output.
// Parameters are stored layer by layer as a row-major weight matrix
// (out x in) followed by the bias vector.
class Mlp {
 public:
  // Glorot-uniform weights, zero biases.
  Mlp(std::size_t input, std::vector<std::size_t> hidden, std::size_t output,
      numcore::SeededRng& rng);

  std::size_t input_dim() const noexcept { return widths_.front(); }
  std::size_t output_dim() const noexcept { return widths_.back(); }
  std::size_t num_parameters() const noexcept { return params_.size(); }

  std::span<const double> parameters() const noexcept { return params_; }
  std::span<double> mutable_parameters() noexcept { return params_; }
  void set_parameters(std::span<const double> params);

  // rows x input -> rows x output.
  numcore::RealMatrix forward(const numcore::RealMatrix& x) const;

  struct Gradients {
    std::vector<double> parameters;
    numcore::RealMatrix input;  // rows x input
  };
  // Reverse pass for an upstream gradient with the shape of forward(x).
  Gradients backward(const numcore::RealMatrix& x,
                     const numcore::RealMatrix& output_grad) const;

  // Mean binary cross-entropy of the single-logit output against 0/1
  // targets, with its parameter gradient.
  numcore::LossAndGradient classifier_loss(const numcore::RealMatrix& x,
                                           std::span<const double> targets) const;

 private:
  std::vector<std::size_t> widths_;
  std::vector<double> params_;
};

struct BceResult {
  double loss = 0.0;
  std::vector<double> logit_grad;
};

// Mean over rows of softplus(o) - t * o, and its derivative per logit.
BceResult bce_with_logits(std::span<const double> logits, std::span<const double> targets);

}  // namespace synthaudit::attacks

#endif  // SYNTHAUDIT_ATTACKS_MLP_HPP_
