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

#include "synthaudit/numcore/adam.hpp"

#include <cmath>
#include <string>

#include "synthaudit/error.hpp"

namespace synthaudit::numcore {

AdamState::AdamState(std::size_t num_params, AdamConfig config)
    : config_(config),
      first_moment_(num_params, 0.0),
      second_moment_(num_params, 0.0) {
  if (!(config.learning_rate > 0.0)) {
    throw ParameterError("Adam learning rate must be positive");
  }
}

void AdamState::apply(std::span<double> params, std::span<const double> grads) {
  if (params.size() != grads.size() || params.size() != first_moment_.size()) {
    throw DimensionError("adam_step: params " + std::to_string(params.size()) +
                         ", grads " + std::to_string(grads.size()) +
                         ", state " + std::to_string(first_moment_.size()));
  }
  ++step_;
  const double t = static_cast<double>(step_);
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  const double correction1 = 1.0 - std::pow(b1, t);
  const double correction2 = 1.0 - std::pow(b2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    first_moment_[i] = b1 * first_moment_[i] + (1.0 - b1) * grads[i];
    second_moment_[i] = b2 * second_moment_[i] + (1.0 - b2) * grads[i] * grads[i];
    const double m_hat = first_moment_[i] / correction1;
    const double v_hat = second_moment_[i] / correction2;
    params[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
  }
}

std::vector<double> adam_step(std::span<const double> params,
                              std::span<const double> grads, AdamState& state) {
  std::vector<double> updated(params.begin(), params.end());
  state.apply(updated, grads);
  return updated;
}

}  // namespace synthaudit::numcore
