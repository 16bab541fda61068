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

#ifndef SYNTHAUDIT_NUMCORE_ADAM_HPP_
#define SYNTHAUDIT_NUMCORE_ADAM_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace synthaudit::numcore {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Moment accumulators for one parameter vector.
class AdamState {
 public:
  AdamState(std::size_t num_params, AdamConfig config);

  const AdamConfig& config() const noexcept { return config_; }
  std::uint64_t step_count() const noexcept { return step_; }
  std::size_t size() const noexcept { return first_moment_.size(); }
  std::span<const double> first_moment() const noexcept { return first_moment_; }
  std::span<const double> second_moment() const noexcept { return second_moment_; }

  // Bias-corrected Adam update of `params` in place.
  void apply(std::span<double> params, std::span<const double> grads);

 private:
  AdamConfig config_;
  std::uint64_t step_ = 0;
  std::vector<double> first_moment_;
  std::vector<double> second_moment_;
};

std::vector<double> adam_step(std::span<const double> params,
                              std::span<const double> grads, AdamState& state);

}  // namespace synthaudit::numcore

#endif  // SYNTHAUDIT_NUMCORE_ADAM_HPP_
