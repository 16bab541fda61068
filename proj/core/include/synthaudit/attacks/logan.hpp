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

#ifndef SYNTHAUDIT_ATTACKS_LOGAN_HPP_
#define SYNTHAUDIT_ATTACKS_LOGAN_HPP_

#include <cstddef>

#include <nlohmann/json.hpp>

#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::attacks {

// Networks have two tanh hidden layers of width `hidden`.
struct LoganConfig {
  std::size_t hidden = 32;
  std::size_t epochs = 200;
  std::size_t batch = 50;
  double learning_rate = 1e-3;
  std::size_t noise_dim = 8;  // generator input width, LOGAN 0 only

  void validate() const;
  nlohmann::json to_json() const;
};

// Trains a GAN on d_syn; scores are discriminator logits on d_test.
AttackScores logan0(const data::Dataset& d_syn, const data::Dataset& d_test,
                    const LoganConfig& config, numcore::SeededRng& rng);

// Trains a classifier separating d_syn (label 1) from d_ref (label 0);
// scores are its logits on d_test.
AttackScores logan_d1(const data::Dataset& d_syn, const data::Dataset& d_ref,
                      const data::Dataset& d_test, const LoganConfig& config,
                      numcore::SeededRng& rng);

}  // namespace synthaudit::attacks

#endif  // SYNTHAUDIT_ATTACKS_LOGAN_HPP_
