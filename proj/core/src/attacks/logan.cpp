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

#include "synthaudit/attacks/logan.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "synthaudit/attacks/mlp.hpp"
#include "synthaudit/error.hpp"
#include "synthaudit/numcore/adam.hpp"

namespace synthaudit::attacks {
namespace {

void require_same_width(const data::Dataset& a, const data::Dataset& b, const char* what) {
  if (a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": column count mismatch");
  }
}

numcore::RealMatrix gaussian_noise(std::size_t rows, std::size_t cols,
                                   numcore::SeededRng& rng) {
  std::vector<double> v(rows * cols);
  for (auto& x : v) x = rng.normal();
  return numcore::RealMatrix(rows, cols, std::move(v));
}

void require_finite(double loss, std::size_t step) {
  if (!std::isfinite(loss)) throw TrainingDivergedError(step, "non-finite loss");
}

AttackScores logits_as_scores(const char* name, const Mlp& net, const data::Dataset& d_test,
                              const LoganConfig& config) {
  const auto logits = net.forward(d_test.values());
  AttackScores out{name, std::vector<double>(logits.values().begin(), logits.values().end()),
                   {{"network", config.to_json()}}};
  check_finite(out);
  return out;
}

}  // namespace

void LoganConfig::validate() const {
  if (hidden == 0) throw ParameterError("logan hidden width must be >= 1");
  if (batch == 0) throw ParameterError("logan batch must be >= 1");
  if (noise_dim == 0) throw ParameterError("logan noise_dim must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ParameterError("logan learning rate must be > 0");
  }
}

nlohmann::json LoganConfig::to_json() const {
  return {{"hidden_layers", 2}, {"hidden", hidden}, {"activation", "tanh"},
          {"epochs", epochs},   {"batch", batch},   {"learning_rate", learning_rate},
          {"noise_dim", noise_dim}};
}

AttackScores logan0(const data::Dataset& d_syn, const data::Dataset& d_test,
                    const LoganConfig& config, numcore::SeededRng& rng) {
  config.validate();
  if (d_syn.empty()) throw SizeError("logan0: synthetic set is empty");
  require_same_width(d_syn, d_test, "logan0");
  const std::size_t d = d_syn.cols();
  const std::size_t n = d_syn.rows();
  const std::size_t batch = std::min(config.batch, n);

  Mlp gen(config.noise_dim, {config.hidden, config.hidden}, d, rng);
  Mlp disc(d, {config.hidden, config.hidden}, 1, rng);
  const numcore::AdamConfig adam_cfg{config.learning_rate};
  numcore::AdamState gen_opt(gen.num_parameters(), adam_cfg);
  numcore::AdamState disc_opt(disc.num_parameters(), adam_cfg);

  std::size_t step = 0;
  try {
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
      const auto order = rng.permutation(n);
      for (std::size_t start = 0; start < n; start += batch, ++step) {
        const std::size_t b = std::min(batch, n - start);
        const std::span<const std::size_t> idx(order.data() + start, b);
        const auto real = d_syn.values().select_rows(idx);
        const auto noise = gaussian_noise(b, config.noise_dim, rng);
        const auto fake = gen.forward(noise);

        // Discriminator: real -> 1, fake -> 0, each half averaged.
        const auto real_loss = disc.classifier_loss(real, std::vector<double>(b, 1.0));
        const auto fake_loss = disc.classifier_loss(fake, std::vector<double>(b, 0.0));
        require_finite(real_loss.loss + fake_loss.loss, step);
        std::vector<double> disc_grad(real_loss.gradient);
        for (std::size_t k = 0; k < disc_grad.size(); ++k) disc_grad[k] += fake_loss.gradient[k];
        disc_opt.apply(disc.mutable_parameters(), disc_grad);

        // Generator: non-saturating loss, fake -> 1.
        const auto logits = disc.forward(fake);
        auto bce = bce_with_logits(logits.values(), std::vector<double>(b, 1.0));
        require_finite(bce.loss, step);
        const numcore::RealMatrix upstream(b, 1, std::move(bce.logit_grad));
        const auto through_disc = disc.backward(fake, upstream);
        const auto gen_grad = gen.backward(noise, through_disc.input);
        gen_opt.apply(gen.mutable_parameters(), gen_grad.parameters);
      }
    }
  } catch (const NumericError& e) {
    throw TrainingDivergedError(step, std::string("logan0: ") + e.what());
  }
  return logits_as_scores("logan0", disc, d_test, config);
}

AttackScores logan_d1(const data::Dataset& d_syn, const data::Dataset& d_ref,
                      const data::Dataset& d_test, const LoganConfig& config,
                      numcore::SeededRng& rng) {
  config.validate();
  if (d_syn.empty()) throw SizeError("logan_d1: synthetic set is empty");
  if (d_ref.empty()) throw SizeError("logan_d1: reference set is empty");
  require_same_width(d_syn, d_ref, "logan_d1");
  require_same_width(d_syn, d_test, "logan_d1");

  const auto pooled = numcore::vstack(d_syn.values(), d_ref.values());
  std::vector<double> labels(pooled.rows(), 0.0);
  std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(d_syn.rows()), 1.0);
  const std::size_t n = pooled.rows();
  const std::size_t batch = std::min(config.batch, n);

  Mlp net(d_syn.cols(), {config.hidden, config.hidden}, 1, rng);
  numcore::AdamState opt(net.num_parameters(), numcore::AdamConfig{config.learning_rate});
  std::size_t step = 0;
  try {
    std::vector<double> targets;
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
      const auto order = rng.permutation(n);
      for (std::size_t start = 0; start < n; start += batch, ++step) {
        const std::size_t b = std::min(batch, n - start);
        const std::span<const std::size_t> idx(order.data() + start, b);
        targets.clear();
        for (auto i : idx) targets.push_back(labels[i]);
        const auto lg = net.classifier_loss(pooled.select_rows(idx), targets);
        require_finite(lg.loss, step);
        opt.apply(net.mutable_parameters(), lg.gradient);
      }
    }
  } catch (const NumericError& e) {
    throw TrainingDivergedError(step, std::string("logan_d1: ") + e.what());
  }
  return logits_as_scores("logan_d1", net, d_test, config);
}

}  // namespace synthaudit::attacks
