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

#include "synthaudit/generators/scenario.hpp"

#include <cmath>
#include <numbers>

#include "synthaudit/error.hpp"

namespace synthaudit::generators {
namespace {

data::Dataset as_dataset(numcore::RealMatrix values) {
  const std::size_t d = values.cols();
  return data::Dataset(data::Schema::continuous(d), std::move(values));
}

}  // namespace

density::ClosedFormDensity bimodal_population_density() {
  return density::ClosedFormDensity::standard_normal(1);
}

density::ClosedFormDensity bimodal_generator_density() {
  return density::ClosedFormDensity({{0.5, {0.0}, {1.0}}, {0.5, {4.0}, {0.2}}});
}

BimodalScenario bimodal_scenario(std::size_t n_mem, std::size_t n_syn,
                              numcore::SeededRng& rng) {
  if (n_mem == 0 || n_syn == 0) throw SizeError("scenario sizes must be >= 1");
  auto p_r = bimodal_population_density();
  auto p_g = bimodal_generator_density();
  auto d_mem = as_dataset(p_r.sample(n_mem, rng));
  auto d_syn = as_dataset(p_g.sample(n_syn, rng));
  return {std::move(d_mem), std::move(d_syn), std::move(p_r), std::move(p_g)};
}

density::ClosedFormDensity gauss_mixture_density(std::size_t dim) {
  if (dim == 0) throw DimensionError("mixture needs dim >= 1");
  std::vector<density::GaussianComponent> comps;
  for (int k = 0; k < 3; ++k) {
    const double angle = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
    std::vector<double> mean(dim, 0.0);
    mean[0] = 2.5 * std::cos(angle);
    if (dim > 1) mean[1] = 2.5 * std::sin(angle);
    comps.push_back({1.0 / 3.0, mean, std::vector<double>(dim, 1.0)});
  }
  // Exact thirds do not sum to 1 in floating point; fold the residue in.
  comps.back().weight = 1.0 - 2.0 / 3.0;
  return density::ClosedFormDensity(std::move(comps));
}

data::Dataset gauss_mixture_population(std::size_t n, std::size_t dim,
                                       numcore::SeededRng& rng) {
  return as_dataset(gauss_mixture_density(dim).sample(n, rng));
}

density::ClosedFormDensity minority_mixture_density(std::size_t dim,
                                                    double minority_fraction) {
  if (dim == 0) throw DimensionError("mixture needs dim >= 1");
  if (!(minority_fraction > 0.0 && minority_fraction < 1.0)) {
    throw ParameterError("minority fraction must lie in (0, 1)");
  }
  std::vector<double> minority_mean(dim, 0.0);
  minority_mean[0] = 5.0;
  if (dim > 1) minority_mean[1] = 5.0;
  return density::ClosedFormDensity(
      {{1.0 - minority_fraction, std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0)},
       {minority_fraction, minority_mean, std::vector<double>(dim, 1.0)}});
}

data::Dataset minority_mixture_population(std::size_t n, std::size_t dim,
                                          double minority_fraction,
                                          numcore::SeededRng& rng) {
  return as_dataset(minority_mixture_density(dim, minority_fraction).sample(n, rng));
}

}  // namespace synthaudit::generators
