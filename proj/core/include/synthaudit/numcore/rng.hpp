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

#ifndef SYNTHAUDIT_NUMCORE_RNG_HPP_
#define SYNTHAUDIT_NUMCORE_RNG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace synthaudit::numcore {

// SplitMix64 finalizer. Used to expand seeds and to derive child seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Child seed for task `index` of a run seeded with `master`. Pure function,
// so parallel tasks get the same streams regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic pseudo-random source: xoshiro256** (Blackman & Vigna),
/// state expanded from the 64-bit seed with SplitMix64.
///
/// Every derived draw (uniform doubles, bounded integers, normals via the
/// Marsaglia polar method) is implemented here rather than with <random>
/// distributions, whose output is implementation-defined. The same seed
/// yields the same stream on every platform with IEEE-754 doubles.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 bits of randomness.
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  double normal();
  double normal(double mean, double stddev);

  std::vector<std::size_t> permutation(std::size_t n);

  // `count` distinct indices from [0, population), in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t population,
                                                      std::size_t count);

  SeededRng child(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace synthaudit::numcore

#endif  // SYNTHAUDIT_NUMCORE_RNG_HPP_
