// Copyright 2026 The trialoffer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIALOFFER_RANDOM_HPP_
#define TRIALOFFER_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace trialoffer {

// SplitMix64 finalizer. Used to derive well-separated seeds from
// (base_seed, index) pairs.
std::uint64_t mix_seed(std::uint64_t x);

// Seed of replication `index` under `base_seed`: the xor of the base seed
// with the replication index, passed through the mixer.
std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t index);

// A deterministic pseudo-random stream. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; the conversions to uniform reals,
// bounded integers and normals are implemented here rather than through the
// <random> distributions, whose outputs vary between standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  static RandomStream for_replication(std::uint64_t base_seed,
                                      std::uint64_t index) {
    return RandomStream(replication_seed(base_seed, index));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, bound), bound > 0.
  std::size_t uniform_index(std::size_t bound);

  // Standard normal via Box-Muller (the cosine branch only, so the stream
  // position does not depend on call history).
  double normal();

  double normal(double mean, double sd) { return mean + sd * normal(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace trialoffer

#endif  // TRIALOFFER_RANDOM_HPP_
