// Copyright 2026 The pmgames Authors. All rights reserved.
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

#ifndef PMGAMES_RANDOM_H_
#define PMGAMES_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>

namespace pmgames {

// Seedable stream with a platform-independent output sequence: mt19937_64 is
// fully specified by the standard, and doubles are built from its top 53
// bits instead of going through std::uniform_real_distribution.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextBits() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Inverse-CDF draw of an index with probabilities p (assumed to sum to 1).
  int Categorical(std::span<const double> p);

 private:
  std::mt19937_64 engine_;
};

enum class StreamRole : std::uint64_t { kLearner = 1, kAdversary = 2 };

// Independent seeds for the learner and adversary streams of run `index`,
// so that changing one never perturbs the other.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index, StreamRole role);

}  // namespace pmgames

#endif  // PMGAMES_RANDOM_H_
