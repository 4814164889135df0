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

#include "pmgames/random.h"

namespace pmgames {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int RandomStream::Categorical(std::span<const double> p) {
  const double u = Uniform();
  double cumulative = 0.0;
  int last_positive = 0;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    last_positive = static_cast<int>(k);
    cumulative += p[k];
    if (u < cumulative) return last_positive;
  }
  // Rounding left the total just below u.
  return last_positive;
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index, StreamRole role) {
  std::uint64_t h = SplitMix64(base);
  h = SplitMix64(h ^ index);
  return SplitMix64(h ^ static_cast<std::uint64_t>(role));
}

}  // namespace pmgames
