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

#ifndef PMGAMES_ADVERSARY_H_
#define PMGAMES_ADVERSARY_H_

// Outcome laws that no learner can tell apart.
//
// When ell is not in the row space of the indicator matrix A there is a v
// with A v = 0 and ell^T v > 0. Around an interior law p0 with ell^T p0 = 0,
// the laws p1 = p0 + eps v and p2 = p0 - eps v induce the same feedback
// distribution for both actions (A p1 = A p2), yet action 2 is worse by
// eps ell^T v per round under p1 and better by the same amount under p2.
// Any learner therefore pays at least eps ell^T v T / 2 under one of them.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pmgames/reduction.h"

namespace pmgames {

class Distribution {
 public:
  // Throws kPreconditionViolated unless every entry is >= 0 and the entries
  // sum to 1 within 1e-12.
  explicit Distribution(std::vector<double> p);

  const std::vector<double>& probabilities() const { return p_; }
  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int k) const { return p_[k]; }
  bool interior() const;
  Eigen::VectorXd AsVector() const;

 private:
  std::vector<double> p_;
};

// v in Ker A with ell^T v > 0 and max |v_k| = 1, or nullopt when ell lies in
// the row space of A. When the kernel has several dimensions, v is the
// projection of ell onto it. Uses the same arithmetic resolution and
// membership test as SolveSignalDecomposition. Throws kSolverError.
std::optional<Eigen::VectorXd> KernelWitness(const IndicatorMatrix& a,
                                             const Eigen::VectorXd& ell,
                                             const SolveOptions& options = {});

// Interior p0 with ell^T p0 = 0, or nullopt when ell is one-signed (the
// zero-regret case). p0 mixes the uniform law with the uniform law on the
// support of whichever sign the uniform law underweights.
std::optional<Distribution> BalancedInteriorPoint(const Eigen::VectorXd& ell);

struct IndistinguishablePair {
  Distribution p0;
  Distribution p1;
  Distribution p2;
  Eigen::VectorXd v;
  double epsilon = 0.0;
  double epsilon_max = 0.0;
  double ell_dot_v = 0.0;
  // True when p1 or p2 has a zero coordinate (epsilon == epsilon_max).
  bool on_boundary = false;

  // eps * ell^T v * T / 2: what any learner must lose under the worse law.
  double RegretFloor(std::int64_t horizon) const {
    return epsilon * ell_dot_v * static_cast<double>(horizon) / 2.0;
  }
};

// epsilon = epsilon_fraction * epsilon_max, where epsilon_max is the largest
// step keeping both laws in the simplex. Throws kPreconditionViolated when ell
// has no kernel witness, is one-signed, or epsilon_fraction is not in (0, 1].
IndistinguishablePair MakeIndistinguishablePair(const IndicatorMatrix& a,
                                                const Eigen::VectorXd& ell,
                                                const SolveOptions& options = {},
                                                double epsilon_fraction = 0.5);

// T i.i.d. outcomes by inverse CDF; the same (p, T, seed) always gives the
// same sequence.
std::vector<int> SampleOutcomes(const Distribution& p, std::int64_t horizon,
                                std::uint64_t seed);

}  // namespace pmgames

#endif  // PMGAMES_ADVERSARY_H_
