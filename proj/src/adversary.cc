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

#include "pmgames/adversary.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pmgames/random.h"

namespace pmgames {

Distribution::Distribution(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) {
    throw GameError(ErrorCode::kPreconditionViolated, "empty distribution");
  }
  double total = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw GameError(ErrorCode::kPreconditionViolated,
                      "distribution entries must be finite and non-negative");
    }
    total += x;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "distribution sums to " + std::to_string(total));
  }
}

bool Distribution::interior() const {
  return std::all_of(p_.begin(), p_.end(), [](double x) { return x > 0.0; });
}

Eigen::VectorXd Distribution::AsVector() const {
  return Eigen::Map<const Eigen::VectorXd>(p_.data(), size());
}

std::optional<Eigen::VectorXd> KernelWitness(const IndicatorMatrix& a,
                                             const Eigen::VectorXd& ell,
                                             const SolveOptions& options) {
  if (ell.size() != a.cols()) {
    throw GameError(ErrorCode::kDimensionMismatch, "ell does not match A");
  }
  const bool exact =
      options.arithmetic == Arithmetic::kExact ||
      (options.arithmetic == Arithmetic::kAuto && AllSmallFractions(ell));

  if (exact) {
    std::vector<Rational> ellq;
    for (int k = 0; k < ell.size(); ++k) ellq.push_back(ToRational(ell(k)));
    const RationalMatrix aq = RationalMatrix::FromDouble(a.a);
    const RationalMatrix at = aq.Transpose();
    auto z = SolveConsistent(aq * at, aq * std::span<const Rational>(ellq));
    if (!z) throw GameError(ErrorCode::kSolverError, "normal equations inconsistent");
    const std::vector<Rational> projected = at * std::span<const Rational>(*z);
    std::vector<Rational> r(ellq.size());
    Rational scale = 0;
    for (size_t k = 0; k < r.size(); ++k) {
      r[k] = ellq[k] - projected[k];
      const Rational mag = sgn(r[k]) < 0 ? Rational(-r[k]) : r[k];
      if (mag > scale) scale = mag;
    }
    if (sgn(scale) == 0) return std::nullopt;
    Eigen::VectorXd v(ell.size());
    for (size_t k = 0; k < r.size(); ++k) v(k) = Rational(r[k] / scale).get_d();
    return v;
  }

  const Eigen::MatrixXd at = a.a.transpose();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(at);
  const Eigen::VectorXd lambda = cod.solve(ell);
  const Eigen::VectorXd r = ell - at * lambda;
  if (!r.allFinite()) {
    throw GameError(ErrorCode::kSolverError, "least-squares residual not finite");
  }
  if (r.norm() <= options.tol * (1.0 + ell.norm())) return std::nullopt;
  Eigen::VectorXd v = r / r.cwiseAbs().maxCoeff();
  if ((a.a * v).norm() > options.tol || ell.dot(v) <= options.tol) {
    throw GameError(ErrorCode::kSolverError, "kernel witness failed its own checks");
  }
  return v;
}

std::optional<Distribution> BalancedInteriorPoint(const Eigen::VectorXd& ell) {
  const int m = static_cast<int>(ell.size());
  std::vector<int> positive, negative;
  for (int k = 0; k < m; ++k) {
    if (ell(k) > 0) positive.push_back(k);
    if (ell(k) < 0) negative.push_back(k);
  }
  if (positive.empty() || negative.empty()) return std::nullopt;

  std::vector<double> uniform(m, 1.0 / m);
  const double mean = ell.mean();
  if (mean == 0.0) return Distribution(uniform);

  // Uniform law on the support whose sign opposes the mean.
  const std::vector<int>& support = mean > 0 ? negative : positive;
  std::vector<double> opposing(m, 0.0);
  for (int k : support) opposing[k] = 1.0 / static_cast<double>(support.size());
  double opposing_value = 0.0;
  for (int k : support) opposing_value += ell(k) * opposing[k];

  const double theta = -opposing_value / (mean - opposing_value);
  std::vector<double> p0(m);
  for (int k = 0; k < m; ++k) p0[k] = theta * uniform[k] + (1.0 - theta) * opposing[k];
  return Distribution(std::move(p0));
}

IndistinguishablePair MakeIndistinguishablePair(const IndicatorMatrix& a,
                                                const Eigen::VectorXd& ell,
                                                const SolveOptions& options,
                                                double epsilon_fraction) {
  if (!(epsilon_fraction > 0.0 && epsilon_fraction <= 1.0)) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "epsilon fraction must lie in (0, 1]");
  }
  std::optional<Eigen::VectorXd> v = KernelWitness(a, ell, options);
  if (!v) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "ell is in the row space of A: no kernel witness");
  }
  std::optional<Distribution> p0 = BalancedInteriorPoint(ell);
  if (!p0) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "ell is one-signed: the game has zero minimax regret");
  }

  double epsilon_max = std::numeric_limits<double>::infinity();
  for (int k = 0; k < v->size(); ++k) {
    if ((*v)(k) != 0.0) epsilon_max = std::min(epsilon_max, (*p0)[k] / std::fabs((*v)(k)));
  }
  const double epsilon = epsilon_fraction * epsilon_max;

  auto step = [&](double sign) {
    std::vector<double> p(p0->size());
    for (int k = 0; k < p0->size(); ++k) {
      double x = (*p0)[k] + sign * epsilon * (*v)(k);
      if (std::fabs(x) <= 1e-15) x = 0.0;
      p[k] = x;
    }
    return Distribution(std::move(p));
  };
  Distribution p1 = step(+1.0);
  Distribution p2 = step(-1.0);
  const bool on_boundary = !p1.interior() || !p2.interior();
  return IndistinguishablePair{
      .p0 = std::move(*p0),
      .p1 = std::move(p1),
      .p2 = std::move(p2),
      .v = *v,
      .epsilon = epsilon,
      .epsilon_max = epsilon_max,
      .ell_dot_v = ell.dot(*v),
      .on_boundary = on_boundary,
  };
}

std::vector<int> SampleOutcomes(const Distribution& p, std::int64_t horizon,
                                std::uint64_t seed) {
  if (horizon < 0) {
    throw GameError(ErrorCode::kPreconditionViolated, "negative horizon");
  }
  RandomStream rng(seed);
  std::vector<int> outcomes(static_cast<size_t>(horizon));
  for (int& j : outcomes) j = rng.Categorical(p.probabilities());
  return outcomes;
}

}  // namespace pmgames
