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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "pmgames/reduction.h"
#include "pmgames/transforms.h"
#include "test_util.h"

namespace pmgames {
namespace {

using testing::MakeGame;
using testing::ThrownCode;

Eigen::MatrixXd Mat(int rows, int cols, std::initializer_list<double> xs) {
  Eigen::MatrixXd m(rows, cols);
  int idx = 0;
  for (double x : xs) {
    m(idx / cols, idx % cols) = x;
    ++idx;
  }
  return m;
}

Eigen::VectorXd Vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(xs.size());
  int k = 0;
  for (double x : xs) v(k++) = x;
  return v;
}

IndicatorMatrix Indicator(const Game& g) {
  const CanonicalFeedback c = CanonicalizeFeedback(g);
  return BuildIndicatorMatrix(c.game.feedback(), {c.distinct_counts[0], c.distinct_counts[1]});
}

TEST_CASE("BuildIndicatorMatrix examples") {
  const IndicatorMatrix fig =
      BuildIndicatorMatrix(FeedbackMatrix{{1, 2, 3, 1}, {1, 2, 2, 2}}, {3, 2});
  CHECK(fig.a == Mat(5, 4, {1, 0, 0, 1,
                            0, 1, 0, 0,
                            0, 0, 1, 0,
                            1, 0, 0, 0,
                            0, 1, 1, 1}));
  CHECK(fig.offset(1) == 3);

  CHECK(BuildIndicatorMatrix(FeedbackMatrix{{1, 1}, {1, 1}}, {1, 1}).a ==
        Mat(2, 2, {1, 1, 1, 1}));
  CHECK(BuildIndicatorMatrix(FeedbackMatrix{{1, 2}, {1, 1}}, {2, 1}).a ==
        Mat(3, 2, {1, 0, 0, 1, 1, 1}));

  CHECK(ThrownCode([] {
          BuildIndicatorMatrix(FeedbackMatrix{{1, 3}, {1, 1}}, {2, 1});
        }) == ErrorCode::kNotCanonical);
  CHECK(ThrownCode([] {
          BuildIndicatorMatrix(FeedbackMatrix{{1, "a"}, {1, 1}}, {2, 1});
        }) == ErrorCode::kNotCanonical);
  CHECK(ThrownCode([] {
          BuildIndicatorMatrix(FeedbackMatrix{{1.5, 1}, {1, 1}}, {2, 1});
        }) == ErrorCode::kNotCanonical);
  CHECK(ThrownCode([] {
          BuildIndicatorMatrix(FeedbackMatrix{{1, 1}, {1, 1}, {1, 1}}, {1, 1});
        }) == ErrorCode::kWrongArity);
}

TEST_CASE("SolveSignalDecomposition examples in both arithmetics") {
  for (Arithmetic arith : {Arithmetic::kFloat, Arithmetic::kExact, Arithmetic::kAuto}) {
    CAPTURE(ArithmeticName(arith));
    const SolveOptions options{kDefaultTolerance, arith};
    IndicatorMatrix a{Mat(3, 2, {1, 0, 0, 1, 1, 1}), {2, 1}};
    SignalDecomposition d = SolveSignalDecomposition(a, Vec({-1, 1}), options);
    REQUIRE(d.in_row_space);
    CHECK(testing::MaxAbs(d.lambda, Vec({-1, 1, 0})) <= 1e-12);
    CHECK(d.arithmetic == (arith == Arithmetic::kFloat ? Arithmetic::kFloat
                                                        : Arithmetic::kExact));

    IndicatorMatrix ones{Mat(2, 2, {1, 1, 1, 1}), {1, 1}};
    d = SolveSignalDecomposition(ones, Vec({1, 1}), options);
    REQUIRE(d.in_row_space);
    CHECK(testing::MaxAbs(d.lambda, Vec({0.5, 0.5})) <= 1e-12);

    d = SolveSignalDecomposition(ones, Vec({-1, 1}), options);
    CHECK(!d.in_row_space);
    CHECK(d.residual == doctest::Approx(std::sqrt(2.0)));
  }
  IndicatorMatrix a{Mat(3, 2, {1, 0, 0, 1, 1, 1}), {2, 1}};
  const SignalDecomposition exact = SolveSignalDecomposition(a, Vec({-1, 1}));
  REQUIRE(exact.exact_lambda.has_value());
  CHECK((*exact.exact_lambda)[0] == -1);
  CHECK((*exact.exact_lambda)[2] == 0);
  CHECK(ThrownCode([&] { SolveSignalDecomposition(a, Vec({1, 2, 3})); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("Float mode falls back for irrational-looking inputs") {
  IndicatorMatrix a{Mat(3, 2, {1, 0, 0, 1, 1, 1}), {2, 1}};
  const SignalDecomposition d = SolveSignalDecomposition(a, Vec({M_PI / 7, -M_E / 9}));
  CHECK(d.arithmetic == Arithmetic::kFloat);
  CHECK(d.in_row_space);
  CHECK(!d.exact_lambda.has_value());
}

TEST_CASE("BuildSignalRows examples") {
  IndicatorMatrix a{Mat(3, 2, {1, 0, 0, 1, 1, 1}), {2, 1}};
  auto [h1, h2] = BuildSignalRows(Vec({-1, 1, 0}), a);
  CHECK(h1 == Vec({-1, 1}));
  CHECK(h2 == Vec({0, 0}));

  std::tie(h1, h2) = BuildSignalRows(Eigen::VectorXd::Zero(3), a);
  CHECK(h1.isZero());
  CHECK(h2.isZero());

  const IndicatorMatrix fig =
      BuildIndicatorMatrix(FeedbackMatrix{{1, 2, 3, 1}, {1, 2, 2, 2}}, {3, 2});
  std::tie(h1, h2) = BuildSignalRows(Vec({1, 1, 1, 0, 0}), fig);
  CHECK(h1 == Vec({1, 1, 1, 1}));
  CHECK(h2 == Vec({0, 0, 0, 0}));
}

TEST_CASE("ReduceToBandit on the 2x2 reducible example") {
  const BanditReduction r = ReduceToBandit(testing::AppleGame());
  CHECK(r.arithmetic == Arithmetic::kExact);
  CHECK(r.ell == Vec({-1, 1}));
  CHECK(r.lambda == Vec({-1, 1, 0}));
  CHECK(r.signal == Mat(2, 2, {-1, 1, 0, 0}));
  CHECK(r.signal_prime == Mat(2, 2, {1, -1, 0, 0}));
  CHECK(r.loss_prime == r.signal_prime);
  CHECK(r.k_matrix == Eigen::Matrix2d(Mat(2, 2, {0, 0, 1, 1})));
  CHECK(r.d_matrix == Eigen::Matrix2d(Mat(2, 2, {-1, 0, 0, 1})));
  CHECK(r.k == Eigen::Vector2d(1, 0));
  CHECK(r.scale == 2.0);
  CHECK(r.offset == -1.0);
  CHECK(r.bandit_game.loss() == Mat(2, 2, {1, 0, 0.5, 0.5}));
  CHECK(r.bandit_game.derived());
  CHECK(r.feedback_to_loss[0].Find(1) == 1.0);
  CHECK(r.feedback_to_loss[0].Find(2) == 0.0);
  CHECK(r.feedback_to_loss[1].Find(1) == 0.5);
  CHECK(!r.feedback_to_loss[1].Find(2).has_value());
  CHECK(r.feedback_to_loss[1].entries().size() == 1);
  CHECK(r.transcript.regret_scale() == 2.0);
  CHECK(r.transcript.relation() == Relation::kEquivalent);
  REQUIRE(r.exact.has_value());
  CHECK(r.exact->scale == 2);
  CHECK(r.exact->bandit_loss(1, 0) == Rational(1, 2));

  const VerificationReport report = VerifyReduction(r);
  CHECK(report.passed());
  for (const VerificationCheck& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.max_residual == 0.0);
  }
}

TEST_CASE("ReduceToBandit on the zero game") {
  const Game g = MakeGame({{0, 0}, {0, 0}}, {{1, 2}, {"x", "y"}});
  const BanditReduction r = ReduceToBandit(g);
  CHECK(r.ell.isZero());
  CHECK(r.lambda.isZero());
  CHECK(r.scale == 1.0);
  CHECK(r.bandit_game.loss().isZero());
  CHECK(VerifyReduction(r).passed());
}

TEST_CASE("ReduceToBandit errors") {
  CHECK(ThrownCode([] { ReduceToBandit(testing::HardConstantGame()); }) ==
        ErrorCode::kNotReducible);
  CHECK(ThrownCode([] { ReduceToBandit(testing::EqOneGame()); }) ==
        ErrorCode::kWrongArity);
  CHECK(ThrownCode([] { AttemptReduction(testing::EqOneGame()); }) ==
        ErrorCode::kWrongArity);
  const ReductionAttempt attempt = AttemptReduction(testing::HardConstantGame());
  CHECK(!attempt.reduction.has_value());
  CHECK(!attempt.decomposition.in_row_space);
}

TEST_CASE("VerifyReduction flags a perturbed lambda") {
  BanditReduction r = ReduceToBandit(testing::AppleGame(), {kDefaultTolerance, Arithmetic::kFloat});
  CHECK(r.arithmetic == Arithmetic::kFloat);
  CHECK(!r.exact.has_value());
  CHECK(VerifyReduction(r).passed());
  r.lambda(0) += 1e-3;
  VerificationReport report = VerifyReduction(r);
  CHECK(!report.passed());
  const VerificationCheck* lkh = report.Find("L=KH");
  REQUIRE(lkh != nullptr);
  CHECK(!lkh->passed);
  CHECK(lkh->max_residual == doctest::Approx(1e-3));

  BanditReduction exact = ReduceToBandit(testing::AppleGame());
  exact.lambda(0) += 1e-3;
  report = VerifyReduction(exact);
  CHECK(!report.Find("lambda exact/float")->passed);
  CHECK(report.Find("missing") == nullptr);
}

TEST_CASE("Text feedback and non-canonical symbols reduce") {
  const Game g = MakeGame({{0.2, 0.9, 0.4}, {0.7, 0.1, 0.4}},
                          {{"x", "y", "y"}, {"q", "q", "r"}});
  const ReductionAttempt attempt = AttemptReduction(g);
  if (attempt.reduction) {
    CHECK(VerifyReduction(*attempt.reduction).passed());
    CHECK(attempt.reduction->feedback_to_loss[0].Find("x").has_value());
  }
  // The figure game reduces and its surrogate map covers every symbol.
  const Game fig = MakeGame({{1, 0, 0, 1}, {0, 1, 1, 0}}, {{1, 2, 3, 1}, {1, 2, 2, 2}});
  const BanditReduction r = ReduceToBandit(fig);
  CHECK(VerifyReduction(r).passed());
  CHECK(r.feedback_to_loss[0].entries().size() == 3);
  CHECK(r.feedback_to_loss[1].entries().size() == 2);
  CHECK(Indicator(fig).a == r.indicator.a);
}

TEST_CASE("Random reducible games verify in float and exact modes") {
  std::mt19937_64 rng(2024);
  int reduced = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const bool grid = rep % 2 == 0;
    const Game g = testing::RandomTwoActionGame(rng, 2 + rep % 5, 1 + rep % 4, grid);
    for (Arithmetic arith : {Arithmetic::kFloat, Arithmetic::kAuto}) {
      const ReductionAttempt attempt = AttemptReduction(g, {kDefaultTolerance, arith});
      if (!attempt.reduction) continue;
      ++reduced;
      const VerificationReport report = VerifyReduction(*attempt.reduction);
      CHECK(report.passed());
      const Eigen::MatrixXd& b = attempt.reduction->bandit_game.loss();
      CHECK(b.minCoeff() >= 0.0);
      CHECK(b.maxCoeff() <= 1.0);
      if (grid && arith == Arithmetic::kAuto) {
        CHECK(attempt.reduction->arithmetic == Arithmetic::kExact);
        CHECK(report.Find("L=KH")->max_residual == 0.0);
        CHECK(report.Find("L'=H'")->max_residual == 0.0);
        // Rescaling keeps the order of the two actions in every column.
        for (int j = 0; j < g.num_outcomes(); ++j) {
          const double source_gap = g.Loss(1, j) - g.Loss(0, j);
          const double bandit_gap = b(1, j) - b(0, j);
          CHECK((source_gap > 0) == (bandit_gap > 0));
          CHECK((source_gap < 0) == (bandit_gap < 0));
        }
      }
    }
  }
  CHECK(reduced > 100);
}

}  // namespace
}  // namespace pmgames
