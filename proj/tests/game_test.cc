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
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "pmgames/error.h"
#include "pmgames/game.h"
#include "test_util.h"

namespace pmgames {
namespace {

using testing::EqOneGame;
using testing::MakeGame;
using testing::ThrownCode;

TEST_CASE("ValidateGame accepts the three-action example") {
  const Game g = EqOneGame();
  CHECK(g.num_actions() == 3);
  CHECK(g.num_outcomes() == 2);
  CHECK(!g.derived());
  CHECK(g.Loss(1, 0) == 0.0);
  CHECK(g.Feedback(0, 1) == FeedbackSymbol(2));
}

TEST_CASE("ValidateGame accepts a 1x1 game with a text symbol") {
  const Game g = MakeGame({{0}}, {{"x"}});
  CHECK(g.num_actions() == 1);
  CHECK(g.num_outcomes() == 1);
  CHECK(g.Feedback(0, 0).is_text());
  CHECK(g.Feedback(0, 0).text() == "x");
}

TEST_CASE("ValidateGame error paths") {
  CHECK(ThrownCode([] { MakeGame({{0, 1}}, {{1, 2}, {1, 1}}); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(ThrownCode([] { MakeGame({{0, 1}, {1}}, {{1, 2}, {1, 1}}); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(ThrownCode([] { MakeGame({}, {}); }) == ErrorCode::kDimensionMismatch);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(ThrownCode([&] { MakeGame({{nan, 0}}, {{1, 1}}); }) == ErrorCode::kNonFiniteEntry);
  CHECK(ThrownCode([&] { MakeGame({{0, 0}}, {{1, inf}}); }) == ErrorCode::kNonFiniteEntry);
  CHECK(ThrownCode([] { MakeGame({{1.5, 0}}, {{1, 1}}); }) == ErrorCode::kLossOutOfRange);
  CHECK(ThrownCode([] { MakeGame({{-0.1, 0}}, {{1, 1}}); }) == ErrorCode::kLossOutOfRange);
  // Derived games may carry any finite loss.
  const Game derived =
      MakeGame({{0, 0}, {-1, 1}}, {{1, 1}, {1, 1}}, "d", GameOrigin::kDerived);
  CHECK(derived.derived());
  CHECK(ThrownCode([&] {
          MakeGame({{nan, 0}}, {{1, 1}}, "d", GameOrigin::kDerived);
        }) == ErrorCode::kNonFiniteEntry);
}

TEST_CASE("FeedbackMatrix rejects ragged rows") {
  CHECK(ThrownCode([] { FeedbackMatrix h{{1, 2}, {1}}; }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("FeedbackSymbol distinguishes numbers from text") {
  CHECK(FeedbackSymbol(1) == FeedbackSymbol(1.0));
  CHECK(!(FeedbackSymbol(1) == FeedbackSymbol("1")));
  CHECK(FeedbackSymbol("a").ToString() == "a");
  CHECK(FeedbackSymbol(0.5).ToString() == "0.5");
  CHECK(ThrownCode([] { (void)FeedbackSymbol("a").number(); }) ==
        ErrorCode::kPreconditionViolated);
}

TEST_CASE("BestFixedAction examples") {
  const Game g = EqOneGame();
  const std::vector<int> ones{0, 0};
  FixedAction best = BestFixedAction(g, ones);
  CHECK(best.action == 1);
  CHECK(best.total_loss == 0.0);

  best = BestFixedAction(g, std::vector<int>{});
  CHECK(best.action == 0);
  CHECK(best.total_loss == 0.0);

  const Game shifted =
      MakeGame({{0, 0}, {-1, 1}}, {{1, 1}, {1, 1}}, "s", GameOrigin::kDerived);
  best = BestFixedAction(shifted, std::vector<int>{0, 1});
  CHECK(best.action == 0);
  CHECK(best.total_loss == 0.0);

  CHECK(ThrownCode([&] { BestFixedAction(g, std::vector<int>{2}); }) ==
        ErrorCode::kOutcomeOutOfRange);
}

TEST_CASE("Regret examples") {
  const Game g = EqOneGame();
  CHECK(Regret(g, std::vector<int>{0, 0}, std::vector<int>{0, 0}) == 2.0);

  const Game shifted =
      MakeGame({{0, 0}, {-1, 1}}, {{1, 1}, {1, 1}}, "s", GameOrigin::kDerived);
  CHECK(Regret(shifted, std::vector<int>{1, 1}, std::vector<int>{0, 1}) == 0.0);

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const std::vector<int> outcomes = testing::RandomSequence(rng, 30, 2);
    const FixedAction best = BestFixedAction(g, outcomes);
    const std::vector<int> replay(outcomes.size(), best.action);
    CHECK(Regret(g, replay, outcomes) == 0.0);
  }

  CHECK(ThrownCode([&] { Regret(g, std::vector<int>{0}, std::vector<int>{0, 1}); }) ==
        ErrorCode::kLengthMismatch);
  CHECK(ThrownCode([&] { Regret(g, std::vector<int>{3}, std::vector<int>{0}); }) ==
        ErrorCode::kActionOutOfRange);
  CHECK(ThrownCode([&] { Regret(g, std::vector<int>{0}, std::vector<int>{-1}); }) ==
        ErrorCode::kOutcomeOutOfRange);
}

TEST_CASE("DominantAction examples") {
  Eigen::MatrixXd loss(2, 2);
  loss << 0, 0, 1, 1;
  CHECK(DominantAction(loss) == 0);
  CHECK(!DominantAction(EqOneGame().loss()).has_value());
  loss << 1, 0, 0, 1;
  CHECK(!DominantAction(loss).has_value());
  loss << 1, 1, 1, 1;
  CHECK(DominantAction(loss) == 0);
  loss << 1, 1, 0, 1;
  CHECK(DominantAction(loss) == 1);
}

TEST_CASE("RegretAccumulator agrees with Regret and ignores round order") {
  std::mt19937_64 rng(11);
  const Game g = EqOneGame();
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<int> actions = testing::RandomSequence(rng, 40, 3);
    std::vector<int> outcomes = testing::RandomSequence(rng, 40, 2);
    RegretAccumulator forward(g);
    for (size_t t = 0; t < actions.size(); ++t) forward.Add(actions[t], outcomes[t]);
    RegretAccumulator backward(g);
    for (size_t t = actions.size(); t-- > 0;) backward.Add(actions[t], outcomes[t]);
    CHECK(forward.Regret() == backward.Regret());
    CHECK(forward.Regret() == doctest::Approx(Regret(g, actions, outcomes)));
    CHECK(forward.rounds() == 40);
  }
  RegretAccumulator acc(g);
  CHECK(ThrownCode([&] { acc.Add(5, 0); }) == ErrorCode::kActionOutOfRange);
  CHECK(ThrownCode([&] { acc.Add(0, 2); }) == ErrorCode::kOutcomeOutOfRange);
}

TEST_CASE("ErrorCodeName covers every code") {
  CHECK(ErrorCodeName(ErrorCode::kWrongArity) == "WrongArity");
  CHECK(ErrorCodeName(ErrorCode::kNotReducible) == "NotReducible");
  const GameError e(ErrorCode::kSolverError, "boom");
  CHECK(std::string(e.what()).find("boom") != std::string::npos);
}

}  // namespace
}  // namespace pmgames
