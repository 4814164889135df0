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

#ifndef PMGAMES_CLASSIFICATION_H_
#define PMGAMES_CLASSIFICATION_H_

// Trichotomy for finite partial-monitoring games:
//   TrivialZero      some action is never worse than any other; playing it
//                    always has zero regret.
//   BanditReducible  the game reduces to a 2-action bandit game, so its
//                    minimax regret grows like sqrt(T).
//   HardLinear       two outcome laws look identical through the feedback
//                    but disagree on the better action; regret is linear.

#include <memory>
#include <optional>
#include <string_view>

#include "pmgames/adversary.h"
#include "pmgames/game.h"
#include "pmgames/reduction.h"

namespace pmgames {

enum class GameClassTag { kTrivialZero, kBanditReducible, kHardLinear };

std::string_view TagName(GameClassTag tag);

struct ClassDiagnostics {
  // Residual of the least-squares fit ell ~ A^T lambda (0 when not computed).
  double residual = 0.0;
  // rank(A) and rank([A^T | ell]); -1 when not computed (N != 2).
  int rank_indicator = -1;
  int rank_augmented = -1;
  Arithmetic arithmetic = Arithmetic::kFloat;
};

struct GameClass {
  GameClassTag tag = GameClassTag::kTrivialZero;
  std::optional<int> dominant_action;
  std::shared_ptr<const BanditReduction> certificate;
  std::optional<IndistinguishablePair> witness;
  std::optional<IndicatorMatrix> indicator;
  Eigen::VectorXd ell;  // empty for N != 2
  ClassDiagnostics diagnostics;
};

// Tests in order: dominant action (any N), then the bandit reduction, then
// the indistinguishable pair. Throws kWrongArity when N != 2 and no action
// dominates.
GameClass Classify(const Game& game, const SolveOptions& options = {});

}  // namespace pmgames

#endif  // PMGAMES_CLASSIFICATION_H_
