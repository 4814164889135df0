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

#include "pmgames/classification.h"

namespace pmgames {
namespace {

std::pair<int, int> Ranks(const IndicatorMatrix& a, const Eigen::VectorXd& ell,
                          const std::optional<std::vector<Rational>>& exact_ell) {
  Eigen::MatrixXd augmented(a.cols(), a.rows() + 1);
  augmented << a.a.transpose(), ell;
  if (exact_ell) {
    RationalMatrix aug = RationalMatrix::FromDouble(a.a.transpose());
    RationalMatrix with_ell(aug.rows(), aug.cols() + 1);
    for (int i = 0; i < aug.rows(); ++i) {
      for (int j = 0; j < aug.cols(); ++j) with_ell(i, j) = aug(i, j);
      with_ell(i, aug.cols()) = (*exact_ell)[i];
    }
    return {Rank(aug), Rank(with_ell)};
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> plain(a.a);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> aug(augmented);
  return {static_cast<int>(plain.rank()), static_cast<int>(aug.rank())};
}

}  // namespace

std::string_view TagName(GameClassTag tag) {
  switch (tag) {
    case GameClassTag::kTrivialZero: return "TrivialZero";
    case GameClassTag::kBanditReducible: return "BanditReducible";
    case GameClassTag::kHardLinear: return "HardLinear";
  }
  return "Unknown";
}

GameClass Classify(const Game& game, const SolveOptions& options) {
  GameClass out;
  out.dominant_action = DominantAction(game.loss());
  if (out.dominant_action && game.num_actions() != 2) {
    out.tag = GameClassTag::kTrivialZero;
    return out;
  }
  if (game.num_actions() != 2) {
    throw GameError(ErrorCode::kWrongArity,
                    "no dominant action, and only 2-action games can be "
                    "classified further (got " +
                        std::to_string(game.num_actions()) + ")");
  }

  ReductionAttempt attempt = AttemptReduction(game, options);
  out.indicator = attempt.indicator;
  out.ell = attempt.ell;
  out.diagnostics.residual = attempt.decomposition.residual;
  out.diagnostics.arithmetic = attempt.decomposition.arithmetic;
  std::tie(out.diagnostics.rank_indicator, out.diagnostics.rank_augmented) =
      Ranks(attempt.indicator, attempt.ell, attempt.exact_ell);

  if (out.dominant_action) {
    out.tag = GameClassTag::kTrivialZero;
    return out;
  }
  if (attempt.reduction) {
    out.tag = GameClassTag::kBanditReducible;
    out.certificate =
        std::make_shared<const BanditReduction>(std::move(*attempt.reduction));
    return out;
  }
  out.tag = GameClassTag::kHardLinear;
  SolveOptions witness_options = options;
  witness_options.arithmetic = attempt.decomposition.arithmetic;
  out.witness = MakeIndistinguishablePair(attempt.indicator, attempt.ell,
                                          witness_options);
  return out;
}

}  // namespace pmgames
