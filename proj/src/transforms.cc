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

#include "pmgames/transforms.h"

#include <cmath>
#include <limits>
#include <string>

namespace pmgames {

// -- SymbolMap ----------------------------------------------------------------

void SymbolMap::Set(const FeedbackSymbol& from, FeedbackSymbol to) {
  for (auto& [key, value] : entries_) {
    if (key == from) {
      value = std::move(to);
      return;
    }
  }
  entries_.emplace_back(from, std::move(to));
}

const FeedbackSymbol* SymbolMap::Find(const FeedbackSymbol& from) const {
  for (const auto& [key, value] : entries_) {
    if (key == from) return &value;
  }
  return nullptr;
}

bool SymbolMap::injective() const {
  for (size_t a = 0; a < entries_.size(); ++a) {
    for (size_t b = a + 1; b < entries_.size(); ++b) {
      if (entries_[a].second == entries_[b].second) return false;
    }
  }
  return true;
}

bool FeedbackRelabel::injective() const {
  for (const SymbolMap& map : per_action) {
    if (!map.injective()) return false;
  }
  return true;
}

FeedbackRelabel FeedbackRelabel::Identity(const FeedbackMatrix& feedback) {
  FeedbackRelabel out;
  out.per_action.resize(feedback.rows());
  for (int i = 0; i < feedback.rows(); ++i) {
    for (int j = 0; j < feedback.cols(); ++j) {
      out.per_action[i].Set(feedback(i, j), feedback(i, j));
    }
  }
  return out;
}

// -- Transformations ----------------------------------------------------------

Game ColumnShift(const Game& game, const Eigen::VectorXd& shift) {
  if (shift.size() != game.num_outcomes()) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "shift has " + std::to_string(shift.size()) +
                        " entries for a game with " +
                        std::to_string(game.num_outcomes()) + " outcomes");
  }
  if (!shift.allFinite()) {
    throw GameError(ErrorCode::kNonFiniteEntry, "column shift is not finite");
  }
  Eigen::MatrixXd loss = game.loss().rowwise() - shift.transpose();
  return ValidateGame(loss, game.feedback(), game.name(), GameOrigin::kDerived);
}

Game RelabelFeedback(const Game& game, const FeedbackRelabel& relabel) {
  if (static_cast<int>(relabel.per_action.size()) != game.num_actions()) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "relabel has " + std::to_string(relabel.per_action.size()) +
                        " maps for " + std::to_string(game.num_actions()) +
                        " actions");
  }
  FeedbackMatrix feedback = game.feedback();
  for (int i = 0; i < feedback.rows(); ++i) {
    for (int j = 0; j < feedback.cols(); ++j) {
      const FeedbackSymbol* to = relabel.per_action[i].Find(feedback(i, j));
      if (to == nullptr) {
        throw GameError(ErrorCode::kUnmappedSymbol,
                        "symbol " + feedback(i, j).ToString() + " in row " +
                            std::to_string(i + 1) + " has no image");
      }
      feedback(i, j) = *to;
    }
  }
  return ValidateGame(game.loss(), feedback, game.name(), game.origin());
}

Game ApplyGlobalAffine(const Game& game, double scale,
                       const Eigen::VectorXd& offsets) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "affine scale must be finite and positive");
  }
  if (offsets.size() != game.num_outcomes()) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "affine offsets do not match the number of outcomes");
  }
  if (!offsets.allFinite()) {
    throw GameError(ErrorCode::kPreconditionViolated, "affine offsets not finite");
  }
  Eigen::MatrixXd loss = (game.loss().rowwise() - offsets.transpose()) / scale;
  return ValidateGame(loss, game.feedback(), game.name(), GameOrigin::kDerived);
}

Game ApplyStep(const Game& game, const TransformStep& step) {
  return std::visit(
      [&game](const auto& s) -> Game {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ColumnShiftStep>) {
          return ColumnShift(game, s.shift);
        } else if constexpr (std::is_same_v<S, RelabelStep>) {
          return RelabelFeedback(game, s.relabel);
        } else {
          return ApplyGlobalAffine(game, s.scale, s.offsets);
        }
      },
      step);
}

CanonicalFeedback CanonicalizeFeedback(const Game& game) {
  CanonicalFeedback out{.game = game, .forward = {}, .tables = {}, .distinct_counts = {}};
  const FeedbackMatrix& h = game.feedback();
  out.forward.per_action.resize(h.rows());
  out.tables.resize(h.rows());
  out.distinct_counts.resize(h.rows());
  for (int i = 0; i < h.rows(); ++i) {
    SymbolMap& map = out.forward.per_action[i];
    for (int j = 0; j < h.cols(); ++j) {
      if (map.Find(h(i, j)) != nullptr) continue;
      map.Set(h(i, j), FeedbackSymbol(static_cast<int>(map.size()) + 1));
      out.tables[i].push_back(h(i, j));
    }
    out.distinct_counts[i] = static_cast<int>(map.size());
  }
  out.game = RelabelFeedback(game, out.forward);
  return out;
}

// -- TransformTranscript ------------------------------------------------------

TransformTranscript::TransformTranscript(Game source)
    : source_(source), current_(std::move(source)) {}

const Game& TransformTranscript::ApplyColumnShift(const Eigen::VectorXd& shift) {
  current_ = ColumnShift(current_, shift);
  steps_.push_back(ColumnShiftStep{shift});
  return current_;
}

const Game& TransformTranscript::ApplyRelabel(const FeedbackRelabel& relabel) {
  current_ = RelabelFeedback(current_, relabel);
  steps_.push_back(RelabelStep{relabel});
  return current_;
}

const Game& TransformTranscript::ApplyGlobalAffine(double scale,
                                                   const Eigen::VectorXd& offsets) {
  current_ = pmgames::ApplyGlobalAffine(current_, scale, offsets);
  steps_.push_back(GlobalAffineStep{scale, offsets});
  return current_;
}

double TransformTranscript::regret_scale() const {
  double scale = 1.0;
  for (const TransformStep& step : steps_) {
    if (const auto* affine = std::get_if<GlobalAffineStep>(&step)) {
      scale *= affine->scale;
    }
  }
  return scale;
}

Relation TransformTranscript::relation() const {
  for (const TransformStep& step : steps_) {
    if (const auto* relabel = std::get_if<RelabelStep>(&step)) {
      if (!relabel->relabel.injective()) return Relation::kSourceNotHarder;
    }
  }
  return Relation::kEquivalent;
}

Game TransformTranscript::Replay(const Game& source) const {
  Game game = source;
  for (const TransformStep& step : steps_) game = ApplyStep(game, step);
  return game;
}

double TransformTranscript::ReplayResidual(const Game& expected) const {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const Game replayed = Replay(source_);
  if (replayed.num_actions() != expected.num_actions() ||
      replayed.num_outcomes() != expected.num_outcomes()) {
    return kInf;
  }
  double residual = (replayed.loss() - expected.loss()).cwiseAbs().maxCoeff();
  for (int i = 0; i < expected.num_actions(); ++i) {
    for (int j = 0; j < expected.num_outcomes(); ++j) {
      const FeedbackSymbol& a = replayed.Feedback(i, j);
      const FeedbackSymbol& b = expected.Feedback(i, j);
      if (a.is_number() && b.is_number()) {
        residual = std::max(residual, std::fabs(a.number() - b.number()));
      } else if (!(a == b)) {
        return kInf;
      }
    }
  }
  return residual;
}

}  // namespace pmgames
