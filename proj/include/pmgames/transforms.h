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

#ifndef PMGAMES_TRANSFORMS_H_
#define PMGAMES_TRANSFORMS_H_

// Admissible game transformations and the transcripts that record them.
//
// Two transformations preserve the regret of every action sequence:
// subtracting a vector from the loss matrix column-wise (L - 1 v^T), and
// relabeling each action's feedback through a per-action map f_i. Relabeling
// with injective maps loses no information, so learners transfer in both
// directions; a non-injective relabel only transfers one way.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pmgames/game.h"

namespace pmgames {

// A finite map between feedback symbols, kept in insertion order.
class SymbolMap {
 public:
  // Overwrites an existing entry for `from`.
  void Set(const FeedbackSymbol& from, FeedbackSymbol to);
  const FeedbackSymbol* Find(const FeedbackSymbol& from) const;
  bool injective() const;
  const std::vector<std::pair<FeedbackSymbol, FeedbackSymbol>>& entries() const {
    return entries_;
  }
  size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<FeedbackSymbol, FeedbackSymbol>> entries_;
};

// One map per learner action.
struct FeedbackRelabel {
  std::vector<SymbolMap> per_action;

  bool injective() const;
  static FeedbackRelabel Identity(const FeedbackMatrix& feedback);
};

struct ColumnShiftStep {
  Eigen::VectorXd shift;  // loss(i,j) -= shift(j)
};

struct RelabelStep {
  FeedbackRelabel relabel;
};

// loss(i,j) = (loss(i,j) - offsets(j)) / scale, with scale > 0. Regret on the
// result is the original regret divided by scale.
struct GlobalAffineStep {
  double scale = 1.0;
  Eigen::VectorXd offsets;
};

using TransformStep = std::variant<ColumnShiftStep, RelabelStep, GlobalAffineStep>;

Game ColumnShift(const Game& game, const Eigen::VectorXd& shift);

// Errors: kUnmappedSymbol, kDimensionMismatch (wrong number of maps).
Game RelabelFeedback(const Game& game, const FeedbackRelabel& relabel);

// Errors: kPreconditionViolated for scale <= 0 or non-finite parameters.
Game ApplyGlobalAffine(const Game& game, double scale, const Eigen::VectorXd& offsets);

Game ApplyStep(const Game& game, const TransformStep& step);

// Feedback rewritten so that row i uses the symbols 1..m_i, numbered in order
// of first occurrence scanning the row left to right.
struct CanonicalFeedback {
  Game game;
  FeedbackRelabel forward;
  // tables[i][k] is the original symbol that became k+1 in row i.
  std::vector<std::vector<FeedbackSymbol>> tables;
  std::vector<int> distinct_counts;
};

CanonicalFeedback CanonicalizeFeedback(const Game& game);

// Whether a transcript certifies equivalence or only that the source is no
// harder than the target.
enum class Relation { kEquivalent, kSourceNotHarder };

// Ordered record of the transformations leading from a source game to a
// target game. Applying a step both transforms the current game and records
// the step, so Replay(source) rebuilds target().
class TransformTranscript {
 public:
  explicit TransformTranscript(Game source);

  const Game& source() const { return source_; }
  const Game& target() const { return current_; }
  const std::vector<TransformStep>& steps() const { return steps_; }

  const Game& ApplyColumnShift(const Eigen::VectorXd& shift);
  const Game& ApplyRelabel(const FeedbackRelabel& relabel);
  const Game& ApplyGlobalAffine(double scale, const Eigen::VectorXd& offsets);

  // Product of the GlobalAffine scales: regret on source = scale * regret on
  // target for every action and outcome sequence.
  double regret_scale() const;
  Relation relation() const;

  Game Replay(const Game& source) const;

  // Largest absolute deviation between Replay(source()) and `expected` over
  // losses and numeric feedback. Infinity when the shapes differ or a text
  // symbol does not match exactly.
  double ReplayResidual(const Game& expected) const;

 private:
  Game source_;
  Game current_;
  std::vector<TransformStep> steps_;
};

}  // namespace pmgames

#endif  // PMGAMES_TRANSFORMS_H_
