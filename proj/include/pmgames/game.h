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

#ifndef PMGAMES_GAME_H_
#define PMGAMES_GAME_H_

// Finite partial-monitoring games and regret accounting.
//
// Actions and outcomes are 0-based throughout the C++ API. File formats, CSV
// output and the CLI use 1-based indices, matching the usual matrix notation.

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pmgames/error.h"

namespace pmgames {

// An opaque feedback token. Numbers and text are both allowed; symbols are
// only ever compared for equality. A number never equals a text symbol, even
// if they print the same.
class FeedbackSymbol {
 public:
  FeedbackSymbol() : value_(0.0) {}
  template <typename T>
    requires std::is_arithmetic_v<T>
  FeedbackSymbol(T value) : value_(static_cast<double>(value)) {}
  FeedbackSymbol(std::string text) : value_(std::move(text)) {}
  FeedbackSymbol(const char* text) : value_(std::string(text)) {}

  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_text() const { return !is_number(); }

  // Throws kPreconditionViolated when the symbol is text.
  double number() const;
  const std::string& text() const;

  std::string ToString() const;

  friend bool operator==(const FeedbackSymbol& a, const FeedbackSymbol& b) {
    return a.value_ == b.value_;
  }

 private:
  std::variant<double, std::string> value_;
};

// Row-major matrix of feedback symbols.
class FeedbackMatrix {
 public:
  FeedbackMatrix() = default;
  FeedbackMatrix(int rows, int cols);
  // Throws kDimensionMismatch on ragged input.
  FeedbackMatrix(std::initializer_list<std::initializer_list<FeedbackSymbol>> rows);
  static FeedbackMatrix FromRows(const std::vector<std::vector<FeedbackSymbol>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const FeedbackSymbol& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  FeedbackSymbol& operator()(int i, int j) { return data_[i * cols_ + j]; }

  std::vector<FeedbackSymbol> Row(int i) const;

  friend bool operator==(const FeedbackMatrix&, const FeedbackMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FeedbackSymbol> data_;
};

// Input games must have losses in [0,1]; games produced by transformations
// are marked derived and may hold any finite real loss.
enum class GameOrigin { kInput, kDerived };

class Game {
 public:
  const std::string& name() const { return name_; }
  const Eigen::MatrixXd& loss() const { return loss_; }
  const FeedbackMatrix& feedback() const { return feedback_; }
  int num_actions() const { return static_cast<int>(loss_.rows()); }
  int num_outcomes() const { return static_cast<int>(loss_.cols()); }
  bool derived() const { return origin_ == GameOrigin::kDerived; }
  GameOrigin origin() const { return origin_; }

  double Loss(int action, int outcome) const { return loss_(action, outcome); }
  const FeedbackSymbol& Feedback(int action, int outcome) const {
    return feedback_(action, outcome);
  }

 private:
  friend Game ValidateGame(const Eigen::MatrixXd&, const FeedbackMatrix&,
                           std::string, GameOrigin);

  Game() = default;

  std::string name_;
  Eigen::MatrixXd loss_;
  FeedbackMatrix feedback_;
  GameOrigin origin_ = GameOrigin::kInput;
};

// The only way to construct a Game. Errors: kDimensionMismatch,
// kNonFiniteEntry, kLossOutOfRange (input games only).
Game ValidateGame(const Eigen::MatrixXd& loss, const FeedbackMatrix& feedback,
                  std::string name, GameOrigin origin = GameOrigin::kInput);
Game ValidateGame(const std::vector<std::vector<double>>& loss,
                  const std::vector<std::vector<FeedbackSymbol>>& feedback,
                  std::string name, GameOrigin origin = GameOrigin::kInput);

struct FixedAction {
  int action = 0;
  double total_loss = 0.0;
};

// Best fixed action in hindsight; ties go to the smallest index.
FixedAction BestFixedAction(const Game& game, std::span<const int> outcomes);

// Realized regret of one trace. Can be negative.
double Regret(const Game& game, std::span<const int> actions,
              std::span<const int> outcomes);

// Smallest action whose loss is <= every other action's loss in every column.
std::optional<int> DominantAction(const Eigen::MatrixXd& loss);

// Incremental regret bookkeeping. Totals are formed from visit counts rather
// than running sums, so the result does not depend on the order of rounds and
// a trace recomputed after the fact reproduces the same bits.
class RegretAccumulator {
 public:
  explicit RegretAccumulator(const Game& game);

  // Throws kActionOutOfRange / kOutcomeOutOfRange.
  void Add(int action, int outcome);

  double LearnerLoss() const;
  FixedAction Best() const;
  double Regret() const { return LearnerLoss() - Best().total_loss; }
  std::int64_t rounds() const { return rounds_; }

 private:
  const Game* game_;
  std::vector<std::int64_t> pair_counts_;     // N x M, row-major
  std::vector<std::int64_t> outcome_counts_;  // M
  std::int64_t rounds_ = 0;
};

// Per-round record of one simulation.
struct RunTrace {
  std::vector<int> actions;
  std::vector<int> outcomes;
  std::vector<FeedbackSymbol> feedback;
  std::vector<double> losses;
  std::vector<double> cumulative_regret;
  // Loss expected under the learner's action distribution at each round,
  // given that round's outcome.
  std::vector<double> expected_losses;
  // Sum of expected_losses minus the best fixed action's loss: the regret
  // averaged over the learner's own randomization for this outcome sequence.
  double expected_regret = 0.0;

  std::int64_t horizon() const { return static_cast<std::int64_t>(actions.size()); }
  double regret() const {
    return cumulative_regret.empty() ? 0.0 : cumulative_regret.back();
  }
  // Number of rounds in which the given action was played.
  std::int64_t CountAction(int action) const;
};

}  // namespace pmgames

#endif  // PMGAMES_GAME_H_
