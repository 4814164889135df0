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

#include "pmgames/game.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pmgames {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kLossOutOfRange: return "LossOutOfRange";
    case ErrorCode::kOutcomeOutOfRange: return "OutcomeOutOfRange";
    case ErrorCode::kActionOutOfRange: return "ActionOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnmappedSymbol: return "UnmappedSymbol";
    case ErrorCode::kNotCanonical: return "NotCanonical";
    case ErrorCode::kWrongArity: return "WrongArity";
    case ErrorCode::kNotReducible: return "NotReducible";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kSolverError: return "SolverError";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotStarted: return "NotStarted";
    case ErrorCode::kNotFullInformation: return "NotFullInformation";
    case ErrorCode::kUnknownFeedbackSymbol: return "UnknownFeedbackSymbol";
  }
  return "Unknown";
}

// -- FeedbackSymbol -----------------------------------------------------------

double FeedbackSymbol::number() const {
  if (!is_number()) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "feedback symbol \"" + text() + "\" is not numeric");
  }
  return std::get<double>(value_);
}

const std::string& FeedbackSymbol::text() const {
  if (is_number()) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "feedback symbol " + ToString() + " is not text");
  }
  return std::get<std::string>(value_);
}

std::string FeedbackSymbol::ToString() const {
  if (is_text()) return std::get<std::string>(value_);
  std::ostringstream out;
  out.precision(17);
  out << std::get<double>(value_);
  return out.str();
}

// -- FeedbackMatrix -----------------------------------------------------------

FeedbackMatrix::FeedbackMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

FeedbackMatrix::FeedbackMatrix(
    std::initializer_list<std::initializer_list<FeedbackSymbol>> rows) {
  std::vector<std::vector<FeedbackSymbol>> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  *this = FromRows(copy);
}

FeedbackMatrix FeedbackMatrix::FromRows(
    const std::vector<std::vector<FeedbackSymbol>>& rows) {
  const int num_rows = static_cast<int>(rows.size());
  const int num_cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  FeedbackMatrix out(num_rows, num_cols);
  for (int i = 0; i < num_rows; ++i) {
    if (static_cast<int>(rows[i].size()) != num_cols) {
      throw GameError(ErrorCode::kDimensionMismatch,
                      "feedback row " + std::to_string(i + 1) + " has " +
                          std::to_string(rows[i].size()) + " entries, expected " +
                          std::to_string(num_cols));
    }
    for (int j = 0; j < num_cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<FeedbackSymbol> FeedbackMatrix::Row(int i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

// -- Validation ---------------------------------------------------------------

Game ValidateGame(const Eigen::MatrixXd& loss, const FeedbackMatrix& feedback,
                  std::string name, GameOrigin origin) {
  if (loss.rows() < 1 || loss.cols() < 1) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "a game needs at least one action and one outcome");
  }
  if (loss.rows() != feedback.rows() || loss.cols() != feedback.cols()) {
    std::ostringstream msg;
    msg << "loss is " << loss.rows() << "x" << loss.cols() << " but feedback is "
        << feedback.rows() << "x" << feedback.cols();
    throw GameError(ErrorCode::kDimensionMismatch, msg.str());
  }
  for (int i = 0; i < loss.rows(); ++i) {
    for (int j = 0; j < loss.cols(); ++j) {
      const double x = loss(i, j);
      if (!std::isfinite(x)) {
        throw GameError(ErrorCode::kNonFiniteEntry,
                        "loss(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is not finite");
      }
      if (origin == GameOrigin::kInput && (x < 0.0 || x > 1.0)) {
        throw GameError(ErrorCode::kLossOutOfRange,
                        "loss(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") = " + std::to_string(x) +
                            " is outside [0,1]");
      }
      const FeedbackSymbol& h = feedback(i, j);
      if (h.is_number() && !std::isfinite(h.number())) {
        throw GameError(ErrorCode::kNonFiniteEntry,
                        "feedback(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is not finite");
      }
    }
  }
  Game game;
  game.name_ = std::move(name);
  game.loss_ = loss;
  game.feedback_ = feedback;
  game.origin_ = origin;
  return game;
}

Game ValidateGame(const std::vector<std::vector<double>>& loss,
                  const std::vector<std::vector<FeedbackSymbol>>& feedback,
                  std::string name, GameOrigin origin) {
  const int rows = static_cast<int>(loss.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(loss.front().size());
  Eigen::MatrixXd dense(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(loss[i].size()) != cols) {
      throw GameError(ErrorCode::kDimensionMismatch,
                      "loss row " + std::to_string(i + 1) + " is ragged");
    }
    for (int j = 0; j < cols; ++j) dense(i, j) = loss[i][j];
  }
  if (static_cast<int>(feedback.size()) != rows) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "loss has " + std::to_string(rows) + " rows but feedback has " +
                        std::to_string(feedback.size()));
  }
  return ValidateGame(dense, FeedbackMatrix::FromRows(feedback), std::move(name),
                      origin);
}

// -- Regret -------------------------------------------------------------------

RegretAccumulator::RegretAccumulator(const Game& game)
    : game_(&game),
      pair_counts_(static_cast<size_t>(game.num_actions()) * game.num_outcomes(), 0),
      outcome_counts_(game.num_outcomes(), 0) {}

void RegretAccumulator::Add(int action, int outcome) {
  if (action < 0 || action >= game_->num_actions()) {
    throw GameError(ErrorCode::kActionOutOfRange,
                    "action index " + std::to_string(action) + " out of range");
  }
  if (outcome < 0 || outcome >= game_->num_outcomes()) {
    throw GameError(ErrorCode::kOutcomeOutOfRange,
                    "outcome index " + std::to_string(outcome) + " out of range");
  }
  ++pair_counts_[action * game_->num_outcomes() + outcome];
  ++outcome_counts_[outcome];
  ++rounds_;
}

double RegretAccumulator::LearnerLoss() const {
  const int n = game_->num_actions();
  const int m = game_->num_outcomes();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const std::int64_t c = pair_counts_[i * m + j];
      if (c != 0) total += static_cast<double>(c) * game_->Loss(i, j);
    }
  }
  return total;
}

FixedAction RegretAccumulator::Best() const {
  const int n = game_->num_actions();
  const int m = game_->num_outcomes();
  FixedAction best;
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      if (outcome_counts_[j] != 0) {
        total += static_cast<double>(outcome_counts_[j]) * game_->Loss(i, j);
      }
    }
    if (i == 0 || total < best.total_loss) best = {i, total};
  }
  return best;
}

FixedAction BestFixedAction(const Game& game, std::span<const int> outcomes) {
  RegretAccumulator acc(game);
  for (int j : outcomes) acc.Add(0, j);
  return acc.Best();
}

double Regret(const Game& game, std::span<const int> actions,
              std::span<const int> outcomes) {
  if (actions.size() != outcomes.size()) {
    throw GameError(ErrorCode::kLengthMismatch,
                    std::to_string(actions.size()) + " actions vs " +
                        std::to_string(outcomes.size()) + " outcomes");
  }
  RegretAccumulator acc(game);
  for (size_t t = 0; t < actions.size(); ++t) acc.Add(actions[t], outcomes[t]);
  return acc.Regret();
}

std::optional<int> DominantAction(const Eigen::MatrixXd& loss) {
  for (int i = 0; i < loss.rows(); ++i) {
    bool dominant = true;
    for (int other = 0; other < loss.rows() && dominant; ++other) {
      for (int j = 0; j < loss.cols(); ++j) {
        if (loss(i, j) > loss(other, j)) {
          dominant = false;
          break;
        }
      }
    }
    if (dominant) return i;
  }
  return std::nullopt;
}

std::int64_t RunTrace::CountAction(int action) const {
  return std::count(actions.begin(), actions.end(), action);
}

}  // namespace pmgames
