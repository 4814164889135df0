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

#include "pmgames/learners.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pmgames {
namespace {

void RequireActionCount(int num_actions) {
  if (num_actions < 1) {
    throw GameError(ErrorCode::kPreconditionViolated, "a learner needs >= 1 action");
  }
}

// Softmax of `scores` with max subtraction.
std::vector<double> Softmax(const std::vector<double>& scores) {
  const double top = *std::max_element(scores.begin(), scores.end());
  std::vector<double> p(scores.size());
  double total = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    p[i] = std::exp(scores[i] - top);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

}  // namespace

// -- Exp3 ---------------------------------------------------------------------

double Exp3::DefaultEta(int num_actions, std::int64_t horizon) {
  const double n = num_actions;
  return std::sqrt(2.0 * std::log(n) / (static_cast<double>(horizon) * n));
}

double Exp3::DefaultGamma(int num_actions, std::int64_t horizon) {
  const double n = num_actions;
  return std::min(1.0, std::sqrt(n * std::log(n) /
                                 ((std::numbers::e - 1.0) * static_cast<double>(horizon))));
}

void Exp3::Start(int num_actions, std::int64_t horizon) {
  RequireActionCount(num_actions);
  if (options_.eta && !(*options_.eta >= 0.0)) {
    throw GameError(ErrorCode::kPreconditionViolated, "eta must be >= 0");
  }
  if (options_.gamma && !(*options_.gamma >= 0.0 && *options_.gamma <= 1.0)) {
    throw GameError(ErrorCode::kPreconditionViolated, "gamma must lie in [0, 1]");
  }
  num_actions_ = num_actions;
  anytime_ = horizon <= 0;
  BeginEpoch(anytime_ ? 1 : horizon);
}

void Exp3::BeginEpoch(std::int64_t length) {
  epoch_length_ = length;
  epoch_round_ = 0;
  eta_ = options_.eta.value_or(DefaultEta(num_actions_, length));
  gamma_ = options_.gamma.value_or(DefaultGamma(num_actions_, length));
  log_weights_.assign(num_actions_, 0.0);
  probabilities_.assign(num_actions_, 1.0 / num_actions_);
  last_action_ = -1;
}

int Exp3::Act(RandomStream& rng) {
  if (num_actions_ == 0) throw GameError(ErrorCode::kNotStarted, "exp3 not started");
  // Doubling trick: restart with a horizon twice as long.
  if (anytime_ && epoch_round_ == epoch_length_) BeginEpoch(2 * epoch_length_);
  const std::vector<double> w = Softmax(log_weights_);
  for (int i = 0; i < num_actions_; ++i) {
    probabilities_[i] = (1.0 - gamma_) * w[i] + gamma_ / num_actions_;
  }
  last_action_ = rng.Categorical(probabilities_);
  ++epoch_round_;
  return last_action_;
}

void Exp3::Observe(const FeedbackSymbol& feedback) {
  if (!feedback.is_number()) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "exp3 reads numeric feedback as the loss, got \"" +
                        feedback.ToString() + "\"");
  }
  ObserveLoss(feedback.number());
}

void Exp3::ObserveLoss(double loss) {
  if (num_actions_ == 0) throw GameError(ErrorCode::kNotStarted, "exp3 not started");
  if (last_action_ < 0) {
    throw GameError(ErrorCode::kPreconditionViolated, "observe called before act");
  }
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw GameError(ErrorCode::kLossOutOfRange,
                    "exp3 loss " + std::to_string(loss) + " outside [0,1]");
  }
  const double estimate = loss / probabilities_[last_action_];
  log_weights_[last_action_] -= eta_ * estimate;
  last_action_ = -1;
}

std::vector<double> Exp3::Weights() const {
  std::vector<double> w(log_weights_.size());
  std::transform(log_weights_.begin(), log_weights_.end(), w.begin(),
                 [](double x) { return std::exp(x); });
  return w;
}

// -- Ewa ----------------------------------------------------------------------

Ewa::Ewa(const Game& game, std::optional<double> eta)
    : loss_(game.loss()), feedback_(game.feedback()), eta_override_(eta) {
  for (int i = 0; i < feedback_.rows(); ++i) {
    for (int j = 0; j < feedback_.cols(); ++j) {
      for (int k = j + 1; k < feedback_.cols(); ++k) {
        if (feedback_(i, j) == feedback_(i, k)) {
          throw GameError(ErrorCode::kNotFullInformation,
                          "row " + std::to_string(i + 1) + " repeats symbol " +
                              feedback_(i, j).ToString());
        }
      }
    }
  }
}

double Ewa::DefaultEta(int num_actions, std::int64_t horizon) {
  return std::sqrt(8.0 * std::log(static_cast<double>(num_actions)) /
                   static_cast<double>(horizon));
}

void Ewa::Start(int num_actions, std::int64_t horizon) {
  RequireActionCount(num_actions);
  if (num_actions != loss_.rows()) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "ewa was built for a game with " + std::to_string(loss_.rows()) +
                        " actions");
  }
  num_actions_ = num_actions;
  anytime_ = horizon <= 0;
  eta_ = eta_override_.value_or(anytime_ ? 0.0 : DefaultEta(num_actions, horizon));
  round_ = 0;
  cumulative_loss_.assign(num_actions, 0.0);
  probabilities_.assign(num_actions, 1.0 / num_actions);
  last_action_ = -1;
}

int Ewa::Act(RandomStream& rng) {
  if (num_actions_ == 0) throw GameError(ErrorCode::kNotStarted, "ewa not started");
  ++round_;
  if (anytime_ && !eta_override_) eta_ = DefaultEta(num_actions_, round_);
  std::vector<double> scores(num_actions_);
  for (int i = 0; i < num_actions_; ++i) scores[i] = -eta_ * cumulative_loss_[i];
  probabilities_ = Softmax(scores);
  last_action_ = rng.Categorical(probabilities_);
  return last_action_;
}

void Ewa::Observe(const FeedbackSymbol& feedback) {
  if (num_actions_ == 0) throw GameError(ErrorCode::kNotStarted, "ewa not started");
  if (last_action_ < 0) {
    throw GameError(ErrorCode::kPreconditionViolated, "observe called before act");
  }
  int outcome = -1;
  for (int j = 0; j < feedback_.cols(); ++j) {
    if (feedback_(last_action_, j) == feedback) {
      outcome = j;
      break;
    }
  }
  if (outcome < 0) {
    throw GameError(ErrorCode::kUnknownFeedbackSymbol,
                    "symbol " + feedback.ToString() + " does not occur in row " +
                        std::to_string(last_action_ + 1));
  }
  for (int i = 0; i < num_actions_; ++i) cumulative_loss_[i] += loss_(i, outcome);
  last_action_ = -1;
}

// -- Baselines ----------------------------------------------------------------

void ConstantLearner::Start(int num_actions, std::int64_t) {
  RequireActionCount(num_actions);
  if (action_ < 0 || action_ >= num_actions) {
    throw GameError(ErrorCode::kActionOutOfRange,
                    "constant action " + std::to_string(action_ + 1) + " with only " +
                        std::to_string(num_actions) + " actions");
  }
  num_actions_ = num_actions;
}

int ConstantLearner::Act(RandomStream&) {
  if (num_actions_ == 0) throw GameError(ErrorCode::kNotStarted, "not started");
  return action_;
}

std::vector<double> ConstantLearner::Probabilities() const {
  std::vector<double> p(num_actions_, 0.0);
  if (num_actions_ > 0) p[action_] = 1.0;
  return p;
}

void UniformLearner::Start(int num_actions, std::int64_t) {
  RequireActionCount(num_actions);
  num_actions_ = num_actions;
}

int UniformLearner::Act(RandomStream& rng) {
  if (num_actions_ == 0) throw GameError(ErrorCode::kNotStarted, "not started");
  return std::min(num_actions_ - 1, static_cast<int>(rng.Uniform() * num_actions_));
}

std::vector<double> UniformLearner::Probabilities() const {
  return std::vector<double>(num_actions_, 1.0 / std::max(num_actions_, 1));
}

// -- ReductionWrapper ---------------------------------------------------------

ReductionWrapper::ReductionWrapper(std::shared_ptr<const BanditReduction> reduction,
                                   std::unique_ptr<Learner> inner)
    : reduction_(std::move(reduction)), inner_(std::move(inner)) {
  if (!reduction_ || !inner_) {
    throw GameError(ErrorCode::kPreconditionViolated, "wrapper needs a reduction and a learner");
  }
  if (!VerifyReduction(*reduction_).passed()) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "reduction certificate failed verification");
  }
}

void ReductionWrapper::Start(int num_actions, std::int64_t horizon) {
  if (num_actions != 2) {
    throw GameError(ErrorCode::kWrongArity, "the reduction wrapper plays 2 actions");
  }
  inner_->Start(num_actions, horizon);
  last_action_ = -1;
}

int ReductionWrapper::Act(RandomStream& rng) {
  last_action_ = inner_->Act(rng);
  return last_action_;
}

void ReductionWrapper::Observe(const FeedbackSymbol& feedback) {
  if (last_action_ < 0) {
    throw GameError(ErrorCode::kPreconditionViolated, "observe called before act");
  }
  const std::optional<double> loss =
      reduction_->feedback_to_loss[last_action_].Find(feedback);
  if (!loss) {
    throw GameError(ErrorCode::kUnknownFeedbackSymbol,
                    "symbol " + feedback.ToString() + " is not in the surrogate map of action " +
                        std::to_string(last_action_ + 1));
  }
  last_action_ = -1;
  inner_->Observe(FeedbackSymbol(*loss));
}

}  // namespace pmgames
