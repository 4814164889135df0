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

#ifndef PMGAMES_LEARNERS_H_
#define PMGAMES_LEARNERS_H_

// Online learners for the partial-monitoring protocol. A learner sees the
// number of actions, the horizon and, after each of its moves, one feedback
// symbol. It never sees outcomes or losses.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pmgames/game.h"
#include "pmgames/random.h"
#include "pmgames/reduction.h"

namespace pmgames {

class Learner {
 public:
  virtual ~Learner() = default;

  // horizon <= 0 requests anytime operation.
  virtual void Start(int num_actions, std::int64_t horizon) = 0;
  // Draws the next action; all randomness comes from `rng`.
  virtual int Act(RandomStream& rng) = 0;
  // Called exactly once after each Act.
  virtual void Observe(const FeedbackSymbol& feedback) = 0;
  // Distribution the most recent Act sampled from.
  virtual std::vector<double> Probabilities() const = 0;
  virtual std::string Name() const = 0;
};

// Exp3 on losses. Each round samples from
//   p_i = (1 - gamma) w_i / sum(w) + gamma / N
// and the chosen action's weight is multiplied by exp(-eta * loss / p_chosen).
// Numeric feedback symbols are taken as the loss, which is exactly the bandit
// protocol. Weights are kept as logarithms.
class Exp3 : public Learner {
 public:
  struct Options {
    std::optional<double> eta;    // default sqrt(2 ln N / (T N))
    std::optional<double> gamma;  // default min(1, sqrt(N ln N / ((e - 1) T)))
  };

  Exp3() = default;
  explicit Exp3(Options options) : options_(options) {}

  void Start(int num_actions, std::int64_t horizon) override;
  int Act(RandomStream& rng) override;
  // Errors: kNotStarted, kPreconditionViolated (observe without act),
  // kLossOutOfRange.
  void Observe(const FeedbackSymbol& feedback) override;
  void ObserveLoss(double loss);
  std::vector<double> Probabilities() const override { return probabilities_; }
  std::string Name() const override { return "exp3"; }

  std::vector<double> Weights() const;
  double eta() const { return eta_; }
  double gamma() const { return gamma_; }

  static double DefaultEta(int num_actions, std::int64_t horizon);
  static double DefaultGamma(int num_actions, std::int64_t horizon);

 private:
  void BeginEpoch(std::int64_t length);

  Options options_;
  int num_actions_ = 0;
  bool anytime_ = false;
  std::int64_t epoch_length_ = 0;
  std::int64_t epoch_round_ = 0;
  double eta_ = 0.0;
  double gamma_ = 0.0;
  std::vector<double> log_weights_;
  std::vector<double> probabilities_;
  int last_action_ = -1;
};

// Exponentially weighted average forecaster for full-information games:
// every row of the feedback matrix must have pairwise distinct symbols, so
// the outcome can be decoded from the feedback and all losses updated.
class Ewa : public Learner {
 public:
  // Throws kNotFullInformation.
  explicit Ewa(const Game& game, std::optional<double> eta = std::nullopt);

  void Start(int num_actions, std::int64_t horizon) override;
  int Act(RandomStream& rng) override;
  // Errors: kNotStarted, kUnknownFeedbackSymbol.
  void Observe(const FeedbackSymbol& feedback) override;
  std::vector<double> Probabilities() const override { return probabilities_; }
  std::string Name() const override { return "ewa"; }

  // sqrt(8 ln N / T).
  static double DefaultEta(int num_actions, std::int64_t horizon);

 private:
  Eigen::MatrixXd loss_;
  FeedbackMatrix feedback_;
  std::optional<double> eta_override_;
  int num_actions_ = 0;
  bool anytime_ = false;
  double eta_ = 0.0;
  std::int64_t round_ = 0;
  std::vector<double> cumulative_loss_;
  std::vector<double> probabilities_;
  int last_action_ = -1;
};

class ConstantLearner : public Learner {
 public:
  explicit ConstantLearner(int action) : action_(action) {}

  // Throws kActionOutOfRange.
  void Start(int num_actions, std::int64_t horizon) override;
  int Act(RandomStream& rng) override;
  void Observe(const FeedbackSymbol&) override {}
  std::vector<double> Probabilities() const override;
  std::string Name() const override { return "constant:" + std::to_string(action_ + 1); }

 private:
  int action_;
  int num_actions_ = 0;
};

// Ignores feedback and plays uniformly at random.
class UniformLearner : public Learner {
 public:
  void Start(int num_actions, std::int64_t horizon) override;
  int Act(RandomStream& rng) override;
  void Observe(const FeedbackSymbol&) override {}
  std::vector<double> Probabilities() const override;
  std::string Name() const override { return "uniform"; }

 private:
  int num_actions_ = 0;
};

// Runs a bandit learner on the source game of a reduction. Each observed
// feedback symbol is translated through the reduction's per-action surrogate
// loss map; the inner learner then behaves exactly as it would on the bandit
// game.
class ReductionWrapper : public Learner {
 public:
  ReductionWrapper(std::shared_ptr<const BanditReduction> reduction,
                   std::unique_ptr<Learner> inner);

  void Start(int num_actions, std::int64_t horizon) override;
  int Act(RandomStream& rng) override;
  // Errors: kUnknownFeedbackSymbol, kPreconditionViolated (observe without
  // act).
  void Observe(const FeedbackSymbol& feedback) override;
  std::vector<double> Probabilities() const override { return inner_->Probabilities(); }
  std::string Name() const override { return "wrapped-" + inner_->Name(); }

  const BanditReduction& reduction() const { return *reduction_; }

 private:
  std::shared_ptr<const BanditReduction> reduction_;
  std::unique_ptr<Learner> inner_;
  int last_action_ = -1;
};

}  // namespace pmgames

#endif  // PMGAMES_LEARNERS_H_
