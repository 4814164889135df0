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

#ifndef PMGAMES_SIMULATOR_H_
#define PMGAMES_SIMULATOR_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmgames/adversary.h"
#include "pmgames/game.h"
#include "pmgames/learners.h"
#include "pmgames/random.h"
#include "pmgames/reduction.h"

namespace pmgames {

// -- Single runs --------------------------------------------------------------

// Plays the protocol: each round the learner acts, receives only the feedback
// symbol of (action, outcome) and the loss is booked on its behalf. The
// learner is started with `announced_horizon` when given (<= 0 means
// anytime), otherwise with the number of outcomes.
RunTrace Run(const Game& game, Learner& learner, std::span<const int> outcomes,
             RandomStream& rng,
             std::optional<std::int64_t> announced_horizon = std::nullopt);
RunTrace Run(const Game& game, Learner& learner, std::span<const int> outcomes,
             std::uint64_t learner_seed,
             std::optional<std::int64_t> announced_horizon = std::nullopt);

// -- Learner and adversary selection ------------------------------------------

struct LearnerSpec {
  enum class Kind {
    kExp3,     // Exp3 behind the bandit reduction of the game
    kExp3Raw,  // Exp3 reading the game's numeric feedback as its loss
    kEwa,
    kConstant,
    kUniform,
  };
  Kind kind = Kind::kExp3;
  int constant_action = 0;  // 0-based
  std::optional<double> eta;
  std::optional<double> gamma;
  // Horizon announced to the learner; <= 0 requests anytime mode.
  std::optional<std::int64_t> horizon;

  // Tokens: exp3, exp3-raw, ewa, uniform, constant:<i> (1-based). Throws
  // kPreconditionViolated for anything else.
  static LearnerSpec Parse(std::string_view token);
  std::string Token() const;
};

// A fresh learner for `game`. kExp3 uses `reduction` when given and reduces
// the game otherwise (throwing kWrongArity / kNotReducible).
std::unique_ptr<Learner> MakeLearner(const LearnerSpec& spec, const Game& game,
                                     std::shared_ptr<const BanditReduction> reduction = nullptr,
                                     const SolveOptions& options = {});

struct AdversarySpec {
  enum class Kind {
    kFixed,  // a fixed outcome sequence, repeated cyclically
    kIid,    // i.i.d. draws from one law
    kPair,   // the two laws of an indistinguishable pair
  };
  Kind kind = Kind::kIid;
  std::vector<int> sequence;
  std::vector<Distribution> laws;
  // When set, every run draws outcomes with this seed instead of a
  // per-run one.
  std::optional<std::uint64_t> fixed_seed;

  static AdversarySpec Fixed(std::vector<int> sequence);
  static AdversarySpec Iid(Distribution law);
  static AdversarySpec Pair(const IndistinguishablePair& pair);

  int num_laws() const { return kind == Kind::kPair ? 2 : 1; }
  std::vector<int> Outcomes(std::int64_t horizon, std::uint64_t seed, int law = 0) const;
  std::string Label() const;
};

// -- Experiments --------------------------------------------------------------

enum class RegretStatistic {
  kRealized,  // regret of the realized action sequence
  kExpected,  // averaged over the learner's randomization given the outcomes
};

struct ExperimentConfig {
  std::shared_ptr<const Game> game;
  LearnerSpec learner;
  std::vector<std::int64_t> horizons;  // strictly increasing
  int num_seeds = 1;
  std::uint64_t seed_base = 0;
  AdversarySpec adversary;
  RegretStatistic statistic = RegretStatistic::kExpected;
  SolveOptions solve;
  // Reused for kExp3 learners; computed from the game when null.
  std::shared_ptr<const BanditReduction> reduction;
  int threads = 1;

  // Throws kPreconditionViolated.
  void Validate() const;
};

struct RunRecord {
  std::int64_t horizon = 0;
  int seed_index = 0;
  std::uint64_t seed = 0;  // seed_base + seed_index
  int law = 0;  // 0 or 1; only kPair adversaries use 1
  double regret = 0.0;
  double expected_regret = 0.0;
  std::int64_t second_action_count = 0;  // mu_T for this run
};

struct Summary {
  int count = 0;
  double mean = 0.0;
  double median = 0.0;
  double std_error = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Summary Summarize(std::vector<double> values);

struct RunManyResult {
  std::vector<RunRecord> runs;  // ordered by (horizon, seed, law)
  // Statistic of each (horizon, seed): for kPair adversaries, the larger of
  // the two laws' values.
  std::vector<std::vector<double>> per_seed;  // [horizon index][seed index]
  std::vector<Summary> summaries;             // one per horizon
};

// Runs every (horizon, seed) pair. Learner and adversary seeds derive from
// (seed_base, seed index, role), so a given seed index sees the same random
// streams at every horizon.
RunManyResult RunMany(const ExperimentConfig& config);

struct ScalingPoint {
  std::int64_t horizon = 0;
  Summary summary;
};

struct ScalingReport {
  std::vector<ScalingPoint> points;
  // Least-squares fit of log(median regret) against log(T).
  bool degenerate = false;
  std::string degenerate_reason;
  double slope = 0.0;
  double intercept = 0.0;
  // Same fit through the per-T lower and upper quartiles.
  std::optional<double> slope_q25;
  std::optional<double> slope_q75;
  RunManyResult runs;
};

// Non-positive medians make the slope undefined; that is reported through
// `degenerate`, not thrown.
ScalingReport ScalingExperiment(const ExperimentConfig& config);

struct LawEstimate {
  Summary regret;
  Summary mu;
};

struct LowerBoundReport {
  std::int64_t horizon = 0;
  int num_seeds = 0;
  IndistinguishablePair pair;
  std::array<LawEstimate, 2> laws;
  int worse_law = 0;  // index of the law with the larger mean regret
  double max_mean_regret = 0.0;
  double floor = 0.0;  // eps ell^T v T / 2
  double mu_difference = 0.0;
  double mu_difference_std_error = 0.0;
  RunManyResult runs;
};

// Estimates regret and mu_T (plays of the second action) under both laws of
// the pair, with shared learner streams across the two laws.
LowerBoundReport LowerBoundExperiment(std::shared_ptr<const Game> game,
                                      const IndistinguishablePair& pair,
                                      const LearnerSpec& learner,
                                      std::int64_t horizon, int num_seeds,
                                      std::uint64_t seed_base = 0,
                                      RegretStatistic statistic = RegretStatistic::kExpected,
                                      const SolveOptions& solve = {});

// One row per run: game,learner,T,seed,regret,mu_T,expected_regret,law.
// Laws are 1-based; mu_T counts plays of the second action.
void WriteRunsCsv(std::ostream& out, const RunManyResult& result,
                  std::string_view game_name, std::string_view learner_token);

}  // namespace pmgames

#endif  // PMGAMES_SIMULATOR_H_
