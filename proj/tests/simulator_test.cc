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
#include <memory>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "pmgames/classification.h"
#include "pmgames/simulator.h"
#include "test_util.h"

namespace pmgames {
namespace {

using testing::ThrownCode;

std::shared_ptr<const Game> Shared(Game g) { return std::make_shared<const Game>(std::move(g)); }

TEST_CASE("Run with a constant learner") {
  const Game g = testing::EqOneGame();
  ConstantLearner c(0);
  const std::vector<int> outcomes{0, 1, 1, 0, 1};
  const RunTrace trace = Run(g, c, outcomes, 3);
  CHECK(trace.actions == std::vector<int>(5, 0));
  CHECK(trace.outcomes == outcomes);
  CHECK(trace.losses == std::vector<double>(5, 1.0));
  CHECK(trace.feedback[1] == FeedbackSymbol(2));
  CHECK(trace.cumulative_regret.back() == trace.regret());
  CHECK(trace.regret() == doctest::Approx(Regret(g, trace.actions, outcomes)));
  CHECK(trace.expected_regret == trace.regret());
  CHECK(trace.CountAction(0) == 5);
  CHECK(ThrownCode([&] { Run(g, c, std::vector<int>{2}, 0); }) ==
        ErrorCode::kOutcomeOutOfRange);
}

TEST_CASE("Run traces are reproducible") {
  auto reduction = std::make_shared<const BanditReduction>(ReduceToBandit(testing::AppleGame()));
  const std::vector<int> outcomes = SampleOutcomes(Distribution({0.5, 0.5}), 2000, 77);
  auto play = [&](std::uint64_t seed) {
    ReductionWrapper w(reduction, std::make_unique<Exp3>());
    return Run(testing::AppleGame(), w, outcomes, seed);
  };
  const RunTrace a = play(11), b = play(11), c = play(12);
  CHECK(a.actions == b.actions);
  CHECK(a.cumulative_regret == b.cumulative_regret);
  CHECK(a.expected_losses == b.expected_losses);
  CHECK(a.actions != c.actions);
}

TEST_CASE("Run records cumulative regret and expected losses") {
  const Game g = testing::FullInformationGame();
  Ewa ewa(g);
  std::vector<int> alternating(1000);
  for (int t = 0; t < 1000; ++t) alternating[t] = t % 2;
  const RunTrace trace = Run(g, ewa, alternating, 21);
  CHECK(trace.cumulative_regret.size() == 1000);
  double total = 0.0;
  for (double x : trace.expected_losses) total += x;
  CHECK(trace.expected_regret == doctest::Approx(total - BestFixedAction(g, alternating).total_loss));
  const double bound = std::sqrt(500.0 * std::log(2.0));
  CHECK(trace.expected_regret <= bound);
  for (size_t t = 0; t < trace.losses.size(); ++t) {
    CHECK(trace.losses[t] == g.Loss(trace.actions[t], alternating[t]));
  }
}

TEST_CASE("LearnerSpec tokens") {
  CHECK(LearnerSpec::Parse("exp3").kind == LearnerSpec::Kind::kExp3);
  CHECK(LearnerSpec::Parse("exp3-raw").kind == LearnerSpec::Kind::kExp3Raw);
  CHECK(LearnerSpec::Parse("ewa").kind == LearnerSpec::Kind::kEwa);
  CHECK(LearnerSpec::Parse("uniform").kind == LearnerSpec::Kind::kUniform);
  const LearnerSpec c = LearnerSpec::Parse("constant:2");
  CHECK(c.kind == LearnerSpec::Kind::kConstant);
  CHECK(c.constant_action == 1);
  for (const char* token : {"exp3", "exp3-raw", "ewa", "uniform", "constant:3"}) {
    CHECK(LearnerSpec::Parse(token).Token() == token);
  }
  for (const char* bad : {"", "exp4", "constant:", "constant:0", "constant:x", "constant:1x"}) {
    CAPTURE(bad);
    CHECK(ThrownCode([&] { LearnerSpec::Parse(bad); }) == ErrorCode::kPreconditionViolated);
  }
}

TEST_CASE("MakeLearner") {
  CHECK(MakeLearner(LearnerSpec::Parse("exp3"), testing::AppleGame())->Name() ==
        "wrapped-exp3");
  CHECK(ThrownCode([] {
          MakeLearner(LearnerSpec::Parse("exp3"), testing::HardConstantGame());
        }) == ErrorCode::kNotReducible);
  CHECK(ThrownCode([] { MakeLearner(LearnerSpec::Parse("exp3"), testing::EqOneGame()); }) ==
        ErrorCode::kWrongArity);
  CHECK(ThrownCode([] { MakeLearner(LearnerSpec::Parse("ewa"), testing::AppleGame()); }) ==
        ErrorCode::kNotFullInformation);
  CHECK(MakeLearner(LearnerSpec::Parse("constant:1"), testing::EqOneGame())->Name() ==
        "constant:1");
}

TEST_CASE("AdversarySpec") {
  const AdversarySpec fixed = AdversarySpec::Fixed({0, 1, 1});
  CHECK(fixed.Outcomes(7, 0) == std::vector<int>{0, 1, 1, 0, 1, 1, 0});
  CHECK(fixed.Label() == "cycle:1,2,2");
  CHECK(fixed.num_laws() == 1);
  const AdversarySpec iid = AdversarySpec::Iid(Distribution({0.5, 0.5}));
  CHECK(iid.Outcomes(100, 4) == SampleOutcomes(Distribution({0.5, 0.5}), 100, 4));
  CHECK(iid.Label() == "iid:0.5,0.5");
  CHECK(ThrownCode([&] { iid.Outcomes(10, 0, 1); }) == ErrorCode::kPreconditionViolated);
  CHECK(ThrownCode([] { AdversarySpec::Fixed({}).Outcomes(3, 0); }) ==
        ErrorCode::kPreconditionViolated);
}

ExperimentConfig BaseConfig(Game g, const char* learner) {
  ExperimentConfig config;
  config.game = Shared(std::move(g));
  config.learner = LearnerSpec::Parse(learner);
  config.horizons = {200};
  config.num_seeds = 8;
  config.adversary = AdversarySpec::Iid(Distribution({0.5, 0.5}));
  return config;
}

TEST_CASE("ExperimentConfig validation") {
  ExperimentConfig config = BaseConfig(testing::AppleGame(), "uniform");
  config.horizons = {100, 100};
  CHECK(ThrownCode([&] { config.Validate(); }) == ErrorCode::kPreconditionViolated);
  config.horizons = {};
  CHECK(ThrownCode([&] { config.Validate(); }) == ErrorCode::kPreconditionViolated);
  config.horizons = {10};
  config.num_seeds = 0;
  CHECK(ThrownCode([&] { config.Validate(); }) == ErrorCode::kPreconditionViolated);
  config.num_seeds = 1;
  config.adversary = AdversarySpec::Iid(Distribution({0.2, 0.3, 0.5}));
  CHECK(ThrownCode([&] { config.Validate(); }) == ErrorCode::kDimensionMismatch);
  config.adversary = AdversarySpec::Fixed({0, 2});
  CHECK(ThrownCode([&] { config.Validate(); }) == ErrorCode::kOutcomeOutOfRange);
  config.game = nullptr;
  CHECK(ThrownCode([&] { config.Validate(); }) == ErrorCode::kPreconditionViolated);
}

TEST_CASE("RunMany: constant learner on a fixed sequence has zero variance") {
  ExperimentConfig config = BaseConfig(testing::AppleGame(), "constant:1");
  config.adversary = AdversarySpec::Fixed({0, 1, 1});
  config.statistic = RegretStatistic::kRealized;
  const RunManyResult result = RunMany(config);
  CHECK(result.runs.size() == 8);
  CHECK(result.summaries[0].std_error == 0.0);
  CHECK(result.summaries[0].min == result.summaries[0].max);
}

TEST_CASE("RunMany: point-mass adversary with a fixed seed") {
  ExperimentConfig config = BaseConfig(testing::AppleGame(), "uniform");
  config.adversary = AdversarySpec::Iid(Distribution({1.0, 0.0}));
  config.adversary.fixed_seed = 5;
  config.statistic = RegretStatistic::kRealized;
  const RunManyResult result = RunMany(config);
  // Outcomes never vary; learner streams do, so second-action counts differ.
  std::set<std::int64_t> mus;
  for (const RunRecord& r : result.runs) {
    mus.insert(r.second_action_count);
    CHECK(r.regret == static_cast<double>(200 - r.second_action_count));
  }
  CHECK(mus.size() > 1);
}

TEST_CASE("RunMany: threads do not change results") {
  ExperimentConfig config = BaseConfig(testing::AppleGame(), "exp3");
  config.horizons = {64, 256};
  const RunManyResult serial = RunMany(config);
  config.threads = 3;
  const RunManyResult parallel = RunMany(config);
  REQUIRE(serial.runs.size() == parallel.runs.size());
  for (size_t k = 0; k < serial.runs.size(); ++k) {
    CHECK(serial.runs[k].regret == parallel.runs[k].regret);
    CHECK(serial.runs[k].expected_regret == parallel.runs[k].expected_regret);
    CHECK(serial.runs[k].seed_index == parallel.runs[k].seed_index);
  }
}

TEST_CASE("RunMany: exp3 mean and median are consistent") {
  ExperimentConfig config = BaseConfig(testing::AppleGame(), "exp3");
  config.horizons = {4096};
  config.num_seeds = 32;
  const RunManyResult result = RunMany(config);
  const Summary& s = result.summaries[0];
  CHECK(s.count == 32);
  CHECK(std::fabs(s.mean - s.median) <= 3 * s.std_error);
  CHECK(s.q25 <= s.median);
  CHECK(s.median <= s.q75);
}

TEST_CASE("Summarize") {
  const Summary s = Summarize({4, 1, 3, 2});
  CHECK(s.count == 4);
  CHECK(s.mean == 2.5);
  CHECK(s.median == 2.5);
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.q25 == 1.75);
  CHECK(s.q75 == 3.25);
  CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(Summarize({}).count == 0);
  CHECK(Summarize({7}).std_error == 0.0);
}

TEST_CASE("ScalingExperiment: trivial game is degenerate") {
  ExperimentConfig config = BaseConfig(testing::DominantGame(), "constant:1");
  config.horizons = {100, 200, 400};
  const ScalingReport report = ScalingExperiment(config);
  CHECK(report.degenerate);
  CHECK(!report.degenerate_reason.empty());
  for (const ScalingPoint& p : report.points) CHECK(p.summary.max == 0.0);
}

TEST_CASE("ScalingExperiment: uniform play on a pair is linear") {
  const GameClass c = Classify(testing::HardConstantGame());
  REQUIRE(c.witness);
  ExperimentConfig config = BaseConfig(testing::HardConstantGame(), "uniform");
  config.adversary = AdversarySpec::Pair(*c.witness);
  config.horizons = {1000, 2000, 4000, 8000, 16000};
  config.num_seeds = 16;
  const ScalingReport report = ScalingExperiment(config);
  REQUIRE(!report.degenerate);
  CHECK(std::fabs(report.slope - 1.0) <= 0.1);
}

TEST_CASE("LowerBoundExperiment on the constant-feedback game") {
  auto game = Shared(testing::HardConstantGame());
  const GameClass c = Classify(*game);
  REQUIRE(c.witness);
  const LowerBoundReport uniform =
      LowerBoundExperiment(game, *c.witness, LearnerSpec::Parse("uniform"), 10000, 32);
  CHECK(uniform.floor == 2500.0);
  CHECK(uniform.max_mean_regret >=
        uniform.floor - 3 * uniform.laws[uniform.worse_law].regret.std_error);

  const LowerBoundReport constant =
      LowerBoundExperiment(game, *c.witness, LearnerSpec::Parse("constant:1"), 10000, 8);
  CHECK(constant.laws[0].mu.max == 0.0);
  CHECK(constant.laws[1].mu.max == 0.0);
  CHECK(constant.max_mean_regret >= constant.floor);

  const LowerBoundReport raw =
      LowerBoundExperiment(game, *c.witness, LearnerSpec::Parse("exp3-raw"), 10000, 16);
  CHECK(raw.mu_difference == 0.0);
}

TEST_CASE("WriteRunsCsv") {
  ExperimentConfig config = BaseConfig(testing::AppleGame(), "constant:1");
  config.horizons = {10};
  config.num_seeds = 2;
  config.seed_base = 100;
  config.adversary = AdversarySpec::Fixed({0});
  std::ostringstream out;
  WriteRunsCsv(out, RunMany(config), "apple", "constant:1");
  CHECK(out.str() ==
        "game,learner,T,seed,regret,mu_T,expected_regret,law\n"
        "apple,constant:1,10,100,10,0,10,1\n"
        "apple,constant:1,10,101,10,0,10,1\n");
}

}  // namespace
}  // namespace pmgames
