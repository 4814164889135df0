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

#include "pmgames/simulator.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace pmgames {
namespace {

// Runs fn(0..n-1) on up to `threads` threads. Each index writes only its own
// result slot, so the output does not depend on scheduling.
template <typename Fn>
void ParallelFor(int n, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += threads) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double Quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit FitLine(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

std::optional<double> LogLogSlope(const std::vector<ScalingPoint>& points,
                                  double Summary::*field) {
  std::vector<double> x, y;
  for (const ScalingPoint& p : points) {
    const double value = p.summary.*field;
    if (!(value > 0.0)) return std::nullopt;
    x.push_back(std::log(static_cast<double>(p.horizon)));
    y.push_back(std::log(value));
  }
  return FitLine(x, y).slope;
}

void AppendNumber(std::string& out, double x) {
  char buffer[32];
  const int n = std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  out.append(buffer, n);
}

}  // namespace

// -- Run ----------------------------------------------------------------------

RunTrace Run(const Game& game, Learner& learner, std::span<const int> outcomes,
             RandomStream& rng, std::optional<std::int64_t> announced_horizon) {
  const std::int64_t horizon = static_cast<std::int64_t>(outcomes.size());
  const int n = game.num_actions();
  for (int j : outcomes) {
    if (j < 0 || j >= game.num_outcomes()) {
      throw GameError(ErrorCode::kOutcomeOutOfRange,
                      "outcome index " + std::to_string(j) + " out of range");
    }
  }
  learner.Start(n, announced_horizon.value_or(horizon));

  RunTrace trace;
  trace.actions.reserve(horizon);
  trace.outcomes.assign(outcomes.begin(), outcomes.end());
  trace.feedback.reserve(horizon);
  trace.losses.reserve(horizon);
  trace.cumulative_regret.reserve(horizon);
  trace.expected_losses.reserve(horizon);

  RegretAccumulator acc(game);
  double expected_total = 0.0;
  for (std::int64_t t = 0; t < horizon; ++t) {
    const int action = learner.Act(rng);
    if (action < 0 || action >= n) {
      throw GameError(ErrorCode::kActionOutOfRange,
                      learner.Name() + " chose action " + std::to_string(action));
    }
    const std::vector<double> p = learner.Probabilities();
    const int outcome = outcomes[t];
    const FeedbackSymbol& feedback = game.Feedback(action, outcome);
    learner.Observe(feedback);

    double expected = 0.0;
    for (int i = 0; i < n && i < static_cast<int>(p.size()); ++i) {
      expected += p[i] * game.Loss(i, outcome);
    }
    expected_total += expected;
    acc.Add(action, outcome);

    trace.actions.push_back(action);
    trace.feedback.push_back(feedback);
    trace.losses.push_back(game.Loss(action, outcome));
    trace.cumulative_regret.push_back(acc.Regret());
    trace.expected_losses.push_back(expected);
  }
  trace.expected_regret = expected_total - acc.Best().total_loss;
  return trace;
}

RunTrace Run(const Game& game, Learner& learner, std::span<const int> outcomes,
             std::uint64_t learner_seed, std::optional<std::int64_t> announced_horizon) {
  RandomStream rng(learner_seed);
  return Run(game, learner, outcomes, rng, announced_horizon);
}

// -- LearnerSpec --------------------------------------------------------------

LearnerSpec LearnerSpec::Parse(std::string_view token) {
  LearnerSpec spec;
  if (token == "exp3") {
    spec.kind = Kind::kExp3;
  } else if (token == "exp3-raw") {
    spec.kind = Kind::kExp3Raw;
  } else if (token == "ewa") {
    spec.kind = Kind::kEwa;
  } else if (token == "uniform") {
    spec.kind = Kind::kUniform;
  } else if (token.starts_with("constant:")) {
    const std::string_view digits = token.substr(9);
    int action = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), action);
    if (ec != std::errc() || end != digits.data() + digits.size() || action < 1) {
      throw GameError(ErrorCode::kPreconditionViolated,
                      "bad constant learner \"" + std::string(token) + "\"");
    }
    spec.kind = Kind::kConstant;
    spec.constant_action = action - 1;
  } else {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "unknown learner \"" + std::string(token) +
                        "\" (expected exp3, exp3-raw, ewa, uniform or constant:<i>)");
  }
  return spec;
}

std::string LearnerSpec::Token() const {
  switch (kind) {
    case Kind::kExp3: return "exp3";
    case Kind::kExp3Raw: return "exp3-raw";
    case Kind::kEwa: return "ewa";
    case Kind::kUniform: return "uniform";
    case Kind::kConstant: return "constant:" + std::to_string(constant_action + 1);
  }
  return "unknown";
}

std::unique_ptr<Learner> MakeLearner(const LearnerSpec& spec, const Game& game,
                                     std::shared_ptr<const BanditReduction> reduction,
                                     const SolveOptions& options) {
  switch (spec.kind) {
    case LearnerSpec::Kind::kExp3: {
      if (!reduction) {
        reduction = std::make_shared<const BanditReduction>(ReduceToBandit(game, options));
      }
      return std::make_unique<ReductionWrapper>(
          std::move(reduction),
          std::make_unique<Exp3>(Exp3::Options{spec.eta, spec.gamma}));
    }
    case LearnerSpec::Kind::kExp3Raw:
      return std::make_unique<Exp3>(Exp3::Options{spec.eta, spec.gamma});
    case LearnerSpec::Kind::kEwa:
      return std::make_unique<Ewa>(game, spec.eta);
    case LearnerSpec::Kind::kConstant:
      return std::make_unique<ConstantLearner>(spec.constant_action);
    case LearnerSpec::Kind::kUniform:
      return std::make_unique<UniformLearner>();
  }
  throw GameError(ErrorCode::kPreconditionViolated, "unknown learner kind");
}

// -- AdversarySpec ------------------------------------------------------------

AdversarySpec AdversarySpec::Fixed(std::vector<int> sequence) {
  AdversarySpec spec;
  spec.kind = Kind::kFixed;
  spec.sequence = std::move(sequence);
  return spec;
}

AdversarySpec AdversarySpec::Iid(Distribution law) {
  AdversarySpec spec;
  spec.kind = Kind::kIid;
  spec.laws.push_back(std::move(law));
  return spec;
}

AdversarySpec AdversarySpec::Pair(const IndistinguishablePair& pair) {
  AdversarySpec spec;
  spec.kind = Kind::kPair;
  spec.laws = {pair.p1, pair.p2};
  return spec;
}

std::vector<int> AdversarySpec::Outcomes(std::int64_t horizon, std::uint64_t seed,
                                         int law) const {
  if (kind == Kind::kFixed) {
    if (sequence.empty()) {
      throw GameError(ErrorCode::kPreconditionViolated, "empty outcome sequence");
    }
    std::vector<int> out(static_cast<size_t>(horizon));
    for (std::int64_t t = 0; t < horizon; ++t) out[t] = sequence[t % sequence.size()];
    return out;
  }
  if (law < 0 || law >= static_cast<int>(laws.size())) {
    throw GameError(ErrorCode::kPreconditionViolated, "adversary has no such law");
  }
  return SampleOutcomes(laws[law], horizon, fixed_seed.value_or(seed));
}

std::string AdversarySpec::Label() const {
  auto join = [](const Distribution& d) {
    std::string s;
    for (int k = 0; k < d.size(); ++k) {
      if (k) s += ",";
      AppendNumber(s, d[k]);
    }
    return s;
  };
  switch (kind) {
    case Kind::kFixed: {
      std::string s = "cycle:";
      for (size_t t = 0; t < sequence.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(sequence[t] + 1);
      }
      return s;
    }
    case Kind::kIid: return "iid:" + join(laws.at(0));
    case Kind::kPair: return "pair:" + join(laws.at(0)) + "|" + join(laws.at(1));
  }
  return "unknown";
}

// -- Experiments --------------------------------------------------------------

void ExperimentConfig::Validate() const {
  if (!game) throw GameError(ErrorCode::kPreconditionViolated, "experiment has no game");
  if (horizons.empty()) {
    throw GameError(ErrorCode::kPreconditionViolated, "no horizons given");
  }
  for (size_t i = 0; i < horizons.size(); ++i) {
    if (horizons[i] < 0 || (i > 0 && horizons[i] <= horizons[i - 1])) {
      throw GameError(ErrorCode::kPreconditionViolated,
                      "horizons must be non-negative and strictly increasing");
    }
  }
  if (num_seeds < 1) throw GameError(ErrorCode::kPreconditionViolated, "need >= 1 seed");
  if (adversary.kind == AdversarySpec::Kind::kFixed) {
    for (int j : adversary.sequence) {
      if (j < 0 || j >= game->num_outcomes()) {
        throw GameError(ErrorCode::kOutcomeOutOfRange, "fixed sequence out of range");
      }
    }
  } else {
    for (const Distribution& law : adversary.laws) {
      if (law.size() != game->num_outcomes()) {
        throw GameError(ErrorCode::kDimensionMismatch,
                        "adversary law does not match the number of outcomes");
      }
    }
  }
}

Summary Summarize(std::vector<double> values) {
  Summary s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (double v : values) total += v;
  s.mean = total / s.count;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std_error = s.count > 1 ? std::sqrt(ss / (s.count - 1) / s.count) : 0.0;
  s.median = Quantile(values, 0.5);
  s.q25 = Quantile(values, 0.25);
  s.q75 = Quantile(values, 0.75);
  s.min = values.front();
  s.max = values.back();
  return s;
}

RunManyResult RunMany(const ExperimentConfig& config) {
  config.Validate();
  const Game& game = *config.game;
  std::shared_ptr<const BanditReduction> reduction = config.reduction;
  if (config.learner.kind == LearnerSpec::Kind::kExp3 && !reduction) {
    reduction = std::make_shared<const BanditReduction>(ReduceToBandit(game, config.solve));
  }

  const int num_horizons = static_cast<int>(config.horizons.size());
  const int num_laws = config.adversary.num_laws();
  const int tasks = num_horizons * config.num_seeds * num_laws;
  RunManyResult result;
  result.runs.resize(tasks);

  ParallelFor(tasks, config.threads, [&](int task) {
    const int law = task % num_laws;
    const int seed_index = (task / num_laws) % config.num_seeds;
    const int h = task / (num_laws * config.num_seeds);
    const std::int64_t horizon = config.horizons[h];
    const std::uint64_t learner_seed =
        DeriveSeed(config.seed_base, seed_index, StreamRole::kLearner);
    const std::uint64_t adversary_seed =
        DeriveSeed(config.seed_base, seed_index, StreamRole::kAdversary);

    const std::vector<int> outcomes =
        config.adversary.Outcomes(horizon, adversary_seed, law);
    std::unique_ptr<Learner> learner =
        MakeLearner(config.learner, game, reduction, config.solve);
    const RunTrace trace = Run(game, *learner, outcomes, learner_seed, config.learner.horizon);

    RunRecord& record = result.runs[task];
    record.horizon = horizon;
    record.seed_index = seed_index;
    record.seed = config.seed_base + static_cast<std::uint64_t>(seed_index);
    record.law = law;
    record.regret = trace.regret();
    record.expected_regret = trace.expected_regret;
    record.second_action_count = game.num_actions() >= 2 ? trace.CountAction(1) : 0;
  });

  result.per_seed.assign(num_horizons, std::vector<double>(config.num_seeds, 0.0));
  for (const RunRecord& r : result.runs) {
    const int h = static_cast<int>(
        std::find(config.horizons.begin(), config.horizons.end(), r.horizon) -
        config.horizons.begin());
    const double value = config.statistic == RegretStatistic::kExpected
                             ? r.expected_regret
                             : r.regret;
    double& slot = result.per_seed[h][r.seed_index];
    slot = r.law == 0 ? value : std::max(slot, value);
  }
  for (const std::vector<double>& values : result.per_seed) {
    result.summaries.push_back(Summarize(values));
  }
  return result;
}

ScalingReport ScalingExperiment(const ExperimentConfig& config) {
  ScalingReport report;
  report.runs = RunMany(config);
  for (size_t h = 0; h < config.horizons.size(); ++h) {
    report.points.push_back({config.horizons[h], report.runs.summaries[h]});
  }
  if (report.points.size() < 2) {
    report.degenerate = true;
    report.degenerate_reason = "need at least two horizons to fit a slope";
    return report;
  }
  for (const ScalingPoint& p : report.points) {
    if (!(p.summary.median > 0.0) || p.horizon <= 0) {
      report.degenerate = true;
      report.degenerate_reason =
          "median regret at T=" + std::to_string(p.horizon) + " is not positive";
      return report;
    }
  }
  std::vector<double> x, y;
  for (const ScalingPoint& p : report.points) {
    x.push_back(std::log(static_cast<double>(p.horizon)));
    y.push_back(std::log(p.summary.median));
  }
  const LineFit fit = FitLine(x, y);
  report.slope = fit.slope;
  report.intercept = fit.intercept;
  report.slope_q25 = LogLogSlope(report.points, &Summary::q25);
  report.slope_q75 = LogLogSlope(report.points, &Summary::q75);
  return report;
}

LowerBoundReport LowerBoundExperiment(std::shared_ptr<const Game> game,
                                      const IndistinguishablePair& pair,
                                      const LearnerSpec& learner,
                                      std::int64_t horizon, int num_seeds,
                                      std::uint64_t seed_base,
                                      RegretStatistic statistic,
                                      const SolveOptions& solve) {
  ExperimentConfig config;
  config.game = std::move(game);
  config.learner = learner;
  config.horizons = {horizon};
  config.num_seeds = num_seeds;
  config.seed_base = seed_base;
  config.adversary = AdversarySpec::Pair(pair);
  config.statistic = statistic;
  config.solve = solve;

  LowerBoundReport report{
      .horizon = horizon, .num_seeds = num_seeds, .pair = pair, .laws = {}, .runs = {}};
  report.runs = RunMany(config);
  for (int law = 0; law < 2; ++law) {
    std::vector<double> regrets, mus;
    for (const RunRecord& r : report.runs.runs) {
      if (r.law != law) continue;
      regrets.push_back(statistic == RegretStatistic::kExpected ? r.expected_regret
                                                                : r.regret);
      mus.push_back(static_cast<double>(r.second_action_count));
    }
    report.laws[law] = {Summarize(regrets), Summarize(mus)};
  }
  report.worse_law = report.laws[1].regret.mean > report.laws[0].regret.mean ? 1 : 0;
  report.max_mean_regret = report.laws[report.worse_law].regret.mean;
  report.floor = pair.RegretFloor(horizon);
  report.mu_difference = report.laws[0].mu.mean - report.laws[1].mu.mean;
  report.mu_difference_std_error =
      std::hypot(report.laws[0].mu.std_error, report.laws[1].mu.std_error);
  return report;
}

void WriteRunsCsv(std::ostream& out, const RunManyResult& result,
                  std::string_view game_name, std::string_view learner_token) {
  out << "game,learner,T,seed,regret,mu_T,expected_regret,law\n";
  std::string line;
  for (const RunRecord& r : result.runs) {
    line.clear();
    line += game_name;
    line += ',';
    line += learner_token;
    line += ',';
    line += std::to_string(r.horizon);
    line += ',';
    line += std::to_string(r.seed);
    line += ',';
    AppendNumber(line, r.regret);
    line += ',';
    line += std::to_string(r.second_action_count);
    line += ',';
    AppendNumber(line, r.expected_regret);
    line += ',';
    line += std::to_string(r.law + 1);
    line += '\n';
    out << line;
  }
}

}  // namespace pmgames
