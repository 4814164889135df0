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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmgames/adversary.h"
#include "pmgames/classification.h"
#include "pmgames/error.h"
#include "pmgames/game.h"
#include "pmgames/json_io.h"
#include "pmgames/reduction.h"
#include "pmgames/simulator.h"
#include "pmgames/transforms.h"

namespace pmgames::cli {
namespace {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string game_path;
  double tol = kDefaultTolerance;
  bool exact = false;
  std::int64_t horizon_T = 1000;
  std::vector<std::int64_t> horizons;
  int seeds = 1;
  std::uint64_t seed_base = 0;
  std::string learner = "exp3";
  std::optional<double> eta;
  std::optional<double> gamma;
  std::optional<std::int64_t> announced_horizon;
  double epsilon_fraction = 0.5;
  std::string adversary = "uniform";
  std::string statistic = "expected";
  int threads = 1;
  std::string out;
};

SolveOptions Solve(const Flags& f) {
  return {f.tol, f.exact ? Arithmetic::kExact : Arithmetic::kAuto};
}

LearnerSpec Learner(const Flags& f) {
  LearnerSpec spec = LearnerSpec::Parse(f.learner);
  spec.eta = f.eta;
  spec.gamma = f.gamma;
  spec.horizon = f.announced_horizon;
  return spec;
}

RegretStatistic Statistic(const Flags& f) {
  if (f.statistic == "expected") return RegretStatistic::kExpected;
  if (f.statistic == "realized") return RegretStatistic::kRealized;
  throw CLI::ValidationError("--statistic", "expected \"expected\" or \"realized\"");
}

std::vector<std::string> SplitCommas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  return parts;
}

// uniform | iid:p1,...,pM | cycle:j1,...,jk (outcomes 1-based)
AdversarySpec ParseAdversary(const std::string& text, int num_outcomes) {
  if (text == "uniform") {
    return AdversarySpec::Iid(
        Distribution(std::vector<double>(num_outcomes, 1.0 / num_outcomes)));
  }
  try {
    if (text.starts_with("iid:")) {
      std::vector<double> p;
      for (const std::string& part : SplitCommas(text.substr(4))) p.push_back(std::stod(part));
      return AdversarySpec::Iid(Distribution(std::move(p)));
    }
    if (text.starts_with("cycle:")) {
      std::vector<int> sequence;
      for (const std::string& part : SplitCommas(text.substr(6))) {
        sequence.push_back(std::stoi(part) - 1);
      }
      return AdversarySpec::Fixed(std::move(sequence));
    }
  } catch (const std::logic_error&) {
    // std::stod / std::stoi failures fall through to the usage error.
  }
  throw CLI::ValidationError("--adversary",
                             "expected uniform, iid:p1,...,pM or cycle:j1,...,jk");
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot create " + path);
  file << content;
  file.close();
  if (!file) throw OutputError("cannot write " + path);
}

// Writes the JSON document to PREFIX.json, or to `out` without --out.
void EmitJson(const Flags& f, const Json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (f.out.empty()) {
    out << text;
  } else {
    WriteFile(f.out + ".json", text);
    out << "wrote " << f.out << ".json\n";
  }
}

// With --out: PREFIX.csv and PREFIX.json. Without: the CSV on `out`.
void EmitRuns(const Flags& f, const RunManyResult& runs, const Game& game,
              const std::string& learner, const Json& doc, std::ostream& out) {
  std::ostringstream csv;
  WriteRunsCsv(csv, runs, game.name(), learner);
  if (f.out.empty()) {
    out << csv.str();
    return;
  }
  WriteFile(f.out + ".csv", csv.str());
  WriteFile(f.out + ".json", doc.dump(2) + "\n");
  out << "wrote " << f.out << ".csv and " << f.out << ".json\n";
}

int ClassifyCommand(const Flags& f, std::ostream& out) {
  const Game game = LoadGame(f.game_path);
  const GameClass c = Classify(game, Solve(f));
  out << TagName(c.tag) << "\n";
  Json doc = ToJson(c);
  doc["game"] = game.name();
  EmitJson(f, doc, out);
  switch (c.tag) {
    case GameClassTag::kTrivialZero: return 0;
    case GameClassTag::kBanditReducible: return 1;
    case GameClassTag::kHardLinear: return 2;
  }
  return kExitDomainError;
}

int ReduceCommand(const Flags& f, std::ostream& out) {
  const Game game = LoadGame(f.game_path);
  const BanditReduction reduction = ReduceToBandit(game, Solve(f));
  EmitJson(f, ToJson(reduction), out);
  return 0;
}

Json RunHeader(const Flags& f, const Game& game, const LearnerSpec& learner,
               const AdversarySpec& adversary) {
  return Json{{"game", game.name()},
              {"learner", learner.Token()},
              {"adversary", adversary.Label()},
              {"statistic", f.statistic},
              {"seeds", f.seeds},
              {"seed_base", f.seed_base}};
}

int SimulateCommand(const Flags& f, std::ostream& out) {
  auto game = std::make_shared<const Game>(LoadGame(f.game_path));
  ExperimentConfig config;
  config.game = game;
  config.learner = Learner(f);
  config.horizons = {f.horizon_T};
  config.num_seeds = f.seeds;
  config.seed_base = f.seed_base;
  config.adversary = ParseAdversary(f.adversary, game->num_outcomes());
  config.statistic = Statistic(f);
  config.solve = Solve(f);
  config.threads = f.threads;
  const RunManyResult result = RunMany(config);
  Json doc = RunHeader(f, *game, config.learner, config.adversary);
  doc["T"] = f.horizon_T;
  doc["summary"] = ToJson(result.summaries.at(0));
  EmitRuns(f, result, *game, config.learner.Token(), doc, out);
  return 0;
}

int ScalingCommand(const Flags& f, std::ostream& out) {
  auto game = std::make_shared<const Game>(LoadGame(f.game_path));
  ExperimentConfig config;
  config.game = game;
  config.learner = Learner(f);
  config.horizons = f.horizons;
  if (config.horizons.empty()) {
    for (int e = 10; e <= 17; ++e) config.horizons.push_back(std::int64_t{1} << e);
  }
  config.num_seeds = f.seeds;
  config.seed_base = f.seed_base;
  config.adversary = ParseAdversary(f.adversary, game->num_outcomes());
  config.statistic = Statistic(f);
  config.solve = Solve(f);
  config.threads = f.threads;
  const ScalingReport report = ScalingExperiment(config);
  Json doc = RunHeader(f, *game, config.learner, config.adversary);
  const Json body = ToJson(report);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  EmitRuns(f, report.runs, *game, config.learner.Token(), doc, out);
  return 0;
}

int LowerBoundCommand(const Flags& f, std::ostream& out) {
  auto game = std::make_shared<const Game>(LoadGame(f.game_path));
  const GameClass c = Classify(*game, Solve(f));
  if (c.tag != GameClassTag::kHardLinear) {
    throw GameError(ErrorCode::kPreconditionViolated,
                    "lowerbound needs a HardLinear game, got " + std::string(TagName(c.tag)));
  }
  const IndistinguishablePair pair =
      MakeIndistinguishablePair(*c.indicator, c.ell, Solve(f), f.epsilon_fraction);
  const LearnerSpec learner = Learner(f);
  const LowerBoundReport report = LowerBoundExperiment(
      game, pair, learner, f.horizon_T, f.seeds, f.seed_base, Statistic(f), Solve(f));
  Json doc{{"game", game->name()}, {"learner", learner.Token()}, {"statistic", f.statistic}};
  const Json body = ToJson(report);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  EmitRuns(f, report.runs, *game, learner.Token(), doc, out);
  return 0;
}

// -- selftest -----------------------------------------------------------------

using LossRows = std::vector<std::vector<double>>;
using SymbolRows = std::vector<std::vector<FeedbackSymbol>>;

constexpr char kFigureOneMatrix[] =
    "1 0 0 1\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "1 0 0 0\n"
    "0 1 1 1\n";

std::string FormatIndicator(const IndicatorMatrix& a) {
  std::string text;
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (k) text += ' ';
      text += std::to_string(static_cast<int>(a.a(i, k)));
    }
    text += '\n';
  }
  return text;
}

bool FigureOneCheck() {
  const Game game = ValidateGame(LossRows{{1, 0, 0, 1}, {0, 1, 1, 0}},
                                 SymbolRows{{1, 2, 3, 1}, {1, 2, 2, 2}}, "figure1");
  const CanonicalFeedback canonical = CanonicalizeFeedback(game);
  const IndicatorMatrix a = BuildIndicatorMatrix(
      canonical.game.feedback(), {canonical.distinct_counts[0], canonical.distinct_counts[1]});
  return FormatIndicator(a) == kFigureOneMatrix;
}

bool ReducibleExampleCheck() {
  const Game game = ValidateGame(LossRows{{1, 0}, {0, 1}},
                                 SymbolRows{{1, 2}, {1, 1}}, "apple");
  const BanditReduction r = ReduceToBandit(game);
  const Eigen::MatrixXd& bandit = r.bandit_game.loss();
  return bandit(0, 0) == 1.0 && bandit(0, 1) == 0.0 && bandit(1, 0) == 0.5 &&
         bandit(1, 1) == 0.5 && r.scale == 2.0 && r.offset == -1.0 &&
         VerifyReduction(r).passed() &&
         Classify(game).tag == GameClassTag::kBanditReducible;
}

bool HardExampleCheck() {
  const Game game = ValidateGame(LossRows{{1, 0}, {0, 1}},
                                 SymbolRows{{1, 1}, {1, 1}}, "hard_constant");
  const GameClass c = Classify(game);
  if (c.tag != GameClassTag::kHardLinear || !c.witness) return false;
  const IndistinguishablePair& pair = *c.witness;
  return pair.p1[0] == 0.25 && pair.p1[1] == 0.75 && pair.p2[0] == 0.75 &&
         pair.p2[1] == 0.25 && pair.RegretFloor(10000) == 2500.0;
}

bool DominantExampleCheck() {
  const Game game = ValidateGame(LossRows{{0, 0}, {1, 1}},
                                 SymbolRows{{1, 1}, {2, 2}}, "dominant");
  const GameClass c = Classify(game);
  return c.tag == GameClassTag::kTrivialZero && c.dominant_action == 0;
}

bool ThreeActionExampleCheck() {
  const Game game =
      ValidateGame(LossRows{{1, 1}, {0, 1}, {1, 0}},
                   SymbolRows{{1, 2}, {1, 1}, {1, 1}}, "eq1");
  try {
    Classify(game);
  } catch (const GameError& e) {
    return e.code() == ErrorCode::kWrongArity;
  }
  return false;
}

int SelftestCommand(std::ostream& out) {
  struct Check {
    const char* name;
    bool (*run)();
  };
  const Check checks[] = {
      {"figure1 indicator matrix", FigureOneCheck},
      {"reducible 2x2 example", ReducibleExampleCheck},
      {"constant-feedback hard example", HardExampleCheck},
      {"dominant-action example", DominantExampleCheck},
      {"three-action game rejected", ThreeActionExampleCheck},
  };
  int failures = 0;
  for (const Check& check : checks) {
    bool ok = false;
    try {
      ok = check.run();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << check.name << "\n";
    failures += ok ? 0 : 1;
  }
  out << (failures == 0 ? "selftest passed" : "selftest failed") << "\n";
  return failures == 0 ? 0 : kExitSelftestFailed;
}

void AddSolveFlags(CLI::App* sub, Flags& f) {
  sub->add_option("--tol", f.tol, "Row-space tolerance for float arithmetic")
      ->capture_default_str();
  sub->add_flag("--exact", f.exact, "Force exact rational arithmetic");
}

void AddRunFlags(CLI::App* sub, Flags& f) {
  sub->add_option("--seeds", f.seeds, "Number of seeds")->capture_default_str();
  sub->add_option("--seed-base", f.seed_base, "Base seed")->capture_default_str();
  sub->add_option("--learner", f.learner,
                  "exp3, exp3-raw, ewa, uniform or constant:<i>")
      ->capture_default_str();
  sub->add_option("--eta", f.eta, "Learning rate override");
  sub->add_option("--gamma", f.gamma, "Exp3 exploration override");
  sub->add_option("--horizon", f.announced_horizon,
                  "Horizon announced to the learner (<= 0: anytime)");
  sub->add_option("--statistic", f.statistic, "expected or realized")
      ->capture_default_str();
  sub->add_option("--threads", f.threads, "Worker threads")->capture_default_str();
  sub->add_option("--out", f.out, "Write PREFIX.csv and PREFIX.json");
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Partial-monitoring games: classification, bandit reduction, regret experiments",
               "pmgames"};
  app.require_subcommand(1);

  CLI::App* classify = app.add_subcommand("classify", "Classify a game (exit 0/1/2)");
  classify->add_option("game", f.game_path, "Game JSON file")->required();
  AddSolveFlags(classify, f);
  classify->add_option("--out", f.out, "Write PREFIX.json");

  CLI::App* reduce = app.add_subcommand("reduce", "Emit the bandit reduction certificate");
  reduce->add_option("game", f.game_path, "Game JSON file")->required();
  AddSolveFlags(reduce, f);
  reduce->add_option("--out", f.out, "Write PREFIX.json");

  CLI::App* simulate = app.add_subcommand("simulate", "Run a learner for T rounds");
  simulate->add_option("game", f.game_path, "Game JSON file")->required();
  AddSolveFlags(simulate, f);
  AddRunFlags(simulate, f);
  simulate->add_option("--T", f.horizon_T, "Horizon")->capture_default_str();
  simulate->add_option("--adversary", f.adversary,
                       "uniform, iid:p1,...,pM or cycle:j1,...,jk")
      ->capture_default_str();

  CLI::App* scaling = app.add_subcommand("scaling", "Regret against T on a log-log fit");
  scaling->add_option("game", f.game_path, "Game JSON file")->required();
  AddSolveFlags(scaling, f);
  AddRunFlags(scaling, f);
  scaling->add_option("--Ts", f.horizons, "Comma-separated horizons (default 2^10..2^17)")
      ->delimiter(',');
  scaling->add_option("--adversary", f.adversary,
                      "uniform, iid:p1,...,pM or cycle:j1,...,jk")
      ->capture_default_str();

  CLI::App* lowerbound =
      app.add_subcommand("lowerbound", "Regret under an indistinguishable pair of laws");
  lowerbound->add_option("game", f.game_path, "Game JSON file")->required();
  AddSolveFlags(lowerbound, f);
  AddRunFlags(lowerbound, f);
  lowerbound->add_option("--T", f.horizon_T, "Horizon")->capture_default_str();
  lowerbound->add_option("--epsilon-fraction", f.epsilon_fraction,
                         "Pair step as a fraction of its maximum")
      ->capture_default_str();

  CLI::App* selftest = app.add_subcommand("selftest", "Check the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  if (lowerbound->parsed() && f.learner == "exp3" &&
      lowerbound->count("--learner") == 0) {
    f.learner = "uniform";
  }
  if (scaling->parsed() && scaling->count("--seeds") == 0) f.seeds = 32;

  try {
    if (classify->parsed()) return ClassifyCommand(f, out);
    if (reduce->parsed()) return ReduceCommand(f, out);
    if (simulate->parsed()) return SimulateCommand(f, out);
    if (scaling->parsed()) return ScalingCommand(f, out);
    if (lowerbound->parsed()) return LowerBoundCommand(f, out);
    if (selftest->parsed()) return SelftestCommand(out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCannotCreate;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kWrongArity: return kExitWrongArity;
      case ErrorCode::kNotReducible: return kExitNotReducible;
      default: return kExitDomainError;
    }
  }
  return kExitUsage;
}

}  // namespace pmgames::cli
