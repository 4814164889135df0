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

#ifndef PMGAMES_JSON_IO_H_
#define PMGAMES_JSON_IO_H_

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "json.hpp"
#include "pmgames/adversary.h"
#include "pmgames/classification.h"
#include "pmgames/game.h"
#include "pmgames/rational.h"
#include "pmgames/reduction.h"
#include "pmgames/simulator.h"
#include "pmgames/transforms.h"

namespace pmgames {

using Json = nlohmann::ordered_json;

// The file could not be opened for reading or writing.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntactically or structurally malformed input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Game files: {"name": s, "loss": [[x,...],...], "feedback": [[x|s,...],...]}.
// A missing name falls back to `default_name`. Structural problems throw
// FormatError; invalid games throw GameError via ValidateGame.
Game GameFromJson(const Json& j, const std::string& default_name = "game");
Game LoadGame(const std::string& path);
Json GameToJson(const Game& game);

Json ToJson(const FeedbackSymbol& symbol);
Json ToJson(const Eigen::MatrixXd& m);
Json ToJson(const Eigen::VectorXd& v);
Json ToJson(const Rational& q);  // "p/q" or "p"
Json ToJson(const std::vector<Rational>& v);
Json ToJson(const RationalMatrix& m);
Json ToJson(const FeedbackMatrix& h);
Json ToJson(const SymbolMap& map);
Json ToJson(const TransformTranscript& transcript);
Json ToJson(const VerificationReport& report);
Json ToJson(const IndicatorMatrix& a);
Json ToJson(const Distribution& p);
Json ToJson(const IndistinguishablePair& pair);
Json ToJson(const Summary& s);

// The full reduction certificate, including its verification report.
Json ToJson(const BanditReduction& reduction);
Json ToJson(const GameClass& game_class);
Json ToJson(const ScalingReport& report);
Json ToJson(const LowerBoundReport& report);

}  // namespace pmgames

#endif  // PMGAMES_JSON_IO_H_
