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

#include "pmgames/json_io.h"

#include <fstream>

namespace pmgames {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& Member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw FormatError(std::string("game file: missing \"") + key + "\"");
  }
  return *it;
}

void RequireRows(const Json& j, const char* key) {
  if (!j.is_array() || j.empty()) {
    throw FormatError(std::string("game file: \"") + key +
                      "\" must be a non-empty array of rows");
  }
  for (const Json& row : j) {
    if (!row.is_array()) {
      throw FormatError(std::string("game file: every row of \"") + key +
                        "\" must be an array");
    }
  }
}

std::string_view ArithmeticLabel(Arithmetic a) { return ArithmeticName(a); }

}  // namespace

Game GameFromJson(const Json& j, const std::string& default_name) {
  if (!j.is_object()) throw FormatError("game file: top level must be an object");
  std::string name = default_name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw FormatError("game file: \"name\" must be a string");
    name = it->get<std::string>();
  }
  const Json& loss_json = Member(j, "loss");
  const Json& feedback_json = Member(j, "feedback");
  RequireRows(loss_json, "loss");
  RequireRows(feedback_json, "feedback");

  std::vector<std::vector<double>> loss;
  for (const Json& row : loss_json) {
    std::vector<double>& out = loss.emplace_back();
    for (const Json& x : row) {
      if (!x.is_number()) throw FormatError("game file: loss entries must be numbers");
      out.push_back(x.get<double>());
    }
  }
  std::vector<std::vector<FeedbackSymbol>> feedback;
  for (const Json& row : feedback_json) {
    std::vector<FeedbackSymbol>& out = feedback.emplace_back();
    for (const Json& x : row) {
      if (x.is_number()) {
        out.emplace_back(x.get<double>());
      } else if (x.is_string()) {
        out.emplace_back(x.get<std::string>());
      } else {
        throw FormatError("game file: feedback entries must be numbers or strings");
      }
    }
  }
  return ValidateGame(loss, feedback, std::move(name));
}

Game LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  std::string stem = path;
  if (size_t slash = stem.find_last_of('/'); slash != std::string::npos) {
    stem = stem.substr(slash + 1);
  }
  if (size_t dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
  return GameFromJson(j, stem);
}

Json GameToJson(const Game& game) {
  return Json{{"name", game.name()},
              {"loss", ToJson(game.loss())},
              {"feedback", ToJson(game.feedback())}};
}

Json ToJson(const FeedbackSymbol& symbol) {
  if (symbol.is_text()) return symbol.text();
  return symbol.number();
}

Json ToJson(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ToJson(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json ToJson(const Rational& q) { return ToString(q); }

Json ToJson(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(ToString(q));
  return out;
}

Json ToJson(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ToString(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ToJson(const FeedbackMatrix& h) {
  Json rows = Json::array();
  for (int i = 0; i < h.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < h.cols(); ++j) row.push_back(ToJson(h(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ToJson(const SymbolMap& map) {
  Json out = Json::array();
  for (const auto& [from, to] : map.entries()) {
    out.push_back(Json::array({ToJson(from), ToJson(to)}));
  }
  return out;
}

Json ToJson(const TransformTranscript& transcript) {
  Json steps = Json::array();
  for (const TransformStep& step : transcript.steps()) {
    steps.push_back(std::visit(
        Overloaded{
            [](const ColumnShiftStep& s) {
              return Json{{"type", "column_shift"}, {"shift", ToJson(s.shift)}};
            },
            [](const RelabelStep& s) {
              Json maps = Json::array();
              for (const SymbolMap& m : s.relabel.per_action) maps.push_back(ToJson(m));
              return Json{{"type", "relabel"},
                          {"injective", s.relabel.injective()},
                          {"maps", std::move(maps)}};
            },
            [](const GlobalAffineStep& s) {
              return Json{{"type", "global_affine"},
                          {"scale", s.scale},
                          {"offsets", ToJson(s.offsets)}};
            }},
        step));
  }
  return Json{
      {"relation", transcript.relation() == Relation::kEquivalent ? "equivalent"
                                                                  : "source_not_harder"},
      {"regret_scale", transcript.regret_scale()},
      {"steps", std::move(steps)},
      {"target", GameToJson(transcript.target())}};
}

Json ToJson(const VerificationReport& report) {
  Json checks = Json::array();
  for (const VerificationCheck& c : report.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"passed", c.passed}, {"max_residual", c.max_residual}});
  }
  return Json{{"passed", report.passed()}, {"checks", std::move(checks)}};
}

Json ToJson(const IndicatorMatrix& a) {
  return Json{{"block_sizes", {a.block_sizes[0], a.block_sizes[1]}},
              {"matrix", ToJson(Eigen::MatrixXd(a.a))}};
}

Json ToJson(const Distribution& p) { return Json(p.probabilities()); }

Json ToJson(const IndistinguishablePair& pair) {
  return Json{{"p0", ToJson(pair.p0)},
              {"p1", ToJson(pair.p1)},
              {"p2", ToJson(pair.p2)},
              {"v", ToJson(pair.v)},
              {"epsilon", pair.epsilon},
              {"epsilon_max", pair.epsilon_max},
              {"ell_dot_v", pair.ell_dot_v},
              {"on_boundary", pair.on_boundary}};
}

Json ToJson(const Summary& s) {
  return Json{{"count", s.count},   {"mean", s.mean}, {"median", s.median},
              {"std_error", s.std_error}, {"q25", s.q25}, {"q75", s.q75},
              {"min", s.min},       {"max", s.max}};
}

Json ToJson(const BanditReduction& r) {
  Json symbols = Json::array();
  for (const std::vector<FeedbackSymbol>& table : r.symbol_tables) {
    Json row = Json::array();
    for (const FeedbackSymbol& s : table) row.push_back(ToJson(s));
    symbols.push_back(std::move(row));
  }
  Json maps = Json::array();
  for (const FeedbackLossMap& m : r.feedback_to_loss) {
    Json entries = Json::array();
    for (const auto& [symbol, loss] : m.entries()) {
      entries.push_back(Json::array({ToJson(symbol), loss}));
    }
    maps.push_back(std::move(entries));
  }
  Json out{
      {"source", GameToJson(r.source)},
      {"arithmetic", ArithmeticLabel(r.arithmetic)},
      {"shifted_loss", ToJson(r.shifted_loss)},
      {"ell", ToJson(r.ell)},
      {"indicator", ToJson(r.indicator)},
      {"symbol_tables", std::move(symbols)},
      {"lambda", ToJson(r.lambda)},
      {"h1", ToJson(r.h1)},
      {"h2", ToJson(r.h2)},
      {"H", ToJson(r.signal)},
      {"K", ToJson(Eigen::MatrixXd(r.k_matrix))},
      {"D", ToJson(Eigen::MatrixXd(r.d_matrix))},
      {"k", ToJson(Eigen::VectorXd(r.k))},
      {"H_prime", ToJson(r.signal_prime)},
      {"L_prime", ToJson(r.loss_prime)},
      {"scale", r.scale},
      {"offset", r.offset},
      {"bandit_game", GameToJson(r.bandit_game)},
      {"feedback_to_loss", std::move(maps)},
      {"transcript", ToJson(r.transcript)},
  };
  if (r.exact) {
    const ExactReduction& e = *r.exact;
    out["exact"] = Json{{"shifted_loss", ToJson(e.shifted_loss)},
                        {"ell", ToJson(e.ell)},
                        {"lambda", ToJson(e.lambda)},
                        {"h1", ToJson(e.h1)},
                        {"h2", ToJson(e.h2)},
                        {"L_prime", ToJson(e.loss_prime)},
                        {"bandit_loss", ToJson(e.bandit_loss)},
                        {"scale", ToJson(e.scale)},
                        {"offset", ToJson(e.offset)}};
  }
  out["verification"] = ToJson(VerifyReduction(r));
  return out;
}

Json ToJson(const GameClass& c) {
  Json out{{"tag", TagName(c.tag)}};
  if (c.dominant_action) out["dominant_action"] = *c.dominant_action + 1;
  out["diagnostics"] = Json{{"residual", c.diagnostics.residual},
                            {"rank_indicator", c.diagnostics.rank_indicator},
                            {"rank_augmented", c.diagnostics.rank_augmented},
                            {"arithmetic", ArithmeticLabel(c.diagnostics.arithmetic)}};
  if (c.ell.size() > 0) out["ell"] = ToJson(c.ell);
  if (c.indicator) out["indicator"] = ToJson(*c.indicator);
  if (c.certificate) out["certificate"] = ToJson(*c.certificate);
  if (c.witness) out["witness"] = ToJson(*c.witness);
  return out;
}

Json ToJson(const ScalingReport& report) {
  Json points = Json::array();
  for (const ScalingPoint& p : report.points) {
    points.push_back(Json{{"T", p.horizon}, {"summary", ToJson(p.summary)}});
  }
  Json out{{"points", std::move(points)}, {"degenerate", report.degenerate}};
  if (report.degenerate) {
    out["degenerate_reason"] = report.degenerate_reason;
  } else {
    out["slope"] = report.slope;
    out["intercept"] = report.intercept;
    out["slope_q25"] = report.slope_q25 ? Json(*report.slope_q25) : Json(nullptr);
    out["slope_q75"] = report.slope_q75 ? Json(*report.slope_q75) : Json(nullptr);
  }
  return out;
}

Json ToJson(const LowerBoundReport& report) {
  Json laws = Json::array();
  for (const LawEstimate& law : report.laws) {
    laws.push_back(Json{{"regret", ToJson(law.regret)}, {"mu_T", ToJson(law.mu)}});
  }
  return Json{{"T", report.horizon},
              {"seeds", report.num_seeds},
              {"pair", ToJson(report.pair)},
              {"laws", std::move(laws)},
              {"worse_law", report.worse_law + 1},
              {"max_mean_regret", report.max_mean_regret},
              {"floor", report.floor},
              {"mu_difference", report.mu_difference},
              {"mu_difference_std_error", report.mu_difference_std_error}};
}

}  // namespace pmgames
