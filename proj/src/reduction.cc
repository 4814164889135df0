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

#include "pmgames/reduction.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pmgames {
namespace {

Arithmetic Resolve(Arithmetic requested, bool all_small_fractions) {
  if (requested != Arithmetic::kAuto) return requested;
  return all_small_fractions ? Arithmetic::kExact : Arithmetic::kFloat;
}

double MaxAbs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Rational AbsQ(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

double MaxAbsDiff(const RationalMatrix& a, const RationalMatrix& b) {
  Rational worst = 0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      Rational d = AbsQ(a(i, j) - b(i, j));
      if (d > worst) worst = d;
    }
  }
  return worst.get_d();
}

Eigen::Vector2d KVector(const Eigen::Matrix2d& k_matrix) {
  return {k_matrix(1, 0), k_matrix(0, 1)};
}

Eigen::Matrix2d DMatrix(const Eigen::Matrix2d& k_matrix) {
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = k_matrix(0, 0) - k_matrix(1, 0);
  d(1, 1) = k_matrix(1, 1) - k_matrix(0, 1);
  return d;
}

Eigen::Matrix2d StandardK() {
  Eigen::Matrix2d k;
  k << 0, 0,
       1, 1;
  return k;
}

// Shifted loss L = L0 - 1 L0(0,:) in exact arithmetic.
RationalMatrix ExactShiftedLoss(const Eigen::MatrixXd& loss) {
  RationalMatrix q = RationalMatrix::FromDouble(loss);
  for (int j = 0; j < q.cols(); ++j) {
    const Rational first = q(0, j);
    for (int i = 0; i < q.rows(); ++i) q(i, j) -= first;
  }
  return q;
}

// Rows h_1, h_2 of H in exact arithmetic, stacked as a 2 x M matrix.
RationalMatrix ExactSignal(const IndicatorMatrix& a, std::span<const Rational> lambda) {
  RationalMatrix h(2, a.cols());
  for (int action = 0; action < 2; ++action) {
    for (int r = 0; r < a.block_sizes[action]; ++r) {
      const int row = a.offset(action) + r;
      for (int k = 0; k < a.cols(); ++k) {
        if (a.a(row, k) != 0.0) h(action, k) += lambda[row];
      }
    }
  }
  return h;
}

Eigen::MatrixXd StackRows(const Eigen::VectorXd& h1, const Eigen::VectorXd& h2) {
  Eigen::MatrixXd h(2, h1.size());
  h.row(0) = h1.transpose();
  h.row(1) = h2.transpose();
  return h;
}

// L - 1 (k^T H).
Eigen::MatrixXd SubtractSignalCombination(const Eigen::MatrixXd& loss,
                                          const Eigen::Vector2d& k,
                                          const Eigen::MatrixXd& h) {
  const Eigen::RowVectorXd combo = k(0) * h.row(0) + k(1) * h.row(1);
  return loss.rowwise() - combo;
}

}  // namespace

// -- Indicator matrix ---------------------------------------------------------

IndicatorMatrix BuildIndicatorMatrix(const FeedbackMatrix& canonical,
                                     std::array<int, 2> block_sizes) {
  if (canonical.rows() != 2) {
    throw GameError(ErrorCode::kWrongArity,
                    "the indicator construction needs exactly 2 actions, got " +
                        std::to_string(canonical.rows()));
  }
  if (block_sizes[0] < 1 || block_sizes[1] < 1) {
    throw GameError(ErrorCode::kNotCanonical, "block sizes must be positive");
  }
  IndicatorMatrix out;
  out.block_sizes = block_sizes;
  out.a = Eigen::MatrixXd::Zero(block_sizes[0] + block_sizes[1], canonical.cols());
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < canonical.cols(); ++k) {
      const FeedbackSymbol& h = canonical(i, k);
      const bool ok = h.is_number() && h.number() == std::floor(h.number()) &&
                      h.number() >= 1 && h.number() <= block_sizes[i];
      if (!ok) {
        throw GameError(ErrorCode::kNotCanonical,
                        "entry (" + std::to_string(i + 1) + "," +
                            std::to_string(k + 1) + ") = " + h.ToString() +
                            " is not in 1.." + std::to_string(block_sizes[i]));
      }
      out.a(out.offset(i) + static_cast<int>(h.number()) - 1, k) = 1.0;
    }
  }
  return out;
}

// -- Row-space decomposition --------------------------------------------------

SignalDecomposition SolveSignalDecomposition(const IndicatorMatrix& a,
                                             const Eigen::VectorXd& ell,
                                             const SolveOptions& options) {
  if (ell.size() != a.cols()) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "ell has " + std::to_string(ell.size()) + " entries, A has " +
                        std::to_string(a.cols()) + " columns");
  }
  const Arithmetic mode = Resolve(options.arithmetic, AllSmallFractions(ell));
  if (mode == Arithmetic::kExact) {
    std::vector<Rational> exact_ell;
    for (int k = 0; k < ell.size(); ++k) exact_ell.push_back(ToRational(ell(k)));
    return SolveSignalDecompositionExact(a, exact_ell);
  }

  const Eigen::MatrixXd at = a.a.transpose();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(at);
  Eigen::VectorXd lambda = cod.solve(ell);
  if (!lambda.allFinite()) {
    throw GameError(ErrorCode::kSolverError, "least-squares solve is not finite");
  }
  SignalDecomposition out;
  out.arithmetic = Arithmetic::kFloat;
  out.residual = (at * lambda - ell).norm();
  out.in_row_space = out.residual <= options.tol * (1.0 + ell.norm());
  if (out.in_row_space) out.lambda = std::move(lambda);
  return out;
}

SignalDecomposition SolveSignalDecompositionExact(const IndicatorMatrix& a,
                                                  std::span<const Rational> ell) {
  if (static_cast<int>(ell.size()) != a.cols()) {
    throw GameError(ErrorCode::kDimensionMismatch, "ell does not match A");
  }
  const RationalMatrix aq = RationalMatrix::FromDouble(a.a);
  const RationalMatrix at = aq.Transpose();

  // Projection of ell onto im A^T through the always-consistent normal
  // equations (A A^T) z = A ell.
  const std::vector<Rational> a_ell = aq * ell;
  auto z = SolveConsistent(aq * at, a_ell);
  if (!z) throw GameError(ErrorCode::kSolverError, "normal equations inconsistent");
  const std::vector<Rational> projected = at * std::span<const Rational>(*z);
  Rational residual_sq = 0;
  for (size_t k = 0; k < ell.size(); ++k) {
    const Rational r = ell[k] - projected[k];
    residual_sq += r * r;
  }

  SignalDecomposition out;
  out.arithmetic = Arithmetic::kExact;
  out.residual = std::sqrt(residual_sq.get_d());
  out.in_row_space = sgn(residual_sq) == 0;
  if (!out.in_row_space) return out;

  // The minimum-norm solution lies in im A: lambda = A y with A^T A y = ell.
  auto y = SolveConsistent(at * aq, std::vector<Rational>(ell.begin(), ell.end()));
  if (!y) throw GameError(ErrorCode::kSolverError, "A^T A y = ell inconsistent");
  std::vector<Rational> lambda = aq * std::span<const Rational>(*y);
  const std::vector<double> as_double = ToDouble(lambda);
  out.lambda = Eigen::Map<const Eigen::VectorXd>(as_double.data(),
                                                 static_cast<Eigen::Index>(as_double.size()));
  out.exact_lambda = std::move(lambda);
  return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> BuildSignalRows(
    const Eigen::VectorXd& lambda, const IndicatorMatrix& a) {
  if (lambda.size() != a.rows()) {
    throw GameError(ErrorCode::kDimensionMismatch,
                    "lambda has " + std::to_string(lambda.size()) +
                        " entries, A has " + std::to_string(a.rows()) + " rows");
  }
  const int m1 = a.block_sizes[0];
  const int m2 = a.block_sizes[1];
  Eigen::VectorXd h1 = a.a.topRows(m1).transpose() * lambda.head(m1);
  Eigen::VectorXd h2 = a.a.bottomRows(m2).transpose() * lambda.tail(m2);
  return {std::move(h1), std::move(h2)};
}

// -- FeedbackLossMap ----------------------------------------------------------

void FeedbackLossMap::Set(const FeedbackSymbol& symbol, double loss) {
  for (auto& [key, value] : entries_) {
    if (key == symbol) {
      value = loss;
      return;
    }
  }
  entries_.emplace_back(symbol, loss);
}

std::optional<double> FeedbackLossMap::Find(const FeedbackSymbol& symbol) const {
  for (const auto& [key, value] : entries_) {
    if (key == symbol) return value;
  }
  return std::nullopt;
}

// -- Reduction ----------------------------------------------------------------

ReductionAttempt AttemptReduction(const Game& game, const SolveOptions& options) {
  if (game.num_actions() != 2) {
    throw GameError(ErrorCode::kWrongArity,
                    "the bandit reduction applies to 2-action games, got " +
                        std::to_string(game.num_actions()) + " actions");
  }
  const int num_outcomes = game.num_outcomes();
  const Arithmetic mode =
      Resolve(options.arithmetic, AllSmallFractions(game.loss()));

  TransformTranscript transcript(game);
  const Eigen::VectorXd first_row = game.loss().row(0).transpose();
  const Eigen::MatrixXd shifted_loss = transcript.ApplyColumnShift(first_row).loss();

  const CanonicalFeedback canonical = CanonicalizeFeedback(transcript.target());
  transcript.ApplyRelabel(canonical.forward);
  IndicatorMatrix indicator = BuildIndicatorMatrix(
      canonical.game.feedback(),
      {canonical.distinct_counts[0], canonical.distinct_counts[1]});

  std::optional<ExactReduction> exact;
  Eigen::VectorXd ell;
  SignalDecomposition decomposition;
  if (mode == Arithmetic::kExact) {
    exact.emplace();
    exact->shifted_loss = ExactShiftedLoss(game.loss());
    for (int j = 0; j < num_outcomes; ++j) {
      exact->ell.push_back(exact->shifted_loss(1, j));
    }
    const std::vector<double> ell_d = ToDouble(exact->ell);
    ell = Eigen::Map<const Eigen::VectorXd>(ell_d.data(), num_outcomes);
    decomposition = SolveSignalDecompositionExact(indicator, exact->ell);
  } else {
    ell = shifted_loss.row(1).transpose();
    decomposition = SolveSignalDecomposition(
        indicator, ell, {.tol = options.tol, .arithmetic = Arithmetic::kFloat});
  }

  ReductionAttempt attempt{
      .indicator = indicator,
      .ell = ell,
      .exact_ell = exact ? std::optional(exact->ell) : std::nullopt,
      .decomposition = decomposition,
      .reduction = std::nullopt,
  };
  if (!decomposition.in_row_space) return attempt;

  const Eigen::Matrix2d k_matrix = StandardK();
  const Eigen::Matrix2d d_matrix = DMatrix(k_matrix);
  const Eigen::Vector2d k = KVector(k_matrix);
  const Eigen::VectorXd& lambda = decomposition.lambda;

  Eigen::VectorXd h1, h2;
  if (exact) {
    exact->lambda = *decomposition.exact_lambda;
    const RationalMatrix hq = ExactSignal(indicator, exact->lambda);
    for (int j = 0; j < num_outcomes; ++j) {
      exact->h1.push_back(hq(0, j));
      exact->h2.push_back(hq(1, j));
    }
    const Eigen::MatrixXd h = hq.ToDouble();
    h1 = h.row(0).transpose();
    h2 = h.row(1).transpose();
  } else {
    std::tie(h1, h2) = BuildSignalRows(lambda, indicator);
  }
  const Eigen::MatrixXd signal = StackRows(h1, h2);

  // H0 -> H: canonical symbol s of action i becomes lambda[offset(i) + s - 1],
  // which is exactly h_i at every column showing s.
  FeedbackRelabel to_signal;
  to_signal.per_action.resize(2);
  for (int i = 0; i < 2; ++i) {
    for (int s = 1; s <= indicator.block_sizes[i]; ++s) {
      to_signal.per_action[i].Set(
          FeedbackSymbol(s), FeedbackSymbol(lambda(indicator.offset(i) + s - 1)));
    }
  }
  transcript.ApplyRelabel(to_signal);

  FeedbackRelabel by_d;
  by_d.per_action.resize(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < num_outcomes; ++j) {
      by_d.per_action[i].Set(FeedbackSymbol(signal(i, j)),
                             FeedbackSymbol(d_matrix(i, i) * signal(i, j) + 0.0));
    }
  }
  transcript.ApplyRelabel(by_d);
  const Eigen::MatrixXd signal_prime = d_matrix * signal;

  const Eigen::VectorXd combo = (k(0) * h1 + k(1) * h2);
  transcript.ApplyColumnShift(combo);
  const Eigen::MatrixXd loss_prime =
      SubtractSignalCombination(shifted_loss, k, signal);

  double scale = 1.0;
  double offset = 0.0;
  Eigen::MatrixXd bandit(2, num_outcomes);
  if (exact) {
    RationalMatrix hq(2, num_outcomes);
    for (int j = 0; j < num_outcomes; ++j) {
      hq(0, j) = exact->h1[j];
      hq(1, j) = exact->h2[j];
    }
    RationalMatrix hpq(2, num_outcomes);
    exact->loss_prime = RationalMatrix(2, num_outcomes);
    Rational lo = 0, hi = 0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < num_outcomes; ++j) {
        hpq(i, j) = ToRational(d_matrix(i, i)) * hq(i, j);
        exact->loss_prime(i, j) =
            exact->shifted_loss(i, j) -
            (ToRational(k(0)) * hq(0, j) + ToRational(k(1)) * hq(1, j));
        if ((i == 0 && j == 0) || hpq(i, j) < lo) lo = hpq(i, j);
        if ((i == 0 && j == 0) || hpq(i, j) > hi) hi = hpq(i, j);
      }
    }
    exact->offset = lo;
    exact->scale = hi > lo ? Rational(hi - lo) : Rational(1);
    exact->bandit_loss = RationalMatrix(2, num_outcomes);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < num_outcomes; ++j) {
        exact->bandit_loss(i, j) = (hpq(i, j) - exact->offset) / exact->scale;
      }
    }
    scale = exact->scale.get_d();
    offset = exact->offset.get_d();
    bandit = exact->bandit_loss.ToDouble();
  } else {
    offset = signal_prime.minCoeff();
    const double hi = signal_prime.maxCoeff();
    scale = hi > offset ? hi - offset : 1.0;
    bandit = (signal_prime.array() - offset) / scale;
  }
  if (!std::isfinite(scale) || !std::isfinite(offset) || !(scale > 0.0)) {
    throw GameError(ErrorCode::kDegenerateGame,
                    "bandit losses cannot be rescaled into [0,1]");
  }

  transcript.ApplyGlobalAffine(scale, Eigen::VectorXd::Constant(num_outcomes, offset));
  FeedbackRelabel rescale;
  rescale.per_action.resize(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < num_outcomes; ++j) {
      rescale.per_action[i].Set(FeedbackSymbol(signal_prime(i, j)),
                                FeedbackSymbol(bandit(i, j)));
    }
  }
  transcript.ApplyRelabel(rescale);

  FeedbackMatrix bandit_feedback(2, num_outcomes);
  std::array<FeedbackLossMap, 2> feedback_to_loss;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < num_outcomes; ++j) {
      bandit_feedback(i, j) = FeedbackSymbol(bandit(i, j));
      if (!feedback_to_loss[i].Find(game.Feedback(i, j))) {
        feedback_to_loss[i].Set(game.Feedback(i, j), bandit(i, j));
      }
    }
  }
  Game bandit_game = ValidateGame(bandit, bandit_feedback, game.name() + " [bandit]",
                                  GameOrigin::kDerived);

  attempt.reduction.emplace(BanditReduction{
      .source = game,
      .shifted_loss = shifted_loss,
      .ell = ell,
      .indicator = indicator,
      .symbol_tables = canonical.tables,
      .lambda = lambda,
      .h1 = h1,
      .h2 = h2,
      .signal = signal,
      .k_matrix = k_matrix,
      .d_matrix = d_matrix,
      .k = k,
      .signal_prime = signal_prime,
      .loss_prime = loss_prime,
      .scale = scale,
      .offset = offset,
      .bandit_game = std::move(bandit_game),
      .feedback_to_loss = std::move(feedback_to_loss),
      .transcript = std::move(transcript),
      .arithmetic = mode,
      .exact = std::move(exact),
  });
  return attempt;
}

BanditReduction ReduceToBandit(const Game& game, const SolveOptions& options) {
  ReductionAttempt attempt = AttemptReduction(game, options);
  if (!attempt.reduction) {
    throw GameError(ErrorCode::kNotReducible,
                    "ell is not in the row space of the indicator matrix "
                    "(residual " + std::to_string(attempt.decomposition.residual) +
                        "); the game has linear regret");
  }
  return std::move(*attempt.reduction);
}

// -- Verification -------------------------------------------------------------

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.passed; });
}

const VerificationCheck* VerificationReport::Find(std::string_view name) const {
  for (const VerificationCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport VerifyReduction(const BanditReduction& red, double tol) {
  VerificationReport report;
  auto add = [&report](std::string name, double residual, double bound) {
    report.checks.push_back({std::move(name), residual <= bound, residual});
  };
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const Game& source = red.source;
  const int num_outcomes = source.num_outcomes();

  if (source.num_actions() != 2) {
    report.checks.push_back({"arity", false, kInf});
    return report;
  }

  // Indicator matrix rebuilt from the source feedback.
  const Eigen::VectorXd first_row = source.loss().row(0).transpose();
  const Eigen::MatrixXd shifted = source.loss().rowwise() - first_row.transpose();
  const CanonicalFeedback canonical = CanonicalizeFeedback(source);
  const IndicatorMatrix a = BuildIndicatorMatrix(
      canonical.game.feedback(),
      {canonical.distinct_counts[0], canonical.distinct_counts[1]});
  {
    double residual = kInf;
    if (a.a.rows() == red.indicator.a.rows() && a.a.cols() == red.indicator.a.cols() &&
        a.block_sizes == red.indicator.block_sizes) {
      residual = MaxAbs(a.a - red.indicator.a);
      // Each column of each block has a single 1.
      for (int i = 0; i < 2; ++i) {
        const Eigen::RowVectorXd sums =
            a.a.middleRows(a.offset(i), a.block_sizes[i]).colwise().sum();
        residual = std::max(residual, MaxAbs(sums.array() - 1.0));
      }
    }
    add("indicator", residual, 0.0);
  }

  // K, D and k fit together: K - D = 1 k^T.
  {
    const Eigen::Matrix2d d = DMatrix(red.k_matrix);
    const Eigen::Vector2d k = KVector(red.k_matrix);
    Eigen::Matrix2d one_k;
    one_k << k.transpose(), k.transpose();
    double residual = std::max({MaxAbs(d - red.d_matrix), MaxAbs(k - red.k),
                                MaxAbs(red.k_matrix - red.d_matrix - one_k)});
    add("K-D=1k^T", residual, 0.0);
  }

  if (red.lambda.size() != a.rows()) {
    report.checks.push_back({"L=KH", false, kInf});
    return report;
  }
  const double bound = tol * (1.0 + red.ell.norm());

  if (red.exact) {
    const ExactReduction& ex = *red.exact;
    const RationalMatrix lq = ExactShiftedLoss(source.loss());
    const RationalMatrix hq = ExactSignal(a, ex.lambda);
    const RationalMatrix kq = RationalMatrix::FromDouble(red.k_matrix);
    const RationalMatrix dq = RationalMatrix::FromDouble(red.d_matrix);
    const RationalMatrix dh = dq * hq;
    RationalMatrix lprime = lq;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < num_outcomes; ++j) {
        lprime(i, j) -= ToRational(red.k(0)) * hq(0, j) + ToRational(red.k(1)) * hq(1, j);
      }
    }
    double lambda_gap = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
      lambda_gap = std::max(lambda_gap, std::fabs(ex.lambda[r].get_d() - red.lambda(r)));
    }
    add("lambda exact/float", lambda_gap, bound);
    add("L=KH", MaxAbsDiff(lq, kq * hq), 0.0);
    add("H'=DH", MaxAbsDiff(dh, ex.loss_prime), 0.0);
    add("L'=L-1(k^T H)", MaxAbsDiff(lprime, ex.loss_prime), 0.0);
    add("L'=H'", MaxAbsDiff(lprime, dh), 0.0);
    RationalMatrix rescaled = dh;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < num_outcomes; ++j) {
        rescaled(i, j) = (dh(i, j) - ex.offset) / ex.scale;
      }
    }
    add("rescale", MaxAbsDiff(rescaled, ex.bandit_loss), 0.0);
  } else {
    const auto [h1, h2] = BuildSignalRows(red.lambda, a);
    const Eigen::MatrixXd h = StackRows(h1, h2);
    const Eigen::MatrixXd dh = red.d_matrix * h;
    const Eigen::MatrixXd lprime = SubtractSignalCombination(shifted, red.k, h);
    add("L=KH", MaxAbs(shifted - red.k_matrix * h), bound);
    add("H'=DH", MaxAbs(dh - red.signal_prime), bound);
    add("L'=L-1(k^T H)", MaxAbs(lprime - red.loss_prime), bound);
    add("L'=H'", MaxAbs(red.loss_prime - red.signal_prime), bound);
    const Eigen::MatrixXd rescaled = (red.signal_prime.array() - red.offset) / red.scale;
    add("rescale", MaxAbs(rescaled - red.bandit_game.loss()), bound);
  }

  // Surrogate losses are a function of (action, feedback symbol) and agree
  // with the bandit game, whose feedback is its loss.
  {
    double residual = 0.0;
    const Game& bandit = red.bandit_game;
    if (bandit.num_actions() != 2 || bandit.num_outcomes() != num_outcomes) {
      residual = kInf;
    } else {
      for (int i = 0; i < 2 && residual < kInf; ++i) {
        for (int j = 0; j < num_outcomes; ++j) {
          const std::optional<double> mapped =
              red.feedback_to_loss[i].Find(source.Feedback(i, j));
          const FeedbackSymbol& fb = bandit.Feedback(i, j);
          if (!mapped || !fb.is_number()) {
            residual = kInf;
            break;
          }
          residual = std::max({residual, std::fabs(*mapped - bandit.Loss(i, j)),
                               std::fabs(fb.number() - bandit.Loss(i, j))});
        }
      }
    }
    add("feedback_to_loss", residual, 0.0);
  }
  {
    const Eigen::MatrixXd& b = red.bandit_game.loss();
    const double below = std::max(0.0, -b.minCoeff());
    const double above = std::max(0.0, b.maxCoeff() - 1.0);
    add("bandit range [0,1]", std::max(below, above), 0.0);
  }
  add("transcript replay", red.transcript.ReplayResidual(red.bandit_game),
      tol * (1.0 + MaxAbs(red.loss_prime)));
  add("regret scale", std::fabs(red.transcript.regret_scale() - red.scale), 0.0);
  return report;
}

}  // namespace pmgames
