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

#ifndef PMGAMES_REDUCTION_H_
#define PMGAMES_REDUCTION_H_

// Reduction of a two-action partial-monitoring game to a two-action bandit
// game.
//
// Pipeline for a game G0 = (L0, H0):
//   1. Shift every column by L0's first row, so the first loss row is zero and
//      the second row is ell = L0(1,:) - L0(0,:).
//   2. Renumber each feedback row to 1..m_i and build the stacked 0/1
//      indicator matrix A (m = m_1 + m_2 rows, one per (action, symbol)).
//   3. Write ell = A^T lambda (minimum-norm lambda). This fails exactly when
//      the game has linear minimax regret.
//   4. h_1, h_2 are the lambda-weighted sums of each block's rows; they are
//      functions of the feedback, so H = [h_1; h_2] is a relabel of H0, and
//      L = K H with K = [[0,0],[1,1]].
//   5. D = diag(k11 - k21, k22 - k12), H' = D H, L' = L - 1 (k^T H) with
//      k = (k21, k12). Then L' = H': a bandit game.
//   6. A global affine map brings L' into [0,1] for learners that need
//      bounded losses; its scale b converts regret back exactly.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pmgames/game.h"
#include "pmgames/rational.h"
#include "pmgames/transforms.h"

namespace pmgames {

inline constexpr double kDefaultTolerance = 1e-9;

struct SolveOptions {
  double tol = kDefaultTolerance;
  Arithmetic arithmetic = Arithmetic::kAuto;
};

// Stacked indicator matrix: row (offset(i) + j) has a 1 in column k iff the
// canonical feedback of action i at outcome k is j+1.
struct IndicatorMatrix {
  Eigen::MatrixXd a;
  std::array<int, 2> block_sizes{0, 0};

  int rows() const { return static_cast<int>(a.rows()); }
  int cols() const { return static_cast<int>(a.cols()); }
  int offset(int action) const { return action == 0 ? 0 : block_sizes[0]; }
};

// Errors: kWrongArity (rows != 2), kNotCanonical (an entry of row i that is
// not an integer in 1..block_sizes[i]).
IndicatorMatrix BuildIndicatorMatrix(const FeedbackMatrix& canonical,
                                     std::array<int, 2> block_sizes);

struct SignalDecomposition {
  bool in_row_space = false;
  // Minimum-norm lambda with A^T lambda = ell. Empty when !in_row_space.
  Eigen::VectorXd lambda;
  std::optional<std::vector<Rational>> exact_lambda;
  // ||A^T lambda_ls - ell||_2 for the least-squares lambda_ls.
  double residual = 0.0;
  Arithmetic arithmetic = Arithmetic::kFloat;
};

// Float mode accepts when residual <= tol * (1 + ||ell||_2). kAuto switches to
// exact arithmetic when every entry of ell is a small fraction. Throws
// kSolverError if the float solve produces non-finite values and
// kDimensionMismatch for inconsistent sizes.
SignalDecomposition SolveSignalDecomposition(const IndicatorMatrix& a,
                                             const Eigen::VectorXd& ell,
                                             const SolveOptions& options = {});
SignalDecomposition SolveSignalDecompositionExact(const IndicatorMatrix& a,
                                                  std::span<const Rational> ell);

// (h_1, h_2): lambda-weighted sums of the first and second row blocks of A.
std::pair<Eigen::VectorXd, Eigen::VectorXd> BuildSignalRows(
    const Eigen::VectorXd& lambda, const IndicatorMatrix& a);

// Surrogate loss for each feedback symbol of one action.
class FeedbackLossMap {
 public:
  void Set(const FeedbackSymbol& symbol, double loss);
  std::optional<double> Find(const FeedbackSymbol& symbol) const;
  const std::vector<std::pair<FeedbackSymbol, double>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<FeedbackSymbol, double>> entries_;
};

// Rational versions of the reduction quantities, present when the reduction
// ran in exact mode.
struct ExactReduction {
  RationalMatrix shifted_loss;  // L
  std::vector<Rational> ell;
  std::vector<Rational> lambda;
  std::vector<Rational> h1;
  std::vector<Rational> h2;
  RationalMatrix loss_prime;  // L' (= H')
  RationalMatrix bandit_loss;
  Rational scale;
  Rational offset;
};

struct BanditReduction {
  Game source;
  Eigen::MatrixXd shifted_loss;  // L
  Eigen::VectorXd ell;
  IndicatorMatrix indicator;
  // symbol_tables[i][j] is the original symbol numbered j+1 in row i.
  std::vector<std::vector<FeedbackSymbol>> symbol_tables;
  Eigen::VectorXd lambda;
  Eigen::VectorXd h1;
  Eigen::VectorXd h2;
  Eigen::MatrixXd signal;        // H
  Eigen::Matrix2d k_matrix;      // K
  Eigen::Matrix2d d_matrix;      // D
  Eigen::Vector2d k;             // (k21, k12)
  Eigen::MatrixXd signal_prime;  // H' = D H
  Eigen::MatrixXd loss_prime;    // L' = L - 1 (k^T H)
  // Bandit losses are (H' - offset) / scale; the bandit game's feedback is
  // its loss.
  double scale = 1.0;
  double offset = 0.0;
  Game bandit_game;
  std::array<FeedbackLossMap, 2> feedback_to_loss;
  TransformTranscript transcript;
  Arithmetic arithmetic = Arithmetic::kFloat;
  std::optional<ExactReduction> exact;
};

struct ReductionAttempt {
  IndicatorMatrix indicator;
  Eigen::VectorXd ell;
  std::optional<std::vector<Rational>> exact_ell;
  SignalDecomposition decomposition;
  std::optional<BanditReduction> reduction;
};

// Runs the pipeline and reports failure of the row-space test as an empty
// `reduction` instead of throwing. Throws kWrongArity for N != 2.
ReductionAttempt AttemptReduction(const Game& game, const SolveOptions& options = {});

// Throws kWrongArity, kNotReducible (ell not in the row space of A) or
// kDegenerateGame (non-finite rescaling).
BanditReduction ReduceToBandit(const Game& game, const SolveOptions& options = {});

struct VerificationCheck {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const;
  const VerificationCheck* Find(std::string_view name) const;
};

// Recomputes A, H, H', L' from the source game and the stored lambda and
// checks every identity of the reduction. In exact mode the algebraic
// identities are checked in rational arithmetic.
VerificationReport VerifyReduction(const BanditReduction& reduction,
                                   double tol = kDefaultTolerance);

}  // namespace pmgames

#endif  // PMGAMES_REDUCTION_H_
