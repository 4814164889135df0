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

#ifndef PMGAMES_RATIONAL_H_
#define PMGAMES_RATIONAL_H_

// Exact rational linear algebra used when a game's entries are small
// fractions. Row-space membership is a rank condition, and floating point can
// misjudge it; the exact path never does.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>

namespace pmgames {

using Rational = mpq_class;

// How the linear-algebra steps of the reduction are carried out. kAuto picks
// kExact when every input entry is a small fraction.
enum class Arithmetic { kAuto, kFloat, kExact };

std::string_view ArithmeticName(Arithmetic a);

inline constexpr long kMaxSmallDenominator = 1000;

// p/q with 1 <= q <= max_denominator such that double(p)/double(q) == x, with
// the smallest such q; nullopt if none exists.
std::optional<Rational> SmallFraction(double x,
                                      long max_denominator = kMaxSmallDenominator);

// The small-fraction reading of x when there is one, otherwise the exact
// binary value of the double.
Rational ToRational(double x);

std::string ToString(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix FromDouble(const Eigen::MatrixXd& m);
  Eigen::MatrixXd ToDouble() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  Rational& operator()(int i, int j) { return data_[i * cols_ + j]; }

  RationalMatrix Transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  std::vector<Rational> operator*(std::span<const Rational> x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// True when every entry has a SmallFraction reading.
bool AllSmallFractions(const Eigen::MatrixXd& m);

int Rank(RationalMatrix m);

// Some solution of a x = b (free variables set to zero), or nullopt when the
// system is inconsistent. Gauss-Jordan elimination over the rationals.
std::optional<std::vector<Rational>> SolveConsistent(RationalMatrix a,
                                                     std::vector<Rational> b);

std::vector<double> ToDouble(std::span<const Rational> x);

}  // namespace pmgames

#endif  // PMGAMES_RATIONAL_H_
