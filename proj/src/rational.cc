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

#include "pmgames/rational.h"

#include <cmath>
#include <utility>

namespace pmgames {

std::string_view ArithmeticName(Arithmetic a) {
  switch (a) {
    case Arithmetic::kAuto: return "auto";
    case Arithmetic::kFloat: return "float";
    case Arithmetic::kExact: return "exact";
  }
  return "unknown";
}

std::optional<Rational> SmallFraction(double x, long max_denominator) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12) return std::nullopt;
  for (long q = 1; q <= max_denominator; ++q) {
    const double p = std::nearbyint(x * static_cast<double>(q));
    if (p / static_cast<double>(q) == x) {
      Rational r(mpz_class(static_cast<long>(p)), mpz_class(q));
      r.canonicalize();
      return r;
    }
  }
  return std::nullopt;
}

Rational ToRational(double x) {
  if (auto small = SmallFraction(x)) return *small;
  return Rational(x);  // mpq from double is exact
}

std::string ToString(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();
  return canonical.get_str();
}

RationalMatrix RationalMatrix::FromDouble(const Eigen::MatrixXd& m) {
  RationalMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) out(i, j) = ToRational(m(i, j));
  }
  return out;
}

Eigen::MatrixXd RationalMatrix::ToDouble() const {
  Eigen::MatrixXd out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).get_d();
  }
  return out;
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> x) const {
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

bool AllSmallFractions(const Eigen::MatrixXd& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!SmallFraction(m(i, j))) return false;
    }
  }
  return true;
}

namespace {

// Reduces [a | b] to reduced row echelon form in place and returns the pivot
// column of each pivot row. Columns of b are never chosen as pivots.
std::vector<int> RowReduce(RationalMatrix& a, std::vector<Rational>* b) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
      if (b) std::swap((*b)[pivot], (*b)[row]);
    }
    const Rational inv = 1 / a(row, col);
    for (int c = col; c < a.cols(); ++c) a(row, c) *= inv;
    if (b) (*b)[row] *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (int c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
      if (b) (*b)[r] -= factor * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Rank(RationalMatrix m) {
  return static_cast<int>(RowReduce(m, nullptr).size());
}

std::optional<std::vector<Rational>> SolveConsistent(RationalMatrix a,
                                                     std::vector<Rational> b) {
  const std::vector<int> pivots = RowReduce(a, &b);
  for (int r = static_cast<int>(pivots.size()); r < a.rows(); ++r) {
    if (sgn(b[r]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::vector<double> ToDouble(std::span<const Rational> x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const Rational& q : x) out.push_back(q.get_d());
  return out;
}

}  // namespace pmgames
