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

#ifndef PMGAMES_TESTS_RANK_ORACLE_H_
#define PMGAMES_TESTS_RANK_ORACLE_H_

// Independent small-integer reference used to cross-check the library. It
// shares no code with src/: fractions are int64 pairs, elimination is plain
// row reduction.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pmgames::testing {

class Fraction {
 public:
  Fraction(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Fraction operator+(Fraction a, Fraction b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(Fraction a, Fraction b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(Fraction a, Fraction b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Fraction operator/(Fraction a, Fraction b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(Fraction a, Fraction b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(Fraction a, Fraction b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(Fraction a, Fraction b) { return !(b < a); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

using FractionMatrix = std::vector<std::vector<Fraction>>;

inline int OracleRank(FractionMatrix m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Fraction factor = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] = m[r][k] - factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

enum class OracleClass { kTrivialZero, kBanditReducible, kHardLinear };

// Two-action reference classifier: dominance, then rank(A^T) against
// rank([A^T | ell]) with ell the difference of the two loss rows.
inline OracleClass OracleClassify(const FractionMatrix& loss,
                                  const std::vector<std::vector<int>>& feedback) {
  const int n = static_cast<int>(loss.size());
  const int m = static_cast<int>(loss[0].size());
  for (int i = 0; i < n; ++i) {
    bool dominates = true;
    for (int other = 0; other < n && dominates; ++other) {
      for (int j = 0; j < m; ++j) {
        if (loss[other][j] < loss[i][j]) {
          dominates = false;
          break;
        }
      }
    }
    if (dominates) return OracleClass::kTrivialZero;
  }
  // One indicator row per distinct symbol of each action, in any order.
  FractionMatrix a;
  for (int i = 0; i < 2; ++i) {
    std::map<int, int> index;
    const size_t first = a.size();
    for (int j = 0; j < m; ++j) {
      auto [it, added] = index.emplace(feedback[i][j], static_cast<int>(index.size()));
      if (added) a.emplace_back(m, Fraction(0));
      a[first + it->second][j] = Fraction(1);
    }
  }
  // Columns of A^T are the rows of A, so A^T is M x (rows of A).
  FractionMatrix at(m, std::vector<Fraction>(a.size()));
  for (size_t r = 0; r < a.size(); ++r) {
    for (int j = 0; j < m; ++j) at[j][r] = a[r][j];
  }
  FractionMatrix augmented = at;
  for (int j = 0; j < m; ++j) augmented[j].push_back(loss[1][j] - loss[0][j]);
  return OracleRank(at) == OracleRank(augmented) ? OracleClass::kBanditReducible
                                                 : OracleClass::kHardLinear;
}

}  // namespace pmgames::testing

#endif  // PMGAMES_TESTS_RANK_ORACLE_H_
