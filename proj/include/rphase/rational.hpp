// Copyright 2026 The Authors.
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

// Exact rational matrices: rank, determinant, row reduction.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rphase/bits.hpp"

namespace rphase {

using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
        throw Error("ragged matrix rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }

  RationalMatrix columns(const std::vector<int>& cols) const {
    RationalMatrix m(rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        m(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return m;
  }

  /// Reduced row-echelon form; returns the pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Rational inv = 1 / (*this)(r, c);
      for (int j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rational f = (*this)(i, c);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    RationalMatrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  Rational determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    RationalMatrix m = *this;
    Rational det = 1;
    for (int c = 0; c < cols_; ++c) {
      int p = c;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) return 0;
      if (p != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      for (int i = c + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        Rational f = m(i, c) / m(c, c);
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  /// The nonzero rows of the reduced row-echelon form.
  RationalMatrix row_basis() const {
    RationalMatrix m = *this;
    int r = static_cast<int>(m.rref().size());
    RationalMatrix out(r, cols_);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = m(i, j);
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

inline int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in \"" + s + "\"");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("not a rational number: \"" + s + "\"");
  }
}

}  // namespace rphase
