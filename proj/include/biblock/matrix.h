// Copyright 2026 The Biblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIBLOCK_MATRIX_H_
#define BIBLOCK_MATRIX_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "biblock/errors.h"
#include "biblock/polynomial.h"
#include "biblock/rational.h"
#include "biblock/rational_function.h"

namespace biblock {

// Dense row-major matrix over a commutative ring T. T must be constructible
// from an integer literal (0 and 1) and support +, -, * and ==.
template <typename T>
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("matrix entry count " +
                           std::to_string(entries_.size()) + " != " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  // Entry (i, j) = f(i, j).
  template <typename F>
  static RingMatrix generate(std::size_t rows, std::size_t cols, F&& f) {
    std::vector<T> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) e.push_back(f(i, j));
    }
    return RingMatrix(rows, cols, std::move(e));
  }

  static RingMatrix zero(std::size_t rows, std::size_t cols) {
    return RingMatrix(rows, cols, std::vector<T>(rows * cols, T(0)));
  }
  static RingMatrix ones(std::size_t rows, std::size_t cols) {
    return RingMatrix(rows, cols, std::vector<T>(rows * cols, T(1)));
  }
  static RingMatrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t i, std::size_t j) {
      return i == j ? T(1) : T(0);
    });
  }
  static RingMatrix diagonal(const std::vector<T>& d) {
    return generate(d.size(), d.size(), [&](std::size_t i, std::size_t j) {
      return i == j ? d[i] : T(0);
    });
  }

  // Assembles a block matrix. Every block in a grid row must share a row
  // count and every block in a grid column a column count.
  static RingMatrix from_blocks(
      const std::vector<std::vector<RingMatrix>>& grid) {
    if (grid.empty()) return RingMatrix();
    const std::size_t grid_cols = grid.front().size();
    std::vector<std::size_t> heights, widths(grid_cols);
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
      if (grid[bi].size() != grid_cols) {
        throw DimensionError("block grid rows have different lengths");
      }
      heights.push_back(grid[bi].front().rows());
      for (std::size_t bj = 0; bj < grid_cols; ++bj) {
        const RingMatrix& b = grid[bi][bj];
        if (b.rows() != heights[bi]) {
          throw DimensionError("block (" + std::to_string(bi) + "," +
                               std::to_string(bj) + ") has " +
                               std::to_string(b.rows()) + " rows, expected " +
                               std::to_string(heights[bi]));
        }
        if (bi == 0) {
          widths[bj] = b.cols();
        } else if (b.cols() != widths[bj]) {
          throw DimensionError("block (" + std::to_string(bi) + "," +
                               std::to_string(bj) + ") has " +
                               std::to_string(b.cols()) + " cols, expected " +
                               std::to_string(widths[bj]));
        }
      }
    }
    std::size_t rows = 0, cols = 0;
    for (std::size_t h : heights) rows += h;
    for (std::size_t w : widths) cols += w;
    std::vector<T> e;
    e.reserve(rows * cols);
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
      for (std::size_t i = 0; i < heights[bi]; ++i) {
        for (std::size_t bj = 0; bj < grid_cols; ++bj) {
          for (std::size_t j = 0; j < widths[bj]; ++j) {
            e.push_back(grid[bi][bj](i, j));
          }
        }
      }
    }
    return RingMatrix(rows, cols, std::move(e));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<T>& entries() const { return entries_; }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(entries_.begin() + i * cols_,
                          entries_.begin() + (i + 1) * cols_);
  }

  template <typename F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> e;
    e.reserve(entries_.size());
    for (const T& x : entries_) e.push_back(f(x));
    return RingMatrix<U>(rows_, cols_, std::move(e));
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

namespace matrix_internal {

inline void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br,
                               std::size_t bc, const char* op) {
  if (ar != br || ac != bc) {
    throw DimensionError(std::string(op) + ": shape " + std::to_string(ar) +
                         "x" + std::to_string(ac) + " vs " +
                         std::to_string(br) + "x" + std::to_string(bc));
  }
}

inline void require_conformal(std::size_t ac, std::size_t br) {
  if (ac != br) {
    throw DimensionError("mul: inner dimensions " + std::to_string(ac) +
                         " and " + std::to_string(br) + " differ");
  }
}

}  // namespace matrix_internal

template <typename T>
RingMatrix<T> add(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  matrix_internal::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(),
                                      "add");
  return RingMatrix<T>::generate(
      a.rows(), a.cols(),
      [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

template <typename T>
RingMatrix<T> sub(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  matrix_internal::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(),
                                      "sub");
  return RingMatrix<T>::generate(
      a.rows(), a.cols(),
      [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

template <typename T>
RingMatrix<T> scalar_mul(const T& s, const RingMatrix<T>& a) {
  return a.map([&](const T& x) { return s * x; });
}

template <typename T>
RingMatrix<T> transpose(const RingMatrix<T>& a) {
  return RingMatrix<T>::generate(
      a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

// u v^T.
template <typename T>
RingMatrix<T> outer(const std::vector<T>& u, const std::vector<T>& v) {
  return RingMatrix<T>::generate(
      u.size(), v.size(),
      [&](std::size_t i, std::size_t j) { return u[i] * v[j]; });
}

template <typename T>
RingMatrix<T> mul(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  matrix_internal::require_conformal(a.cols(), b.rows());
  return RingMatrix<T>::generate(
      a.rows(), b.cols(), [&](std::size_t i, std::size_t j) {
        T acc(0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
          if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
          acc += a(i, k) * b(k, j);
        }
        return acc;
      });
}

template <typename T>
std::vector<T> mul(const RingMatrix<T>& a, const std::vector<T>& v) {
  matrix_internal::require_conformal(a.cols(), v.size());
  std::vector<T> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc(0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) || is_zero(v[k])) continue;
      acc += a(i, k) * v[k];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// Rational-function products are formed over per-row and per-column common
// denominators so that the inner sums are plain polynomial arithmetic.
RingMatrix<RationalFunction> mul(const RingMatrix<RationalFunction>& a,
                                 const RingMatrix<RationalFunction>& b);
std::vector<RationalFunction> mul(const RingMatrix<RationalFunction>& a,
                                  const std::vector<RationalFunction>& v);

template <typename T>
RingMatrix<T> operator+(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  return add(a, b);
}
template <typename T>
RingMatrix<T> operator-(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  return sub(a, b);
}
template <typename T>
RingMatrix<T> operator*(const RingMatrix<T>& a, const RingMatrix<T>& b) {
  return mul(a, b);
}

// Embeds a polynomial matrix into Q(q).
RingMatrix<RationalFunction> to_rational_functions(
    const RingMatrix<Polynomial>& m);

// Entrywise evaluation at q = q0. Throws PoleError for rational functions
// with a pole at q0.
template <typename T>
RingMatrix<Rational> eval_at(const RingMatrix<T>& m, const Rational& q0) {
  return m.map([&](const T& x) { return eval_at(x, q0); });
}

// Fraction-free (Bareiss) determinant over an integral domain. Every
// division in the elimination is exact; zero pivots are resolved by swapping
// in the first lower row with a structurally nonzero entry.
template <typename T>
T det_bareiss(const RingMatrix<T>& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of a non-square " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  std::vector<std::vector<T>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a[p][k])) ++p;
    if (p == n) return T(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    const T& pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const T& lead = a[i][k];
      const bool lead_zero = is_zero(lead);
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = pivot * a[i][j];
        if (!lead_zero && !is_zero(a[k][j])) v -= lead * a[k][j];
        a[i][j] = exact_div(v, prev);
      }
      a[i][k] = T(0);
    }
    prev = pivot;
  }
  T det = a[n - 1][n - 1];
  return negate ? T(0) - det : det;
}

// Exact inverse over Q(q) by fraction-free Gauss-Jordan elimination: rows
// are cleared to common polynomial denominators, [P | I] is reduced to
// [d I | adj], and the row scaling is undone at the end. Throws
// SingularMatrixError naming the failing column.
RingMatrix<RationalFunction> inverse_gauss(
    const RingMatrix<RationalFunction>& m);

}  // namespace biblock

#endif  // BIBLOCK_MATRIX_H_
