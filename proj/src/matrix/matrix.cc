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

#include "biblock/matrix.h"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace biblock {
namespace {

// A list of rational functions rewritten over one common denominator.
struct Cleared {
  Polynomial den{1};
  std::vector<Polynomial> nums;
};

Cleared clear_denominators(const std::vector<const RationalFunction*>& fs) {
  Cleared out;
  std::vector<const Polynomial*> seen;
  for (const RationalFunction* f : fs) {
    const Polynomial& d = f->den();
    if (f->is_zero() || d.is_one()) continue;
    bool known = false;
    for (const Polynomial* s : seen) {
      if (*s == d) {
        known = true;
        break;
      }
    }
    if (known) continue;
    seen.push_back(&d);
    const Polynomial g = gcd(out.den, d);
    out.den *= g.is_one() ? d : exact_div(d, g);
  }
  std::vector<std::pair<const Polynomial*, Polynomial>> cofactors;
  out.nums.reserve(fs.size());
  for (const RationalFunction* f : fs) {
    if (f->is_zero()) {
      out.nums.emplace_back();
      continue;
    }
    const Polynomial& d = f->den();
    if (d == out.den) {
      out.nums.push_back(f->num());
      continue;
    }
    const Polynomial* cof = nullptr;
    for (const auto& [key, value] : cofactors) {
      if (*key == d) {
        cof = &value;
        break;
      }
    }
    if (cof == nullptr) {
      cofactors.emplace_back(&d, exact_div(out.den, d));
      cof = &cofactors.back().second;
    }
    out.nums.push_back(f->num() * *cof);
  }
  return out;
}

}  // namespace

RingMatrix<RationalFunction> mul(const RingMatrix<RationalFunction>& a,
                                 const RingMatrix<RationalFunction>& b) {
  matrix_internal::require_conformal(a.cols(), b.rows());
  const std::size_t inner = a.cols();
  std::vector<Cleared> rows(a.rows()), cols(b.cols());
  std::vector<const RationalFunction*> buf(inner);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) buf[k] = &a(i, k);
    rows[i] = clear_denominators(buf);
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t k = 0; k < inner; ++k) buf[k] = &b(k, j);
    cols[j] = clear_denominators(buf);
  }
  return RingMatrix<RationalFunction>::generate(
      a.rows(), b.cols(), [&](std::size_t i, std::size_t j) {
        Polynomial acc;
        for (std::size_t k = 0; k < inner; ++k) {
          const Polynomial& x = rows[i].nums[k];
          const Polynomial& y = cols[j].nums[k];
          if (x.is_zero() || y.is_zero()) continue;
          acc += x * y;
        }
        return RationalFunction(std::move(acc), rows[i].den * cols[j].den);
      });
}

std::vector<RationalFunction> mul(const RingMatrix<RationalFunction>& a,
                                  const std::vector<RationalFunction>& v) {
  matrix_internal::require_conformal(a.cols(), v.size());
  std::vector<const RationalFunction*> buf(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) buf[k] = &v[k];
  const Cleared col = clear_denominators(buf);
  std::vector<RationalFunction> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) buf[k] = &a(i, k);
    const Cleared row = clear_denominators(buf);
    Polynomial acc;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (row.nums[k].is_zero() || col.nums[k].is_zero()) continue;
      acc += row.nums[k] * col.nums[k];
    }
    out.emplace_back(std::move(acc), row.den * col.den);
  }
  return out;
}

RingMatrix<RationalFunction> to_rational_functions(
    const RingMatrix<Polynomial>& m) {
  return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

RingMatrix<RationalFunction> inverse_gauss(
    const RingMatrix<RationalFunction>& m) {
  if (!m.is_square()) {
    throw DimensionError("inverse of a non-square " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  const std::size_t width = 2 * n;
  // Row i of m equals row i of the polynomial matrix P divided by scale[i].
  std::vector<Polynomial> scale(n);
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(width));
  std::vector<const RationalFunction*> buf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) buf[j] = &m(i, j);
    Cleared c = clear_denominators(buf);
    scale[i] = std::move(c.den);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = std::move(c.nums[j]);
    a[i][n + i] = Polynomial(1);
  }
  Polynomial prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) {
      throw SingularMatrixError(
          k, "matrix is singular: no nonzero pivot in column " +
                 std::to_string(k) + " at elimination step " +
                 std::to_string(k));
    }
    if (p != k) std::swap(a[p], a[k]);
    const std::vector<Polynomial>& pivot_row = a[k];
    const Polynomial& pivot = pivot_row[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      std::vector<Polynomial>& r = a[i];
      const Polynomial lead = r[k];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        const bool keep_zero = r[j].is_zero() &&
                               (lead.is_zero() || pivot_row[j].is_zero());
        if (keep_zero) continue;
        Polynomial v = pivot * r[j];
        if (!lead.is_zero() && !pivot_row[j].is_zero()) {
          v -= lead * pivot_row[j];
        }
        r[j] = exact_div(v, prev);
      }
      r[k] = Polynomial();
    }
    prev = pivot;
  }
  // Now a = [d I | d P^-1] with d = prev, and m^-1 = P^-1 diag(scale).
  return RingMatrix<RationalFunction>::generate(
      n, n, [&](std::size_t i, std::size_t j) {
        return RationalFunction(a[i][n + j] * scale[j], prev);
      });
}

}  // namespace biblock
