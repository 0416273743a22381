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

#ifndef BIBLOCK_POLYNOMIAL_H_
#define BIBLOCK_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "biblock/rational.h"

namespace biblock {

// Dense univariate polynomial over Q in the indeterminate q. Coefficient i
// multiplies q^i. The zero polynomial has no coefficients; otherwise the
// leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  Polynomial(Rational constant);      // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  // The indeterminate q.
  static Polynomial q();
  static Polynomial monomial(Rational coefficient, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  // Requires a nonzero polynomial.
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Rational eval_at(const Rational& q0) const;
  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    return a *= s;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

// [alpha] = 1 + q + ... + q^(alpha-1); [0] = 0.
Polynomial q_integer(unsigned alpha);

Polynomial pow(const Polynomial& base, unsigned exponent);

// Quotient and remainder; throws ArithmeticError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);

// a / b when b divides a; throws ArithmeticError otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

inline Rational eval_at(const Polynomial& p, const Rational& q0) {
  return p.eval_at(q0);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace biblock

#endif  // BIBLOCK_POLYNOMIAL_H_
