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

#ifndef BIBLOCK_RATIONAL_FUNCTION_H_
#define BIBLOCK_RATIONAL_FUNCTION_H_

#include <cstdint>
#include <ostream>
#include <string>

#include "biblock/polynomial.h"
#include "biblock/rational.h"

namespace biblock {

// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic, so
// equal functions compare equal structurally. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(std::int64_t constant);  // NOLINT
  RationalFunction(Rational constant);      // NOLINT
  RationalFunction(Polynomial num);         // NOLINT
  // Throws ArithmeticError when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Throws ArithmeticError for the zero function.
  RationalFunction inv() const;
  // Throws PoleError when the denominator vanishes at q0.
  Rational eval_at(const Rational& q0) const;
  // Bare numerator when den = 1, otherwise "(<num>)/(<den>)".
  std::string to_string() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a * b.inv();
  }
  friend bool operator==(const RationalFunction& a,
                         const RationalFunction& b) = default;

 private:
  struct Reduced {};
  // Caller guarantees canonical form.
  RationalFunction(Polynomial num, Polynomial den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction exact_div(const RationalFunction& a,
                                  const RationalFunction& b) {
  return a / b;
}
inline Rational eval_at(const RationalFunction& f, const Rational& q0) {
  return f.eval_at(q0);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace biblock

#endif  // BIBLOCK_RATIONAL_FUNCTION_H_
