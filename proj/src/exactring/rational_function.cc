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

#include "biblock/rational_function.h"

#include <string>
#include <utility>

#include "biblock/errors.h"

namespace biblock {

RationalFunction::RationalFunction(std::int64_t constant)
    : num_(constant), den_(1) {}

RationalFunction::RationalFunction(Rational constant)
    : num_(std::move(constant)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  if (!den.leading().is_one()) {
    const Rational scale = Rational(1) / den.leading();
    num *= scale;
    den *= scale;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::eval_at(const Rational& q0) const {
  const Rational d = den_.eval_at(q0);
  if (d.is_zero()) {
    // q - q0 divides the denominator; report that factor.
    const Polynomial factor = Polynomial::q() - Polynomial(q0);
    throw PoleError("pole at q = " + q0.to_string() + ": denominator factor (" +
                    factor.to_string() + ") of " + den_.to_string() +
                    " vanishes");
  }
  return num_.eval_at(q0) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Reduced{});
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) {
      return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Reduced{});
    }
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  // With g = gcd(b1, b2): a1/b1 + a2/b2 = (a1*b2' + a2*b1') / (b1'*b2), and
  // only factors of g can be shared with the new numerator.
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_,
                            a.den_ * b.den_, RationalFunction::Reduced{});
  }
  const Polynomial ad = exact_div(a.den_, g);
  const Polynomial bd = exact_div(b.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  Polynomial den = ad * b.den_;
  if (num.is_zero()) return RationalFunction();
  const Polynomial h = gcd(num, g);
  if (!h.is_one()) {
    num = exact_div(num, h);
    den = exact_div(den, h);
  }
  return RationalFunction(std::move(num), std::move(den),
                          RationalFunction::Reduced{});
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.den_.is_one() && b.den_.is_one()) {
    return RationalFunction(a.num_ * b.num_, Polynomial(1),
                            RationalFunction::Reduced{});
  }
  // Cross-cancel: gcd(a1, b2) and gcd(a2, b1).
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  Polynomial den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  // gcd is monic, so the quotients of monic denominators stay monic.
  return RationalFunction(std::move(num), std::move(den),
                          RationalFunction::Reduced{});
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  return *this = *this + other;
}
RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this = *this - other;
}
RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  return *this = *this * other;
}
RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  return *this = *this / other;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

}  // namespace biblock
