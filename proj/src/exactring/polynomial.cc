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

#include "biblock/polynomial.h"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "biblock/errors.h"

namespace biblock {
namespace {

using IntPoly = std::vector<mpz_class>;

bool all_integral(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& r) { return r.is_integer(); });
}

// Scales a nonzero polynomial to a primitive integer polynomial with
// positive leading coefficient.
IntPoly primitive_part(const std::vector<Rational>& coeffs) {
  mpz_class den_lcm = 1;
  for (const Rational& c : coeffs) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.raw().get_den_mpz_t());
  }
  IntPoly out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out[i] = coeffs[i].raw().get_num() * (den_lcm / coeffs[i].raw().get_den());
  }
  mpz_class content = 0;
  for (const mpz_class& c : out) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (mpz_class& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(),
                                        content.get_mpz_t());
  return out;
}

void make_primitive(IntPoly& p) {
  mpz_class content = 0;
  for (const mpz_class& c : p) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) break;
  }
  if (p.back() < 0) content = -content;
  if (content == 1) return;
  for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(),
                                      content.get_mpz_t());
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (mpz_class& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

// Division in Z[q]. Returns nullopt when the quotient is not integral or
// the remainder is nonzero; the caller then retries over Q.
std::optional<Polynomial> exact_div_integral(const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> rem(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rem[i] = a[i].raw().get_num();
  std::vector<const mpz_class*> bc(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bc[i] = &b[i].raw().get_num();
  const mpz_class& lead = *bc[db];
  std::vector<mpz_class> quot(a.size() - db);
  mpz_class r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    mpz_tdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::size_t i = 0; i < db; ++i) {
      mpz_submul(rem[k + i].get_mpz_t(), quot[k].get_mpz_t(),
                 bc[i]->get_mpz_t());
    }
    top = 0;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  std::vector<Rational> out;
  out.reserve(quot.size());
  for (mpz_class& c : quot) out.emplace_back(mpq_class(std::move(c)));
  return Polynomial(std::move(out));
}

}  // namespace

Polynomial::Polynomial(std::int64_t constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::q() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(Rational coefficient, std::size_t exponent) {
  if (coefficient.is_zero()) return Polynomial();
  std::vector<Rational> c(exponent + 1);
  c[exponent] = std::move(coefficient);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  const Rational inv = Rational(1) / leading();
  return *this * inv;
}

Rational Polynomial::eval_at(const Rational& q0) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q0;
    acc += *it;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = negative ? -c : c;
    if (i == 0) {
      os << mag.to_string();
      continue;
    }
    if (!mag.is_one()) {
      if (mag.is_integer()) {
        os << mag.to_string();
      } else {
        os << '(' << mag.to_string() << ')';
      }
    }
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  const auto& ac = a.coeffs_;
  const auto& bc = b.coeffs_;
  if (all_integral(ac) && all_integral(bc)) {
    std::vector<mpz_class> acc(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
      const mpz_srcptr ai = ac[i].raw().get_num_mpz_t();
      if (mpz_sgn(ai) == 0) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), ai, bc[j].raw().get_num_mpz_t());
      }
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (mpz_class& c : acc) out.emplace_back(mpq_class(std::move(c)));
    return Polynomial(std::move(out));
  }
  std::vector<Rational> out(ac.size() + bc.size() - 1);
  mpq_class tmp;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), ac[i].raw().get_mpq_t(),
              bc[j].raw().get_mpq_t());
      mpq_add(out[i + j].raw().get_mpq_t(), out[i + j].raw().get_mpq_t(),
              tmp.get_mpq_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial q_integer(unsigned alpha) {
  return Polynomial(std::vector<Rational>(alpha, Rational(1)));
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = Rational(1) / b.leading();
  const bool monic_divisor = b.leading().is_one();
  mpq_class tmp;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational& top = rem[k + db];
    if (top.is_zero()) continue;
    Rational factor = monic_divisor ? top : top * inv_lead;
    for (std::size_t i = 0; i < db; ++i) {
      if (bc[i].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), factor.raw().get_mpq_t(),
              bc[i].raw().get_mpq_t());
      mpq_sub(rem[k + i].raw().get_mpq_t(), rem[k + i].raw().get_mpq_t(),
              tmp.get_mpq_t());
    }
    top = Rational();
    quot[k] = std::move(factor);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (b.is_one()) return a;
  if (a.degree() >= b.degree() && all_integral(a.coefficients()) &&
      all_integral(b.coefficients())) {
    if (auto quot = exact_div_integral(a.coefficients(), b.coefficients())) {
      return std::move(*quot);
    }
  }
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) {
    throw ArithmeticError("non-exact division of " + a.to_string() + " by " +
                          b.to_string());
  }
  return quot;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  IntPoly x = primitive_part(a.coefficients());
  IntPoly y = primitive_part(b.coefficients());
  if (x.size() < y.size()) std::swap(x, y);
  while (true) {
    IntPoly r = pseudo_remainder(std::move(x), y);
    if (r.empty()) break;
    if (r.size() == 1) return Polynomial(1);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(y.size());
  for (mpz_class& c : y) out.emplace_back(mpq_class(std::move(c)));
  return Polynomial(std::move(out)).monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace biblock
