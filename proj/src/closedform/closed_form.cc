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

#include "biblock/closed_form.h"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "biblock/errors.h"

namespace biblock {
namespace {

const Polynomial& q() {
  static const Polynomial kQ = Polynomial::q();
  return kQ;
}

Polynomial q_plus_1() { return q() + Polynomial(1); }

Polynomial sign_power(int exponent) {
  return Polynomial(exponent % 2 == 0 ? 1 : -1);
}

// (m-1)(n-1)
std::int64_t excess(int m, int n) {
  return static_cast<std::int64_t>(m - 1) * (n - 1);
}

// q^2 (m-1)(n-1) - 1; never the zero polynomial.
Polynomial cofactor_factor(int m, int n) {
  return Polynomial::monomial(Rational(excess(m, n)), 2) - Polynomial(1);
}

// (q+1)^2 (m-1)(n-1) - mn; never the zero polynomial.
Polynomial determinant_factor(int m, int n) {
  return Polynomial(excess(m, n)) * pow(q_plus_1(), 2) -
         Polynomial(static_cast<std::int64_t>(m) * n);
}

// The x-entry contribution of a block to a vertex on the side whose opposite
// part has `other` vertices: (q(other-1) - 1) / ((q+1)(q^2 (m-1)(n-1) - 1)).
RationalFunction x_term(int m, int n, int other) {
  return RationalFunction(
      Polynomial(other - 1) * q() - Polynomial(1),
      q_plus_1() * cofactor_factor(m, n));
}

RationalFunction y_term(int m, int n, int other) {
  return RationalFunction(Polynomial(other - 1), cofactor_factor(m, n));
}

RationalFunction lambda_block(int m, int n) {
  return RationalFunction(determinant_factor(m, n),
                          q_plus_1() * cofactor_factor(m, n));
}

std::string describe(const ConditionViolation& v) {
  std::string where = v.block ? "block " + std::to_string(*v.block) : "q = -1";
  return std::string(condition_name(v.condition)) + " (" + where + ": " +
         v.lhs.to_string() + " vs " + v.rhs.to_string() + ")";
}

void refuse_unless(const ConditionCheck& check, bool need_c1, bool need_c2,
                   const char* quantity) {
  std::string reasons;
  for (const ConditionViolation& v : check.violations) {
    const bool relevant = (v.condition == Condition::kC1 && need_c1) ||
                          (v.condition == Condition::kC2 && need_c2);
    if (!relevant) continue;
    if (!reasons.empty()) reasons += "; ";
    reasons += describe(v);
  }
  if (!reasons.empty()) {
    throw DomainError(std::string(quantity) + " is not defined at q = " +
                      check.q0.to_string() + ": " + reasons);
  }
}

void refuse_minus_one(const Rational& q0, const char* quantity) {
  if (q0 == Rational(-1)) {
    throw DomainError(std::string(quantity) +
                      " cannot be evaluated at q = -1");
  }
}

}  // namespace

Polynomial det_block(int s, int t) {
  return sign_power(s + t - 2) *
         pow(q_plus_1(), static_cast<unsigned>(s + t - 2)) *
         determinant_factor(s, t);
}

Polynomial xi_block(int s, int t) {
  return sign_power(s + t) *
         pow(q_plus_1(), static_cast<unsigned>(s + t - 1)) *
         cofactor_factor(s, t);
}

Polynomial xi_block_opposite_sign(int s, int t) { return -xi_block(s, t); }

RingMatrix<RationalFunction> inverse_block(int s, int t) {
  const Polynomial qp1 = q_plus_1();
  const Polynomial scale = qp1 * determinant_factor(s, t);
  const RationalFunction xx(Polynomial(t - 1) * pow(qp1, 2) - Polynomial(t),
                            scale);
  const RationalFunction xy(-qp1, scale);
  const RationalFunction yy(Polynomial(s - 1) * pow(qp1, 2) - Polynomial(s),
                            scale);
  const RationalFunction diag(Polynomial(1), qp1);
  const auto n = static_cast<std::size_t>(s + t);
  const auto su = static_cast<std::size_t>(s);
  return RingMatrix<RationalFunction>::generate(
      n, n, [&](std::size_t i, std::size_t j) {
        const bool xi = i < su, xj = j < su;
        RationalFunction v = xi && xj ? xx : (!xi && !xj ? yy : xy);
        if (i == j) v -= diag;
        return v;
      });
}

Polynomial xi_graph(const BiBlockGraph& g, const BlockFormulas& f) {
  Polynomial out(1);
  for (const Block& b : g.blocks()) out *= f.xi(b.m(), b.n());
  return out;
}

Polynomial det_graph(const BiBlockGraph& g, const BlockFormulas& f) {
  const auto& blocks = g.blocks();
  std::vector<Polynomial> xis;
  for (const Block& b : blocks) xis.push_back(f.xi(b.m(), b.n()));
  Polynomial out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Polynomial term = f.det(blocks[i].m(), blocks[i].n());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (j != i) term *= xis[j];
    }
    out += term;
  }
  return out;
}

std::vector<RationalFunction> x_vector(const BiBlockGraph& g) {
  std::vector<RationalFunction> x;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& member = g.membership(v);
    RationalFunction acc(-static_cast<std::int64_t>(member.size() - 1));
    for (const Membership& mb : member) {
      const Block& b = g.blocks()[mb.block];
      acc += x_term(b.m(), b.n(), mb.side == Side::kX ? b.n() : b.m());
    }
    x.push_back(std::move(acc));
  }
  return x;
}

std::vector<RationalFunction> y_vector(const BiBlockGraph& g) {
  std::vector<RationalFunction> y;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& member = g.membership(v);
    RationalFunction acc(-static_cast<std::int64_t>(member.size() - 1));
    for (const Membership& mb : member) {
      const Block& b = g.blocks()[mb.block];
      acc += y_term(b.m(), b.n(), mb.side == Side::kX ? b.n() : b.m());
    }
    y.push_back(std::move(acc));
  }
  return y;
}

namespace {

// Writes a per-block weight into a symmetric matrix; distinct vertex pairs
// belong to at most one common block, so no entry is written twice.
template <typename Pairs>
RingMatrix<RationalFunction> block_weighted(const BiBlockGraph& g,
                                            Pairs&& visit) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<RationalFunction> e(n * n);
  for (const Block& b : g.blocks()) {
    visit(b, [&](int u, int w, const RationalFunction& value) {
      e[u * n + w] = value;
      e[w * n + u] = value;
    });
  }
  return RingMatrix<RationalFunction>(n, n, std::move(e));
}

}  // namespace

RingMatrix<RationalFunction> matrix_A(const BiBlockGraph& g) {
  return block_weighted(g, [](const Block& b, auto&& put) {
    const RationalFunction w(Polynomial(1), cofactor_factor(b.m(), b.n()));
    for (int u : b.x) {
      for (int v : b.y) put(u, v, w);
    }
  });
}

RingMatrix<RationalFunction> matrix_B(const BiBlockGraph& g) {
  return block_weighted(g, [](const Block& b, auto&& put) {
    const RationalFunction wx = y_term(b.m(), b.n(), b.n());
    const RationalFunction wy = y_term(b.m(), b.n(), b.m());
    for (std::size_t i = 0; i < b.x.size(); ++i) {
      for (std::size_t j = i + 1; j < b.x.size(); ++j) put(b.x[i], b.x[j], wx);
    }
    for (std::size_t i = 0; i < b.y.size(); ++i) {
      for (std::size_t j = i + 1; j < b.y.size(); ++j) put(b.y[i], b.y[j], wy);
    }
  });
}

RationalFunction lambda(const BiBlockGraph& g) {
  RationalFunction acc;
  for (const Block& b : g.blocks()) acc += lambda_block(b.m(), b.n());
  return acc;
}

RingMatrix<RationalFunction> script_L(const BiBlockGraph& g) {
  const auto a = matrix_A(g);
  const auto b = matrix_B(g);
  const auto y = y_vector(g);
  const Polynomial qp1 = q_plus_1();
  const RationalFunction ca(q(), qp1);
  const RationalFunction cb(-q() * q(), qp1);
  const RationalFunction ci(Polynomial(1), qp1);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return RingMatrix<RationalFunction>::generate(
      n, n, [&](std::size_t i, std::size_t j) {
        RationalFunction v = ca * a(i, j) + cb * b(i, j);
        if (i == j) v += cb * y[i] + ci;
        return v;
      });
}

RingMatrix<RationalFunction> inverse_graph(const BiBlockGraph& g) {
  const RationalFunction lam = lambda(g);
  if (lam.is_zero()) throw ArithmeticError("lambda vanishes identically");
  const auto x = x_vector(g);
  const auto l = script_L(g);
  const RationalFunction inv_lam = lam.inv();
  std::vector<RationalFunction> scaled;
  for (const auto& xi : x) scaled.push_back(xi * inv_lam);
  return RingMatrix<RationalFunction>::generate(
      l.rows(), l.cols(), [&](std::size_t i, std::size_t j) {
        return scaled[i] * x[j] - l(i, j);
      });
}

ClosedFormBundle closed_forms(const BiBlockGraph& g, const BlockFormulas& f) {
  ClosedFormBundle out;
  out.det = det_graph(g, f);
  out.xi = xi_graph(g, f);
  out.lambda = lambda(g);
  out.x = x_vector(g);
  out.y = y_vector(g);
  out.A = matrix_A(g);
  out.B = matrix_B(g);
  out.L = script_L(g);
  out.inverse = inverse_graph(g);
  return out;
}

const char* condition_name(Condition c) {
  return c == Condition::kC1 ? "C1" : "C2";
}

bool ConditionCheck::violates(Condition c) const {
  for (const auto& v : violations) {
    if (v.condition == c) return true;
  }
  return false;
}

ConditionCheck check_conditions(const BiBlockGraph& g, const Rational& q0) {
  ConditionCheck out{q0, {}};
  if (q0 == Rational(-1)) {
    out.violations.push_back({std::nullopt, Condition::kC1, q0, Rational(-1)});
    out.violations.push_back({std::nullopt, Condition::kC2, q0, Rational(-1)});
  }
  const Rational q_sq = q0 * q0;
  const Rational qp1_sq = (q0 + Rational(1)) * (q0 + Rational(1));
  for (const Block& b : g.blocks()) {
    const Rational c(excess(b.m(), b.n()));
    const Rational c1 = q_sq * c;
    if (c1 == Rational(1)) {
      out.violations.push_back({b.id, Condition::kC1, c1, Rational(1)});
    }
    const Rational c2 = qp1_sq * c;
    const Rational mn(static_cast<std::int64_t>(b.m()) * b.n());
    if (c2 == mn) out.violations.push_back({b.id, Condition::kC2, c2, mn});
  }
  return out;
}

Evaluated<Rational> det_at(const BiBlockGraph& g, const Rational& q0) {
  refuse_minus_one(q0, "determinant");
  return {det_graph(g).eval_at(q0), check_conditions(g, q0)};
}

Evaluated<Rational> xi_at(const BiBlockGraph& g, const Rational& q0) {
  refuse_minus_one(q0, "cofactor");
  return {xi_graph(g).eval_at(q0), check_conditions(g, q0)};
}

Evaluated<Rational> lambda_at(const BiBlockGraph& g, const Rational& q0) {
  ConditionCheck check = check_conditions(g, q0);
  refuse_unless(check, true, false, "lambda");
  return {lambda(g).eval_at(q0), std::move(check)};
}

Evaluated<EvaluatedVectors> vectors_at(const BiBlockGraph& g,
                                       const Rational& q0) {
  ConditionCheck check = check_conditions(g, q0);
  refuse_unless(check, true, false, "x and y");
  EvaluatedVectors v;
  for (const auto& f : x_vector(g)) v.x.push_back(f.eval_at(q0));
  for (const auto& f : y_vector(g)) v.y.push_back(f.eval_at(q0));
  return {std::move(v), std::move(check)};
}

Evaluated<RingMatrix<Rational>> inverse_at(const BiBlockGraph& g,
                                           const Rational& q0) {
  ConditionCheck check = check_conditions(g, q0);
  refuse_unless(check, true, true, "inverse");
  return {eval_at(inverse_graph(g), q0), std::move(check)};
}

}  // namespace biblock
