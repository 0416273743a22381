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

#ifndef BIBLOCK_CLOSED_FORM_H_
#define BIBLOCK_CLOSED_FORM_H_

#include <optional>
#include <vector>

#include "biblock/graph.h"
#include "biblock/matrix.h"
#include "biblock/polynomial.h"
#include "biblock/rational.h"
#include "biblock/rational_function.h"

namespace biblock {

// ---------------------------------------------------------------------------
// Single block K_{s,t}, vertices ordered X then Y.

// (-1)^(s+t-2) (q+1)^(s+t-2) [(q+1)^2 (s-1)(t-1) - st].
Polynomial det_block(int s, int t);

// (-1)^(s+t) (q+1)^(s+t-1) [q^2 (s-1)(t-1) - 1]; equals det(xi_construction)
// of K_{s,t}.
Polynomial xi_block(int s, int t);

// The same magnitude with the opposite sign (-1)^(s+t-1). This is the form
// as usually quoted; it disagrees with direct evaluation already for K_{1,1}
// (det[-(1+q)] = -(1+q)) and is kept only so tests can pin the discrepancy.
Polynomial xi_block_opposite_sign(int s, int t);

// c / ((q+1) g) J-blocks minus I/(q+1), with g = (q+1)^2 (s-1)(t-1) - st and
// c = (q+1)^2 (t-1) - t on XX, -(q+1) on XY, (q+1)^2 (s-1) - s on YY.
RingMatrix<RationalFunction> inverse_block(int s, int t);

// ---------------------------------------------------------------------------
// Bi-block graphs.

// Per-block determinant and cofactor used when composing over blocks.
struct BlockFormulas {
  Polynomial (*det)(int, int) = det_block;
  Polynomial (*xi)(int, int) = xi_block;
};

// prod_i xi(G_i).
Polynomial xi_graph(const BiBlockGraph& g, const BlockFormulas& f = {});
// sum_i det(G_i) prod_{j != i} xi(G_j).
Polynomial det_graph(const BiBlockGraph& g, const BlockFormulas& f = {});

std::vector<RationalFunction> x_vector(const BiBlockGraph& g);
std::vector<RationalFunction> y_vector(const BiBlockGraph& g);
// Weight 1/(q^2 (m-1)(n-1) - 1) across the two sides of each block.
RingMatrix<RationalFunction> matrix_A(const BiBlockGraph& g);
// Weight (n-1)/(...) between distinct X vertices and (m-1)/(...) between
// distinct Y vertices of each block.
RingMatrix<RationalFunction> matrix_B(const BiBlockGraph& g);
// sum over blocks of ((q+1)^2 (m-1)(n-1) - mn) / ((q+1)(q^2 (m-1)(n-1) - 1)).
RationalFunction lambda(const BiBlockGraph& g);
// q/(q+1) A - q^2/(q+1) B - q^2/(q+1) diag(y) + 1/(q+1) I.
RingMatrix<RationalFunction> script_L(const BiBlockGraph& g);
// -L + x x^T / lambda. Throws ArithmeticError if lambda is zero.
RingMatrix<RationalFunction> inverse_graph(const BiBlockGraph& g);

struct ClosedFormBundle {
  Polynomial det;
  Polynomial xi;
  RationalFunction lambda;
  std::vector<RationalFunction> x;
  std::vector<RationalFunction> y;
  RingMatrix<RationalFunction> A;
  RingMatrix<RationalFunction> B;
  RingMatrix<RationalFunction> L;
  RingMatrix<RationalFunction> inverse;
};

ClosedFormBundle closed_forms(const BiBlockGraph& g,
                              const BlockFormulas& f = {});

// ---------------------------------------------------------------------------
// Admissible values of q.

enum class Condition {
  kC1,  // q != -1 and q^2 (m_i-1)(n_i-1) != 1: cofactors nonzero
  kC2,  // q != -1 and (q+1)^2 (m_i-1)(n_i-1) != m_i n_i: determinant nonzero
};

const char* condition_name(Condition c);  // "C1" / "C2"

struct ConditionViolation {
  std::optional<int> block;  // absent for q0 = -1, which fails every block
  Condition condition = Condition::kC1;
  Rational lhs;
  Rational rhs;
};

struct ConditionCheck {
  Rational q0;
  std::vector<ConditionViolation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(Condition c) const;
};

ConditionCheck check_conditions(const BiBlockGraph& g, const Rational& q0);

template <typename T>
struct Evaluated {
  T value;
  ConditionCheck conditions;
};

// Determinant and cofactor are polynomials and always evaluate; violations
// of C2 (det) or C1 (xi) come back as data. q0 = -1 throws DomainError.
Evaluated<Rational> det_at(const BiBlockGraph& g, const Rational& q0);
Evaluated<Rational> xi_at(const BiBlockGraph& g, const Rational& q0);

// These throw DomainError unless C1 holds (and C2 as well for the inverse).
Evaluated<Rational> lambda_at(const BiBlockGraph& g, const Rational& q0);

struct EvaluatedVectors {
  std::vector<Rational> x;
  std::vector<Rational> y;
};
Evaluated<EvaluatedVectors> vectors_at(const BiBlockGraph& g,
                                       const Rational& q0);
Evaluated<RingMatrix<Rational>> inverse_at(const BiBlockGraph& g,
                                           const Rational& q0);

}  // namespace biblock

#endif  // BIBLOCK_CLOSED_FORM_H_
