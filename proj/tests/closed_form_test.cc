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


#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "biblock/closed_form.h"
#include "biblock/errors.h"
#include "biblock/graph.h"
#include "biblock/matrix.h"
#include "biblock/oracle.h"
#include "biblock/polynomial.h"
#include "biblock/qdist.h"
#include "biblock/rational.h"
#include "biblock/rational_function.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace biblock {
namespace {

using ::biblock::testing::F;
using ::biblock::testing::P;
using ::biblock::testing::Q;
using RFMatrix = RingMatrix<RationalFunction>;
using RatMatrix = RingMatrix<Rational>;

BiBlockGraph K(int s, int t) { return BiBlockGraph::build(single_block(s, t)); }

const Polynomial& q_plus_one() {
  static const Polynomial p = P({1, 1});
  return p;
}

// Small graphs for identity checks; the oracle suite covers the full
// corpus.
std::vector<BiBlockGraph> sample_graphs() {
  std::vector<BiBlockGraph> out;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    out.push_back(BiBlockGraph::build(random_biblock(seed, 4, 3)));
  }
  out.push_back(BiBlockGraph::build(path_tree(5)));
  out.push_back(BiBlockGraph::build(star_tree(5)));
  out.push_back(K(3, 2));
  return out;
}

RatMatrix numeric_q_distance(const BiBlockGraph& g, const Rational& q0) {
  return eval_at(q_distance_matrix(g), q0);
}

TEST(BlockDeterminantTest, Examples) {
  EXPECT_EQ(det_block(1, 1), P({-1}));
  EXPECT_EQ(det_block(1, 2), P({2, 2}));
  EXPECT_EQ(det_block(2, 2), pow(q_plus_one(), 2) * P({3, 1}) * P({-1, 1}));
}

// The printed formula, term by term, against cofactor expansion of the
// block matrix.
TEST(BlockDeterminantTest, MatchesCofactorExpansion) {
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; t <= 3; ++t) {
      const Polynomial expected = testing::cofactor_det(
          q_distance_matrix(K(s, t)));
      EXPECT_EQ(det_block(s, t), expected) << s << "," << t;
      const int sign = (s + t) % 2 == 0 ? 1 : -1;
      const Polynomial bracket =
          pow(q_plus_one(), 2) * Rational((s - 1) * (t - 1)) - P({s * t});
      EXPECT_EQ(det_block(s, t),
                Rational(sign) * pow(q_plus_one(), s + t - 2) * bracket);
    }
  }
}

// At q = 1 the quoted classical value (-2)^{s+t}(3st-4s-4t+4) is four
// times the block determinant.
TEST(BlockDeterminantTest, ClassicalValueDiffersByFactorFour) {
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      const Rational quoted = pow(Rational(-2), s + t) *
                              Rational(3 * s * t - 4 * s - 4 * t + 4);
      EXPECT_EQ(det_block(s, t).eval_at(1) * Rational(4), quoted);
      EXPECT_EQ(det_block(s, t).eval_at(1),
                testing::numeric_det(numeric_q_distance(K(s, t), 1)));
    }
  }
}

TEST(BlockCofactorTest, Examples) {
  EXPECT_EQ(xi_block(1, 1), P({-1, -1}));
  EXPECT_EQ(xi_block(2, 1), P({1, 2, 1}));
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const Rational at_zero = xi_block(s, t).eval_at(0);
      EXPECT_TRUE(at_zero == Rational(1) || at_zero == Rational(-1));
    }
  }
}

TEST(BlockCofactorTest, SignAgainstDirectDeterminant) {
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const BiBlockGraph g = K(s, t);
      const Polynomial direct = testing::cofactor_det(
          xi_construction(q_distance_matrix(g), distances(g)));
      EXPECT_EQ(xi_block(s, t), direct) << s << "," << t;
      const int sign = (s + t) % 2 == 0 ? 1 : -1;
      const Polynomial bracket =
          Q() * Q() * Rational((s - 1) * (t - 1)) - P({1});
      EXPECT_EQ(xi_block(s, t),
                Rational(sign) * pow(q_plus_one(), s + t - 1) * bracket);
      // The printed sign (-1)^{s+t-1} is off by exactly -1.
      EXPECT_EQ(xi_block_opposite_sign(s, t), -xi_block(s, t));
    }
  }
  EXPECT_EQ(xi_block_opposite_sign(1, 1), P({1, 1}));
}

// The sign slip sits in det[q^2(t-1)J - I] over s-1 rows, which is
// (-1)^{s-2}[q^2(s-1)(t-1) - 1] by the aI + bJ determinant.
TEST(BlockCofactorTest, ScalarPlusAllOnesStep) {
  for (int s = 2; s <= 5; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const int n = s - 1;
      const RingMatrix<Polynomial> m = RingMatrix<Polynomial>::generate(
          n, n, [&](std::size_t i, std::size_t j) {
            return Q() * Q() * Rational(t - 1) - P({i == j ? 1 : 0});
          });
      const Polynomial bracket =
          Q() * Q() * Rational((s - 1) * (t - 1)) - P({1});
      EXPECT_EQ(det_bareiss(m), Rational(s % 2 == 0 ? 1 : -1) * bracket);
    }
  }
}

TEST(BlockInverseTest, Examples) {
  EXPECT_EQ(inverse_block(1, 1), RFMatrix(2, 2, {0, 1, 1, 0}));
  EXPECT_EQ(inverse_block(1, 2),
            inverse_gauss(to_rational_functions(q_distance_matrix(K(1, 2)))));
  EXPECT_EQ(to_rational_functions(q_distance_matrix(K(3, 2))) *
                inverse_block(3, 2),
            RFMatrix::identity(5));
}

TEST(BlockInverseTest, AgreesWithGraphFormulaAndNumericInverse) {
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      const RFMatrix inv = inverse_block(s, t);
      EXPECT_EQ(inv, inverse_graph(K(s, t))) << s << "," << t;
      const Rational q0(2, 3);
      const auto numeric =
          testing::numeric_inverse(numeric_q_distance(K(s, t), q0));
      ASSERT_TRUE(numeric.has_value());
      EXPECT_EQ(eval_at(inv, q0), *numeric);
    }
  }
}

TEST(GraphDeterminantTest, PathOnThreeVertices) {
  const BiBlockGraph p3 = BiBlockGraph::build(path_tree(3));
  EXPECT_EQ(det_graph(p3), P({2, 2}));
  EXPECT_EQ(det_graph(p3), det_block(1, 2));
  EXPECT_EQ(xi_graph(p3), pow(q_plus_one(), 2));
}

TEST(GraphDeterminantTest, SingleBlockReducesToBlockFormulas) {
  EXPECT_EQ(det_graph(K(3, 4)), det_block(3, 4));
  EXPECT_EQ(xi_graph(K(3, 4)), xi_block(3, 4));
}

TEST(GraphDeterminantTest, TreeFormula) {
  std::vector<std::vector<BlockSpec>> trees;
  for (int n = 2; n <= 10; ++n) {
    trees.push_back(path_tree(n));
    trees.push_back(star_tree(n));
    trees.push_back(random_tree(static_cast<std::uint64_t>(n), n));
  }
  for (const auto& specs : trees) {
    const BiBlockGraph g = BiBlockGraph::build(specs);
    const int n = g.vertex_count();
    const Polynomial expected = Rational(n % 2 == 0 ? -(n - 1) : n - 1) *
                                pow(q_plus_one(), n - 2);
    EXPECT_EQ(det_graph(g), expected) << "n=" << n;
    EXPECT_EQ(det_graph(g).eval_at(1),
              Rational(n % 2 == 0 ? -(n - 1) : n - 1) * pow(Rational(2), n - 2));
  }
  // Star on four vertices, hand expansion.
  EXPECT_EQ(det_graph(BiBlockGraph::build(star_tree(4))),
            Rational(-3) * pow(q_plus_one(), 2));
}

TEST(GraphDeterminantTest, MatchesNumericEliminationAtSamplePoints) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const Polynomial det = det_graph(g);
    for (const Rational& q0 : testing::sample_points()) {
      ASSERT_EQ(det.eval_at(q0),
                testing::numeric_det(numeric_q_distance(g, q0)))
          << "q0=" << q0;
    }
  }
}

TEST(GraphDeterminantTest, CofactorMatchesNumericElimination) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const auto m = xi_construction(q_distance_matrix(g), distances(g));
    const Polynomial xi = xi_graph(g);
    for (const Rational& q0 : testing::sample_points()) {
      ASSERT_EQ(xi.eval_at(q0), testing::numeric_det(eval_at(m, q0)));
    }
  }
}

TEST(VectorTest, SingleEdge) {
  const BiBlockGraph g = K(1, 1);
  const RationalFunction inv_q1 = F(P({1}), q_plus_one());
  EXPECT_EQ(x_vector(g), (std::vector<RationalFunction>{inv_q1, inv_q1}));
  EXPECT_EQ(y_vector(g), (std::vector<RationalFunction>{0, 0}));
  EXPECT_EQ(matrix_A(g), RFMatrix(2, 2, {0, -1, -1, 0}));
  EXPECT_EQ(matrix_B(g), RFMatrix::zero(2, 2));
  const RationalFunction minus_q = F(-Q(), q_plus_one());
  EXPECT_EQ(script_L(g), RFMatrix(2, 2, {inv_q1, minus_q, minus_q, inv_q1}));
  EXPECT_EQ(script_L(g)(0, 0) + script_L(g)(0, 1), F(P({1, -1}), q_plus_one()));
}

TEST(VectorTest, CutVertexOfTwoEdges) {
  const BiBlockGraph g = BiBlockGraph::build(path_tree(3));
  EXPECT_EQ(x_vector(g)[1], F(P({2}), q_plus_one()) - RationalFunction(1));
  EXPECT_EQ(lambda(g), F(P({2}), q_plus_one()));
}

TEST(VectorTest, FourCycle) {
  const BiBlockGraph g = K(2, 2);
  EXPECT_EQ(lambda(g), F(pow(q_plus_one(), 2) - P({4}),
                         q_plus_one() * P({-1, 0, 1})));
  EXPECT_EQ(matrix_B(g)(0, 1), F(P({1}), P({-1, 0, 1})));
  EXPECT_EQ(lambda(K(1, 1)), F(P({1}), q_plus_one()));
}

TEST(VectorTest, AdjacencyWeightsFollowTheBlocks) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const RFMatrix a = matrix_A(g);
    const RFMatrix b = matrix_B(g);
    EXPECT_EQ(a, transpose(a));
    EXPECT_EQ(b, transpose(b));
    const DistanceTable d = distances(g);
    for (int i = 0; i < g.vertex_count(); ++i) {
      EXPECT_TRUE(b(i, i).is_zero());
      for (int j = 0; j < g.vertex_count(); ++j) {
        if (!a(i, j).is_zero()) EXPECT_EQ(d(i, j), 1);
        if (!b(i, j).is_zero()) EXPECT_EQ(d(i, j), 2);
      }
    }
  }
}

TEST(IdentityTest, DistanceTimesX) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const auto d = to_rational_functions(q_distance_matrix(g));
    const auto dx = mul(d, x_vector(g));
    for (const RationalFunction& v : dx) ASSERT_EQ(v, lambda(g));
  }
}

TEST(IdentityTest, SumOfX) {
  for (const BiBlockGraph& g : sample_graphs()) {
    RationalFunction sum(0);
    for (const RationalFunction& v : x_vector(g)) sum += v;
    ASSERT_EQ(sum, RationalFunction(1) -
                       RationalFunction(P({-1, 1})) * lambda(g));
  }
}

// Stated for the last vertex; checked here with every vertex as anchor.
TEST(IdentityTest, AnchoredSumsHoldForEveryAnchor) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const auto d = q_distance_matrix(g);
    const auto x = x_vector(g);
    for (int anchor = 0; anchor < g.vertex_count(); ++anchor) {
      RationalFunction weighted(0);
      RationalFunction plain(0);
      for (int i = 0; i < g.vertex_count(); ++i) {
        weighted += RationalFunction(q_plus_one() +
                                     P({-1, 0, 1}) * d(i, anchor)) * x[i];
        plain += RationalFunction(P({1}) + P({-1, 1}) * d(i, anchor)) * x[i];
      }
      ASSERT_EQ(weighted, RationalFunction(q_plus_one())) << anchor;
      ASSERT_EQ(plain, RationalFunction(1)) << anchor;
    }
  }
}

TEST(IdentityTest, DistanceTimesLaplacianLike) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const auto d = to_rational_functions(q_distance_matrix(g));
    const std::vector<RationalFunction> ones(n, RationalFunction(1));
    ASSERT_EQ(d * script_L(g) + RFMatrix::identity(n),
              outer(ones, x_vector(g)));
  }
}

TEST(IdentityTest, InverseMatchesNumericInverse) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const RFMatrix inv = inverse_graph(g);
    for (const Rational& q0 : {Rational(2), Rational(-3, 7)}) {
      if (!check_conditions(g, q0).ok()) continue;
      const auto numeric = testing::numeric_inverse(numeric_q_distance(g, q0));
      ASSERT_TRUE(numeric.has_value());
      ASSERT_EQ(eval_at(inv, q0), *numeric);
    }
  }
}

TEST(IdentityTest, BundleIsConsistent) {
  const BiBlockGraph g = BiBlockGraph::build(random_biblock(3, 3, 3));
  const ClosedFormBundle b = closed_forms(g);
  EXPECT_EQ(b.det, det_graph(g));
  EXPECT_EQ(b.xi, xi_graph(g));
  EXPECT_EQ(b.lambda, lambda(g));
  EXPECT_EQ(b.x, x_vector(g));
  EXPECT_EQ(b.y, y_vector(g));
  EXPECT_EQ(b.A, matrix_A(g));
  EXPECT_EQ(b.B, matrix_B(g));
  EXPECT_EQ(b.L, script_L(g));
  EXPECT_EQ(b.inverse, inverse_graph(g));
}

TEST(ConditionTest, FourCycleAtOne) {
  const ConditionCheck c = check_conditions(K(2, 2), 1);
  EXPECT_TRUE(c.violates(Condition::kC1));
  EXPECT_TRUE(c.violates(Condition::kC2));
  const auto det = det_at(K(2, 2), 1);
  EXPECT_EQ(det.value, Rational(0));
  EXPECT_FALSE(det.conditions.ok());
  EXPECT_THROW(lambda_at(K(2, 2), 1), DomainError);
  EXPECT_THROW(vectors_at(K(2, 2), 1), DomainError);
  EXPECT_THROW(inverse_at(K(2, 2), 1), DomainError);
}

TEST(ConditionTest, MinusOneFailsEverything) {
  for (const BiBlockGraph& g : sample_graphs()) {
    const ConditionCheck c = check_conditions(g, -1);
    EXPECT_TRUE(c.violates(Condition::kC1));
    EXPECT_TRUE(c.violates(Condition::kC2));
    EXPECT_THROW(det_at(g, -1), DomainError);
    EXPECT_THROW(xi_at(g, -1), DomainError);
    EXPECT_THROW(lambda_at(g, -1), DomainError);
  }
}

TEST(ConditionTest, SingleEdgeAtOneIsAdmissible) {
  EXPECT_TRUE(check_conditions(K(1, 1), 1).ok());
  EXPECT_EQ(det_at(K(1, 1), 1).value, Rational(-1));
  EXPECT_EQ(inverse_at(K(1, 1), 1).value, RatMatrix(2, 2, {0, 1, 1, 0}));
}

// K_{2,2} at q = -3 breaks only the determinant condition.
TEST(ConditionTest, DeterminantConditionAlone) {
  const ConditionCheck c = check_conditions(K(2, 2), -3);
  EXPECT_FALSE(c.violates(Condition::kC1));
  EXPECT_TRUE(c.violates(Condition::kC2));
  EXPECT_EQ(det_at(K(2, 2), -3).value, Rational(0));
  EXPECT_EQ(lambda_at(K(2, 2), -3).value, Rational(0));
  EXPECT_THROW(inverse_at(K(2, 2), -3), DomainError);
}

// K_{2,5} at q = 1/2 breaks only the cofactor condition.
TEST(ConditionTest, CofactorConditionAlone) {
  const ConditionCheck c = check_conditions(K(2, 5), Rational(1, 2));
  EXPECT_TRUE(c.violates(Condition::kC1));
  EXPECT_FALSE(c.violates(Condition::kC2));
  ASSERT_EQ(c.violations.size(), 1u);
  EXPECT_EQ(c.violations[0].block, std::optional<int>(0));
  EXPECT_EQ(xi_at(K(2, 5), Rational(1, 2)).value, Rational(0));
  EXPECT_NE(det_at(K(2, 5), Rational(1, 2)).value, Rational(0));
  EXPECT_THROW(lambda_at(K(2, 5), Rational(1, 2)), DomainError);
}

TEST(ConditionTest, EvaluationsMatchNumericOracle) {
  for (const BiBlockGraph& g : sample_graphs()) {
    for (const Rational& q0 : {Rational(2), Rational(5, 3)}) {
      if (!check_conditions(g, q0).ok()) continue;
      const RatMatrix d = numeric_q_distance(g, q0);
      EXPECT_EQ(det_at(g, q0).value, testing::numeric_det(d));
      EXPECT_EQ(inverse_at(g, q0).value, *testing::numeric_inverse(d));
      const auto v = vectors_at(g, q0);
      const Rational lam = lambda_at(g, q0).value;
      for (std::size_t i = 0; i < d.rows(); ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < d.cols(); ++j) row += d(i, j) * v.value.x[j];
        EXPECT_EQ(row, lam);
      }
    }
  }
}

}  // namespace
}  // namespace biblock
