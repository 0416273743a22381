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


// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons
// only, each timed against its budget. Exits nonzero if any line fails.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "biblock/closed_form.h"
#include "biblock/graph.h"
#include "biblock/matrix.h"
#include "biblock/oracle.h"
#include "biblock/polynomial.h"
#include "biblock/qdist.h"
#include "biblock/rational.h"
#include "biblock/rational_function.h"
#include "biblock/verify.h"
#include "cli.h"

namespace biblock {
namespace {

using RFMatrix = RingMatrix<RationalFunction>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

BiBlockGraph K(int s, int t) { return BiBlockGraph::build(single_block(s, t)); }

std::string shape(int s, int t) {
  return "K(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

Polynomial q_plus_one() { return Polynomial({Rational(1), Rational(1)}); }

Polynomial sign(int e) { return Polynomial(e % 2 == 0 ? 1 : -1); }

std::vector<BiBlockGraph> composition_corpus() {
  std::vector<BiBlockGraph> out;
  for (const auto& specs : random_corpus(1)) {
    out.push_back(BiBlockGraph::build(specs));
  }
  for (const auto& specs : tree_corpus(8)) {
    out.push_back(BiBlockGraph::build(specs));
  }
  return out;
}

Outcome block_determinant() {
  Outcome o;
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      if (det_block(s, t) != det_bareiss(q_distance_matrix(K(s, t)))) {
        o.fail(shape(s, t));
      }
    }
  }
  if (o.pass) o.detail = "25 shapes";
  return o;
}

Outcome block_cofactor() {
  Outcome o;
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      const Polynomial xi = xi_block(s, t);
      if (xi != oracle_xi(K(s, t))) o.fail(shape(s, t) + " vs oracle");
      const Polynomial bracket =
          Polynomial::monomial(Rational((s - 1) * (t - 1)), 2) -
          Polynomial(1);
      const Polynomial stated =
          sign(s + t) * pow(q_plus_one(), s + t - 1) * bracket;
      if (xi != stated) o.fail(shape(s, t) + " vs sign-resolved form");
      if (xi_block_opposite_sign(s, t) != -xi) {
        o.fail(shape(s, t) + " printed sign is not the exact negation");
      }
    }
  }
  if (o.pass) o.detail = "25 shapes; printed sign differs by -1 everywhere";
  return o;
}

Outcome block_inverse() {
  Outcome o;
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const BiBlockGraph g = K(s, t);
      const RFMatrix inv = inverse_block(s, t);
      const RFMatrix d = to_rational_functions(q_distance_matrix(g));
      if (inv * d != RFMatrix::identity(s + t)) o.fail(shape(s, t) + " inv*D");
      if (inv != oracle_inverse(g)) o.fail(shape(s, t) + " vs oracle");
    }
  }
  if (o.pass) o.detail = "16 shapes";
  return o;
}

Outcome composition(const std::vector<BiBlockGraph>& corpus) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const BiBlockGraph& g = corpus[i];
    if (det_graph(g) != oracle_det(g)) o.fail("det, graph " + std::to_string(i));
    if (xi_graph(g) != oracle_xi(g)) o.fail("xi, graph " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs";
  return o;
}

Outcome tree_specialization() {
  Outcome o;
  std::vector<std::vector<BlockSpec>> trees;
  for (int n = 2; n <= 12; ++n) {
    trees.push_back(path_tree(n));
    trees.push_back(star_tree(n));
  }
  for (int i = 0; i < 20; ++i) {
    trees.push_back(random_tree(1000 + i, 2 + i % 11));
  }
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const BiBlockGraph g = BiBlockGraph::build(trees[k]);
    const int n = g.vertex_count();
    const Polynomial expected =
        sign(n - 1) * Polynomial(n - 1) * pow(q_plus_one(), n - 2);
    const Polynomial det = det_graph(g);
    if (det != expected) o.fail("tree " + std::to_string(k));
    const Rational classical =
        Rational(n % 2 == 0 ? -(n - 1) : n - 1) * pow(Rational(2), n - 2);
    if (det.eval_at(1) != classical) o.fail("q=1, tree " + std::to_string(k));
    if (oracle_det(g).eval_at(1) != classical) {
      o.fail("oracle at q=1, tree " + std::to_string(k));
    }
  }
  if (o.pass) o.detail = std::to_string(trees.size()) + " trees";
  return o;
}

Outcome identity_suite(const std::vector<BiBlockGraph>& corpus) {
  Outcome o;
  const Polynomial q = Polynomial::q();
  const Polynomial one(1);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const BiBlockGraph& g = corpus[k];
    const std::string id = ", graph " + std::to_string(k);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const RingMatrix<Polynomial> dp = q_distance_matrix(g);
    const RFMatrix d = to_rational_functions(dp);
    const ClosedFormBundle b = closed_forms(g);

    for (const RationalFunction& v : mul(d, b.x)) {
      if (v != b.lambda) o.fail("D x = lambda 1" + id);
    }
    RationalFunction sum(0);
    for (const RationalFunction& v : b.x) sum += v;
    if (sum != RationalFunction(1) - RationalFunction(q - one) * b.lambda) {
      o.fail("sum x" + id);
    }
    RationalFunction weighted(0), plain(0);
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial& di = dp(i, n - 1);
      weighted += RationalFunction(one + q + (q * q - one) * di) * b.x[i];
      plain += RationalFunction(one + (q - one) * di) * b.x[i];
    }
    if (weighted != RationalFunction(one + q)) o.fail("weighted sum" + id);
    if (plain != RationalFunction(1)) o.fail("plain sum" + id);
    const std::vector<RationalFunction> ones(n, RationalFunction(1));
    if (d * b.L + RFMatrix::identity(n) != outer(ones, b.x)) {
      o.fail("D L + I = 1 x^T" + id);
    }
    if (d * b.inverse != RFMatrix::identity(n)) o.fail("D inverse = I" + id);
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs, 6 identities";
  return o;
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::istringstream in;
  std::ostringstream o, e;
  const int code = RunCli(args, in, o, e);
  if (out) *out = o.str();
  return code;
}

Outcome condition_gating() {
  Outcome o;
  const ConditionCheck k22 = check_conditions(K(2, 2), 1);
  if (!k22.violates(Condition::kC1)) o.fail("K(2,2) at 1 misses C1");
  if (!k22.violates(Condition::kC2)) o.fail("K(2,2) at 1 misses C2");
  if (det_at(K(2, 2), 1).value != Rational(0)) o.fail("K(2,2) det at 1");

  std::istringstream in(R"({"blocks":[{"m":1,"n":1}]})");
  std::ostringstream sink, err;
  if (RunCli({"det", "-", "--at", "-1"}, in, sink, err) != 3) {
    o.fail("q0 = -1 not rejected with exit code 3");
  }

  const BiBlockGraph k11 = K(1, 1);
  if (!check_conditions(k11, 1).ok()) o.fail("K(1,1) at 1 has violations");
  try {
    det_at(k11, 1);
    xi_at(k11, 1);
    lambda_at(k11, 1);
    vectors_at(k11, 1);
    inverse_at(k11, 1);
  } catch (const std::exception& e) {
    o.fail(std::string("K(1,1) at 1 refused: ") + e.what());
  }
  if (o.pass) o.detail = "K(2,2)@1 -> C1,C2, det 0; q0=-1 -> exit 3; K(1,1)@1 ok";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string first, second, threaded;
  const int a = cli({"verify", "--seed", "7", "--json"}, &first);
  const int b = cli({"verify", "--seed", "7", "--json"}, &second);
  const int c =
      cli({"verify", "--seed", "7", "--json", "--threads", "4"}, &threaded);
  if (first.empty()) o.fail("empty report");
  if (first != second) o.fail("consecutive runs differ");
  if (first != threaded) o.fail("4-thread run differs");
  if (a != b || a != c) o.fail("exit codes differ");
  if (o.pass) {
    o.detail = std::to_string(first.size()) + " bytes x3 identical, verify exit " +
               std::to_string(a);
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace biblock

int main() {
  using namespace biblock;
  const std::vector<BiBlockGraph> corpus = composition_corpus();
  const std::vector<Criterion> criteria = {
      {1, "block determinant", 5, block_determinant},
      {2, "block cofactor", 5, block_cofactor},
      {3, "block inverse", 10, block_inverse},
      {4, "determinant/cofactor composition", 60,
       [&] { return composition(corpus); }},
      {5, "tree specialization", 10, tree_specialization},
      {6, "identity suite", 120, [&] { return identity_suite(corpus); }},
      {7, "condition gating", 1, condition_gating},
      {8, "determinism", 600, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (o.pass && seconds > c.budget_seconds) {
      o.fail("over budget");
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s: %s (%.2f s, budget %.0f s)\n",
                o.pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str(),
                seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
