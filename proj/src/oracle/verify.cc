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


#include "biblock/verify.h"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "biblock/closed_form.h"
#include "biblock/errors.h"
#include "biblock/matrix.h"
#include "biblock/oracle.h"
#include "biblock/qdist.h"

namespace biblock {
namespace {

using RFMatrix = RingMatrix<RationalFunction>;
using Mismatch = std::optional<Witness>;

template <typename T>
Mismatch compare(const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Witness{{}, lhs.to_string(), rhs.to_string(), {}};
}

template <typename T>
Mismatch compare(const std::vector<T>& lhs, const std::vector<T>& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!(lhs[i] == rhs[i])) {
      return Witness{{i}, lhs[i].to_string(), rhs[i].to_string(), {}};
    }
  }
  return std::nullopt;
}

template <typename T>
Mismatch compare(const RingMatrix<T>& lhs, const RingMatrix<T>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return Witness{{}, {}, {}, "shape mismatch"};
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (!(lhs(i, j) == rhs(i, j))) {
        return Witness{{i, j}, lhs(i, j).to_string(), rhs(i, j).to_string(),
                       {}};
      }
    }
  }
  return std::nullopt;
}

// Per-graph state. Expensive values are computed on first use so that a
// throwing computation only fails the checks that need it.
class Context {
 public:
  Context(const BiBlockGraph& g, const BlockFormulas& f)
      : g_(g), f_(f), n_(static_cast<std::size_t>(g.vertex_count())) {}

  const BiBlockGraph& graph() const { return g_; }
  const BlockFormulas& formulas() const { return f_; }
  std::size_t n() const { return n_; }

  const RingMatrix<Polynomial>& d() {
    if (!d_) d_ = q_distance_matrix(g_);
    return *d_;
  }
  const RFMatrix& d_rf() {
    if (!d_rf_) d_rf_ = to_rational_functions(d());
    return *d_rf_;
  }
  const std::vector<RationalFunction>& x() {
    if (!x_) x_ = x_vector(g_);
    return *x_;
  }
  const RationalFunction& lam() {
    if (!lambda_) lambda_ = lambda(g_);
    return *lambda_;
  }
  const RFMatrix& inverse() {
    if (!inverse_) inverse_ = inverse_graph(g_);
    return *inverse_;
  }
  const RFMatrix& oracle_inv() {
    if (!oracle_inverse_) oracle_inverse_ = oracle_inverse(g_);
    return *oracle_inverse_;
  }

 private:
  const BiBlockGraph& g_;
  const BlockFormulas& f_;
  std::size_t n_;
  std::optional<RingMatrix<Polynomial>> d_;
  std::optional<RFMatrix> d_rf_;
  std::optional<std::vector<RationalFunction>> x_;
  std::optional<RationalFunction> lambda_;
  std::optional<RFMatrix> inverse_;
  std::optional<RFMatrix> oracle_inverse_;
};

// Distinct block shapes in order of first appearance.
std::vector<std::pair<int, int>> block_shapes(const BiBlockGraph& g) {
  std::vector<std::pair<int, int>> shapes;
  for (const Block& b : g.blocks()) {
    std::pair<int, int> s{b.m(), b.n()};
    if (std::find(shapes.begin(), shapes.end(), s) == shapes.end()) {
      shapes.push_back(s);
    }
  }
  return shapes;
}

BiBlockGraph complete_bipartite(int s, int t) {
  return BiBlockGraph::build(single_block(s, t));
}

// Prefixes a block-level witness with the block shape.
Mismatch for_block(Mismatch w, int s, int t) {
  if (w) {
    w->index.insert(w->index.begin(),
                    {static_cast<std::size_t>(s), static_cast<std::size_t>(t)});
  }
  return w;
}

Mismatch check_block_det(Context& c) {
  for (auto [s, t] : block_shapes(c.graph())) {
    if (auto w = for_block(compare(det_block(s, t),
                                   oracle_det(complete_bipartite(s, t))),
                           s, t)) {
      return w;
    }
  }
  return std::nullopt;
}

Mismatch check_block_xi(Context& c) {
  for (auto [s, t] : block_shapes(c.graph())) {
    if (auto w = for_block(compare(xi_block(s, t),
                                   oracle_xi(complete_bipartite(s, t))),
                           s, t)) {
      return w;
    }
  }
  return std::nullopt;
}

Mismatch check_block_inverse(Context& c) {
  for (auto [s, t] : block_shapes(c.graph())) {
    const BiBlockGraph k = complete_bipartite(s, t);
    const RFMatrix closed = inverse_block(s, t);
    if (auto w = for_block(compare(closed, oracle_inverse(k)), s, t)) return w;
    if (auto w = for_block(compare(closed, inverse_graph(k)), s, t)) return w;
  }
  return std::nullopt;
}

Mismatch check_xi_routes(Context& c) {
  const DistanceTable dist = distances(c.graph());
  const Polynomial direct = det_bareiss(
      xi_construction(c.d(), dist, 0, XiRoute::kDirect));
  const Polynomial ops = det_bareiss(
      xi_construction(c.d(), dist, 0, XiRoute::kRowColumnOperations));
  return compare(direct, ops);
}

// The graph minus its last block, when it has more than one block.
std::optional<BiBlockGraph> without_last_block(const BiBlockGraph& g) {
  if (g.block_count() < 2) return std::nullopt;
  return g.prefix(g.block_count() - 1);
}

Mismatch check_xi_product(Context& c) {
  const Polynomial oracle = oracle_xi(c.graph());
  if (auto w = compare(xi_graph(c.graph(), c.formulas()), oracle)) return w;
  if (auto h = without_last_block(c.graph())) {
    const Block& last = c.graph().blocks().back();
    const Polynomial step = oracle_xi(*h) * c.formulas().xi(last.m(), last.n());
    if (auto w = compare(step, oracle)) {
      w->index = {static_cast<std::size_t>(c.graph().block_count() - 1)};
      return w;
    }
  }
  return std::nullopt;
}

Mismatch check_det_composition(Context& c) {
  const Polynomial oracle = oracle_det(c.graph());
  if (auto w = compare(det_graph(c.graph(), c.formulas()), oracle)) return w;
  if (auto h = without_last_block(c.graph())) {
    const Block& last = c.graph().blocks().back();
    const BlockFormulas& f = c.formulas();
    const Polynomial step = oracle_det(*h) * f.xi(last.m(), last.n()) +
                            f.det(last.m(), last.n()) * oracle_xi(*h);
    if (auto w = compare(step, oracle)) {
      w->index = {static_cast<std::size_t>(c.graph().block_count() - 1)};
      return w;
    }
  }
  return std::nullopt;
}

Mismatch check_lambda_nonzero(Context& c) {
  if (c.lam().is_zero()) return Witness{{}, "0", "nonzero", {}};
  return std::nullopt;
}

Mismatch check_dx_lambda(Context& c) {
  return compare(mul(c.d_rf(), c.x()),
                 std::vector<RationalFunction>(c.n(), c.lam()));
}

// sum_i (a + b D(i, anchor)) x_i with the anchor the last vertex.
RationalFunction anchored_sum(Context& c, const RationalFunction& a,
                              const RationalFunction& b) {
  const std::size_t anchor = c.n() - 1;
  RationalFunction acc(0);
  for (std::size_t i = 0; i < c.n(); ++i) {
    acc += (a + b * RationalFunction(c.d()(i, anchor))) * c.x()[i];
  }
  return acc;
}

Mismatch check_anchor_weighted_sum(Context& c) {
  const Polynomial q = Polynomial::q();
  const Polynomial one(1);
  return compare(anchored_sum(c, one + q, q * q - one), RationalFunction(q + one));
}

Mismatch check_anchor_sum(Context& c) {
  const Polynomial q = Polynomial::q();
  return compare(anchored_sum(c, RationalFunction(1), q - Polynomial(1)),
                 RationalFunction(1));
}

Mismatch check_x_sum(Context& c) {
  RationalFunction sum(0);
  for (const RationalFunction& v : c.x()) sum += v;
  const RationalFunction q_minus_one(Polynomial::q() - Polynomial(1));
  return compare(sum, RationalFunction(1) - q_minus_one * c.lam());
}

Mismatch check_dl_identity(Context& c) {
  const RFMatrix lhs = mul(c.d_rf(), script_L(c.graph())) +
                       RFMatrix::identity(c.n());
  const std::vector<RationalFunction> ones(c.n(), RationalFunction(1));
  return compare(lhs, outer(ones, c.x()));
}

Mismatch check_inverse_product(Context& c) {
  return compare(mul(c.d_rf(), c.inverse()), RFMatrix::identity(c.n()));
}

Mismatch check_inverse_oracle(Context& c) {
  return compare(c.inverse(), c.oracle_inv());
}

Mismatch check_oracle_inverse_product(Context& c) {
  return compare(mul(c.oracle_inv(), c.d_rf()), RFMatrix::identity(c.n()));
}

struct NamedCheck {
  const char* name;
  Mismatch (*run)(Context&);
};

const std::vector<NamedCheck>& checks() {
  static const std::vector<NamedCheck> kChecks = {
      {"block_det", check_block_det},
      {"block_xi", check_block_xi},
      {"block_inverse", check_block_inverse},
      {"xi_routes_agree", check_xi_routes},
      {"xi_product", check_xi_product},
      {"det_composition", check_det_composition},
      {"lambda_nonzero", check_lambda_nonzero},
      {"dx_lambda", check_dx_lambda},
      {"anchor_weighted_sum", check_anchor_weighted_sum},
      {"anchor_sum", check_anchor_sum},
      {"x_sum", check_x_sum},
      {"dl_identity", check_dl_identity},
      {"inverse_product", check_inverse_product},
      {"inverse_oracle", check_inverse_oracle},
      {"oracle_inverse_product", check_oracle_inverse_product},
  };
  return kChecks;
}

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  if (!w.index.empty()) out["index"] = w.index;
  if (!w.error.empty()) {
    out["error"] = w.error;
  } else {
    out["closed_form"] = w.lhs;
    out["oracle"] = w.rhs;
  }
  return out;
}

}  // namespace

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckResult& r) { return !r.pass(); }));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const NamedCheck& c : checks()) names.emplace_back(c.name);
    return names;
  }();
  return kNames;
}

VerificationReport verify(const BiBlockGraph& g, const BlockFormulas& formulas) {
  VerificationReport report;
  report.graph = g.specs();
  Context context(g, formulas);
  for (const NamedCheck& check : checks()) {
    CheckResult result;
    result.name = check.name;
    try {
      result.witness = check.run(context);
    } catch (const std::exception& e) {
      result.witness = Witness{{}, {}, {}, e.what()};
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::vector<VerificationReport> verify_corpus(
    const std::vector<std::vector<BlockSpec>>& corpus, int threads,
    const BlockFormulas& formulas) {
  std::vector<BiBlockGraph> graphs;
  graphs.reserve(corpus.size());
  for (const auto& specs : corpus) graphs.push_back(BiBlockGraph::build(specs));

  std::vector<VerificationReport> reports(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      reports[i] = verify(graphs[i], formulas);
    }
  };
  const std::size_t count = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(threads, 1)), 1, graphs.size() + 1);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return reports;
}

Json report_to_json(const VerificationReport& report) {
  Json checks_json = Json::array();
  for (const CheckResult& r : report.checks) {
    Json c = Json::object();
    c["name"] = r.name;
    c["pass"] = r.pass();
    if (r.witness) c["witness"] = witness_to_json(*r.witness);
    checks_json.push_back(std::move(c));
  }
  Json out = Json::object();
  out["graph"] = graph_to_json(report.graph);
  out["pass"] = report.pass();
  out["checks"] = std::move(checks_json);
  return out;
}

}  // namespace biblock
