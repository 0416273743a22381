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

#include "biblock/qdist.h"

#include <cstddef>
#include <string>
#include <vector>

#include "biblock/errors.h"

namespace biblock {

RingMatrix<Polynomial> q_distance_matrix(const DistanceTable& dist) {
  std::vector<Polynomial> brackets;
  auto bracket = [&](int alpha) -> const Polynomial& {
    while (static_cast<int>(brackets.size()) <= alpha) {
      brackets.push_back(q_integer(static_cast<unsigned>(brackets.size())));
    }
    return brackets[alpha];
  };
  return RingMatrix<Polynomial>::generate(
      dist.size(), dist.size(),
      [&](std::size_t i, std::size_t j) { return bracket(dist(i, j)); });
}

RingMatrix<Polynomial> q_distance_matrix(const BiBlockGraph& g) {
  return q_distance_matrix(distances(g));
}

RingMatrix<Polynomial> xi_construction(const RingMatrix<Polynomial>& d,
                                       const DistanceTable& dist, int pivot,
                                       XiRoute route) {
  const std::size_t n = dist.size();
  if (d.rows() != n || d.cols() != n) {
    throw DimensionError("xi_construction: q-distance matrix is " +
                         std::to_string(d.rows()) + "x" +
                         std::to_string(d.cols()) + " but distance table is " +
                         std::to_string(n) + "x" + std::to_string(n));
  }
  if (pivot < 0 || static_cast<std::size_t>(pivot) >= n) {
    throw DimensionError("xi_construction: pivot " + std::to_string(pivot) +
                         " out of range");
  }
  // order[0] is the pivot, order[1..] the remaining vertices.
  std::vector<std::size_t> order{static_cast<std::size_t>(pivot)};
  for (std::size_t v = 0; v < n; ++v) {
    if (v != static_cast<std::size_t>(pivot)) order.push_back(v);
  }
  const std::size_t p = order[0];

  if (route == XiRoute::kDirect) {
    return RingMatrix<Polynomial>::generate(
        n - 1, n - 1, [&](std::size_t i, std::size_t j) {
          const std::size_t u = order[i + 1], w = order[j + 1];
          const int beta = dist(u, p), alpha = dist(p, w);
          return d(u, w) - q_integer(static_cast<unsigned>(beta + alpha));
        });
  }

  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = d(order[i], order[j]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] -= a[0][j];
  }
  for (std::size_t j = 1; j < n; ++j) {
    const Polynomial shift = Polynomial::monomial(
        Rational(1), static_cast<std::size_t>(dist(p, order[j])));
    for (std::size_t i = 0; i < n; ++i) a[i][j] -= shift * a[i][0];
  }
  return RingMatrix<Polynomial>::generate(
      n - 1, n - 1,
      [&](std::size_t i, std::size_t j) { return a[i + 1][j + 1]; });
}

}  // namespace biblock
