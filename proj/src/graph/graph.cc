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

#include "biblock/graph.h"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "biblock/errors.h"

namespace biblock {

std::string side_name(Side side) { return side == Side::kX ? "X" : "Y"; }

BiBlockGraph BiBlockGraph::build(const std::vector<BlockSpec>& specs) {
  if (specs.empty()) throw GraphError("a bi-block graph needs at least one block");
  BiBlockGraph g;
  g.specs_ = specs;
  for (std::size_t b = 0; b < specs.size(); ++b) {
    const BlockSpec& s = specs[b];
    const std::string where = "block " + std::to_string(b);
    if (s.m < 1 || s.n < 1) {
      throw GraphError(where + ": part sizes must be >= 1, got m=" +
                       std::to_string(s.m) + " n=" + std::to_string(s.n));
    }
    if (b == 0 && s.attach) {
      throw GraphError(where + ": the first block cannot attach");
    }
    if (b > 0 && !s.attach) {
      throw GraphError(where + ": missing attachment to an existing vertex");
    }
    if (s.attach && (s.attach->vertex < 0 ||
                     s.attach->vertex >= g.vertex_count())) {
      throw GraphError(where + ": attachment vertex " +
                       std::to_string(s.attach->vertex) +
                       " does not exist (graph has " +
                       std::to_string(g.vertex_count()) + " vertices)");
    }
    Block block;
    block.id = static_cast<int>(b);
    auto fresh = [&g]() {
      g.membership_.emplace_back();
      return g.vertex_count() - 1;
    };
    const bool cut_x = s.attach && s.attach->side == Side::kX;
    const bool cut_y = s.attach && s.attach->side == Side::kY;
    if (cut_x) block.x.push_back(s.attach->vertex);
    if (cut_y) block.y.push_back(s.attach->vertex);
    for (int i = cut_x ? 1 : 0; i < s.m; ++i) block.x.push_back(fresh());
    for (int i = cut_y ? 1 : 0; i < s.n; ++i) block.y.push_back(fresh());
    for (int v : block.x) g.membership_[v].push_back({block.id, Side::kX});
    for (int v : block.y) g.membership_[v].push_back({block.id, Side::kY});
    g.blocks_.push_back(std::move(block));
  }
  return g;
}

const std::vector<Membership>& BiBlockGraph::membership(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw GraphError("unknown vertex " + std::to_string(v));
  }
  return membership_[v];
}

std::vector<std::vector<int>> BiBlockGraph::adjacency() const {
  std::vector<std::vector<int>> adj(membership_.size());
  for (const Block& b : blocks_) {
    for (int u : b.x) {
      for (int w : b.y) {
        adj[u].push_back(w);
        adj[w].push_back(u);
      }
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

BiBlockGraph BiBlockGraph::prefix(int count) const {
  if (count < 1 || count > block_count()) {
    throw GraphError("prefix of " + std::to_string(count) + " blocks out of " +
                     std::to_string(block_count()));
  }
  return build(std::vector<BlockSpec>(specs_.begin(), specs_.begin() + count));
}

int block_degree(const BiBlockGraph& g, int v) {
  return static_cast<int>(g.membership(v).size());
}

DistanceTable::DistanceTable(std::size_t n, std::vector<int> d)
    : n_(n), d_(std::move(d)) {
  if (d_.size() != n_ * n_) {
    throw DimensionError("distance table needs " + std::to_string(n_ * n_) +
                         " entries, got " + std::to_string(d_.size()));
  }
}

int DistanceTable::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceTable distances(const BiBlockGraph& g) {
  const auto adj = g.adjacency();
  const std::size_t n = adj.size();
  std::vector<int> d(n * n, -1);
  std::deque<int> queue;
  for (std::size_t src = 0; src < n; ++src) {
    int* row = &d[src * n];
    row[src] = 0;
    queue.assign(1, static_cast<int>(src));
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (row[w] >= 0) continue;
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return DistanceTable(n, std::move(d));
}

}  // namespace biblock
