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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "biblock/errors.h"
#include "biblock/graph.h"

namespace biblock {
namespace {

// Uniform draw from [0, bound) by rejection. std::uniform_int_distribution is
// implementation-defined, which would make corpora differ across toolchains.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(
                  rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

void require_vertices(int n, const char* what) {
  if (n < 2) {
    throw GraphError(std::string(what) + " needs n >= 2, got " +
                     std::to_string(n));
  }
}

// Tree on vertices 0..n-1 given parent[i] < i for i >= 1. The K_{1,1} for
// edge (parent[i], i) attaches at parent[i], so vertex i keeps its label.
std::vector<BlockSpec> tree_from_parents(const std::vector<int>& parent) {
  std::vector<BlockSpec> specs{{1, 1, std::nullopt}};
  for (std::size_t i = 2; i < parent.size(); ++i) {
    specs.push_back({1, 1, Attachment{parent[i], Side::kX}});
  }
  return specs;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v,
                        int from) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != from) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// AHU encoding rooted at the centre; the smaller one for bicentral trees.
std::string canonical_code(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 1; i < n; ++i) {
    adj[i].push_back(parent[i]);
    adj[parent[i]].push_back(i);
  }
  std::vector<int> degree(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int leaf : leaves) {
      --remaining;
      for (int w : adj[leaf]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    leaves = std::move(next);
  }
  std::string best;
  for (int c : leaves) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<BlockSpec> single_block(int m, int n) {
  return {{m, n, std::nullopt}};
}

std::vector<BlockSpec> path_tree(int n) {
  require_vertices(n, "path_tree");
  std::vector<int> parent(n);
  for (int i = 1; i < n; ++i) parent[i] = i - 1;
  return tree_from_parents(parent);
}

std::vector<BlockSpec> star_tree(int n) {
  require_vertices(n, "star_tree");
  return tree_from_parents(std::vector<int>(n, 0));
}

std::vector<BlockSpec> random_tree(std::uint64_t seed, int n) {
  require_vertices(n, "random_tree");
  std::mt19937_64 rng(seed);
  std::vector<int> parent(n, 0);
  for (int i = 2; i < n; ++i) parent[i] = draw(rng, 0, i - 1);
  return tree_from_parents(parent);
}

std::vector<BlockSpec> random_biblock(std::uint64_t seed, int r_max,
                                      int part_max) {
  if (r_max < 1 || part_max < 1) {
    throw GraphError("random_biblock needs r_max >= 1 and part_max >= 1");
  }
  std::mt19937_64 rng(seed);
  const int r = draw(rng, 1, r_max);
  std::vector<BlockSpec> specs;
  int vertices = 0;
  for (int b = 0; b < r; ++b) {
    BlockSpec s;
    s.m = draw(rng, 1, part_max);
    s.n = draw(rng, 1, part_max);
    if (b > 0) {
      const int v = draw(rng, 0, vertices - 1);
      const Side side = draw(rng, 0, 1) == 0 ? Side::kX : Side::kY;
      s.attach = Attachment{v, side};
      vertices += s.m + s.n - 1;
    } else {
      vertices = s.m + s.n;
    }
    specs.push_back(s);
  }
  return specs;
}

std::vector<std::vector<BlockSpec>> all_trees(int n) {
  require_vertices(n, "all_trees");
  std::map<std::string, std::vector<int>> classes;
  std::vector<int> parent(n, 0);
  // Odometer over parent[i] in [0, i-1] for i >= 2.
  while (true) {
    classes.emplace(canonical_code(parent), parent);
    int i = n - 1;
    while (i >= 2 && parent[i] == i - 1) parent[i--] = 0;
    if (i < 2) break;
    ++parent[i];
  }
  std::vector<std::vector<BlockSpec>> out;
  for (const auto& [code, p] : classes) out.push_back(tree_from_parents(p));
  return out;
}

}  // namespace biblock
