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


#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "biblock/graph.h"
#include "biblock/verify.h"

namespace biblock {

std::vector<std::vector<BlockSpec>> complete_bipartite_corpus() {
  std::vector<std::vector<BlockSpec>> corpus;
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) corpus.push_back(single_block(s, t));
  }
  return corpus;
}

std::vector<std::vector<BlockSpec>> tree_corpus(int max_n) {
  std::vector<std::vector<BlockSpec>> corpus;
  for (int n = 2; n <= max_n; ++n) {
    for (auto& t : all_trees(n)) corpus.push_back(std::move(t));
  }
  return corpus;
}

std::vector<std::vector<BlockSpec>> random_corpus(std::uint64_t seed,
                                                  int count) {
  constexpr int kMaxVertices = 29;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<BlockSpec>> corpus;
  while (static_cast<int>(corpus.size()) < count) {
    std::vector<BlockSpec> specs = random_biblock(rng(), 5, 4);
    // Five blocks of K_{4,4} would give 36 vertices; redraw past the cap.
    if (BiBlockGraph::build(specs).vertex_count() > kMaxVertices) continue;
    corpus.push_back(std::move(specs));
  }
  return corpus;
}

std::vector<std::vector<BlockSpec>> default_corpus(std::uint64_t seed) {
  std::vector<std::vector<BlockSpec>> corpus = complete_bipartite_corpus();
  for (auto& g : tree_corpus()) corpus.push_back(std::move(g));
  for (auto& g : random_corpus(seed)) corpus.push_back(std::move(g));
  return corpus;
}

}  // namespace biblock
