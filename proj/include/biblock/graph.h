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

#ifndef BIBLOCK_GRAPH_H_
#define BIBLOCK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biblock {

enum class Side { kX, kY };

std::string side_name(Side side);  // "X" or "Y"

struct Attachment {
  int vertex = 0;
  Side side = Side::kX;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

// One complete bipartite block K_{m,n}. Every block after the first names an
// existing vertex that becomes one of its vertices on the given side.
struct BlockSpec {
  int m = 1;
  int n = 1;
  std::optional<Attachment> attach;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

struct Block {
  int id = 0;
  std::vector<int> x;  // |x| = m; a cut vertex attached on side X comes first
  std::vector<int> y;  // |y| = n

  int m() const { return static_cast<int>(x.size()); }
  int n() const { return static_cast<int>(y.size()); }
};

struct Membership {
  int block = 0;
  Side side = Side::kX;
};

// A connected graph whose blocks are complete bipartite graphs glued along
// cut vertices in a tree. Vertex ids follow the build order: the first block
// contributes its X vertices then its Y vertices; every later block
// contributes its non-cut X vertices then its non-cut Y vertices.
class BiBlockGraph {
 public:
  // Throws GraphError on an empty list, a part of size zero, a missing or
  // unexpected attachment, or an attachment to a vertex that does not exist.
  static BiBlockGraph build(const std::vector<BlockSpec>& specs);

  int vertex_count() const { return static_cast<int>(membership_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<BlockSpec>& specs() const { return specs_; }
  // Throws GraphError for an unknown vertex.
  const std::vector<Membership>& membership(int v) const;
  // u ~ v iff they share a block on opposite sides.
  std::vector<std::vector<int>> adjacency() const;

  // The graph formed by the first `count` blocks of the build sequence.
  BiBlockGraph prefix(int count) const;

 private:
  std::vector<BlockSpec> specs_;
  std::vector<Block> blocks_;
  std::vector<std::vector<Membership>> membership_;
};

// Number of blocks containing v; v is a cut vertex iff this is >= 2.
int block_degree(const BiBlockGraph& g, int v);

// All-pairs shortest-path lengths.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, std::vector<int> d);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  int diameter() const;

 private:
  std::size_t n_;
  std::vector<int> d_;
};

// BFS from every vertex.
DistanceTable distances(const BiBlockGraph& g);

// Block sequences for test corpora. All are deterministic functions of their
// arguments.
std::vector<BlockSpec> single_block(int m, int n);
std::vector<BlockSpec> path_tree(int n);  // n >= 2 vertices
std::vector<BlockSpec> star_tree(int n);  // n >= 2 vertices, centre 0
std::vector<BlockSpec> random_tree(std::uint64_t seed, int n);
// Between 1 and r_max blocks with parts in [1, part_max], each attached to a
// uniformly chosen existing vertex on a uniformly chosen side.
std::vector<BlockSpec> random_biblock(std::uint64_t seed, int r_max,
                                      int part_max);
// One representative per isomorphism class of trees on n >= 2 vertices,
// ordered by canonical form.
std::vector<std::vector<BlockSpec>> all_trees(int n);

}  // namespace biblock

#endif  // BIBLOCK_GRAPH_H_
