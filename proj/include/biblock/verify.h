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


#ifndef BIBLOCK_VERIFY_H_
#define BIBLOCK_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biblock/closed_form.h"
#include "biblock/graph.h"
#include "biblock/json_io.h"

namespace biblock {

// First mismatch of a check. `lhs` is the closed-form side and `rhs` the
// oracle or expected side. `error` is set instead when a computation threw.
struct Witness {
  std::vector<std::size_t> index;
  std::string lhs;
  std::string rhs;
  std::string error;
};

struct CheckResult {
  std::string name;
  std::optional<Witness> witness;  // absent iff the check passed

  bool pass() const { return !witness.has_value(); }
};

struct VerificationReport {
  std::vector<BlockSpec> graph;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::size_t failures() const;
};

// Names of the checks in report order.
const std::vector<std::string>& check_names();

// `formulas` replaces the block det/xi used by the composition checks; the
// block checks always test the library formulas.
VerificationReport verify(const BiBlockGraph& g,
                          const BlockFormulas& formulas = {});

// Reports come back in corpus order whatever the thread count. Throws
// GraphError if a corpus entry does not build.
std::vector<VerificationReport> verify_corpus(
    const std::vector<std::vector<BlockSpec>>& corpus, int threads = 1,
    const BlockFormulas& formulas = {});

Json report_to_json(const VerificationReport& report);

// K_{s,t} for 1 <= s, t <= 5.
std::vector<std::vector<BlockSpec>> complete_bipartite_corpus();
// Every tree on 2..max_n vertices up to isomorphism.
std::vector<std::vector<BlockSpec>> tree_corpus(int max_n = 8);
// `count` random bi-block graphs with at most 5 blocks, parts of at most 4
// and at most 29 vertices. Sub-seeds for random_biblock are drawn from
// `seed`; a draw over the vertex cap is skipped.
std::vector<std::vector<BlockSpec>> random_corpus(std::uint64_t seed,
                                                  int count = 100);
std::vector<std::vector<BlockSpec>> default_corpus(std::uint64_t seed = 1);

}  // namespace biblock

#endif  // BIBLOCK_VERIFY_H_
