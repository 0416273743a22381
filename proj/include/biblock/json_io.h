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


#ifndef BIBLOCK_JSON_IO_H_
#define BIBLOCK_JSON_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "biblock/graph.h"
#include "biblock/matrix.h"
#include "biblock/polynomial.h"
#include "biblock/rational.h"
#include "biblock/rational_function.h"
#include "json.hpp"

namespace biblock {

using Json = nlohmann::ordered_json;

// ["num", "den"]
Json to_json(const Rational& r);
// Ascending coefficients as [["num", "den"], ...]; zero is [].
Json to_json(const Polynomial& p);
// {"num": <polynomial>, "den": <polynomial>}
Json to_json(const RationalFunction& f);

template <typename T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const T& x : v) out.push_back(to_json(x));
  return out;
}

template <typename T>
Json to_json(const RingMatrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

// Text forms used by the CLI: one entry per line for vectors, rows of
// comma-separated entries in brackets for matrices.
template <typename T>
std::string render_text(const RingMatrix<T>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += m(i, j).to_string();
    }
    out += "]\n";
  }
  return out;
}

// Graph file format:
//   {"blocks":[{"m":2,"n":3},{"m":1,"n":2,"attach":{"vertex":0,"side":"X"}}]}
Json graph_to_json(const std::vector<BlockSpec>& specs);
std::string graph_to_string(const std::vector<BlockSpec>& specs);

// Throws GraphError on malformed JSON or a document that does not follow
// the graph file format. Structural validation is left to
// BiBlockGraph::build.
std::vector<BlockSpec> specs_from_json(const Json& doc);
std::vector<BlockSpec> parse_graph_specs(std::string_view text);
BiBlockGraph parse_graph(std::string_view text);

}  // namespace biblock

#endif  // BIBLOCK_JSON_IO_H_
