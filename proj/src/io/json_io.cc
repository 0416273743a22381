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


#include "biblock/json_io.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "biblock/errors.h"

namespace biblock {

Json to_json(const Rational& r) {
  return Json::array({r.numerator_string(), r.denominator_string()});
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalFunction& f) {
  Json out = Json::object();
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

Json graph_to_json(const std::vector<BlockSpec>& specs) {
  Json blocks = Json::array();
  for (const BlockSpec& s : specs) {
    Json b = Json::object();
    b["m"] = s.m;
    b["n"] = s.n;
    if (s.attach) {
      Json a = Json::object();
      a["vertex"] = s.attach->vertex;
      a["side"] = side_name(s.attach->side);
      b["attach"] = std::move(a);
    }
    blocks.push_back(std::move(b));
  }
  Json doc = Json::object();
  doc["blocks"] = std::move(blocks);
  return doc;
}

std::string graph_to_string(const std::vector<BlockSpec>& specs) {
  return graph_to_json(specs).dump() + "\n";
}

namespace {

int read_int(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw GraphError(where + ": missing \"" + key + "\"");
  }
  if (!it->is_number_integer()) {
    throw GraphError(where + ": \"" + key + "\" must be an integer");
  }
  const auto v = it->get<std::int64_t>();
  if (v < -1'000'000'000 || v > 1'000'000'000) {
    throw GraphError(where + ": \"" + key + "\" out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<BlockSpec> specs_from_json(const Json& doc) {
  if (!doc.is_object()) throw GraphError("graph file: expected an object");
  auto blocks = doc.find("blocks");
  if (blocks == doc.end() || !blocks->is_array()) {
    throw GraphError("graph file: expected a \"blocks\" array");
  }
  std::vector<BlockSpec> specs;
  for (std::size_t i = 0; i < blocks->size(); ++i) {
    const Json& b = (*blocks)[i];
    const std::string where = "block " + std::to_string(i);
    if (!b.is_object()) throw GraphError(where + ": expected an object");
    BlockSpec s;
    s.m = read_int(b, "m", where);
    s.n = read_int(b, "n", where);
    if (auto a = b.find("attach"); a != b.end()) {
      if (!a->is_object()) {
        throw GraphError(where + ": \"attach\" must be an object");
      }
      Attachment at;
      at.vertex = read_int(*a, "vertex", where + " attach");
      auto side = a->find("side");
      if (side == a->end() || !side->is_string()) {
        throw GraphError(where + ": attach needs a \"side\" string");
      }
      const auto& name = side->get_ref<const std::string&>();
      if (name == "X") {
        at.side = Side::kX;
      } else if (name == "Y") {
        at.side = Side::kY;
      } else {
        throw GraphError(where + ": side must be \"X\" or \"Y\", got \"" +
                         name + "\"");
      }
      s.attach = at;
    }
    specs.push_back(s);
  }
  return specs;
}

std::vector<BlockSpec> parse_graph_specs(std::string_view text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw GraphError("graph file: malformed JSON");
  return specs_from_json(doc);
}

BiBlockGraph parse_graph(std::string_view text) {
  return BiBlockGraph::build(parse_graph_specs(text));
}

}  // namespace biblock
