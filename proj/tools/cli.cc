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


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biblock/closed_form.h"
#include "biblock/errors.h"
#include "biblock/graph.h"
#include "biblock/json_io.h"
#include "biblock/rational.h"
#include "biblock/verify.h"

namespace biblock {
namespace {

constexpr int kSchema = 1;

// Input problems that map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QueryOptions {
  std::string graph = "-";
  std::string at;
  std::string format = "text";
};

struct VerifyOptions {
  std::vector<std::string> corpus{"default"};
  std::uint64_t seed = 1;
  bool json = false;
  int threads = 1;
};

struct GenOptions {
  std::string kind;
  int n = 0;
  int blocks = 0;
  int part_max = 0;
  std::optional<std::uint64_t> seed;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError(path + ": cannot open");
  buf << file.rdbuf();
  return buf.str();
}

BiBlockGraph load_graph(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_graph(text);
  } catch (const GraphError& e) {
    throw InputError((path == "-" ? "<stdin>" : path) + ": " + e.what());
  }
}

Rational parse_at(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("--at: " + std::string(e.what()));
  } catch (const ArithmeticError& e) {
    throw InputError("--at: " + std::string(e.what()));
  }
}

Json header(const std::string& command) {
  Json out = Json::object();
  out["schema"] = kSchema;
  out["command"] = command;
  return out;
}

Json violations_json(const ConditionCheck& check) {
  Json list = Json::array();
  for (const ConditionViolation& v : check.violations) {
    Json item = Json::object();
    item["block"] = v.block ? Json(*v.block) : Json(nullptr);
    item["condition"] = condition_name(v.condition);
    item["lhs"] = to_json(v.lhs);
    item["rhs"] = to_json(v.rhs);
    list.push_back(std::move(item));
  }
  return list;
}

void warn_violations(const ConditionCheck& check, std::ostream& err) {
  for (const ConditionViolation& v : check.violations) {
    err << "warning: condition " << condition_name(v.condition)
        << " violated at q = " << check.q0.to_string();
    if (v.block) err << " in block " << *v.block;
    err << " (" << v.lhs.to_string() << " = " << v.rhs.to_string() << ")\n";
  }
}

// Adds the evaluation point and its condition check to a JSON result.
void annotate(Json& out, const ConditionCheck& check) {
  out["at"] = to_json(check.q0);
  out["warning"] = !check.ok();
  out["violations"] = violations_json(check);
}

template <typename Value>
void emit_scalar(const std::string& command, const QueryOptions& opt,
                 const Value& value, const ConditionCheck* check,
                 std::ostream& out, std::ostream& err) {
  if (check) warn_violations(*check, err);
  if (opt.format == "json") {
    Json doc = header(command);
    if (check) annotate(doc, *check);
    doc["value"] = to_json(value);
    doc["text"] = value.to_string();
    out << doc.dump() << "\n";
  } else {
    out << value.to_string() << "\n";
  }
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

template <typename T>
void emit_vectors(const QueryOptions& opt, const std::vector<T>& x,
                  const std::vector<T>& y, const ConditionCheck* check,
                  std::ostream& out, std::ostream& err) {
  if (check) warn_violations(*check, err);
  if (opt.format == "json") {
    Json doc = header("vectors");
    if (check) annotate(doc, *check);
    doc["x"] = to_json(x);
    doc["y"] = to_json(y);
    out << doc.dump() << "\n";
  } else {
    out << "x = " << join(x) << "\n" << "y = " << join(y) << "\n";
  }
}

template <typename T>
void emit_matrix(const QueryOptions& opt, const RingMatrix<T>& m,
                 const ConditionCheck* check, std::ostream& out,
                 std::ostream& err) {
  if (check) warn_violations(*check, err);
  if (opt.format == "json") {
    Json doc = header("inverse");
    if (check) annotate(doc, *check);
    doc["value"] = to_json(m);
    out << doc.dump() << "\n";
  } else {
    out << render_text(m);
  }
}

int run_query(const std::string& command, const QueryOptions& opt,
              std::istream& in, std::ostream& out, std::ostream& err) {
  const BiBlockGraph g = load_graph(opt.graph, in);
  if (opt.at.empty()) {
    if (command == "det") {
      emit_scalar(command, opt, det_graph(g), nullptr, out, err);
    } else if (command == "xi") {
      emit_scalar(command, opt, xi_graph(g), nullptr, out, err);
    } else if (command == "lambda") {
      emit_scalar(command, opt, lambda(g), nullptr, out, err);
    } else if (command == "vectors") {
      emit_vectors(opt, x_vector(g), y_vector(g), nullptr, out, err);
    } else {
      emit_matrix(opt, inverse_graph(g), nullptr, out, err);
    }
    return kExitOk;
  }
  const Rational q0 = parse_at(opt.at);
  if (command == "det") {
    auto r = det_at(g, q0);
    emit_scalar(command, opt, r.value, &r.conditions, out, err);
  } else if (command == "xi") {
    auto r = xi_at(g, q0);
    emit_scalar(command, opt, r.value, &r.conditions, out, err);
  } else if (command == "lambda") {
    auto r = lambda_at(g, q0);
    emit_scalar(command, opt, r.value, &r.conditions, out, err);
  } else if (command == "vectors") {
    auto r = vectors_at(g, q0);
    emit_vectors(opt, r.value.x, r.value.y, &r.conditions, out, err);
  } else {
    auto r = inverse_at(g, q0);
    emit_matrix(opt, r.value, &r.conditions, out, err);
  }
  return kExitOk;
}

int run_verify(const VerifyOptions& opt, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const bool builtin = opt.corpus.size() == 1 && opt.corpus[0] == "default";
  std::vector<std::vector<BlockSpec>> corpus;
  if (builtin) {
    corpus = default_corpus(opt.seed);
  } else {
    for (const std::string& path : opt.corpus) {
      corpus.push_back(load_graph(path, in).specs());
    }
  }
  const std::vector<VerificationReport> reports =
      verify_corpus(corpus, opt.threads);

  std::size_t identities = 0;
  std::size_t failures = 0;
  for (const VerificationReport& r : reports) {
    identities += r.checks.size();
    failures += r.failures();
  }
  if (opt.json) {
    Json doc = header("verify");
    doc["corpus"] = builtin ? Json("default") : Json(opt.corpus);
    if (builtin) doc["seed"] = opt.seed;
    doc["graphs"] = reports.size();
    doc["identities"] = identities;
    doc["failures"] = failures;
    doc["pass"] = failures == 0;
    Json list = Json::array();
    for (const VerificationReport& r : reports) list.push_back(report_to_json(r));
    doc["reports"] = std::move(list);
    out << doc.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      for (const CheckResult& c : reports[i].checks) {
        if (c.pass()) continue;
        out << "graph " << i << " " << graph_to_json(reports[i].graph).dump()
            << ": " << c.name << " FAILED";
        const Witness& w = *c.witness;
        if (!w.error.empty()) {
          out << " (" << w.error << ")";
        } else {
          out << " at [";
          for (std::size_t k = 0; k < w.index.size(); ++k) {
            out << (k ? "," : "") << w.index[k];
          }
          out << "]: " << w.lhs << " != " << w.rhs;
        }
        out << "\n";
      }
    }
    out << reports.size() << " graphs, " << identities << " identities, ";
    if (failures == 0) {
      out << "all pass\n";
    } else {
      out << failures << " failed\n";
    }
  }
  if (failures != 0) {
    err << "verification failed: " << failures << " of " << identities
        << " identities\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int run_gen(const GenOptions& opt, std::ostream& out) {
  constexpr int kMaxVertices = 10000;
  constexpr int kMaxBlocks = 1000;
  std::vector<BlockSpec> specs;
  if (opt.kind == "tree" || opt.kind == "star") {
    if (opt.n < 2 || opt.n > kMaxVertices) {
      throw InputError("gen: --n must be between 2 and " +
                       std::to_string(kMaxVertices));
    }
    if (opt.kind == "star") {
      specs = star_tree(opt.n);
    } else if (opt.seed) {
      specs = random_tree(*opt.seed, opt.n);
    } else {
      specs = path_tree(opt.n);
    }
  } else {
    if (opt.blocks < 1 || opt.blocks > kMaxBlocks) {
      throw InputError("gen: --blocks must be between 1 and " +
                       std::to_string(kMaxBlocks));
    }
    if (opt.part_max < 1 || opt.part_max > kMaxBlocks) {
      throw InputError("gen: --part-max must be between 1 and " +
                       std::to_string(kMaxBlocks));
    }
    specs = random_biblock(opt.seed.value_or(1), opt.blocks, opt.part_max);
  }
  out << graph_to_string(specs);
  return kExitOk;
}

void add_query(CLI::App& app, const std::string& name, const std::string& help,
               QueryOptions& opt) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("graph", opt.graph, "Graph JSON file, or - for stdin");
  sub->add_option("--at", opt.at, "Evaluate at q = p/q or an integer");
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app("Exact q-distance matrices of bi-block graphs", "biblock");
  app.require_subcommand(1);

  QueryOptions query;
  add_query(app, "det", "Determinant of the q-distance matrix", query);
  add_query(app, "xi", "Cofactor xi of the q-distance matrix", query);
  add_query(app, "lambda", "The scalar lambda with D x = lambda 1", query);
  add_query(app, "vectors", "The vertex vectors x and y", query);
  add_query(app, "inverse", "Inverse of the q-distance matrix", query);

  VerifyOptions verify_opt;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check closed forms against the oracle");
  verify_cmd->add_option("--corpus", verify_opt.corpus,
                         "\"default\" or a list of graph files");
  verify_cmd->add_option("--seed", verify_opt.seed, "Seed for random graphs");
  verify_cmd->add_flag("--json", verify_opt.json, "Emit a JSON report");
  verify_cmd->add_option("--threads", verify_opt.threads, "Worker threads")
      ->check(CLI::Range(1, 256));

  GenOptions gen_opt;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a graph JSON file");
  gen_cmd->add_option("--kind", gen_opt.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"tree", "star", "random"}));
  gen_cmd->add_option("--n", gen_opt.n, "Vertices (tree, star)");
  gen_cmd->add_option("--blocks", gen_opt.blocks,
                      "Maximum number of blocks (random)");
  gen_cmd->add_option("--part-max", gen_opt.part_max,
                      "Maximum part size (random)");
  gen_cmd->add_option("--seed", gen_opt.seed, "Seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "verify") return run_verify(verify_opt, in, out, err);
    if (name == "gen") return run_gen(gen_opt, out);
    return run_query(name, query, in, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace biblock
