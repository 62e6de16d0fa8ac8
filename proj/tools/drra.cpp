// Copyright 2026 The drra Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the drra library.
//
//   drra generate <family> [--n N] [--out FILE]
//   drra color <graph-file> [--out FILE]
//   drra analyze <graph-file>
//   drra cycle-table <array>
//   drra verify-rep <coloring-file> <algebra|cycle-list>
//   drra check-dt <graph-file> [--force] [--out FILE]
//   drra reproduce-table [--moscow-soicher FILE]
//
// Every command accepts --json, which wraps the result in a run report
// holding the command line, a SHA-256 digest of the inputs and the exit
// status. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drra/drra.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInputError = 2;

// Thrown for bad input; carries a status name for the message.
struct InputError {
  std::string kind;
  std::string message;
};

struct GraphDeleter {
  void operator()(drra_graph* g) const { drra_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(drra_coloring* c) const { drra_coloring_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { drra_string_free(s); }
};
using GraphPtr = std::unique_ptr<drra_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<drra_coloring, ColoringDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void Check(drra_status status) {
  if (status != DRRA_OK) {
    throw InputError{drra_status_name(status), drra_last_error()};
  }
}

std::string TakeString(char* raw) {
  StringPtr owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"IoError", "cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw InputError{"IoError", "cannot write '" + path + "'"};
}

std::string WithNewline(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text + "\n";
}

// SHA-256 over the length-prefixed inputs of a run.
class InputDigest {
 public:
  void Add(const std::string& bytes) {
    parts_.push_back(std::to_string(bytes.size()) + ":" + bytes);
  }

  std::string Hex() const {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
        EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
      return "unavailable";
    }
    for (const std::string& part : parts_) {
      EVP_DigestUpdate(ctx.get(), part.data(), part.size());
    }
    EVP_DigestFinal_ex(ctx.get(), md, &length);
    static const char* kHex = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < length; ++i) {
      out += kHex[md[i] >> 4];
      out += kHex[md[i] & 15];
    }
    return out;
  }

 private:
  std::vector<std::string> parts_;
};

struct Outcome {
  int exit_status = kExitOk;
  // Printed as-is in plain mode.
  std::string text;
  // Result payload for --json mode.
  Json result;
};

GraphPtr LoadGraph(const std::string& path, InputDigest& digest) {
  const std::string text = ReadFile(path);
  digest.Add(text);
  drra_graph* raw = nullptr;
  Check(drra_graph_parse(text.c_str(), &raw));
  return GraphPtr(raw);
}

Outcome RunGenerate(const std::string& family, std::optional<int> n,
                    const std::string& out_path, InputDigest& digest) {
  digest.Add(family);
  digest.Add(n ? std::to_string(*n) : "");
  drra_graph* raw = nullptr;
  Check(drra_graph_generate(family.c_str(), n ? *n : DRRA_NO_PARAMETER, &raw));
  GraphPtr graph(raw);
  char* text_raw = nullptr;
  Check(drra_graph_format(graph.get(), &text_raw));
  const std::string edge_list = TakeString(text_raw);

  Outcome outcome;
  const int vertices = drra_graph_order(graph.get());
  const auto edges = drra_graph_edge_count(graph.get());
  outcome.result = {{"family", family}, {"vertices", vertices},
                    {"edges", edges}};
  if (out_path.empty()) {
    outcome.text = edge_list;
    outcome.result["edge_list"] = edge_list;
  } else {
    WriteFile(out_path, edge_list);
    outcome.text = "vertices " + std::to_string(vertices) + "\nedges " +
                   std::to_string(edges) + "\n";
  }
  return outcome;
}

Outcome RunColor(const std::string& path, const std::string& out_path,
                 InputDigest& digest) {
  GraphPtr graph = LoadGraph(path, digest);
  drra_coloring* raw = nullptr;
  Check(drra_coloring_from_graph(graph.get(), &raw));
  ColoringPtr coloring(raw);
  char* text_raw = nullptr;
  Check(drra_coloring_format(coloring.get(), &text_raw));
  const std::string text = TakeString(text_raw);

  Outcome outcome;
  outcome.result = {{"points", drra_coloring_order(coloring.get())},
                    {"colors", drra_coloring_color_count(coloring.get())}};
  if (out_path.empty()) {
    outcome.text = text;
  } else {
    WriteFile(out_path, text);
    outcome.text = "points " + std::to_string(drra_coloring_order(coloring.get())) +
                   "\ncolors " +
                   std::to_string(drra_coloring_color_count(coloring.get())) +
                   "\n";
  }
  return outcome;
}

Outcome FromJsonText(const std::string& json_text, int exit_status) {
  Outcome outcome;
  outcome.exit_status = exit_status;
  outcome.text = json_text;
  outcome.result = Json::parse(json_text);
  return outcome;
}

Outcome RunAnalyze(const std::string& path, InputDigest& digest) {
  GraphPtr graph = LoadGraph(path, digest);
  char* json = nullptr;
  Check(drra_analyze(graph.get(), &json));
  return FromJsonText(TakeString(json), kExitOk);
}

Outcome RunCycleTable(const std::string& array, InputDigest& digest) {
  digest.Add(array);
  char* json = nullptr;
  Check(drra_cycle_table(array.c_str(), &json));
  return FromJsonText(TakeString(json), kExitOk);
}

Outcome RunVerifyRep(const std::string& path, const std::string& algebra,
                     InputDigest& digest) {
  const std::string text = ReadFile(path);
  digest.Add(text);
  digest.Add(algebra);
  drra_coloring* raw = nullptr;
  Check(drra_coloring_parse(text.c_str(), &raw));
  ColoringPtr coloring(raw);
  int passed = 0;
  char* json = nullptr;
  Check(drra_verify_representation(coloring.get(), algebra.c_str(), 10,
                                   &passed, &json));
  return FromJsonText(TakeString(json), passed ? kExitOk : kExitFailed);
}

Outcome RunCheckDt(const std::string& path, bool force,
                   const std::string& out_path, InputDigest& digest) {
  GraphPtr graph = LoadGraph(path, digest);
  int iff = 0;
  char* json = nullptr;
  char* generators = nullptr;
  Check(drra_check_distance_transitive(graph.get(), DRRA_DEFAULT_MAX_POINTS,
                                       force ? 1 : 0, &iff, &json,
                                       &generators));
  const std::string json_text = TakeString(json);
  const std::string generator_text = TakeString(generators);
  if (!out_path.empty()) WriteFile(out_path, generator_text);
  return FromJsonText(json_text, iff ? kExitOk : kExitFailed);
}

Outcome RunReproduce(const std::string& moscow_soicher_path,
                     const std::string& inject_fault, InputDigest& digest) {
  GraphPtr moscow_soicher;
  if (!moscow_soicher_path.empty()) {
    moscow_soicher = LoadGraph(moscow_soicher_path, digest);
  }
  digest.Add(inject_fault);
  drra_reproduce_options options{};
  options.moscow_soicher = moscow_soicher.get();
  options.inject_fault = inject_fault.empty() ? nullptr : inject_fault.c_str();
  if (moscow_soicher) options.max_points = drra_graph_order(moscow_soicher.get());
  int all_ok = 0;
  char* text = nullptr;
  char* json = nullptr;
  Check(drra_reproduce_table(&options, &all_ok, &text, &json));
  Outcome outcome;
  outcome.exit_status = all_ok ? kExitOk : kExitFailed;
  outcome.text = TakeString(text);
  outcome.result = Json::parse(TakeString(json));
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-regular graphs and their relation algebras", "drra"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit a JSON run report");

  std::string family, graph_path, coloring_path, algebra, array, out_path,
      moscow_soicher_path, inject_fault;
  std::optional<int> n;
  bool force = false;

  auto* generate = app.add_subcommand("generate", "Write a named graph");
  generate->add_option("family", family, "Graph family")->required();
  generate->add_option("--n", n, "Family parameter");
  generate->add_option("--out", out_path, "Edge-list output file");

  auto* color = app.add_subcommand("color", "Write the distance coloring");
  color->add_option("graph", graph_path, "Edge-list file")->required();
  color->add_option("--out", out_path, "Coloring output file");

  auto* analyze = app.add_subcommand("analyze", "Distance-regularity report");
  analyze->add_option("graph", graph_path, "Edge-list file")->required();

  auto* cycle_table =
      app.add_subcommand("cycle-table", "Cycle table of an intersection array");
  cycle_table->add_option("array", array, "b0,b1,b2;c1,c2,c3")->required();

  auto* verify = app.add_subcommand("verify-rep", "Check a representation");
  verify->add_option("coloring", coloring_path, "Coloring file")->required();
  verify->add_option("algebra", algebra, "Algebra name or cycle list")
      ->required();

  auto* check_dt =
      app.add_subcommand("check-dt", "Distance-transitivity and algebraicity");
  check_dt->add_option("graph", graph_path, "Edge-list file")->required();
  check_dt->add_flag("--force", force, "Ignore the vertex limit");
  check_dt->add_option("--out", out_path, "Generator output file");

  auto* reproduce =
      app.add_subcommand("reproduce-table", "Rebuild the example table");
  reproduce->add_option("--moscow-soicher", moscow_soicher_path,
                        "Edge list of the Moscow-Soicher graph");
  reproduce->add_option("--inject-fault", inject_fault)->group("");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_flag("--json", json_mode, "Emit a JSON run report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  InputDigest digest;
  Outcome outcome;
  try {
    if (chosen == generate) {
      outcome = RunGenerate(family, n, out_path, digest);
    } else if (chosen == color) {
      outcome = RunColor(graph_path, out_path, digest);
    } else if (chosen == analyze) {
      outcome = RunAnalyze(graph_path, digest);
    } else if (chosen == cycle_table) {
      outcome = RunCycleTable(array, digest);
    } else if (chosen == verify) {
      outcome = RunVerifyRep(coloring_path, algebra, digest);
    } else if (chosen == check_dt) {
      outcome = RunCheckDt(graph_path, force, out_path, digest);
    } else {
      outcome = RunReproduce(moscow_soicher_path, inject_fault, digest);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.kind << ": " << e.message << "\n";
    if (json_mode) {
      Json report = {{"command", std::vector<std::string>(argv + 1, argv + argc)},
                     {"input_digest", digest.Hex()},
                     {"error", {{"kind", e.kind}, {"message", e.message}}},
                     {"exit_status", kExitInputError}};
      std::cout << report.dump(2) << "\n";
    }
    return kExitInputError;
  }

  if (json_mode) {
    Json report = {{"command", std::vector<std::string>(argv + 1, argv + argc)},
                   {"input_digest", digest.Hex()},
                   {"result", outcome.result},
                   {"exit_status", outcome.exit_status}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << WithNewline(outcome.text);
  }
  return outcome.exit_status;
}
