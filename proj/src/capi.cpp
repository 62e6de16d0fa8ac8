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

#include "drra/drra.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "drra/coloring.hpp"
#include "drra/error.hpp"
#include "drra/generators.hpp"
#include "drra/graph.hpp"
#include "drra/io.hpp"
#include "drra/report.hpp"
#include "drra/scheme.hpp"

struct drra_graph {
  drra::Graph graph;
};

struct drra_coloring {
  drra::ColoredCompleteGraph coloring;
};

namespace {

thread_local std::string last_error;

drra_status ToStatus(drra::ErrorCode code) {
  using drra::ErrorCode;
  switch (code) {
    case ErrorCode::kBadParameter:
      return DRRA_ERR_BAD_PARAMETER;
    case ErrorCode::kParseError:
      return DRRA_ERR_PARSE;
    case ErrorCode::kDisconnectedGraph:
      return DRRA_ERR_DISCONNECTED;
    case ErrorCode::kBadVertexList:
      return DRRA_ERR_BAD_VERTEX_LIST;
    case ErrorCode::kNonIntegralLayer:
      return DRRA_ERR_NON_INTEGRAL_LAYER;
    case ErrorCode::kNonIntegralEntry:
      return DRRA_ERR_NON_INTEGRAL_ENTRY;
    case ErrorCode::kNegativeEntry:
      return DRRA_ERR_NEGATIVE_ENTRY;
    case ErrorCode::kInconsistentTensor:
      return DRRA_ERR_INCONSISTENT_TENSOR;
    case ErrorCode::kColorCountMismatch:
      return DRRA_ERR_COLOR_COUNT_MISMATCH;
    case ErrorCode::kSizeGuard:
      return DRRA_ERR_SIZE_GUARD;
    case ErrorCode::kIoError:
      return DRRA_ERR_IO;
    case ErrorCode::kInvalidArgument:
      return DRRA_ERR_INVALID_ARGUMENT;
    case ErrorCode::kArithmeticOverflow:
      return DRRA_ERR_OVERFLOW;
  }
  return DRRA_ERR_INTERNAL;
}

drra_status Fail(drra_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
drra_status Guarded(Body&& body) {
  try {
    body();
    return DRRA_OK;
  } catch (const drra::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DRRA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DRRA_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::string Dump(const drra::Json& j) { return j.dump(2) + "\n"; }

#define DRRA_REQUIRE(cond)                                              \
  do {                                                                  \
    if (!(cond)) {                                                      \
      return Fail(DRRA_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    }                                                                   \
  } while (0)

}  // namespace

extern "C" {

const char* drra_version(void) { return "1.0.0"; }

const char* drra_status_name(drra_status status) {
  switch (status) {
    case DRRA_OK:
      return "OK";
    case DRRA_ERR_BAD_PARAMETER:
      return "BadParameter";
    case DRRA_ERR_PARSE:
      return "ParseError";
    case DRRA_ERR_DISCONNECTED:
      return "DisconnectedGraph";
    case DRRA_ERR_BAD_VERTEX_LIST:
      return "BadVertexList";
    case DRRA_ERR_NON_INTEGRAL_LAYER:
      return "NonIntegralLayer";
    case DRRA_ERR_NON_INTEGRAL_ENTRY:
      return "NonIntegralEntry";
    case DRRA_ERR_NEGATIVE_ENTRY:
      return "NegativeEntry";
    case DRRA_ERR_INCONSISTENT_TENSOR:
      return "InconsistentTensor";
    case DRRA_ERR_COLOR_COUNT_MISMATCH:
      return "ColorCountMismatch";
    case DRRA_ERR_SIZE_GUARD:
      return "SizeGuard";
    case DRRA_ERR_IO:
      return "IoError";
    case DRRA_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case DRRA_ERR_OVERFLOW:
      return "ArithmeticOverflow";
    case DRRA_ERR_INTERNAL:
      return "InternalError";
  }
  return "Unknown";
}

const char* drra_last_error(void) { return last_error.c_str(); }

void drra_string_free(char* text) { std::free(text); }

drra_status drra_graph_generate(const char* family, int parameter,
                                drra_graph** out) {
  DRRA_REQUIRE(family != nullptr && out != nullptr);
  return Guarded([&] {
    const auto parsed = drra::ParseFamily(family);
    if (!parsed) {
      throw drra::Error(drra::ErrorCode::kBadParameter,
                        std::string("unknown family '") + family + "'");
    }
    drra::FamilySpec spec{*parsed, std::nullopt};
    if (parameter != DRRA_NO_PARAMETER) spec.parameter = parameter;
    *out = new drra_graph{drra::generate(spec)};
  });
}

drra_status drra_graph_from_edges(int vertices, const int* endpoints,
                                  size_t edge_count, drra_graph** out) {
  DRRA_REQUIRE(out != nullptr && (endpoints != nullptr || edge_count == 0));
  return Guarded([&] {
    std::vector<drra::Edge> edges;
    edges.reserve(edge_count);
    for (size_t e = 0; e < edge_count; ++e) {
      edges.emplace_back(endpoints[2 * e], endpoints[2 * e + 1]);
    }
    *out = new drra_graph{drra::Graph::FromEdges(vertices, edges)};
  });
}

drra_status drra_graph_parse(const char* text, drra_graph** out) {
  DRRA_REQUIRE(text != nullptr && out != nullptr);
  return Guarded([&] { *out = new drra_graph{drra::ParseEdgeList(text)}; });
}

drra_status drra_graph_load(const char* path, drra_graph** out) {
  DRRA_REQUIRE(path != nullptr && out != nullptr);
  return Guarded([&] {
    *out = new drra_graph{drra::ParseEdgeList(drra::ReadTextFile(path))};
  });
}

drra_status drra_graph_format(const drra_graph* graph, char** out_text) {
  DRRA_REQUIRE(graph != nullptr && out_text != nullptr);
  return Guarded(
      [&] { *out_text = CopyString(drra::FormatEdgeList(graph->graph)); });
}

int drra_graph_order(const drra_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.order();
}

size_t drra_graph_edge_count(const drra_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

drra_status drra_graph_diameter(const drra_graph* graph, int* out_diameter) {
  DRRA_REQUIRE(graph != nullptr && out_diameter != nullptr);
  return Guarded([&] { *out_diameter = drra::diameter(graph->graph); });
}

void drra_graph_free(drra_graph* graph) { delete graph; }

drra_status drra_coloring_from_graph(const drra_graph* graph,
                                     drra_coloring** out) {
  DRRA_REQUIRE(graph != nullptr && out != nullptr);
  return Guarded([&] {
    *out = new drra_coloring{drra::distance_coloring(graph->graph)};
  });
}

drra_status drra_coloring_parse(const char* text, drra_coloring** out) {
  DRRA_REQUIRE(text != nullptr && out != nullptr);
  return Guarded([&] { *out = new drra_coloring{drra::ParseColoring(text)}; });
}

drra_status drra_coloring_load(const char* path, drra_coloring** out) {
  DRRA_REQUIRE(path != nullptr && out != nullptr);
  return Guarded([&] {
    *out = new drra_coloring{drra::ParseColoring(drra::ReadTextFile(path))};
  });
}

drra_status drra_coloring_format(const drra_coloring* coloring,
                                 char** out_text) {
  DRRA_REQUIRE(coloring != nullptr && out_text != nullptr);
  return Guarded(
      [&] { *out_text = CopyString(drra::FormatColoring(coloring->coloring)); });
}

int drra_coloring_order(const drra_coloring* coloring) {
  return coloring == nullptr ? 0 : coloring->coloring.order();
}

int drra_coloring_color_count(const drra_coloring* coloring) {
  return coloring == nullptr ? 0 : coloring->coloring.color_count();
}

int drra_coloring_color(const drra_coloring* coloring, int x, int y) {
  if (coloring == nullptr) return -1;
  const int n = coloring->coloring.order();
  if (x < 0 || y < 0 || x >= n || y >= n) return -1;
  return coloring->coloring.color(x, y);
}

drra_status drra_coloring_recolor(const drra_coloring* coloring, int u, int v,
                                  int color, drra_coloring** out) {
  DRRA_REQUIRE(coloring != nullptr && out != nullptr);
  return Guarded([&] {
    *out = new drra_coloring{coloring->coloring.WithColor(u, v, color)};
  });
}

void drra_coloring_free(drra_coloring* coloring) { delete coloring; }

drra_status drra_analyze(const drra_graph* graph, char** out_json) {
  DRRA_REQUIRE(graph != nullptr && out_json != nullptr);
  return Guarded(
      [&] { *out_json = CopyString(Dump(drra::AnalyzeReport(graph->graph))); });
}

drra_status drra_cycle_table(const char* array, char** out_json) {
  DRRA_REQUIRE(array != nullptr && out_json != nullptr);
  return Guarded([&] {
    const auto arr = drra::IntersectionArray::Parse(array);
    *out_json = CopyString(Dump(drra::CycleTableReport(arr)));
  });
}

drra_status drra_verify_representation(const drra_coloring* coloring,
                                       const char* algebra,
                                       size_t violation_cap, int* out_passed,
                                       char** out_json) {
  DRRA_REQUIRE(coloring != nullptr && algebra != nullptr &&
               out_json != nullptr);
  return Guarded([&] {
    bool passed = false;
    const drra::Json report = drra::VerifyReport(coloring->coloring, algebra,
                                                 violation_cap, &passed);
    *out_json = CopyString(Dump(report));
    if (out_passed != nullptr) *out_passed = passed ? 1 : 0;
  });
}

drra_status drra_check_distance_transitive(const drra_graph* graph,
                                           int max_points, int force,
                                           int* out_iff_holds, char** out_json,
                                           char** out_generators) {
  DRRA_REQUIRE(graph != nullptr && out_json != nullptr);
  return Guarded([&] {
    drra::SymmetryOptions options;
    if (max_points > 0) options.max_points = max_points;
    options.force = force != 0;
    bool iff = false;
    std::string generators;
    const drra::Json report =
        drra::CheckDtReport(graph->graph, options, &iff, &generators);
    char* json = CopyString(Dump(report));
    if (out_generators != nullptr) {
      try {
        *out_generators = CopyString(generators);
      } catch (...) {
        std::free(json);
        throw;
      }
    }
    *out_json = json;
    if (out_iff_holds != nullptr) *out_iff_holds = iff ? 1 : 0;
  });
}

drra_status drra_reproduce_table(const drra_reproduce_options* options,
                                 int* out_all_ok, char** out_text,
                                 char** out_json) {
  return Guarded([&] {
    drra::ReproduceOptions cpp_options;
    if (options != nullptr) {
      if (options->moscow_soicher != nullptr) {
        cpp_options.moscow_soicher = options->moscow_soicher->graph;
      }
      if (options->inject_fault != nullptr) {
        cpp_options.inject_fault = options->inject_fault;
      }
      if (options->max_points > 0) {
        cpp_options.symmetry.max_points = options->max_points;
      }
    }
    const drra::ReproduceResult result = drra::reproduce_table(cpp_options);
    char* text = out_text != nullptr ? CopyString(result.RenderText()) : nullptr;
    char* json = nullptr;
    if (out_json != nullptr) {
      try {
        json = CopyString(Dump(result.ToJson()));
      } catch (...) {
        std::free(text);
        throw;
      }
    }
    if (out_text != nullptr) *out_text = text;
    if (out_json != nullptr) *out_json = json;
    if (out_all_ok != nullptr) *out_all_ok = result.ok() ? 1 : 0;
  });
}

}  // extern "C"
