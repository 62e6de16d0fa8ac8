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

#ifndef DRRA_REPORT_HPP_
#define DRRA_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drra/coloring.hpp"
#include "drra/cycles.hpp"
#include "drra/graph.hpp"
#include "drra/ra.hpp"
#include "drra/scheme.hpp"
#include "drra/symmetry.hpp"
#include "json.hpp"

namespace drra {

using Json = nlohmann::ordered_json;

// {"d": 3, "k": [...], "p": [[[...]]]}. TensorFromJson throws
// Error(kParseError) on malformed input.
Json TensorToJson(const IntersectionTensor& t);
IntersectionTensor TensorFromJson(const Json& j);

Json ArrayToJson(const IntersectionArray& arr);
Json NonUniformToJson(const NonUniformReport& r);
Json CycleTableToJson(const CycleTable& ct);
// Inverse of CycleTableToJson; throws Error(kParseError).
CycleTable CycleTableFromJson(const Json& j);
Json RepReportToJson(const RepReport& report);

// Distance-regularity analysis of a graph file. Throws
// Error(kDisconnectedGraph).
Json AnalyzeReport(const Graph& g);

// Closed-form tensor, cycle table, catalog identification and composition
// table of a diameter-3 array.
Json CycleTableReport(const IntersectionArray& arr);

// `algebra` is either a catalog name ("30_65") or a comma separated cycle
// list. Sets *passed. Throws Error(kParseError) for an unknown algebra and
// Error(kColorCountMismatch).
Json VerifyReport(const ColoredCompleteGraph& cg, std::string_view algebra,
                  std::size_t violation_cap, bool* passed);

// Distance-transitivity, orbitals and algebraicity of a graph, with the
// generators of Aut(g) in image notation. Sets *iff_holds to whether the two
// verdicts agree.
Json CheckDtReport(const Graph& g, const SymmetryOptions& options,
                   bool* iff_holds, std::string* generators_text = nullptr);

// Expected rows of the distance-regular example table.
struct ExpectedRow {
  std::string_view label;
  // Generator name, empty for the Moscow-Soicher graph.
  std::string_view family;
  std::string_view array;
  std::string_view algebra;
  int vertices;
  // Flag printed in the published table.
  bool published_distance_transitive;
  // Flag established by computation; differs from the published one where
  // the table is in error.
  bool distance_transitive;
};

std::span<const ExpectedRow> ExpectedTable();

struct RowResult {
  std::string label;
  std::string mode;  // "graph" or "array-only"
  std::string array;
  std::string algebra;
  std::string vertices;
  std::string distance_transitive;  // "Yes", "No" or "skipped"
  // Set when the computed flag contradicts the published table.
  std::optional<std::string> erratum;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

struct ReproduceOptions {
  // Externally supplied Moscow-Soicher graph; enables the graph columns of
  // its row.
  std::optional<Graph> moscow_soicher;
  // Test hook: drop the first edge of this row's generated graph.
  std::optional<std::string> inject_fault;
  SymmetryOptions symmetry;
};

struct ReproduceResult {
  std::vector<RowResult> rows;

  bool ok() const;
  std::string RenderText() const;
  Json ToJson() const;
};

ReproduceResult reproduce_table(const ReproduceOptions& options = {});

}  // namespace drra

#endif  // DRRA_REPORT_HPP_
