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

#include "drra/report.hpp"

#include <algorithm>
#include <sstream>

#include "drra/diam3.hpp"
#include "drra/error.hpp"
#include "drra/generators.hpp"

namespace drra {
namespace {

// Values of the published example table. Vertex counts, arrays, induced
// algebras and distance-transitivity flags are copied verbatim. The table
// lists the Petersen line graph as not distance-transitive; its automorphism
// group S5 has four orbitals on ordered pairs, one per distance, and the
// verified flag for that row is Yes.
const std::vector<ExpectedRow>& ExpectedRows() {
  static const std::vector<ExpectedRow> rows = {
      {"Crown graph (n=5)", "crown", "{4,3,1;1,3,4}", "26_65", 10, true,
       true},
      {"Icosahedral graph", "icosahedron", "{5,2,1;1,2,5}", "27_65", 12, true,
       true},
      {"Heawood graph", "heawood", "{3,2,2;1,1,3}", "28_65", 14, true, true},
      {"Petersen line graph", "petersen_line", "{4,2,1;1,1,4}", "31_65", 15,
       false, true},
      {"(3,3)-Hamming graph", "hamming33", "{6,4,2;1,2,3}", "61_65", 27, true,
       true},
      {"Sylvester graph", "sylvester", "{5,4,2;1,1,4}", "59_65", 36, true,
       true},
      {"2nd subconstituent Hoffman-Singleton", "hs_second_subconstituent",
       "{6,5,1;1,1,6}", "30_65", 42, true, true},
      {"Moscow-Soicher graph", "", "{110,81,12;1,18,90}", "57_65", 672, false,
       false},
  };
  return rows;
}

std::string PName(int h, int i, int j) {
  return "p^" + std::to_string(h) + "_" + std::to_string(i) +
         std::to_string(j);
}

Json Names(const std::vector<CycleType>& cycles) {
  Json out = Json::array();
  for (const CycleType& cycle : cycles) out.push_back(cycle.Name());
  return out;
}

std::string YesNo(bool value) { return value ? "Yes" : "No"; }

Graph DropFirstEdge(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  if (!edges.empty()) edges.erase(edges.begin());
  return Graph::FromEdges(g.order(), edges);
}

// Runs the graph pipeline for one row and records every disagreement.
void AnalyzeRow(const Graph& g, const ExpectedRow& expected,
                const SymmetryOptions& symmetry, RowResult& row) {
  row.mode = "graph";
  row.vertices = std::to_string(g.order());
  if (g.order() != expected.vertices) {
    row.mismatches.push_back("vertex count " + row.vertices);
  }
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected()) {
    row.array = "disconnected";
    row.algebra = "-";
    row.distance_transitive = "-";
    row.mismatches.push_back("graph is disconnected");
    return;
  }
  const DistanceRegularity drg = is_distance_regular(g);
  if (!drg.distance_regular) {
    row.array = "not distance-regular";
    row.algebra = "-";
    row.mismatches.push_back("not distance-regular");
  } else {
    const IntersectionArray arr = extract_array(*drg.tensor);
    row.array = arr.ToString();
    if (row.array != expected.array) {
      row.mismatches.push_back("intersection array " + row.array);
    }
    // The algebra column is derived twice: from the brute-force tensor and
    // from the closed forms of the extracted array.
    const CycleTable brute = cycle_table_from_tensor(*drg.tensor);
    row.algebra = identify(brute).NameOr("uncataloged");
    if (arr.diameter() == 3) {
      const CycleTable formula = cycle_table(arr);
      if (!(formula == brute)) {
        row.mismatches.push_back("closed-form cycle table disagrees");
      }
    }
    if (row.algebra != expected.algebra) {
      row.mismatches.push_back("algebra " + row.algebra);
    }
    const ColoredCompleteGraph cg = distance_coloring(g);
    if (!verify_representation(cg, brute, 1).passed()) {
      row.mismatches.push_back("representation check failed");
    }
  }
  const bool dt = is_distance_transitive(g, symmetry);
  const bool algebraic = is_algebraic(distance_coloring(g), symmetry);
  row.distance_transitive = YesNo(dt);
  if (dt != expected.published_distance_transitive &&
      dt == expected.distance_transitive) {
    row.erratum = "published table lists " +
                  YesNo(expected.published_distance_transitive) +
                  "; computed " + YesNo(dt);
  }
  if (dt != expected.distance_transitive) {
    row.mismatches.push_back("distance-transitive " + row.distance_transitive);
  }
  if (dt != algebraic) {
    row.mismatches.push_back("algebraic != distance-transitive");
  }
}

void ArrayOnlyRow(const ExpectedRow& expected, RowResult& row) {
  row.mode = "array-only";
  row.distance_transitive = "skipped";
  const IntersectionArray arr = IntersectionArray::Parse(expected.array);
  row.array = arr.ToString();
  const std::vector<std::int64_t> k = layer_sizes(arr);
  std::int64_t total = 0;
  for (std::int64_t v : k) total += v;
  row.vertices = std::to_string(total);
  if (total != expected.vertices) {
    row.mismatches.push_back("layer sizes sum to " + row.vertices);
  }
  row.algebra = identify(cycle_table(arr)).NameOr("uncataloged");
  if (row.algebra != expected.algebra) {
    row.mismatches.push_back("algebra " + row.algebra);
  }
}

}  // namespace

Json TensorToJson(const IntersectionTensor& t) {
  Json p = Json::array();
  for (int h = 0; h <= t.d(); ++h) {
    Json plane = Json::array();
    for (int i = 0; i <= t.d(); ++i) {
      Json row = Json::array();
      for (int j = 0; j <= t.d(); ++j) row.push_back(t.p(h, i, j));
      plane.push_back(std::move(row));
    }
    p.push_back(std::move(plane));
  }
  return Json{{"d", t.d()}, {"k", t.layer_sizes()}, {"p", std::move(p)}};
}

IntersectionTensor TensorFromJson(const Json& j) {
  try {
    const auto k = j.at("k").get<std::vector<std::int64_t>>();
    const int d = static_cast<int>(k.size()) - 1;
    if (j.contains("d") && j.at("d").get<int>() != d) {
      throw Error(ErrorCode::kParseError, "tensor 'd' disagrees with 'k'");
    }
    const Json& planes = j.at("p");
    std::vector<std::int64_t> p;
    if (planes.size() != k.size()) {
      throw Error(ErrorCode::kParseError, "tensor 'p' has wrong shape");
    }
    for (const Json& plane : planes) {
      if (plane.size() != k.size()) {
        throw Error(ErrorCode::kParseError, "tensor 'p' has wrong shape");
      }
      for (const Json& row : plane) {
        const auto values = row.get<std::vector<std::int64_t>>();
        if (values.size() != k.size()) {
          throw Error(ErrorCode::kParseError, "tensor 'p' has wrong shape");
        }
        p.insert(p.end(), values.begin(), values.end());
      }
    }
    return IntersectionTensor(d, std::move(p), k);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Json ArrayToJson(const IntersectionArray& arr) {
  std::vector<std::int64_t> b, c, a;
  for (int i = 0; i < arr.diameter(); ++i) b.push_back(arr.b(i));
  for (int i = 1; i <= arr.diameter(); ++i) c.push_back(arr.c(i));
  for (int i = 0; i <= arr.diameter(); ++i) a.push_back(arr.a(i));
  return Json{{"string", arr.ToString()}, {"b", b}, {"c", c}, {"a", a}};
}

Json NonUniformToJson(const NonUniformReport& r) {
  return Json{
      {"triple", {r.h, r.i, r.j}},
      {"first_base", {r.first_base.first, r.first_base.second}},
      {"first_count", r.first_count},
      {"second_base", {r.second_base.first, r.second_base.second}},
      {"second_count", r.second_count},
  };
}

Json CycleTableToJson(const CycleTable& ct) {
  return Json{{"atoms", ct.num_colors()},
              {"mandatory", Names(ct.mandatory())},
              {"forbidden", Names(ct.forbidden())}};
}

CycleTable CycleTableFromJson(const Json& j) {
  try {
    std::vector<CycleType> cycles;
    for (const auto& name : j.at("mandatory").get<std::vector<std::string>>()) {
      const auto cycle = CycleType::Parse(name);
      if (!cycle) throw Error(ErrorCode::kParseError, "bad cycle " + name);
      cycles.push_back(*cycle);
    }
    return CycleTable(j.at("atoms").get<int>(), std::move(cycles));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Json RepReportToJson(const RepReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json entry{{"kind", ViolationKindName(v.kind)},
               {"triple", v.triple.Name()},
               {"rotation", {v.base_color, v.leg_first, v.leg_second}},
               {"base", {v.base.first, v.base.second}}};
    if (v.apex) entry["apex"] = *v.apex;
    violations.push_back(std::move(entry));
  }
  return Json{{"status", report.passed() ? "pass" : "fail"},
              {"violations", std::move(violations)},
              {"truncated", report.truncated}};
}

Json AnalyzeReport(const Graph& g) {
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is disconnected");
  }
  Json out{{"vertices", g.order()},
           {"edges", g.edge_count()},
           {"diameter", dm.max_finite()}};
  const DistanceRegularity drg = is_distance_regular(g);
  out["distance_regular"] = drg.distance_regular;
  if (!drg.distance_regular) {
    out["witness"] = NonUniformToJson(*drg.witness);
    return out;
  }
  const IntersectionTensor& t = *drg.tensor;
  const IntersectionArray arr = extract_array(t);
  out["intersection_array"] = ArrayToJson(arr);
  out["layer_sizes"] = layer_sizes(arr);
  out["khp_identity"] = check_khp_identity(t);
  out["row_sums"] = check_row_sums(t);
  const CycleTable ct = cycle_table_from_tensor(t);
  out["cycles"] = CycleTableToJson(ct);
  const Identification id = identify(ct);
  out["algebra"] = id.NameOr("uncataloged");
  if (id.name) out["permutation"] = id.permutation;
  out["tensor"] = TensorToJson(t);
  return out;
}

Json CycleTableReport(const IntersectionArray& arr) {
  const Diam3Formulas formulas = closed_form_tensor(arr);
  const CycleTable ct = cycle_table(formulas);
  Json p = Json::object();
  for (int h = 1; h <= 3; ++h) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = i; j <= 3; ++j) p[PName(h, i, j)] = formulas.tensor.p(h, i, j);
    }
  }
  Json out{{"array", ArrayToJson(arr)},
           {"layer_sizes", formulas.tensor.layer_sizes()},
           {"vertices", formulas.tensor.order()},
           {"p", std::move(p)},
           {"p23_3_unsimplified", formulas.p23_3_unsimplified}};
  const Json cycles = CycleTableToJson(ct);
  out["mandatory"] = cycles["mandatory"];
  out["forbidden"] = cycles["forbidden"];
  const Identification id = identify(ct);
  out["algebra"] = id.NameOr("uncataloged");
  if (id.name) out["permutation"] = id.permutation;
  out["composition"] = RenderCompositionTable(ct);
  out["tensor"] = TensorToJson(formulas.tensor);
  return out;
}

Json VerifyReport(const ColoredCompleteGraph& cg, std::string_view algebra,
                  std::size_t violation_cap, bool* passed) {
  CycleTable ct;
  const CatalogEntry* entry = FindCatalogEntry(algebra);
  if (entry != nullptr) {
    ct = entry->Table();
  } else {
    try {
      ct = CycleTable::Parse(cg.color_count(), algebra);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument) {
        throw Error(ErrorCode::kColorCountMismatch, e.what());
      }
      throw Error(ErrorCode::kParseError,
                  "'" + std::string(algebra) +
                      "' is neither a cataloged algebra nor a cycle list");
    }
  }
  const RepReport report = verify_representation(cg, ct, violation_cap);
  Json out = RepReportToJson(report);
  if (entry != nullptr) out["algebra"] = std::string(entry->name);
  out["points"] = cg.order();
  out["mandatory"] = Names(ct.mandatory());
  out["forbidden"] = Names(ct.forbidden());
  if (entry != nullptr && entry->name == "30_65") {
    const CliqueStructureReport s = check_3065_structure(cg);
    out["structure"] = Json{{"c_clique_sizes", s.clique_sizes},
                            {"components_are_cliques", s.components_are_cliques},
                            {"clique_pairs", s.clique_pairs},
                            {"perfect_b_matchings", s.perfect_matchings},
                            {"other_cross_edges_a", s.other_cross_edges_a},
                            {"holds", s.holds()}};
  }
  if (entry != nullptr && entry->name == "31_65") {
    const MinimalityReport m = check_3165_minimality_properties(cg);
    out["minimality"] = Json{{"c_clique_sizes", m.clique_sizes},
                             {"components_are_cliques", m.components_are_cliques},
                             {"clique_count", m.clique_count},
                             {"at_least_5_cliques", m.at_least_5_cliques},
                             {"all_cliques_at_least_3", m.all_cliques_at_least_3},
                             {"at_least_15_points", m.at_least_15_points},
                             {"holds", m.holds()}};
  }
  if (passed != nullptr) *passed = report.passed();
  return out;
}

Json CheckDtReport(const Graph& g, const SymmetryOptions& options,
                   bool* iff_holds, std::string* generators_text) {
  const int d = diameter(g);
  const bool dt = is_distance_transitive(g, options);
  const ColoredCompleteGraph cg = distance_coloring(g);
  const AutomorphismGroup group = automorphism_group(cg, options);
  const OrbitalPartition orbits = orbitals(group.generators);
  const bool algebraic = ColorClassesAreOrbitals(cg, orbits);

  Json listed = Json::array();
  for (int o = 0; o < orbits.count(); ++o) {
    const Edge rep = orbits.representatives()[o];
    listed.push_back(Json{{"id", o},
                          {"size", orbits.sizes()[o]},
                          {"representative", {rep.first, rep.second}},
                          {"color", cg.color(rep.first, rep.second)}});
  }
  if (iff_holds != nullptr) *iff_holds = dt == algebraic;
  if (generators_text != nullptr) {
    *generators_text = FormatGenerators(group.generators);
  }
  return Json{{"vertices", g.order()},
              {"diameter", d},
              {"distance_transitive", dt},
              {"algebraic", algebraic},
              {"iff_holds", dt == algebraic},
              {"group_order", group.order.str()},
              {"generators", group.generators.generators().size()},
              {"orbitals", Json{{"count", orbits.count()},
                                {"orbitals", std::move(listed)}}}};
}

std::span<const ExpectedRow> ExpectedTable() { return ExpectedRows(); }

bool ReproduceResult::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RowResult& r) { return r.ok(); });
}

std::string ReproduceResult::RenderText() const {
  std::ostringstream out;
  const auto pad = [](const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 1, ' ');
  };
  out << pad("Graph", 38) << pad("Intersection array", 22) << pad("RA", 8)
      << pad("|V|", 6) << pad("DT", 9) << "Status\n";
  for (const RowResult& row : rows) {
    out << pad(row.label, 38) << pad(row.array, 22) << pad(row.algebra, 8)
        << pad(row.vertices, 6) << pad(row.distance_transitive, 9)
        << (row.ok() ? "ok" : "MISMATCH") << " (" << row.mode << ")";
    for (const std::string& m : row.mismatches) out << "; " << m;
    if (row.erratum) out << "; erratum: " << *row.erratum;
    out << '\n';
  }
  out << (ok() ? "all rows verified\n" : "table reproduction FAILED\n");
  return out.str();
}

Json ReproduceResult::ToJson() const {
  Json list = Json::array();
  for (const RowResult& row : rows) {
    list.push_back(Json{{"graph", row.label},
                        {"mode", row.mode},
                        {"array", row.array},
                        {"algebra", row.algebra},
                        {"vertices", row.vertices},
                        {"distance_transitive", row.distance_transitive},
                        {"ok", row.ok()},
                        {"erratum", row.erratum ? Json(*row.erratum) : Json()},
                        {"mismatches", row.mismatches}});
  }
  return Json{{"rows", std::move(list)}, {"ok", ok()}};
}

ReproduceResult reproduce_table(const ReproduceOptions& options) {
  ReproduceResult result;
  for (const ExpectedRow& expected : ExpectedRows()) {
    RowResult row;
    row.label = std::string(expected.label);
    try {
      if (!expected.family.empty()) {
        Graph g = generate(FamilySpec{*ParseFamily(expected.family),
                                      expected.family == "crown"
                                          ? std::optional<int>(5)
                                          : std::nullopt});
        if (options.inject_fault == expected.family) g = DropFirstEdge(g);
        AnalyzeRow(g, expected, options.symmetry, row);
      } else {
        ArrayOnlyRow(expected, row);
        if (options.moscow_soicher) {
          SymmetryOptions forced = options.symmetry;
          forced.force = true;
          RowResult graph_row;
          graph_row.label = row.label;
          AnalyzeRow(*options.moscow_soicher, expected, forced, graph_row);
          graph_row.mismatches.insert(graph_row.mismatches.begin(),
                                      row.mismatches.begin(),
                                      row.mismatches.end());
          row = std::move(graph_row);
        }
      }
    } catch (const Error& e) {
      row.mismatches.push_back(std::string(ErrorCodeName(e.code())) + ": " +
                               e.what());
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace drra
