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

// Acceptance gate. Prints one status line per criterion and exits non-zero
// if any criterion fails. A criterion whose published claim is contradicted
// by exact computation is reported as UNATTAINABLE together with the
// computed values; every other part of that criterion is still enforced.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "drra/diam3.hpp"
#include "drra/error.hpp"
#include "drra/generators.hpp"
#include "drra/ra.hpp"
#include "drra/scheme.hpp"
#include "drra/symmetry.hpp"
#include "oracles.hpp"

namespace drra {
namespace {

enum class Status { kPass, kFail, kUnattainable };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    if (!condition) failures_.push_back(what);
  }
  void Contradicted(const std::string& what) { contradicted_.push_back(what); }

  Outcome Finish(const std::string& summary) const {
    Outcome out;
    if (!failures_.empty()) {
      out.status = Status::kFail;
      out.detail = Join(failures_);
    } else if (!contradicted_.empty()) {
      out.status = Status::kUnattainable;
      out.detail = summary + "; published claim contradicted: " +
                   Join(contradicted_);
    } else {
      out.detail = summary;
    }
    return out;
  }

 private:
  static std::string Join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0) out += "; ";
      out += parts[k];
    }
    return out;
  }

  std::vector<std::string> failures_;
  std::vector<std::string> contradicted_;
};

struct TableRow {
  const char* name;
  Graph graph;
  const char* array;
  const char* algebra;
  int vertices;
  bool published_dt;
};

std::vector<TableRow> PublishedRows() {
  return {
      {"crown(5)", crown(5), "{4,3,1;1,3,4}", "26_65", 10, true},
      {"icosahedron", icosahedron(), "{5,2,1;1,2,5}", "27_65", 12, true},
      {"Heawood", heawood(), "{3,2,2;1,1,3}", "28_65", 14, true},
      {"Petersen line", petersen_line(), "{4,2,1;1,1,4}", "31_65", 15, false},
      {"H(3,3)", hamming33(), "{6,4,2;1,2,3}", "61_65", 27, true},
      {"Sylvester", sylvester(), "{5,4,2;1,1,4}", "59_65", 36, true},
      {"HS 2nd subconstituent",
       generate({Family::kHsSecondSubconstituent, std::nullopt}),
       "{6,5,1;1,1,6}", "30_65", 42, true},
  };
}

std::vector<std::string> Names(const std::vector<CycleType>& cycles) {
  std::vector<std::string> out;
  for (const CycleType& c : cycles) out.push_back(c.Name());
  return out;
}

std::string YesNo(bool b) { return b ? "Yes" : "No"; }

Outcome TableReproduction() {
  Checker check;
  for (const TableRow& row : PublishedRows()) {
    const std::string tag = row.name;
    check.Expect(row.graph.order() == row.vertices, tag + " vertex count");
    const DistanceRegularity drg = is_distance_regular(row.graph);
    if (!drg.distance_regular) {
      check.Expect(false, tag + " not distance-regular");
      continue;
    }
    const IntersectionArray arr = extract_array(*drg.tensor);
    check.Expect(arr.ToString() == row.array, tag + " array " + arr.ToString());
    const std::string algebra =
        identify(cycle_table_from_tensor(*drg.tensor)).NameOr("none");
    check.Expect(algebra == row.algebra, tag + " algebra " + algebra);
    const bool dt = is_distance_transitive(row.graph);
    if (dt != row.published_dt) {
      // Confirm with the brute-force orbital oracle before calling the
      // published flag wrong.
      const bool oracle = testing::DistanceTransitiveOracle(row.graph);
      check.Expect(oracle == dt, tag + " DT disagrees with oracle");
      check.Contradicted(tag + " DT published " + YesNo(row.published_dt) +
                         ", computed " + YesNo(dt) + " (" +
                         std::to_string(testing::OrbitalCountOracle(row.graph)) +
                         " orbitals = diameter + 1)");
    }
  }
  return check.Finish(
      "7 rows: vertex counts, arrays and algebras exact; DT matches for 6 rows");
}

std::vector<std::pair<std::string, Graph>> DiameterThreeGraphs() {
  std::vector<std::pair<std::string, Graph>> out;
  for (TableRow& row : PublishedRows()) out.emplace_back(row.name, row.graph);
  for (int n = 3; n <= 20; ++n) {
    out.emplace_back("crown(" + std::to_string(n) + ")", crown(n));
  }
  return out;
}

Outcome ClosedFormsMatchBruteForce() {
  Checker check;
  int graphs = 0;
  long entries = 0;
  for (const auto& [name, g] : DiameterThreeGraphs()) {
    const auto oracle = testing::BruteForceTensor(g);
    if (!oracle || oracle->d != 3) {
      check.Expect(false, name + " not diameter-3 distance-regular");
      continue;
    }
    const IntersectionArray arr = extract_array(*is_distance_regular(g).tensor);
    const Diam3Formulas f = closed_form_tensor(arr);
    for (int h = 1; h <= 3; ++h)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          ++entries;
          check.Expect(f.tensor.p(h, i, j) == oracle->at(h, i, j),
                       name + " p^" + std::to_string(h) + "_" +
                           std::to_string(i) + std::to_string(j));
        }
    ++graphs;
  }
  return check.Finish(std::to_string(graphs) + " graphs, " +
                      std::to_string(entries) + " entries equal");
}

Outcome Theorem3065() {
  Checker check;
  const ColoredCompleteGraph cg = distance_coloring(
      generate({Family::kHsSecondSubconstituent, std::nullopt}));
  check.Expect(cg.order() == 42, "42 points");
  check.Expect(
      verify_representation(cg, FindCatalogEntry("30_65")->Table()).passed(),
      "verification against 30_65");
  const TensorResult counted = count_tensor(cg);
  if (!std::holds_alternative<IntersectionTensor>(counted)) {
    check.Expect(false, "coloring is not a scheme");
    return check.Finish("");
  }
  const CycleTable ct =
      cycle_table_from_tensor(std::get<IntersectionTensor>(counted));
  check.Expect(Names(ct.mandatory()) ==
                   std::vector<std::string>{"aaa", "ccc", "abb", "baa", "caa",
                                            "abc"},
               "mandatory set");
  check.Expect(Names(ct.forbidden()) ==
                   std::vector<std::string>{"bbb", "acc", "bcc", "cbb"},
               "forbidden set");
  const CliqueStructureReport s = check_3065_structure(cg);
  check.Expect(s.components_are_cliques, "c-components are cliques");
  check.Expect(s.clique_sizes == std::vector<int>(7, 6), "7 cliques of size 6");
  check.Expect(s.clique_pairs == 21 && s.perfect_matchings == 21,
               "perfect b-matchings between all 21 pairs");
  return check.Finish(
      "passes 30_65; sets exact; 7 c-cliques of size 6, 21 perfect b-matchings");
}

Outcome AlgebraicIffDistanceTransitive() {
  Checker check;
  int graphs = 0;
  std::vector<TableRow> rows = PublishedRows();
  rows.push_back({"C6", testing::Cycle(6), "", "", 6, true});
  for (const TableRow& row : rows) {
    const bool dt = is_distance_transitive(row.graph);
    const bool algebraic = is_algebraic(distance_coloring(row.graph));
    check.Expect(dt == algebraic, std::string(row.name) + " iff");
    if (dt != row.published_dt || algebraic != row.published_dt) {
      if (dt == algebraic && dt == testing::DistanceTransitiveOracle(row.graph)) {
        check.Contradicted(std::string(row.name) + " published DT=" +
                           YesNo(row.published_dt) + ", computed DT=" +
                           YesNo(dt) + " and algebraic=" + YesNo(algebraic));
      } else {
        check.Expect(false, std::string(row.name) + " DT/algebraic flags");
      }
    }
    ++graphs;
  }
  return check.Finish("algebraic == DT on " + std::to_string(graphs) +
                      " graphs by independent searches");
}

Outcome CrownTheorem() {
  Checker check;
  for (int n = 3; n <= 20; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const DistanceRegularity drg = is_distance_regular(crown(n));
    if (!drg.distance_regular) {
      check.Expect(false, tag + " not distance-regular");
      continue;
    }
    check.Expect(extract_array(*drg.tensor) ==
                     IntersectionArray::Create({n - 1, n - 2, 1},
                                               {1, n - 2, n - 1}),
                 tag + " array");
    const CycleTable ct = cycle_table_from_tensor(*drg.tensor);
    check.Expect(Names(ct.mandatory()) ==
                     std::vector<std::string>{"aaa", "abb", "abc"},
                 tag + " cycles");
    check.Expect(identify(ct).NameOr("") == "26_65", tag + " algebra");
  }
  return check.Finish("n = 3..20 all give {n-1,n-2,1;1,n-2,n-1} and 26_65");
}

Outcome PetersenLine3165() {
  Checker check;
  const ColoredCompleteGraph cg = distance_coloring(petersen_line());
  check.Expect(cg.order() == 15, "15 points");
  check.Expect(
      verify_representation(cg, FindCatalogEntry("31_65")->Table()).passed(),
      "verification against 31_65");
  const MinimalityReport m = check_3165_minimality_properties(cg);
  check.Expect(m.components_are_cliques, "c-components are cliques");
  check.Expect(m.clique_sizes == std::vector<int>(5, 3),
               "5 disjoint cliques of size 3");
  return check.Finish("passes 31_65; c-edges form 5 disjoint triangles");
}

Outcome MoscowSoicherArrayOnly() {
  Checker check;
  const IntersectionArray arr = IntersectionArray::Parse("110,81,12;1,18,90");
  const std::string algebra = identify(cycle_table(arr)).NameOr("none");
  check.Expect(algebra == "57_65", "algebra " + algebra);
  std::int64_t total = 0;
  for (std::int64_t k : layer_sizes(arr)) total += k;
  check.Expect(total == 672, "layer sizes sum to " + std::to_string(total));
  return check.Finish("identifies 57_65; layer sizes 1+110+495+66 = 672");
}

Outcome LemmaIdentities() {
  Checker check;
  std::vector<IntersectionTensor> tensors;
  std::vector<IntersectionArray> arrays;
  for (const auto& [name, g] : DiameterThreeGraphs()) {
    const IntersectionTensor t = *is_distance_regular(g).tensor;
    tensors.push_back(t);
    arrays.push_back(extract_array(t));
    tensors.push_back(closed_form_tensor(arrays.back()).tensor);
  }
  arrays.push_back(IntersectionArray::Parse("110,81,12;1,18,90"));
  tensors.push_back(closed_form_tensor(arrays.back()).tensor);
  for (const IntersectionTensor& t : tensors) {
    for (int h = 0; h <= t.d(); ++h)
      for (int i = 0; i <= t.d(); ++i) {
        std::int64_t row = 0;
        for (int j = 0; j <= t.d(); ++j) {
          row += t.p(h, i, j);
          check.Expect(t.k(h) * t.p(h, i, j) == t.k(i) * t.p(i, h, j),
                       "k_h p^h_ij identity");
        }
        check.Expect(row == t.k(i), "row sum");
      }
  }
  for (const IntersectionArray& a : arrays) {
    const auto k = layer_sizes(a);
    check.Expect(k[1] == a.b(0), "k1 = b0");
    check.Expect(k[2] * a.c(2) == a.b(0) * a.b(1), "k2 = b0 b1 / c2");
    check.Expect(k[3] * a.c(2) * a.c(3) == a.b(0) * a.b(1) * a.b(2),
                 "k3 = b0 b1 b2 / (c2 c3)");
  }
  return check.Finish(std::to_string(tensors.size()) + " tensors, " +
                      std::to_string(arrays.size()) + " arrays");
}

Outcome NegativeControls() {
  Checker check;
  const DistanceRegularity p4 = is_distance_regular(testing::Path(4));
  check.Expect(!p4.distance_regular, "P4 reported distance-regular");
  check.Expect(p4.witness.has_value() &&
                   p4.witness->first_count != p4.witness->second_count,
               "P4 witness");
  const ColoredCompleteGraph cg = distance_coloring(
      generate({Family::kHsSecondSubconstituent, std::nullopt}));
  const ColoredCompleteGraph broken =
      cg.WithColor(0, 1, cg.color(0, 1) % 3 + 1);
  const RepReport r =
      verify_representation(broken, FindCatalogEntry("30_65")->Table());
  check.Expect(!r.passed() && !r.violations.empty(),
               "recolored coloring still passes");
  std::ostringstream detail;
  detail << "P4 witness p^" << p4.witness->h << "_" << p4.witness->i
         << p4.witness->j << " (" << p4.witness->first_count << " vs "
         << p4.witness->second_count << "); recoloring gives "
         << r.violations.size() << (r.truncated ? "+" : "") << " violations";
  return check.Finish(detail.str());
}

}  // namespace
}  // namespace drra

int main() {
  using drra::Outcome;
  using drra::Status;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"table reproduction", drra::TableReproduction},
          {"closed forms vs brute force", drra::ClosedFormsMatchBruteForce},
          {"30_65 representation", drra::Theorem3065},
          {"algebraic iff distance-transitive",
           drra::AlgebraicIffDistanceTransitive},
          {"crown graphs give 26_65", drra::CrownTheorem},
          {"31_65 on the Petersen line graph", drra::PetersenLine3165},
          {"Moscow-Soicher array", drra::MoscowSoicherArrayOnly},
          {"intersection number identities", drra::LemmaIdentities},
          {"negative controls", drra::NegativeControls},
      };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* label = outcome.status == Status::kPass   ? "PASS"
                        : outcome.status == Status::kFail ? "FAIL"
                                                          : "UNATTAINABLE";
    std::printf("%-12s %d %s: %s\n", label, index, name, outcome.detail.c_str());
    failed += outcome.status == Status::kFail;
  }
  return failed == 0 ? 0 : 1;
}
