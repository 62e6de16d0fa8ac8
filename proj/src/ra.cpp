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

#include "drra/ra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>

#include "drra/error.hpp"

namespace drra {
namespace {

// Letter convention: b = color 1, a = color 2, c = color 3.
constexpr int kB = 1;
constexpr int kA = 2;
constexpr int kC = 3;

const std::vector<CatalogEntry>& CatalogRows() {
  static const std::vector<CatalogEntry> rows = {
      {"26_65", {"aaa", "abb", "abc"}},
      {"27_65", {"aaa", "bbb", "abb", "baa", "abc"}},
      {"28_65", {"aaa", "abb", "acc", "abc"}},
      {"30_65", {"aaa", "ccc", "abb", "baa", "caa", "abc"}},
      {"31_65", {"aaa", "bbb", "ccc", "abb", "baa", "caa", "abc"}},
      {"57_65", {"aaa", "bbb", "abb", "baa", "acc", "caa", "bcc", "abc"}},
      {"59_65", {"aaa", "ccc", "abb", "baa", "acc", "caa", "bcc", "abc"}},
      {"61_65",
       {"aaa", "bbb", "ccc", "abb", "baa", "acc", "caa", "bcc", "abc"}},
  };
  return rows;
}

void RequireThreeColors(const ColoredCompleteGraph& cg) {
  if (cg.color_count() != 3) {
    throw Error(ErrorCode::kColorCountMismatch,
                "expected 3 diversity colors, got " +
                    std::to_string(cg.color_count()));
  }
}

// Components of the c-colored graph, each sorted, ordered by least point.
std::vector<std::vector<int>> ColorComponents(const ColoredCompleteGraph& cg,
                                              int color) {
  const int n = cg.order();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (component[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members = {s};
    component[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const int u = members[head];
      for (int w = 0; w < n; ++w) {
        if (component[w] == -1 && w != u && cg.color(u, w) == color) {
          component[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool AllCliques(const ColoredCompleteGraph& cg,
                const std::vector<std::vector<int>>& components, int color) {
  for (const auto& members : components) {
    for (std::size_t p = 0; p < members.size(); ++p) {
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        if (cg.color(members[p], members[q]) != color) return false;
      }
    }
  }
  return true;
}

std::vector<int> SortedSizes(const std::vector<std::vector<int>>& components) {
  std::vector<int> sizes;
  for (const auto& members : components) {
    sizes.push_back(static_cast<int>(members.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

CycleTable CatalogEntry::Table() const {
  std::vector<CycleType> cycles;
  for (std::string_view name : mandatory) cycles.push_back(*CycleType::Parse(name));
  return CycleTable(3, std::move(cycles));
}

std::span<const CatalogEntry> Catalog() { return CatalogRows(); }

const CatalogEntry* FindCatalogEntry(std::string_view name) {
  for (const CatalogEntry& entry : CatalogRows()) {
    if (entry.name == name || entry.name.substr(0, entry.name.find('_')) == name) {
      return &entry;
    }
  }
  return nullptr;
}

Identification identify(const CycleTable& ct) {
  Identification result;
  if (ct.num_colors() != 3) return result;
  std::string permutation = "abc";
  do {
    std::vector<CycleType> relabeled;
    for (const CycleType& cycle : ct.mandatory()) {
      std::array<int, 3> colors{};
      for (int k = 0; k < 3; ++k) {
        const char letter = AtomLetter(cycle.colors()[k]);
        colors[k] = *AtomFromLetter(permutation[letter - 'a']);
      }
      relabeled.emplace_back(colors[0], colors[1], colors[2]);
    }
    const CycleTable candidate(3, std::move(relabeled));
    for (const CatalogEntry& entry : CatalogRows()) {
      if (entry.Table() == candidate) {
        result.name = std::string(entry.name);
        result.permutation = permutation;
        return result;
      }
    }
  } while (std::next_permutation(permutation.begin(), permutation.end()));
  return result;
}

std::string_view ViolationKindName(Violation::Kind kind) {
  return kind == Violation::Kind::kMissingMandatory ? "missing-mandatory"
                                                    : "forbidden-present";
}

RepReport verify_representation(const ColoredCompleteGraph& cg,
                                const CycleTable& mandatory,
                                std::size_t violation_cap) {
  if (mandatory.num_colors() != cg.color_count()) {
    throw Error(ErrorCode::kColorCountMismatch,
                "coloring has " + std::to_string(cg.color_count()) +
                    " diversity colors, cycle table has " +
                    std::to_string(mandatory.num_colors()));
  }
  const int n = cg.order();
  const int m = cg.color_count();
  const std::size_t s = static_cast<std::size_t>(m) + 1;
  const std::size_t words = (s * s + 63) / 64;

  // present[(x*n + y)*words ...] has bit i*s+j set iff some z has
  // color(x,z) = i and color(z,y) = j.
  std::vector<std::uint64_t> present(static_cast<std::size_t>(n) * n * words, 0);
  for (int x = 0; x < n; ++x) {
    const auto row_x = cg.row(x);
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto row_y = cg.row(y);
      std::uint64_t* bits =
          present.data() + (static_cast<std::size_t>(x) * n + y) * words;
      for (int z = 0; z < n; ++z) {
        const std::size_t bit = row_x[z] * s + row_y[z];
        bits[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
    }
  }

  RepReport report;
  const auto add = [&](Violation v) {
    if (report.violations.size() >= violation_cap) {
      report.truncated = true;
      return false;
    }
    report.violations.push_back(std::move(v));
    return true;
  };

  for (const CycleType& cycle : mandatory.mandatory()) {
    const auto& c = cycle.colors();
    std::set<std::tuple<int, int, int>> rotations;
    for (int base = 0; base < 3; ++base) {
      const int i = c[(base + 1) % 3];
      const int j = c[(base + 2) % 3];
      rotations.emplace(c[base], i, j);
      rotations.emplace(c[base], j, i);
    }
    for (const auto& [h, i, j] : rotations) {
      const std::size_t bit = i * s + j;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == y || cg.color(x, y) != h) continue;
          const std::uint64_t* bits =
              present.data() + (static_cast<std::size_t>(x) * n + y) * words;
          if ((bits[bit / 64] >> (bit % 64)) & 1) continue;
          Violation v;
          v.kind = Violation::Kind::kMissingMandatory;
          v.triple = cycle;
          v.base_color = h;
          v.leg_first = i;
          v.leg_second = j;
          v.base = {x, y};
          if (!add(std::move(v))) return report;
        }
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        const CycleType cycle(cg.color(x, y), cg.color(x, z), cg.color(z, y));
        if (mandatory.IsMandatory(cycle)) continue;
        Violation v;
        v.kind = Violation::Kind::kForbiddenPresent;
        v.triple = cycle;
        v.base_color = cg.color(x, y);
        v.leg_first = cg.color(x, z);
        v.leg_second = cg.color(z, y);
        v.base = {x, y};
        v.apex = z;
        if (!add(std::move(v))) return report;
      }
    }
  }
  return report;
}

CliqueStructureReport check_3065_structure(const ColoredCompleteGraph& cg) {
  RequireThreeColors(cg);
  CliqueStructureReport report;
  report.components = ColorComponents(cg, kC);
  report.components_are_cliques = AllCliques(cg, report.components, kC);
  report.clique_sizes = SortedSizes(report.components);

  const auto& parts = report.components;
  bool others_a = true;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      ++report.clique_pairs;
      bool perfect = parts[p].size() == parts[q].size();
      for (int u : parts[p]) {
        int matched = 0;
        for (int w : parts[q]) {
          const int color = cg.color(u, w);
          if (color == kB) {
            ++matched;
          } else if (color != kA) {
            others_a = false;
          }
        }
        if (matched != 1) perfect = false;
      }
      for (int w : parts[q]) {
        int matched = 0;
        for (int u : parts[p]) matched += cg.color(u, w) == kB;
        if (matched != 1) perfect = false;
      }
      if (perfect) ++report.perfect_matchings;
    }
  }
  report.all_matchings_perfect = report.perfect_matchings == report.clique_pairs;
  report.other_cross_edges_a = others_a;
  return report;
}

MinimalityReport check_3165_minimality_properties(
    const ColoredCompleteGraph& cg) {
  RequireThreeColors(cg);
  MinimalityReport report;
  const auto components = ColorComponents(cg, kC);
  report.components_are_cliques = AllCliques(cg, components, kC);
  report.clique_sizes = SortedSizes(components);
  report.clique_count = components.size();
  report.all_cliques_at_least_3 =
      std::all_of(report.clique_sizes.begin(), report.clique_sizes.end(),
                  [](int size) { return size >= 3; });
  report.at_least_5_cliques = report.clique_count >= 5;
  report.at_least_15_points = cg.order() >= 15;
  return report;
}

}  // namespace drra
