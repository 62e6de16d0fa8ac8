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

#ifndef DRRA_RA_HPP_
#define DRRA_RA_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drra/coloring.hpp"
#include "drra/cycles.hpp"

namespace drra {

// One row of the catalog of four-atom algebras with their mandatory
// diversity cycles (letters in the b/a/c distance convention).
struct CatalogEntry {
  std::string_view name;
  std::vector<std::string_view> mandatory;

  CycleTable Table() const;
};

// The eight cataloged algebras 26_65, 27_65, 28_65, 30_65, 31_65, 57_65,
// 59_65 and 61_65.
std::span<const CatalogEntry> Catalog();

// Case-sensitive lookup; also accepts "30" for "30_65". Returns nullptr when
// the name is not cataloged.
const CatalogEntry* FindCatalogEntry(std::string_view name);

struct Identification {
  // Empty when the cycle set is uncataloged.
  std::optional<std::string> name;
  // Letter relabeling applied to the input before it matched: input atom
  // "abc"[k] became catalog atom permutation[k]. "abc" is the identity.
  std::string permutation;

  std::string NameOr(std::string_view fallback) const {
    return name ? *name : std::string(fallback);
  }
};

// Exact set match against Catalog(), trying every relabeling of {a, b, c}
// starting with the identity. Tables over other atom counts are
// uncataloged.
Identification identify(const CycleTable& ct);

struct Violation {
  enum class Kind { kMissingMandatory, kForbiddenPresent };
  Kind kind = Kind::kMissingMandatory;
  CycleType triple{1, 1, 1};
  // Color of the base pair, legs from base.first then to base.second.
  int base_color = 0;
  int leg_first = 0;
  int leg_second = 0;
  Edge base;
  std::optional<int> apex;
};

std::string_view ViolationKindName(Violation::Kind kind);

struct RepReport {
  std::vector<Violation> violations;
  // True when the scan stopped at the violation cap.
  bool truncated = false;

  bool passed() const { return violations.empty(); }
};

inline constexpr std::size_t kDefaultViolationCap = 10;

// Checks the triangle pattern of `cg` against `mandatory` directly, pair by
// pair: every base pair of every rotation of a mandatory triple must have a
// completing apex, and no forbidden triple may occur anywhere. Throws
// Error(kColorCountMismatch) when the color counts differ.
RepReport verify_representation(const ColoredCompleteGraph& cg,
                                const CycleTable& mandatory,
                                std::size_t violation_cap = kDefaultViolationCap);

// Clique structure of the color classes of a three-color representation:
// c-cliques joined pairwise by perfect b-matchings, everything else a.
struct CliqueStructureReport {
  // Components of the c-colored graph in order of least point.
  std::vector<std::vector<int>> components;
  bool components_are_cliques = false;
  // Sorted ascending.
  std::vector<int> clique_sizes;
  std::size_t clique_pairs = 0;
  std::size_t perfect_matchings = 0;
  bool all_matchings_perfect = false;
  bool other_cross_edges_a = false;

  bool holds() const {
    return components_are_cliques && all_matchings_perfect &&
           other_cross_edges_a;
  }
};

// Throws Error(kColorCountMismatch) unless cg has three diversity colors.
CliqueStructureReport check_3065_structure(const ColoredCompleteGraph& cg);

struct MinimalityReport {
  bool components_are_cliques = false;
  std::vector<int> clique_sizes;
  std::size_t clique_count = 0;
  bool all_cliques_at_least_3 = false;
  bool at_least_5_cliques = false;
  bool at_least_15_points = false;

  bool holds() const {
    return components_are_cliques && all_cliques_at_least_3 &&
           at_least_5_cliques && at_least_15_points;
  }
};

// Instance-level checks behind the 15-point lower bound for 31_65: c-classes
// are disjoint cliques of size >= 3, there are >= 5 of them, so n >= 15.
// Throws Error(kColorCountMismatch) unless cg has three diversity colors.
MinimalityReport check_3165_minimality_properties(
    const ColoredCompleteGraph& cg);

}  // namespace drra

#endif  // DRRA_RA_HPP_
