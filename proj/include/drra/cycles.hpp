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

#ifndef DRRA_CYCLES_HPP_
#define DRRA_CYCLES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drra {

// Atom letters for the three-color case follow the distance convention
// b = distance 1, a = distance 2, c = distance 3.
char AtomLetter(int color);
std::optional<int> AtomFromLetter(char letter);

// Unordered triple of diversity colors, stored sorted ascending.
class CycleType {
 public:
  CycleType(int x, int y, int z);

  const std::array<int, 3>& colors() const { return colors_; }
  bool Contains(int color) const;

  // Letter name when every color is 1..3 ("aaa", "abb", "baa", "abc": the
  // single letter first, then the doubled one). Otherwise "x.y.z".
  std::string Name() const;

  // Accepts letter names in any order ("bba" == "abb") and "x.y.z".
  static std::optional<CycleType> Parse(std::string_view text);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::array<int, 3> colors_;
};

// All unordered diversity triples over `num_colors` atoms. For three atoms
// this is the conventional order aaa, bbb, ccc, abb, baa, acc, caa, bcc,
// cbb, abc; otherwise lexicographic.
std::vector<CycleType> AllCycleTypes(int num_colors);

// Partition of the diversity cycle types into mandatory and forbidden.
class CycleTable {
 public:
  CycleTable() = default;
  // Throws Error(kInvalidArgument) if a cycle uses a color outside
  // 1..num_colors.
  CycleTable(int num_colors, std::vector<CycleType> mandatory);

  int num_colors() const { return num_colors_; }
  bool IsMandatory(const CycleType& cycle) const;
  // Both lists are in AllCycleTypes() order.
  const std::vector<CycleType>& mandatory() const { return mandatory_; }
  std::vector<CycleType> forbidden() const;

  // Parses a comma separated list of cycle names.
  static CycleTable Parse(int num_colors, std::string_view list);

  friend bool operator==(const CycleTable&, const CycleTable&) = default;

 private:
  int num_colors_ = 0;
  std::vector<CycleType> mandatory_;
};

// Display order of diversity atoms: letters alphabetically (a, b, c), then
// numbered colors from 4 upwards.
std::vector<int> AtomDisplayOrder(int num_colors);
// Letter for colors 1..3, decimal number otherwise.
std::string AtomName(int color);

struct CompositionEntry {
  int left = 0;
  int right = 0;
  bool identity = false;
  std::vector<int> atoms;  // in AtomDisplayOrder()
};

// x;y for every unordered pair of diversity atoms: identity when x == y,
// plus every z with {x, y, z} mandatory.
std::vector<CompositionEntry> composition_table(const CycleTable& ct);

// One line per product, e.g. "b;b = 1' + a". An empty product renders as 0.
std::vector<std::string> RenderCompositionTable(const CycleTable& ct);

}  // namespace drra

#endif  // DRRA_CYCLES_HPP_
