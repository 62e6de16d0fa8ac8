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

#include "drra/cycles.hpp"

#include <algorithm>
#include <charconv>

#include "drra/error.hpp"

namespace drra {

char AtomLetter(int color) {
  switch (color) {
    case 1:
      return 'b';
    case 2:
      return 'a';
    case 3:
      return 'c';
    default:
      return '?';
  }
}

std::optional<int> AtomFromLetter(char letter) {
  switch (letter) {
    case 'b':
      return 1;
    case 'a':
      return 2;
    case 'c':
      return 3;
    default:
      return std::nullopt;
  }
}

CycleType::CycleType(int x, int y, int z) : colors_{x, y, z} {
  std::sort(colors_.begin(), colors_.end());
}

bool CycleType::Contains(int color) const {
  return std::find(colors_.begin(), colors_.end(), color) != colors_.end();
}

std::string CycleType::Name() const {
  const auto [x, y, z] = colors_;
  if (z > 3 || x < 1) {
    return std::to_string(x) + "." + std::to_string(y) + "." +
           std::to_string(z);
  }
  if (x == z) return std::string(3, AtomLetter(x));
  if (x == y) return {AtomLetter(z), AtomLetter(x), AtomLetter(x)};
  if (y == z) return {AtomLetter(x), AtomLetter(y), AtomLetter(y)};
  std::string name{AtomLetter(x), AtomLetter(y), AtomLetter(z)};
  std::sort(name.begin(), name.end());
  return name;
}

std::optional<CycleType> CycleType::Parse(std::string_view text) {
  if (text.size() == 3 && text.find('.') == std::string_view::npos) {
    std::array<int, 3> colors{};
    for (int k = 0; k < 3; ++k) {
      const auto color = AtomFromLetter(text[k]);
      if (!color) return std::nullopt;
      colors[k] = *color;
    }
    return CycleType(colors[0], colors[1], colors[2]);
  }
  std::array<int, 3> colors{};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t dot = text.find('.', pos);
    if ((k < 2) == (dot == std::string_view::npos)) return std::nullopt;
    const std::string_view token =
        text.substr(pos, k < 2 ? dot - pos : std::string_view::npos);
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), colors[k]);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size() || colors[k] < 1) {
      return std::nullopt;
    }
    pos = dot + 1;
  }
  return CycleType(colors[0], colors[1], colors[2]);
}

std::vector<CycleType> AllCycleTypes(int num_colors) {
  if (num_colors == 3) {
    return {CycleType(2, 2, 2), CycleType(1, 1, 1), CycleType(3, 3, 3),
            CycleType(2, 1, 1), CycleType(1, 2, 2), CycleType(2, 3, 3),
            CycleType(3, 2, 2), CycleType(1, 3, 3), CycleType(3, 1, 1),
            CycleType(1, 2, 3)};
  }
  std::vector<CycleType> all;
  for (int x = 1; x <= num_colors; ++x) {
    for (int y = x; y <= num_colors; ++y) {
      for (int z = y; z <= num_colors; ++z) all.emplace_back(x, y, z);
    }
  }
  return all;
}

CycleTable::CycleTable(int num_colors, std::vector<CycleType> mandatory)
    : num_colors_(num_colors) {
  for (const CycleType& cycle : mandatory) {
    if (cycle.colors()[0] < 1 || cycle.colors()[2] > num_colors) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cycle " + cycle.Name() + " uses a color outside 1.." +
                      std::to_string(num_colors));
    }
  }
  for (const CycleType& cycle : AllCycleTypes(num_colors)) {
    if (std::find(mandatory.begin(), mandatory.end(), cycle) !=
        mandatory.end()) {
      mandatory_.push_back(cycle);
    }
  }
}

bool CycleTable::IsMandatory(const CycleType& cycle) const {
  return std::find(mandatory_.begin(), mandatory_.end(), cycle) !=
         mandatory_.end();
}

std::vector<CycleType> CycleTable::forbidden() const {
  std::vector<CycleType> out;
  for (const CycleType& cycle : AllCycleTypes(num_colors_)) {
    if (!IsMandatory(cycle)) out.push_back(cycle);
  }
  return out;
}

CycleTable CycleTable::Parse(int num_colors, std::string_view list) {
  std::vector<CycleType> cycles;
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view token = list.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const auto cycle = CycleType::Parse(token);
    if (!cycle) {
      throw Error(ErrorCode::kParseError,
                  "bad cycle name '" + std::string(token) + "'");
    }
    cycles.push_back(*cycle);
    pos = comma + 1;
  }
  return CycleTable(num_colors, std::move(cycles));
}

std::vector<int> AtomDisplayOrder(int num_colors) {
  std::vector<int> order;
  for (int c = 1; c <= num_colors; ++c) order.push_back(c);
  std::stable_sort(order.begin(), order.end(), [](int x, int y) {
    const auto key = [](int c) { return c <= 3 ? AtomLetter(c) - 'a' : c; };
    return key(x) < key(y);
  });
  return order;
}

std::string AtomName(int color) {
  return color >= 1 && color <= 3 ? std::string(1, AtomLetter(color))
                                  : std::to_string(color);
}

std::vector<CompositionEntry> composition_table(const CycleTable& ct) {
  const std::vector<int> order = AtomDisplayOrder(ct.num_colors());
  std::vector<CompositionEntry> table;
  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t q = p; q < order.size(); ++q) {
      CompositionEntry entry;
      entry.left = order[p];
      entry.right = order[q];
      entry.identity = entry.left == entry.right;
      for (int z : order) {
        if (ct.IsMandatory(CycleType(entry.left, entry.right, z))) {
          entry.atoms.push_back(z);
        }
      }
      table.push_back(std::move(entry));
    }
  }
  return table;
}

std::vector<std::string> RenderCompositionTable(const CycleTable& ct) {
  std::vector<std::string> lines;
  for (const CompositionEntry& entry : composition_table(ct)) {
    std::string line = AtomName(entry.left) + ";" + AtomName(entry.right) +
                       " = ";
    std::vector<std::string> terms;
    if (entry.identity) terms.emplace_back("1'");
    for (int z : entry.atoms) terms.push_back(AtomName(z));
    if (terms.empty()) terms.emplace_back("0");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k > 0) line += " + ";
      line += terms[k];
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace drra
