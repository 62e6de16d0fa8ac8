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

#include "drra/generators.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "drra/error.hpp"

namespace drra {
namespace {

struct NamedFamily {
  std::string_view name;
  Family family;
};

constexpr std::array<NamedFamily, 11> kFamilyNames = {{
    {"crown", Family::kCrown},
    {"icosahedron", Family::kIcosahedron},
    {"heawood", Family::kHeawood},
    {"petersen_line", Family::kPetersenLine},
    {"hamming33", Family::kHamming33},
    {"sylvester", Family::kSylvester},
    {"hoffman_singleton", Family::kHoffmanSingleton},
    {"hs_second_subconstituent", Family::kHsSecondSubconstituent},
    {"hs", Family::kHoffmanSingleton},
    {"hs2nd", Family::kHsSecondSubconstituent},
    {"icosahedral", Family::kIcosahedron},
}};

// 30 edges of the icosahedron as two poles over a pentagonal antiprism.
constexpr std::array<Edge, 30> kIcosahedronEdges = {{
    {0, 1},  {0, 2},  {0, 3},   {0, 4},   {0, 5},                // top pole
    {1, 2},  {2, 3},  {3, 4},   {4, 5},   {1, 5},                // upper ring
    {6, 7},  {7, 8},  {8, 9},   {9, 10},  {6, 10},               // lower ring
    {6, 11}, {7, 11}, {8, 11},  {9, 11},  {10, 11},              // bottom pole
    {1, 6},  {1, 7},  {2, 7},   {2, 8},   {3, 8},                // antiprism
    {3, 9},  {4, 9},  {4, 10},  {5, 10},  {5, 6},
}};

}  // namespace

std::optional<Family> ParseFamily(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto& entry : kFamilyNames) {
    if (entry.name == normalized) return entry.family;
  }
  return std::nullopt;
}

std::string_view FamilyName(Family family) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

Graph generate(const FamilySpec& spec) {
  if (spec.family == Family::kCrown) {
    if (!spec.parameter) {
      throw Error(ErrorCode::kBadParameter, "crown graph needs --n");
    }
    return crown(*spec.parameter);
  }
  if (spec.parameter) {
    throw Error(ErrorCode::kBadParameter,
                std::string(FamilyName(spec.family)) + " takes no parameter");
  }
  switch (spec.family) {
    case Family::kCrown:
      break;
    case Family::kIcosahedron:
      return icosahedron();
    case Family::kHeawood:
      return heawood();
    case Family::kPetersenLine:
      return petersen_line();
    case Family::kHamming33:
      return hamming33();
    case Family::kSylvester:
      return sylvester();
    case Family::kHoffmanSingleton:
      return hoffman_singleton();
    case Family::kHsSecondSubconstituent:
      return second_subconstituent(hoffman_singleton(), 0);
  }
  throw Error(ErrorCode::kBadParameter, "unknown family");
}

Graph crown(int n) {
  if (n < 3) {
    throw Error(ErrorCode::kBadParameter,
                "crown graph needs n >= 3, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, n + j);
    }
  }
  return Graph::FromEdges(2 * n, edges);
}

Graph icosahedron() { return Graph::FromEdges(12, kIcosahedronEdges); }

Graph heawood() {
  std::vector<Edge> edges;
  const auto add = [&edges](int u, int v) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (int i = 0; i < 14; ++i) add(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) add(i, (i + 5) % 14);
  return Graph::FromEdges(14, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      const auto [a, b] = subsets[u];
      const auto [c, d] = subsets[v];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(10, edges);
}

Graph petersen_line() {
  const std::vector<Edge> base = petersen().edges();
  const int m = static_cast<int>(base.size());
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      const auto [a, b] = base[e];
      const auto [c, d] = base[f];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(e, f);
    }
  }
  return Graph::FromEdges(m, edges);
}

Graph hamming33() {
  std::vector<Edge> edges;
  for (int u = 0; u < 27; ++u) {
    for (int v = u + 1; v < 27; ++v) {
      int differing = 0;
      for (int x = u, y = v, digit = 0; digit < 3; ++digit, x /= 3, y /= 3) {
        if (x % 3 != y % 3) ++differing;
      }
      if (differing == 1) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(27, edges);
}

Graph hoffman_singleton() {
  const auto pentagon = [](int h, int j) { return 5 * h + (j % 5 + 5) % 5; };
  const auto pentagram = [](int i, int j) {
    return 25 + 5 * i + (j % 5 + 5) % 5;
  };
  std::vector<Edge> edges;
  const auto add = [&edges](int u, int v) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      add(pentagon(h, j), pentagon(h, j + 1));
      add(pentagram(h, j), pentagram(h, j + 2));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 5; ++i) add(pentagon(h, j), pentagram(i, h * i + j));
    }
  }
  return Graph::FromEdges(50, edges);
}

Graph second_subconstituent(const Graph& g, int v) {
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is disconnected");
  }
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::kBadVertexList, "vertex out of range");
  }
  std::vector<int> layer;
  for (int x = 0; x < g.order(); ++x) {
    if (dm.at(v, x) == 2) layer.push_back(x);
  }
  return induced_subgraph(g, layer);
}

Graph sylvester() {
  const Graph hs = hoffman_singleton();
  const Edge least = hs.edges().front();
  const DistanceMatrix dm = all_pairs_distances(hs);
  std::vector<int> keep;
  for (int x = 0; x < hs.order(); ++x) {
    if (*dm.at(least.first, x) >= 2 && *dm.at(least.second, x) >= 2) {
      keep.push_back(x);
    }
  }
  return induced_subgraph(hs, keep);
}

}  // namespace drra
