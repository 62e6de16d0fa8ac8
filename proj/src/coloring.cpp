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

#include "drra/coloring.hpp"

#include <limits>
#include <string>

#include "drra/error.hpp"

namespace drra {

ColoredCompleteGraph::ColoredCompleteGraph(int num_points, int num_colors,
                                           std::vector<int> colors)
    : num_points_(num_points), num_colors_(num_colors) {
  if (num_points < 0 || num_colors < 0 ||
      num_colors > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "bad coloring dimensions");
  }
  const std::size_t n = static_cast<std::size_t>(num_points);
  if (colors.size() != n * n) {
    throw Error(ErrorCode::kInvalidArgument,
                "color matrix has " + std::to_string(colors.size()) +
                    " entries, expected " + std::to_string(n * n));
  }
  std::vector<bool> used(num_colors + 1, false);
  colors_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int c = colors[x * n + y];
      if (x == y) {
        if (c != 0) {
          throw Error(ErrorCode::kInvalidArgument,
                      "diagonal entry at " + std::to_string(x) +
                          " is not the identity color");
        }
      } else {
        if (c < 1 || c > num_colors) {
          throw Error(ErrorCode::kInvalidArgument,
                      "color " + std::to_string(c) + " on pair " +
                          std::to_string(x) + " " + std::to_string(y) +
                          " outside 1.." + std::to_string(num_colors));
        }
        if (colors[y * n + x] != c) {
          throw Error(ErrorCode::kInvalidArgument,
                      "asymmetric color on pair " + std::to_string(x) + " " +
                          std::to_string(y));
        }
        used[c] = true;
      }
      colors_[x * n + y] = static_cast<std::uint16_t>(c);
    }
  }
  for (int c = 1; c <= num_colors; ++c) {
    if (!used[c]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "color " + std::to_string(c) + " is empty");
    }
  }
}

ColoredCompleteGraph ColoredCompleteGraph::WithColor(int u, int v,
                                                     int c) const {
  if (u < 0 || v < 0 || u >= num_points_ || v >= num_points_ || u == v) {
    throw Error(ErrorCode::kInvalidArgument, "bad pair for recoloring");
  }
  std::vector<int> colors(colors_.begin(), colors_.end());
  const std::size_t n = static_cast<std::size_t>(num_points_);
  colors[u * n + v] = c;
  colors[v * n + u] = c;
  return ColoredCompleteGraph(num_points_, num_colors_, std::move(colors));
}

ColoredCompleteGraph ColoredCompleteGraph::Relabeled(
    std::span<const int> perm) const {
  const std::size_t n = static_cast<std::size_t>(num_points_);
  if (perm.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation has wrong degree");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    seen[p] = true;
  }
  std::vector<int> colors(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      colors[perm[x] * n + perm[y]] = colors_[x * n + y];
    }
  }
  return ColoredCompleteGraph(num_points_, num_colors_, std::move(colors));
}

Graph ColoredCompleteGraph::ColorGraph(int c) const {
  std::vector<Edge> edges;
  for (int x = 0; x < num_points_; ++x) {
    for (int y = x + 1; y < num_points_; ++y) {
      if (color(x, y) == c) edges.emplace_back(x, y);
    }
  }
  return Graph::FromEdges(num_points_, edges);
}

}  // namespace drra
