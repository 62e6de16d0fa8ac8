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

#ifndef DRRA_COLORING_HPP_
#define DRRA_COLORING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "drra/graph.hpp"

namespace drra {

// Symmetric edge coloring of the complete graph K_n. The diagonal carries
// the identity color 0; off-diagonal entries use diversity colors 1..m and
// every one of them occurs at least once.
class ColoredCompleteGraph {
 public:
  ColoredCompleteGraph() = default;

  // `colors` is the row-major n x n matrix. Throws Error(kInvalidArgument)
  // if any invariant fails.
  ColoredCompleteGraph(int num_points, int num_colors, std::vector<int> colors);

  int order() const { return num_points_; }
  int color_count() const { return num_colors_; }
  int color(int x, int y) const {
    return colors_[static_cast<std::size_t>(x) * num_points_ + y];
  }
  std::span<const std::uint16_t> row(int x) const {
    return {colors_.data() + static_cast<std::size_t>(x) * num_points_,
            static_cast<std::size_t>(num_points_)};
  }

  // Copy with the unordered pair {u, v} set to color c.
  ColoredCompleteGraph WithColor(int u, int v, int c) const;

  // Copy in which point x is renamed perm[x].
  ColoredCompleteGraph Relabeled(std::span<const int> perm) const;

  // Spanning subgraph formed by the pairs of color c.
  Graph ColorGraph(int c) const;

  friend bool operator==(const ColoredCompleteGraph& a,
                         const ColoredCompleteGraph& b) {
    return a.num_points_ == b.num_points_ && a.num_colors_ == b.num_colors_ &&
           a.colors_ == b.colors_;
  }

 private:
  int num_points_ = 0;
  int num_colors_ = 0;
  std::vector<std::uint16_t> colors_;
};

}  // namespace drra

#endif  // DRRA_COLORING_HPP_
