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

#ifndef DRRA_GRAPH_HPP_
#define DRRA_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace drra {

using Edge = std::pair<int, int>;

// Undirected simple graph on the dense vertex set 0..n-1. Neighbor lists are
// kept sorted so every traversal is deterministic in vertex order. A dense
// adjacency bitmap backs O(1) adjacency queries; the library never goes
// beyond a few thousand vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Throws Error(kInvalidArgument) on self-loops, duplicate edges or
  // out-of-range endpoints.
  static Graph FromEdges(int num_vertices, std::span<const Edge> edges);

  int order() const { return num_vertices_; }
  std::size_t edge_count() const { return num_edges_; }

  std::span<const int> neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  bool adjacent(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * num_vertices_ + v] != 0;
  }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.matrix_ == b.matrix_;
  }

 private:
  int num_vertices_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::uint8_t> matrix_;
};

// Exact shortest-path distances. Unreachable pairs are reported as
// std::nullopt rather than as a numeric sentinel.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  int order() const { return num_vertices_; }
  std::optional<int> at(int x, int y) const {
    const int d = dist_[index(x, y)];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  bool reachable(int x, int y) const {
    return dist_[index(x, y)] != kUnreachable;
  }
  bool connected() const { return !has_unreachable_; }
  // Largest finite distance.
  int max_finite() const { return max_finite_; }

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);
  static constexpr int kUnreachable = -1;

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * num_vertices_ + y;
  }

  int num_vertices_ = 0;
  bool has_unreachable_ = false;
  int max_finite_ = 0;
  std::vector<int> dist_;
};

// One BFS per vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

// Throws Error(kDisconnectedGraph) when some pair is unreachable.
int diameter(const Graph& g);

// Vertex i of the result is vertices[i] of g. Throws Error(kBadVertexList)
// on duplicates or out-of-range ids.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace drra

#endif  // DRRA_GRAPH_HPP_
