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

#include "drra/graph.hpp"

#include <algorithm>
#include <string>

#include "drra/error.hpp"

namespace drra {

Graph::Graph(int num_vertices)
    : num_vertices_(num_vertices),
      neighbors_(num_vertices),
      matrix_(static_cast<std::size_t>(num_vertices) * num_vertices, 0) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
}

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges) {
  Graph g(num_vertices);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint out of range: " + std::to_string(u) + " " +
                      std::to_string(v));
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    const std::size_t uv = static_cast<std::size_t>(u) * num_vertices + v;
    if (g.matrix_[uv] != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(u) + " " +
                      std::to_string(v));
    }
    g.matrix_[uv] = 1;
    g.matrix_[static_cast<std::size_t>(v) * num_vertices + u] = 1;
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.num_edges_;
  }
  for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices_; ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.num_vertices_ = n;
  dm.dist_.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
  std::vector<int> queue(n);
  for (int source = 0; source < n; ++source) {
    int* row = dm.dist_.data() + static_cast<std::size_t>(source) * n;
    row[source] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      const int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (row[w] == DistanceMatrix::kUnreachable) {
          row[w] = row[u] + 1;
          dm.max_finite_ = std::max(dm.max_finite_, row[w]);
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) dm.has_unreachable_ = true;
  }
  return dm;
}

int diameter(const Graph& g) {
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is disconnected");
  }
  return dm.max_finite();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int n = g.order();
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kBadVertexList,
                  "vertex out of range: " + std::to_string(v));
    }
    if (position[v] != -1) {
      throw Error(ErrorCode::kBadVertexList,
                  "duplicate vertex: " + std::to_string(v));
    }
    position[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      const int j = position[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph::FromEdges(static_cast<int>(vertices.size()), edges);
}

}  // namespace drra
