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

#include "drra/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "drra/error.hpp"
#include "drra/scheme.hpp"

namespace drra {
namespace {

// Ordered partition of the point set.
using Cells = std::vector<std::vector<int>>;
using Trace = std::vector<std::uint64_t>;

std::uint64_t HashCounts(std::span<const int> counts) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int c : counts) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

class Refiner {
 public:
  explicit Refiner(const ColoredCompleteGraph& cg)
      : cg_(cg), n_(cg.order()), colors_(cg.color_count() + 1) {}

  // Splits cells by the multiset of (color, cell) counts until stable. The
  // trace records every split, so two partitions that an isomorphism maps
  // onto each other produce identical traces.
  void Refine(Cells& cells, Trace& trace) const {
    std::vector<int> cell_of(n_);
    std::vector<int> counts;
    while (true) {
      for (std::size_t t = 0; t < cells.size(); ++t) {
        for (int v : cells[t]) cell_of[v] = static_cast<int>(t);
      }
      const std::size_t width = cells.size() * colors_;
      counts.assign(static_cast<std::size_t>(n_) * width, 0);
      for (int v = 0; v < n_; ++v) {
        const auto row = cg_.row(v);
        int* sig = counts.data() + static_cast<std::size_t>(v) * width;
        for (int w = 0; w < n_; ++w) ++sig[cell_of[w] * colors_ + row[w]];
      }
      const auto signature = [&](int v) {
        return std::span<const int>(
            counts.data() + static_cast<std::size_t>(v) * width, width);
      };
      Cells next;
      next.reserve(cells.size());
      bool split = false;
      for (std::size_t t = 0; t < cells.size(); ++t) {
        std::vector<int> members = cells[t];
        std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
          const auto sa = signature(a);
          const auto sb = signature(b);
          return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                              sb.end());
        });
        std::size_t start = 0;
        std::size_t groups = 0;
        const std::size_t trace_mark = trace.size();
        trace.push_back(0);
        for (std::size_t k = 1; k <= members.size(); ++k) {
          if (k < members.size() &&
              std::equal(signature(members[k]).begin(),
                         signature(members[k]).end(),
                         signature(members[start]).begin())) {
            continue;
          }
          next.emplace_back(members.begin() + start, members.begin() + k);
          trace.push_back(k - start);
          trace.push_back(HashCounts(signature(members[start])));
          ++groups;
          start = k;
        }
        trace[trace_mark] = groups;
        if (groups > 1) split = true;
      }
      cells = std::move(next);
      if (!split) return;
    }
  }

 private:
  const ColoredCompleteGraph& cg_;
  int n_;
  int colors_;
};

std::size_t TargetCell(const Cells& cells) {
  std::size_t best = cells.size();
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (cells[t].size() > 1 &&
        (best == cells.size() || cells[t].size() < cells[best].size())) {
      best = t;
    }
  }
  return best;
}

Cells Individualize(const Cells& cells, std::size_t t, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (s != t) {
      out.push_back(cells[s]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int w : cells[s]) {
      if (w != v) rest.push_back(w);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

class Searcher {
 public:
  explicit Searcher(const ColoredCompleteGraph& cg)
      : cg_(cg), refiner_(cg), n_(cg.order()) {}

  Cells RefinedIndividualization(const Cells& cells, std::size_t t, int v,
                                 Trace& trace) const {
    Cells out = Individualize(cells, t, v);
    refiner_.Refine(out, trace);
    return out;
  }

  // Looks for an automorphism mapping the left partition onto the right one
  // cell by cell. Both inputs are refined with equal traces.
  bool Extend(const Cells& left, const Cells& right, Permutation& out) const {
    if (left.size() == static_cast<std::size_t>(n_)) {
      Permutation perm(n_);
      for (std::size_t t = 0; t < left.size(); ++t) {
        perm[left[t][0]] = right[t][0];
      }
      if (!PreservesColoring(cg_, perm)) return false;
      out = std::move(perm);
      return true;
    }
    const std::size_t t = TargetCell(left);
    Trace left_trace;
    const Cells next_left =
        RefinedIndividualization(left, t, left[t][0], left_trace);
    for (int w : right[t]) {
      Trace right_trace;
      const Cells next_right = RefinedIndividualization(right, t, w, right_trace);
      if (right_trace != left_trace) continue;
      if (Extend(next_left, next_right, out)) return true;
    }
    return false;
  }

  const Refiner& refiner() const { return refiner_; }

 private:
  const ColoredCompleteGraph& cg_;
  Refiner refiner_;
  int n_;
};

// Orbit of `point` under the given generators, as a membership mask.
std::vector<bool> OrbitMask(int degree, const std::vector<Permutation>& gens,
                            int point) {
  std::vector<bool> in_orbit(degree, false);
  std::vector<int> queue = {point};
  in_orbit[point] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Permutation& g : gens) {
      const int image = g[queue[head]];
      if (!in_orbit[image]) {
        in_orbit[image] = true;
        queue.push_back(image);
      }
    }
  }
  return in_orbit;
}

void CheckSize(int n, const SymmetryOptions& options) {
  if (n > options.max_points && !options.force) {
    throw Error(ErrorCode::kSizeGuard,
                std::to_string(n) + " points exceed the symmetry size guard of " +
                    std::to_string(options.max_points) +
                    "; rerun with --force to override");
  }
}

}  // namespace

PermutationSet::PermutationSet(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Permutation& g : generators_) {
    if (g.size() != static_cast<std::size_t>(degree)) {
      throw Error(ErrorCode::kInvalidArgument, "generator has wrong degree");
    }
    std::vector<bool> seen(degree, false);
    for (int image : g) {
      if (image < 0 || image >= degree || seen[image]) {
        throw Error(ErrorCode::kInvalidArgument, "generator is not a bijection");
      }
      seen[image] = true;
    }
  }
}

bool PreservesColoring(const ColoredCompleteGraph& cg,
                       std::span<const int> perm) {
  const int n = cg.order();
  if (perm.size() != static_cast<std::size_t>(n)) return false;
  for (int x = 0; x < n; ++x) {
    const auto row = cg.row(x);
    const auto image_row = cg.row(perm[x]);
    for (int y = x + 1; y < n; ++y) {
      if (image_row[perm[y]] != row[y]) return false;
    }
  }
  return true;
}

std::string FormatGenerators(const PermutationSet& ps) {
  std::ostringstream out;
  for (const Permutation& g : ps.generators()) {
    out << "g:";
    for (int image : g) out << ' ' << image;
    out << '\n';
  }
  return out.str();
}

AutomorphismGroup automorphism_group(const ColoredCompleteGraph& cg,
                                     const SymmetryOptions& options) {
  const int n = cg.order();
  CheckSize(n, options);
  const Searcher searcher(cg);

  // Leftmost path of the search tree: partitions[l] is the partition after
  // individualizing base[0..l-1]; traces[l] is the trace that produced
  // partitions[l + 1].
  std::vector<Cells> partitions;
  std::vector<Trace> traces;
  std::vector<std::size_t> targets;
  std::vector<int> base;
  {
    Cells root;
    if (n > 0) {
      root.emplace_back(n);
      std::iota(root[0].begin(), root[0].end(), 0);
    }
    Trace unused;
    searcher.refiner().Refine(root, unused);
    partitions.push_back(std::move(root));
  }
  while (partitions.back().size() < static_cast<std::size_t>(n)) {
    const Cells& current = partitions.back();
    const std::size_t t = TargetCell(current);
    const int beta = current[t][0];
    Trace trace;
    Cells next = searcher.RefinedIndividualization(current, t, beta, trace);
    targets.push_back(t);
    base.push_back(beta);
    traces.push_back(std::move(trace));
    partitions.push_back(std::move(next));
  }

  std::vector<Permutation> generators;
  std::vector<int> orbit_sizes(base.size(), 1);
  for (std::size_t level = base.size(); level-- > 0;) {
    const Cells& cells = partitions[level];
    const std::size_t t = targets[level];
    std::vector<bool> orbit = OrbitMask(n, generators, base[level]);
    for (int gamma : cells[t]) {
      if (orbit[gamma]) continue;
      Trace trace;
      const Cells right =
          searcher.RefinedIndividualization(cells, t, gamma, trace);
      if (trace != traces[level]) continue;
      Permutation perm;
      if (searcher.Extend(partitions[level + 1], right, perm)) {
        generators.push_back(std::move(perm));
        orbit = OrbitMask(n, generators, base[level]);
      }
    }
    orbit_sizes[level] =
        static_cast<int>(std::count(orbit.begin(), orbit.end(), true));
  }

  AutomorphismGroup group;
  group.generators = PermutationSet(n, std::move(generators));
  group.base = std::move(base);
  group.basic_orbit_sizes = std::move(orbit_sizes);
  group.order = 1;
  for (int size : group.basic_orbit_sizes) group.order *= size;
  return group;
}

PermutationSet automorphism_generators(const ColoredCompleteGraph& cg,
                                       const SymmetryOptions& options) {
  return automorphism_group(cg, options).generators;
}

GroupOrder OrderFromStrongGenerators(const PermutationSet& ps,
                                     std::span<const int> base) {
  GroupOrder order = 1;
  for (std::size_t level = 0; level < base.size(); ++level) {
    std::vector<Permutation> stabilizer;
    for (const Permutation& g : ps.generators()) {
      bool fixes = true;
      for (std::size_t k = 0; k < level; ++k) fixes = fixes && g[base[k]] == base[k];
      if (fixes) stabilizer.push_back(g);
    }
    const std::vector<bool> orbit =
        OrbitMask(ps.degree(), stabilizer, base[level]);
    order *= static_cast<int>(std::count(orbit.begin(), orbit.end(), true));
  }
  return order;
}

ColoredCompleteGraph adjacency_coloring(const Graph& g) {
  const int n = g.order();
  const std::size_t pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const bool single = g.edge_count() == 0 || g.edge_count() == pairs;
  std::vector<int> colors(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      colors[static_cast<std::size_t>(x) * n + y] =
          single ? 1 : (g.adjacent(x, y) ? 1 : 2);
    }
  }
  return ColoredCompleteGraph(n, pairs == 0 ? 0 : (single ? 1 : 2),
                              std::move(colors));
}

OrbitalPartition orbitals(const PermutationSet& ps) {
  const int n = ps.degree();
  const std::size_t total = static_cast<std::size_t>(n) * n;
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&parent](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (const Permutation& g : ps.generators()) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const std::size_t a = find(static_cast<std::size_t>(x) * n + y);
        const std::size_t b = find(static_cast<std::size_t>(g[x]) * n + g[y]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  OrbitalPartition out;
  out.degree_ = n;
  out.ids_.assign(total, -1);
  std::vector<int> id_of_root(total, -1);
  for (std::size_t pair = 0; pair < total; ++pair) {
    const std::size_t root = find(pair);
    if (id_of_root[root] == -1) {
      id_of_root[root] = out.count_++;
      out.sizes_.push_back(0);
      out.representatives_.emplace_back(static_cast<int>(pair / n),
                                        static_cast<int>(pair % n));
    }
    out.ids_[pair] = id_of_root[root];
    ++out.sizes_[id_of_root[root]];
  }
  return out;
}

bool ColorClassesAreOrbitals(const ColoredCompleteGraph& cg,
                             const OrbitalPartition& orbits) {
  const int n = cg.order();
  if (orbits.degree() != n) return false;
  std::vector<int> color_of_orbital(orbits.count(), -1);
  std::vector<int> orbital_of_color(cg.color_count() + 1, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int o = orbits.orbital(x, y);
      const int c = cg.color(x, y);
      if (color_of_orbital[o] == -1) color_of_orbital[o] = c;
      if (orbital_of_color[c] == -1) orbital_of_color[c] = o;
      if (color_of_orbital[o] != c || orbital_of_color[c] != o) return false;
    }
  }
  return true;
}

bool is_distance_transitive(const Graph& g, const SymmetryOptions& options) {
  CheckSize(g.order(), options);
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is disconnected");
  }
  const AutomorphismGroup group =
      automorphism_group(adjacency_coloring(g), options);
  const OrbitalPartition orbits = orbitals(group.generators);
  const int n = g.order();
  std::vector<int> distance_of_orbital(orbits.count(), -1);
  std::vector<int> orbital_of_distance(dm.max_finite() + 1, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int o = orbits.orbital(x, y);
      const int d = *dm.at(x, y);
      if (distance_of_orbital[o] == -1) distance_of_orbital[o] = d;
      if (orbital_of_distance[d] == -1) orbital_of_distance[d] = o;
      if (distance_of_orbital[o] != d || orbital_of_distance[d] != o) {
        return false;
      }
    }
  }
  return true;
}

bool is_algebraic(const ColoredCompleteGraph& cg,
                  const SymmetryOptions& options) {
  const AutomorphismGroup group = automorphism_group(cg, options);
  return ColorClassesAreOrbitals(cg, orbitals(group.generators));
}

}  // namespace drra
