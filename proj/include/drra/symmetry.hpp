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

#ifndef DRRA_SYMMETRY_HPP_
#define DRRA_SYMMETRY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <vector>

#include "drra/coloring.hpp"
#include "drra/graph.hpp"

namespace drra {

using Permutation = std::vector<int>;
using GroupOrder = boost::multiprecision::cpp_int;

// Generators of a permutation group on {0..degree-1}, in image notation:
// generator g sends x to g[x].
class PermutationSet {
 public:
  PermutationSet() = default;
  // Throws Error(kInvalidArgument) if a generator is not a bijection of the
  // right degree.
  PermutationSet(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
};

// True iff color(perm[x], perm[y]) == color(x, y) for every pair.
bool PreservesColoring(const ColoredCompleteGraph& cg,
                       std::span<const int> perm);

// One line per generator: "g: 3 0 1 2 ...".
std::string FormatGenerators(const PermutationSet& ps);

struct SymmetryOptions {
  int max_points = 200;
  bool force = false;
};

// Full color-preserving automorphism group, as a strong generating set
// relative to `base`: the generators fixing base[0..l-1] move base[l] around
// an orbit of size basic_orbit_sizes[l].
struct AutomorphismGroup {
  PermutationSet generators;
  std::vector<int> base;
  std::vector<int> basic_orbit_sizes;
  GroupOrder order;
};

// Backtracking over individualized points with equitable refinement on
// (color, cell) counts. The first smallest non-singleton cell is the target
// cell and points are individualized in index order, so the output is fully
// deterministic. Throws Error(kSizeGuard) when the instance exceeds
// options.max_points and options.force is unset.
AutomorphismGroup automorphism_group(const ColoredCompleteGraph& cg,
                                     const SymmetryOptions& options = {});

PermutationSet automorphism_generators(const ColoredCompleteGraph& cg,
                                       const SymmetryOptions& options = {});

// |G| recomputed from a strong generating set: product over levels of the
// orbit of base[l] under the generators fixing base[0..l-1].
GroupOrder OrderFromStrongGenerators(const PermutationSet& ps,
                                     std::span<const int> base);

// Edge / non-edge coloring of a graph (color 1 = edge, 2 = non-edge). A
// complete or edgeless graph yields a single color.
ColoredCompleteGraph adjacency_coloring(const Graph& g);

// Orbits of the group on ordered pairs (x, y). Orbitals are numbered in
// order of their least pair in row-major order, so the diagonal orbitals
// come out interleaved with off-diagonal ones exactly as they occur.
class OrbitalPartition {
 public:
  int degree() const { return degree_; }
  int count() const { return count_; }
  int orbital(int x, int y) const {
    return ids_[static_cast<std::size_t>(x) * degree_ + y];
  }
  // Number of ordered pairs in each orbital.
  const std::vector<int>& sizes() const { return sizes_; }
  // Least pair of each orbital.
  const std::vector<Edge>& representatives() const { return representatives_; }

 private:
  friend OrbitalPartition orbitals(const PermutationSet& ps);

  int degree_ = 0;
  int count_ = 0;
  std::vector<int> ids_;
  std::vector<int> sizes_;
  std::vector<Edge> representatives_;
};

OrbitalPartition orbitals(const PermutationSet& ps);

// True iff every color class, the diagonal included, is exactly one orbital.
bool ColorClassesAreOrbitals(const ColoredCompleteGraph& cg,
                             const OrbitalPartition& orbits);

// Aut(g) computed from the adjacency coloring, compared against the
// distance classes. Throws Error(kDisconnectedGraph) or Error(kSizeGuard).
bool is_distance_transitive(const Graph& g, const SymmetryOptions& options = {});

// Aut(cg) compared against the color classes of cg.
bool is_algebraic(const ColoredCompleteGraph& cg,
                  const SymmetryOptions& options = {});

}  // namespace drra

#endif  // DRRA_SYMMETRY_HPP_
