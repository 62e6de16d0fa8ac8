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

#ifndef DRRA_GENERATORS_HPP_
#define DRRA_GENERATORS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "drra/graph.hpp"

namespace drra {

enum class Family {
  kCrown,
  kIcosahedron,
  kHeawood,
  kPetersenLine,
  kHamming33,
  kSylvester,
  kHoffmanSingleton,
  kHsSecondSubconstituent,
};

// A named graph. `parameter` is present exactly for crown graphs (n >= 3).
struct FamilySpec {
  Family family;
  std::optional<int> parameter;
};

// Accepts the canonical names ("crown", "icosahedron", "heawood",
// "petersen_line", "hamming33", "sylvester", "hoffman_singleton",
// "hs_second_subconstituent") and the short aliases "hs" and "hs2nd".
// Dashes are accepted in place of underscores.
std::optional<Family> ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

// Throws Error(kBadParameter) for an invalid spec.
Graph generate(const FamilySpec& spec);

// Left side 0..n-1, right side n..2n-1, (i, n+j) adjacent iff i != j.
Graph crown(int n);

// 0 = top pole, 1..5 upper pentagon, 6..10 lower pentagon, 11 = bottom pole.
Graph icosahedron();

// Hamiltonian cycle 0..13 plus chords i ~ i+5 (mod 14) for even i.
Graph heawood();

// Kneser graph K(5,2): vertices are the 2-subsets of {0..4} in
// lexicographic order, adjacent iff disjoint.
Graph petersen();

// Line graph of petersen(): vertex e is the e-th edge of petersen() in
// lexicographic order, adjacent iff the edges share an endpoint.
Graph petersen_line();

// H(3,3): vertex 9*x0 + 3*x1 + x2, adjacent iff exactly one coordinate
// differs.
Graph hamming33();

// Robertson's pentagon/pentagram construction. Vertex 5h+j is j on pentagon
// P_h (j ~ j+-1), vertex 25+5i+j is j on pentagram Q_i (j ~ j+-2), and
// (P,h,j) ~ (Q,i,h*i+j mod 5).
Graph hoffman_singleton();

// Induced subgraph on the vertices at distance exactly 2 from v, in
// increasing id order. Throws Error(kDisconnectedGraph) if g is disconnected.
Graph second_subconstituent(const Graph& g, int v);

// hoffman_singleton() restricted to the vertices at distance >= 2 from both
// endpoints of its lexicographically least edge.
Graph sylvester();

}  // namespace drra

#endif  // DRRA_GENERATORS_HPP_
