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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "drra/error.hpp"
#include "drra/generators.hpp"
#include "drra/scheme.hpp"
#include "drra/symmetry.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace drra {
namespace {

struct Case {
  std::string name;
  Graph graph;
};

std::vector<Case> SmallCases() {
  return {
      {"crown5", crown(5)},
      {"icosahedron", icosahedron()},
      {"heawood", heawood()},
      {"petersen", petersen()},
      {"petersen_line", petersen_line()},
      {"cycle5", testing::Cycle(5)},
      {"cycle6", testing::Cycle(6)},
      {"k4", testing::Complete(4)},
      {"path5", testing::Path(5)},
  };
}

TEST(AutomorphismTest, KnownGroupOrders) {
  EXPECT_EQ(automorphism_group(adjacency_coloring(crown(5))).order, 240);
  EXPECT_EQ(automorphism_group(adjacency_coloring(testing::Cycle(5))).order,
            10);
  EXPECT_EQ(automorphism_group(adjacency_coloring(testing::Complete(4))).order,
            24);
  EXPECT_EQ(automorphism_group(adjacency_coloring(petersen())).order, 120);
  EXPECT_EQ(automorphism_group(adjacency_coloring(heawood())).order, 336);
  EXPECT_EQ(automorphism_group(adjacency_coloring(icosahedron())).order, 120);
}

TEST(AutomorphismTest, OrdersMatchBruteForceEnumeration) {
  std::vector<Case> cases = SmallCases();
  cases.push_back({"hamming33", hamming33()});
  cases.push_back({"sylvester", sylvester()});
  cases.push_back(
      {"hs2nd", generate({Family::kHsSecondSubconstituent, std::nullopt})});
  for (const Case& c : cases) {
    const AutomorphismGroup group =
        automorphism_group(adjacency_coloring(c.graph));
    EXPECT_EQ(group.order, GroupOrder(testing::AllAutomorphisms(c.graph).size()))
        << c.name;
    EXPECT_EQ(OrderFromStrongGenerators(group.generators, group.base),
              group.order)
        << c.name;
  }
}

TEST(AutomorphismTest, LargeOrdersUseExactArithmetic) {
  // |Aut K_n| = n!, |Aut crown(n)| = 2 n!.
  GroupOrder factorial = 1;
  for (int n = 1; n <= 22; ++n) factorial *= n;
  EXPECT_EQ(automorphism_group(adjacency_coloring(testing::Complete(22))).order,
            factorial);
  EXPECT_EQ(automorphism_group(adjacency_coloring(crown(22))).order,
            2 * factorial);
}

TEST(AutomorphismTest, GeneratorsPreserveColoring) {
  for (const Case& c : SmallCases()) {
    const ColoredCompleteGraph cg = distance_coloring(c.graph);
    const PermutationSet gens = automorphism_generators(cg);
    for (const Permutation& g : gens.generators()) {
      EXPECT_TRUE(PreservesColoring(cg, g)) << c.name;
    }
  }
  const std::vector<int> swap01 = {1, 0, 2, 3, 4};
  EXPECT_FALSE(PreservesColoring(distance_coloring(testing::Path(5)), swap01));
}

TEST(AutomorphismTest, GroupOrderInvariantUnderRelabeling) {
  std::mt19937 rng(5);
  for (const Case& c : SmallCases()) {
    const GroupOrder base = automorphism_group(adjacency_coloring(c.graph)).order;
    for (int trial = 0; trial < 3; ++trial) {
      const Graph moved = testing::Relabel(
          c.graph, testing::RandomPermutation(c.graph.order(), rng));
      EXPECT_EQ(automorphism_group(adjacency_coloring(moved)).order, base)
          << c.name;
    }
  }
}

TEST(AutomorphismTest, PermutationSetValidatesGenerators) {
  EXPECT_THROW(PermutationSet(3, {{0, 0, 1}}), Error);
  EXPECT_THROW(PermutationSet(3, {{0, 1}}), Error);
  const PermutationSet ok(3, {{1, 2, 0}});
  EXPECT_EQ(FormatGenerators(ok), "g: 1 2 0\n");
}

TEST(OrbitalTest, CountsMatchOracle) {
  for (const Case& c : SmallCases()) {
    const OrbitalPartition orbits =
        orbitals(automorphism_generators(adjacency_coloring(c.graph)));
    EXPECT_EQ(orbits.count(), testing::OrbitalCountOracle(c.graph)) << c.name;
    EXPECT_EQ(orbits.orbital(0, 0), 0);
    int total = 0;
    for (int s : orbits.sizes()) total += s;
    EXPECT_EQ(total, c.graph.order() * c.graph.order());
    for (std::size_t id = 0; id < orbits.representatives().size(); ++id) {
      const auto& [x, y] = orbits.representatives()[id];
      EXPECT_EQ(orbits.orbital(x, y), static_cast<int>(id));
    }
  }
}

TEST(DistanceTransitivityTest, IffAlgebraicOnTableGraphsAndControls) {
  std::vector<Case> cases = {
      {"crown5", crown(5)},
      {"icosahedron", icosahedron()},
      {"heawood", heawood()},
      {"petersen_line", petersen_line()},
      {"hamming33", hamming33()},
      {"sylvester", sylvester()},
      {"hs2nd", generate({Family::kHsSecondSubconstituent, std::nullopt})},
      {"cycle6", testing::Cycle(6)},
      {"cycle7", testing::Cycle(7)},
      {"k4", testing::Complete(4)},
      {"petersen", petersen()},
  };
  for (const Case& c : cases) {
    const bool dt = is_distance_transitive(c.graph);
    const bool algebraic = is_algebraic(distance_coloring(c.graph));
    EXPECT_EQ(dt, algebraic) << c.name;
    EXPECT_EQ(dt, testing::DistanceTransitiveOracle(c.graph)) << c.name;
  }
}

TEST(DistanceTransitivityTest, NonTransitiveDistanceRegularGraph) {
  // Shrikhande graph: Cayley graph of Z4 x Z4 with connection set
  // {+-(0,1), +-(1,0), +-(1,1)}. A vertex stabiliser has order 12 and cannot
  // act transitively on the 9 vertices at distance 2.
  std::vector<Edge> edges;
  const auto id = [](int a, int b) { return 4 * (a % 4) + b % 4; };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& [da, db] :
           std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}}) {
        const int u = id(a, b), v = id(a + da, b + db);
        edges.emplace_back(std::min(u, v), std::max(u, v));
      }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const Graph shrikhande = Graph::FromEdges(16, edges);
  ASSERT_TRUE(is_distance_regular(shrikhande).distance_regular);
  const bool dt = is_distance_transitive(shrikhande);
  EXPECT_EQ(dt, testing::DistanceTransitiveOracle(shrikhande));
  EXPECT_EQ(dt, is_algebraic(distance_coloring(shrikhande)));
  EXPECT_FALSE(dt);
}

TEST(DistanceTransitivityTest, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (const Case& c : SmallCases()) {
    if (!all_pairs_distances(c.graph).connected()) continue;
    const bool dt = is_distance_transitive(c.graph);
    const Graph moved = testing::Relabel(
        c.graph, testing::RandomPermutation(c.graph.order(), rng));
    EXPECT_EQ(is_distance_transitive(moved), dt) << c.name;
  }
}

TEST(SizeGuardTest, RefusesLargeInputsUnlessForced) {
  const Graph big = testing::Cycle(201);
  try {
    is_distance_transitive(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuard);
  }
  SymmetryOptions forced;
  forced.force = true;
  EXPECT_TRUE(is_distance_transitive(big, forced));
  EXPECT_EQ(automorphism_group(adjacency_coloring(big), forced).order, 402);
  EXPECT_TRUE(is_distance_transitive(testing::Cycle(200)));
}

TEST(SizeGuardTest, DisconnectedGraphRejected) {
  const std::vector<Edge> edges = {{0, 1}, {2, 3}};
  try {
    is_distance_transitive(Graph::FromEdges(4, edges));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedGraph);
  }
}

}  // namespace
}  // namespace drra
