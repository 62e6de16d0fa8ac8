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

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "drra/error.hpp"
#include "drra/generators.hpp"
#include "drra/scheme.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace drra {
namespace {

using ::drra::testing::BruteForceTensor;

struct NamedGraph {
  std::string name;
  Graph graph;
  std::string array;
};

std::vector<NamedGraph> TableGraphs() {
  return {
      {"crown5", crown(5), "{4,3,1;1,3,4}"},
      {"icosahedron", icosahedron(), "{5,2,1;1,2,5}"},
      {"heawood", heawood(), "{3,2,2;1,1,3}"},
      {"petersen_line", petersen_line(), "{4,2,1;1,1,4}"},
      {"hamming33", hamming33(), "{6,4,2;1,2,3}"},
      {"sylvester", sylvester(), "{5,4,2;1,1,4}"},
      {"hs2nd", generate({Family::kHsSecondSubconstituent, std::nullopt}),
       "{6,5,1;1,1,6}"},
  };
}

void ExpectMatchesOracle(const IntersectionTensor& t,
                         const testing::OracleTensor& oracle) {
  ASSERT_EQ(t.d(), oracle.d);
  for (int h = 0; h <= t.d(); ++h)
    for (int i = 0; i <= t.d(); ++i)
      for (int j = 0; j <= t.d(); ++j)
        EXPECT_EQ(t.p(h, i, j), oracle.at(h, i, j)) << h << i << j;
  EXPECT_EQ(t.layer_sizes(), oracle.k);
}

TEST(SchemeTest, TensorOfTableGraphsMatchesDirectCount) {
  for (const NamedGraph& ng : TableGraphs()) {
    SCOPED_TRACE(ng.name);
    const DistanceRegularity drg = is_distance_regular(ng.graph);
    ASSERT_TRUE(drg.distance_regular);
    const auto oracle = BruteForceTensor(ng.graph);
    ASSERT_TRUE(oracle.has_value());
    ExpectMatchesOracle(*drg.tensor, *oracle);
  }
}

TEST(SchemeTest, ExtractsPublishedArrays) {
  for (const NamedGraph& ng : TableGraphs()) {
    const DistanceRegularity drg = is_distance_regular(ng.graph);
    ASSERT_TRUE(drg.distance_regular) << ng.name;
    EXPECT_EQ(extract_array(*drg.tensor).ToString(), ng.array) << ng.name;
  }
}

TEST(SchemeTest, CrownArraysForAllN) {
  for (int n = 3; n <= 20; ++n) {
    const DistanceRegularity drg = is_distance_regular(crown(n));
    ASSERT_TRUE(drg.distance_regular);
    const IntersectionArray expected =
        IntersectionArray::Create({n - 1, n - 2, 1}, {1, n - 2, n - 1});
    EXPECT_EQ(extract_array(*drg.tensor), expected) << n;
  }
}

TEST(SchemeTest, PathOnFourVerticesIsNotDistanceRegular) {
  const Graph p4 = testing::Path(4);
  EXPECT_FALSE(BruteForceTensor(p4).has_value());
  const DistanceRegularity drg = is_distance_regular(p4);
  EXPECT_FALSE(drg.distance_regular);
  ASSERT_TRUE(drg.witness.has_value());
  const NonUniformReport& w = *drg.witness;
  EXPECT_NE(w.first_count, w.second_count);

  // The witness must be genuine: recount both base pairs directly.
  const auto dist = testing::FloydWarshall(p4);
  const auto count = [&](Edge base) {
    int c = 0;
    for (int z = 0; z < 4; ++z)
      c += dist[base.first][z] == w.i && dist[z][base.second] == w.j;
    return c;
  };
  EXPECT_EQ(dist[w.first_base.first][w.first_base.second], w.h);
  EXPECT_EQ(dist[w.second_base.first][w.second_base.second], w.h);
  EXPECT_EQ(count(w.first_base), w.first_count);
  EXPECT_EQ(count(w.second_base), w.second_count);
}

TEST(SchemeTest, PathOnFourVerticesEdgeLevelDifference) {
  // Outer edge {0,1} and inner edge {1,2} disagree on p^1_{12}.
  const auto dist = testing::FloydWarshall(testing::Path(4));
  const auto p112 = [&](int x, int y) {
    int c = 0;
    for (int z = 0; z < 4; ++z) c += dist[x][z] == 1 && dist[z][y] == 2;
    return c;
  };
  EXPECT_EQ(p112(0, 1), 0);
  EXPECT_EQ(p112(1, 2), 1);
}

TEST(SchemeTest, NonRegularGraphsAgreeWithOracle) {
  std::mt19937 rng(99);
  int irregular = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomGraph(4 + trial % 6, 0.5, rng);
    if (!all_pairs_distances(g).connected()) continue;
    const auto oracle = BruteForceTensor(g);
    const DistanceRegularity drg = is_distance_regular(g);
    EXPECT_EQ(drg.distance_regular, oracle.has_value());
    if (oracle) {
      ExpectMatchesOracle(*drg.tensor, *oracle);
    } else {
      ++irregular;
      EXPECT_TRUE(drg.witness.has_value());
    }
  }
  EXPECT_GT(irregular, 0);
}

TEST(SchemeTest, TensorIsInvariantUnderRelabeling) {
  std::mt19937 rng(314);
  for (const NamedGraph& ng : TableGraphs()) {
    const IntersectionTensor base = *is_distance_regular(ng.graph).tensor;
    for (int trial = 0; trial < 3; ++trial) {
      const Graph moved = testing::Relabel(
          ng.graph, testing::RandomPermutation(ng.graph.order(), rng));
      const DistanceRegularity drg = is_distance_regular(moved);
      ASSERT_TRUE(drg.distance_regular);
      EXPECT_EQ(*drg.tensor, base) << ng.name;
    }
  }
}

TEST(SchemeTest, LemmaIdentitiesHoldOnEveryUniformTensor) {
  std::vector<Graph> graphs;
  for (const NamedGraph& ng : TableGraphs()) graphs.push_back(ng.graph);
  for (int n = 3; n <= 20; ++n) graphs.push_back(crown(n));
  graphs.push_back(testing::Cycle(6));
  graphs.push_back(testing::Cycle(7));
  graphs.push_back(testing::Complete(5));
  graphs.push_back(petersen());
  graphs.push_back(hoffman_singleton());
  for (const Graph& g : graphs) {
    const IntersectionTensor t = *is_distance_regular(g).tensor;
    EXPECT_TRUE(check_khp_identity(t));
    EXPECT_TRUE(check_row_sums(t));
    // Independent restatement of both identities.
    for (int h = 0; h <= t.d(); ++h) {
      for (int i = 0; i <= t.d(); ++i) {
        std::int64_t row = 0;
        for (int j = 0; j <= t.d(); ++j) {
          EXPECT_EQ(t.k(h) * t.p(h, i, j), t.k(i) * t.p(i, h, j));
          row += t.p(h, i, j);
        }
        EXPECT_EQ(row, t.k(i));
      }
    }
    const IntersectionArray arr = extract_array(t);
    EXPECT_EQ(layer_sizes(arr), t.layer_sizes());
    EXPECT_EQ(t.order(), g.order());
  }
}

TEST(SchemeTest, IdentityChecksRejectCorruptedTensor) {
  const IntersectionTensor t = *is_distance_regular(heawood()).tensor;
  const IntersectionTensor bad = t.WithEntry(2, 1, 1, t.p(2, 1, 1) + 1);
  EXPECT_FALSE(check_row_sums(bad));
  EXPECT_FALSE(check_khp_identity(bad));
}

TEST(SchemeTest, LayerSizeFormulas) {
  const IntersectionArray arr =
      IntersectionArray::Parse("110,81,12;1,18,90");
  const auto k = layer_sizes(arr);
  ASSERT_EQ(k.size(), 4u);
  EXPECT_EQ(k[0], 1);
  EXPECT_EQ(k[1], 110);
  EXPECT_EQ(k[2], 110 * 81 / 18);
  EXPECT_EQ(k[3], 110 * 81 * 12 / (18 * 90));
  EXPECT_EQ(k[0] + k[1] + k[2] + k[3], 672);
  try {
    layer_sizes(IntersectionArray::Parse("3,1,1;1,2,1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegralLayer);
  }
}

TEST(IntersectionArrayTest, ParsesAndFormats) {
  const IntersectionArray a = IntersectionArray::Parse(" {6, 5,1 ; 1,1,6} ");
  EXPECT_EQ(a.diameter(), 3);
  EXPECT_EQ(a.b(0), 6);
  EXPECT_EQ(a.b(3), 0);
  EXPECT_EQ(a.c(0), 0);
  EXPECT_EQ(a.c(3), 6);
  EXPECT_EQ(a.a(1), 0);
  EXPECT_EQ(a.a(2), 4);
  EXPECT_EQ(a.a(3), 0);
  EXPECT_EQ(a.ToString(), "{6,5,1;1,1,6}");
  EXPECT_EQ(IntersectionArray::Parse(a.ToString()), a);
}

TEST(IntersectionArrayTest, RejectsBadInput) {
  for (const char* text : {"", "6,5,1", "6,5,1;1,1", "6,x,1;1,1,6",
                           "6,5,1;1,1,6;2", "6,5,1;;1,1,6"}) {
    try {
      IntersectionArray::Parse(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kParseError ||
                  e.code() == ErrorCode::kBadParameter)
          << text;
    }
  }
  for (const char* text : {"6,5,1;2,1,6", "6,5,0;1,1,6", "2,1,1;1,2,1"}) {
    try {
      IntersectionArray::Parse(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadParameter) << text;
    }
  }
}

TEST(CountTensorTest, AcceptsDistanceColoringAndReportsNonUniform) {
  const TensorResult ok = count_tensor(distance_coloring(heawood()));
  EXPECT_TRUE(std::holds_alternative<IntersectionTensor>(ok));
  const TensorResult bad = count_tensor(distance_coloring(testing::Path(5)));
  EXPECT_TRUE(std::holds_alternative<NonUniformReport>(bad));
}

TEST(CountTensorTest, DisconnectedGraphHasNoDistanceColoring) {
  const std::vector<Edge> edges = {{0, 1}, {2, 3}};
  try {
    distance_coloring(Graph::FromEdges(4, edges));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedGraph);
  }
}

}  // namespace
}  // namespace drra
