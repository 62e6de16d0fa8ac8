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

#include <string>
#include <vector>

#include "drra/cycles.hpp"
#include "drra/diam3.hpp"
#include "drra/error.hpp"
#include "drra/generators.hpp"
#include "drra/ra.hpp"
#include "drra/scheme.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace drra {
namespace {

std::vector<std::pair<std::string, Graph>> DiameterThreeGraphs() {
  std::vector<std::pair<std::string, Graph>> graphs = {
      {"icosahedron", icosahedron()},
      {"heawood", heawood()},
      {"petersen_line", petersen_line()},
      {"hamming33", hamming33()},
      {"sylvester", sylvester()},
      {"hs2nd", generate({Family::kHsSecondSubconstituent, std::nullopt})},
      {"cycle6", testing::Cycle(6)},
      {"cycle7", testing::Cycle(7)},
  };
  for (int n = 3; n <= 20; ++n) {
    graphs.emplace_back("crown" + std::to_string(n), crown(n));
  }
  return graphs;
}

TEST(ClosedFormTest, EveryEntryMatchesBruteForceCount) {
  for (const auto& [name, g] : DiameterThreeGraphs()) {
    SCOPED_TRACE(name);
    const auto oracle = testing::BruteForceTensor(g);
    ASSERT_TRUE(oracle.has_value());
    ASSERT_EQ(oracle->d, 3);
    const IntersectionArray arr = extract_array(*is_distance_regular(g).tensor);
    const Diam3Formulas f = closed_form_tensor(arr);
    int compared = 0;
    for (int h = 1; h <= 3; ++h) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          EXPECT_EQ(f.tensor.p(h, i, j), oracle->at(h, i, j))
              << "p^" << h << "_" << i << j;
          ++compared;
        }
      }
    }
    EXPECT_EQ(compared, 27);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(f.tensor.k(i), oracle->k[i]);
    EXPECT_EQ(f.p23_3_unsimplified, oracle->at(3, 2, 3));
  }
}

TEST(ClosedFormTest, IdentitiesHoldForFeasibleArrays) {
  int feasible = 0;
  for (int b0 = 2; b0 <= 9; ++b0)
    for (int b1 = 1; b1 < b0; ++b1)
      for (int b2 = 1; b2 <= b1; ++b2)
        for (int c2 = 1; c2 <= b0; ++c2)
          for (int c3 = c2; c3 <= b0; ++c3) {
            try {
              const Diam3Formulas f = closed_form_tensor(
                  IntersectionArray::Create({b0, b1, b2}, {1, c2, c3}));
              ++feasible;
              EXPECT_TRUE(check_row_sums(f.tensor));
              EXPECT_TRUE(check_khp_identity(f.tensor));
              EXPECT_EQ(f.p23_3_unsimplified, f.tensor.p(3, 2, 3));
            } catch (const Error&) {
            }
          }
  EXPECT_GT(feasible, 20);
}

TEST(ClosedFormTest, MoscowSoicherTensor) {
  const Diam3Formulas f =
      closed_form_tensor(IntersectionArray::Parse("110,81,12;1,18,90"));
  EXPECT_EQ(f.tensor.layer_sizes(), (std::vector<std::int64_t>{1, 110, 495, 66}));
  EXPECT_EQ(f.tensor.order(), 672);
  EXPECT_TRUE(check_row_sums(f.tensor));
  EXPECT_TRUE(check_khp_identity(f.tensor));
}

TEST(ClosedFormTest, ErrorKinds) {
  const auto code_of = [](const char* text) {
    try {
      closed_form_tensor(IntersectionArray::Parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  // k_2 = 3/2.
  EXPECT_EQ(code_of("3,1,1;1,2,1"), ErrorCode::kNonIntegralEntry);
  // p^1_{22} = b1 a2 / c2 = 1/2.
  EXPECT_EQ(code_of("4,1,1;1,2,1"), ErrorCode::kNonIntegralEntry);
  // p^2_{22} = -1.
  EXPECT_EQ(code_of("3,1,1;1,1,1"), ErrorCode::kNegativeEntry);
  EXPECT_EQ(code_of("4,3;1,4"), ErrorCode::kBadParameter);
}

TEST(RelevantNumberTest, MapsEachCycleToItsBaseAndLegs) {
  const std::vector<std::pair<std::string, std::array<int, 3>>> expected = {
      {"aaa", {2, 2, 2}}, {"bbb", {1, 1, 1}}, {"ccc", {3, 3, 3}},
      {"abb", {1, 1, 2}}, {"baa", {2, 1, 2}}, {"acc", {3, 2, 3}},
      {"caa", {3, 2, 2}}, {"bcc", {3, 1, 3}}, {"cbb", {1, 1, 3}},
      {"abc", {2, 1, 3}},
  };
  for (const auto& [name, hij] : expected) {
    EXPECT_EQ(RelevantIntersectionNumber(*CycleType::Parse(name)), hij)
        << name;
  }
}

TEST(CycleTableTest, PublishedArraysIdentifyPublishedAlgebras) {
  const std::vector<std::pair<const char*, const char*>> rows = {
      {"4,3,1;1,3,4", "26_65"},   {"5,2,1;1,2,5", "27_65"},
      {"3,2,2;1,1,3", "28_65"},   {"4,2,1;1,1,4", "31_65"},
      {"6,4,2;1,2,3", "61_65"},   {"5,4,2;1,1,4", "59_65"},
      {"6,5,1;1,1,6", "30_65"},   {"110,81,12;1,18,90", "57_65"},
  };
  for (const auto& [array, algebra] : rows) {
    const Identification id =
        identify(cycle_table(IntersectionArray::Parse(array)));
    EXPECT_EQ(id.NameOr("none"), algebra) << array;
  }
}

TEST(CycleTableTest, HsSecondSubconstituentCycleSets) {
  const CycleTable ct = cycle_table(IntersectionArray::Parse("6,5,1;1,1,6"));
  std::vector<std::string> mandatory, forbidden;
  for (const CycleType& c : ct.mandatory()) mandatory.push_back(c.Name());
  for (const CycleType& c : ct.forbidden()) forbidden.push_back(c.Name());
  EXPECT_EQ(mandatory, (std::vector<std::string>{"aaa", "ccc", "abb", "baa",
                                                 "caa", "abc"}));
  EXPECT_EQ(forbidden, (std::vector<std::string>{"bbb", "acc", "bcc", "cbb"}));
}

TEST(CycleTableTest, CrownArraysGive2665) {
  for (int n = 3; n <= 20; ++n) {
    const CycleTable ct = cycle_table(
        IntersectionArray::Create({n - 1, n - 2, 1}, {1, n - 2, n - 1}));
    std::vector<std::string> names;
    for (const CycleType& c : ct.mandatory()) names.push_back(c.Name());
    EXPECT_EQ(names, (std::vector<std::string>{"aaa", "abb", "abc"})) << n;
    EXPECT_EQ(identify(ct).NameOr("none"), "26_65");
  }
}

TEST(CycleTableTest, FormulaAndTensorRoutesAgree) {
  for (const auto& [name, g] : DiameterThreeGraphs()) {
    const IntersectionTensor t = *is_distance_regular(g).tensor;
    EXPECT_EQ(cycle_table_from_tensor(t), cycle_table(extract_array(t)))
        << name;
  }
}

}  // namespace
}  // namespace drra
