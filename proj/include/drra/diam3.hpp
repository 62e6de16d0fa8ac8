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

#ifndef DRRA_DIAM3_HPP_
#define DRRA_DIAM3_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "drra/cycles.hpp"
#include "drra/scheme.hpp"

namespace drra {

// Closed-form intersection numbers of a diameter-3 distance-regular graph,
// evaluated from its intersection array alone.
struct Diam3Formulas {
  IntersectionArray array;
  // Full 4x4x4 tensor. The 27 entries with h, i, j >= 1 come from the
  // closed forms; entries involving color 0 follow from p^0_{ii} = k_i and
  // p^h_{0j} = p^h_{j0} = [h == j].
  IntersectionTensor tensor;
  // p^3_{23} before substituting a_2 = b_0 - b_2 - c_2. Always equal to
  // tensor.p(3, 2, 3); kept for inspection.
  std::int64_t p23_3_unsimplified = 0;
};

// Throws Error(kBadParameter) unless the array has diameter 3;
// Error(kNonIntegralEntry) or Error(kNegativeEntry) naming the first bad
// entry, e.g. "p^2_{22} = 7/2".
Diam3Formulas closed_form_tensor(const IntersectionArray& arr);

// The intersection number p^h_{ij} whose positivity decides a diversity
// cycle, as (h, i, j).
std::array<int, 3> RelevantIntersectionNumber(const CycleType& cycle);

// Mandatory iff the relevant closed-form entry is positive.
CycleTable cycle_table(const IntersectionArray& arr);
CycleTable cycle_table(const Diam3Formulas& formulas);

// Same rule applied to any uniform tensor: {h, i, j} is mandatory iff
// p^h_{ij} > 0. Works for every diameter.
CycleTable cycle_table_from_tensor(const IntersectionTensor& t);

}  // namespace drra

#endif  // DRRA_DIAM3_HPP_
