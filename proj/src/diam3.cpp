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

#include "drra/diam3.hpp"

#include <string>
#include <vector>

#include "checked.hpp"
#include "drra/error.hpp"

namespace drra {

using internal::Rational;

namespace {

std::string EntryName(int h, int i, int j) {
  return "p^" + std::to_string(h) + "_{" + std::to_string(i) +
         std::to_string(j) + "}";
}

std::int64_t RequireCount(const Rational& value, int h, int i, int j) {
  if (!value.is_integer()) {
    throw Error(ErrorCode::kNonIntegralEntry,
                EntryName(h, i, j) + " = " + value.ToString());
  }
  if (value.numerator() < 0) {
    throw Error(ErrorCode::kNegativeEntry,
                EntryName(h, i, j) + " = " + value.ToString());
  }
  return value.numerator();
}

}  // namespace

Diam3Formulas closed_form_tensor(const IntersectionArray& arr) {
  if (arr.diameter() != 3) {
    throw Error(ErrorCode::kBadParameter,
                "closed forms need diameter 3, got " +
                    std::to_string(arr.diameter()));
  }
  const Rational b0 = arr.b(0), b1 = arr.b(1), b2 = arr.b(2);
  const Rational c2 = arr.c(2), c3 = arr.c(3);
  const Rational a1 = arr.a(1), a2 = arr.a(2), a3 = arr.a(3);

  const Rational k1 = b0;
  const Rational k2 = b0 * b1 / c2;
  const Rational k3 = b0 * b1 * b2 / (c2 * c3);

  // Exact rationals indexed [h][i][j], upper triangle i <= j filled below.
  Rational q[4][4][4];

  // Base b (distance 1).
  q[1][1][1] = a1;
  q[1][1][2] = b1;
  q[1][1][3] = 0;
  q[1][2][2] = b1 * a2 / c2;
  q[1][2][3] = b1 * b2 / c2;
  q[1][3][3] = b1 * b2 * a3 / (c2 * c3);

  // Base a (distance 2).
  q[2][1][1] = c2;
  q[2][1][2] = a2;
  q[2][1][3] = b2;
  q[2][2][2] = (b1 * c2 + a2 * a2 + b2 * c3 - b0 - a1 * a2) / c2;
  q[2][2][3] = b2 * (a2 + a3 - a1) / c2;
  q[2][3][3] = b0 * b1 * b2 / (c2 * c3) - b2 - b2 * (a2 + a3 - a1) / c2;

  // Base c (distance 3).
  q[3][1][1] = 0;
  q[3][1][2] = c3;
  q[3][1][3] = a3;
  q[3][2][2] = c3 * (a2 + a3 - a1) / c2;
  q[3][2][3] = (a3 * (a3 - a1) + b2 * c3 - b0) / c2;
  q[3][3][3] = b0 * b1 * b2 / (c2 * c3) - 1 - a3 -
               (a3 * (a3 - a1) + b2 * c3 - b0) / c2;

  // p^3_{23} = k_2 - c_3 - p^3_{22} before the a_2 substitution.
  const Rational unsimplified = b0 * b1 / c2 - c3 - c3 * (a2 + a3 - a1) / c2;
  if (!(unsimplified == q[3][2][3])) {
    throw Error(ErrorCode::kInconsistentTensor,
                "p^3_{23} simplification mismatch: " + unsimplified.ToString() +
                    " vs " + q[3][2][3].ToString());
  }

  const std::vector<Rational> layers = {1, k1, k2, k3};
  std::vector<std::int64_t> k(4);
  for (int i = 0; i < 4; ++i) {
    if (!layers[i].is_integer()) {
      throw Error(ErrorCode::kNonIntegralEntry,
                  "k_" + std::to_string(i) + " = " + layers[i].ToString());
    }
    k[i] = layers[i].numerator();
  }

  std::vector<std::int64_t> p(64, 0);
  const auto at = [](int h, int i, int j) { return (h * 4 + i) * 4 + j; };
  for (int i = 0; i < 4; ++i) p[at(0, i, i)] = k[i];
  for (int h = 1; h < 4; ++h) {
    p[at(h, 0, h)] = 1;
    p[at(h, h, 0)] = 1;
    for (int i = 1; i < 4; ++i) {
      for (int j = i; j < 4; ++j) {
        const std::int64_t value = RequireCount(q[h][i][j], h, i, j);
        p[at(h, i, j)] = value;
        p[at(h, j, i)] = value;
      }
    }
  }

  return Diam3Formulas{arr, IntersectionTensor(3, std::move(p), std::move(k)),
                       unsimplified.numerator()};
}

std::array<int, 3> RelevantIntersectionNumber(const CycleType& cycle) {
  const auto [x, y, z] = cycle.colors();
  if (z <= 3) {
    // Table column "relevant intersection number", keyed by cycle name.
    const std::string name = cycle.Name();
    if (name == "aaa") return {2, 2, 2};
    if (name == "bbb") return {1, 1, 1};
    if (name == "ccc") return {3, 3, 3};
    if (name == "abb") return {1, 1, 2};
    if (name == "baa") return {2, 1, 2};
    if (name == "acc") return {3, 2, 3};
    if (name == "caa") return {3, 2, 2};
    if (name == "bcc") return {3, 1, 3};
    if (name == "cbb") return {1, 1, 3};
    if (name == "abc") return {2, 1, 3};
  }
  return {x, y, z};
}

CycleTable cycle_table(const IntersectionArray& arr) {
  return cycle_table(closed_form_tensor(arr));
}

CycleTable cycle_table(const Diam3Formulas& formulas) {
  return cycle_table_from_tensor(formulas.tensor);
}

CycleTable cycle_table_from_tensor(const IntersectionTensor& t) {
  std::vector<CycleType> mandatory;
  for (const CycleType& cycle : AllCycleTypes(t.d())) {
    const auto [h, i, j] = RelevantIntersectionNumber(cycle);
    if (t.p(h, i, j) > 0) mandatory.push_back(cycle);
  }
  return CycleTable(t.d(), std::move(mandatory));
}

}  // namespace drra
