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

#ifndef DRRA_SCHEME_HPP_
#define DRRA_SCHEME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "drra/coloring.hpp"
#include "drra/graph.hpp"

namespace drra {

// Intersection numbers p[h][i][j] of a coloring with colors 0..d, together
// with the layer sizes k[i] = p[0][i][i]. A tensor is only ever produced from
// a uniform count, but individual entries can be overwritten with
// WithEntry() to build negative test inputs.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  IntersectionTensor(int d, std::vector<std::int64_t> p,
                     std::vector<std::int64_t> k);

  int d() const { return d_; }
  std::int64_t p(int h, int i, int j) const { return p_[index(h, i, j)]; }
  std::int64_t k(int i) const { return k_[i]; }
  const std::vector<std::int64_t>& layer_sizes() const { return k_; }
  // Number of points, sum of k.
  std::int64_t order() const;

  IntersectionTensor WithEntry(int h, int i, int j, std::int64_t value) const;

  friend bool operator==(const IntersectionTensor&,
                         const IntersectionTensor&) = default;

 private:
  std::size_t index(int h, int i, int j) const {
    const std::size_t s = static_cast<std::size_t>(d_) + 1;
    return (static_cast<std::size_t>(h) * s + i) * s + j;
  }

  int d_ = 0;
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> k_;
};

// First triple (h,i,j) whose count differs between two base pairs of color h.
// Base pairs are ordered pairs (x, y); h = 0 uses the diagonal pair (x, x).
struct NonUniformReport {
  int h = 0;
  int i = 0;
  int j = 0;
  Edge first_base;
  std::int64_t first_count = 0;
  Edge second_base;
  std::int64_t second_count = 0;
};

using TensorResult = std::variant<IntersectionTensor, NonUniformReport>;

// {b_0..b_{d-1}; c_1..c_d}. Out-of-range indices follow the usual
// conventions b_d = 0 and c_0 = 0.
class IntersectionArray {
 public:
  // Throws Error(kBadParameter) unless b and c have the same nonzero length,
  // every entry is >= 1, c_1 = 1 and every derived a_i is >= 0.
  static IntersectionArray Create(std::vector<std::int64_t> b,
                                  std::vector<std::int64_t> c);

  // "b0,b1,b2;c1,c2,c3", braces and spaces optional. Throws
  // Error(kParseError) on malformed text, Error(kBadParameter) on
  // invariant violations.
  static IntersectionArray Parse(std::string_view text);

  int diameter() const { return static_cast<int>(b_.size()); }
  std::int64_t b(int i) const { return i < diameter() ? b_[i] : 0; }
  std::int64_t c(int i) const { return i >= 1 ? c_[i - 1] : 0; }
  std::int64_t a(int i) const { return b_[0] - b(i) - c(i); }

  // "{6,5,1;1,1,6}".
  std::string ToString() const;

  friend bool operator==(const IntersectionArray&,
                         const IntersectionArray&) = default;

 private:
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> c_;
};

// Colors pairs by graph distance. Throws Error(kDisconnectedGraph).
ColoredCompleteGraph distance_coloring(const Graph& g);

// One O(n^3) sweep over all ordered base pairs in row-major order. Returns
// the tensor when every count is constant per (h,i,j), otherwise the first
// violation found.
TensorResult count_tensor(const ColoredCompleteGraph& cg);

struct DistanceRegularity {
  bool distance_regular = false;
  std::optional<IntersectionTensor> tensor;
  std::optional<NonUniformReport> witness;
};

// Throws Error(kDisconnectedGraph).
DistanceRegularity is_distance_regular(const Graph& g);

// b_i = p^i_{1,i+1}, c_i = p^i_{1,i-1}; checks a_i = p^i_{1,i} against
// b_0 - b_i - c_i. Throws Error(kInconsistentTensor).
IntersectionArray extract_array(const IntersectionTensor& t);

// k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}. Throws Error(kNonIntegralLayer) when
// a division is inexact.
std::vector<std::int64_t> layer_sizes(const IntersectionArray& arr);

// k_h p^h_{ij} == k_i p^i_{hj} for all h, i, j.
bool check_khp_identity(const IntersectionTensor& t);

// sum_j p^h_{ij} == k_i for all h, i.
bool check_row_sums(const IntersectionTensor& t);

}  // namespace drra

#endif  // DRRA_SCHEME_HPP_
