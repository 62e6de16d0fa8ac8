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

#include "drra/scheme.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "checked.hpp"
#include "drra/error.hpp"

namespace drra {

using internal::CheckedMul;

IntersectionTensor::IntersectionTensor(int d, std::vector<std::int64_t> p,
                                       std::vector<std::int64_t> k)
    : d_(d), p_(std::move(p)), k_(std::move(k)) {
  const std::size_t s = static_cast<std::size_t>(d) + 1;
  if (d < 0 || p_.size() != s * s * s || k_.size() != s) {
    throw Error(ErrorCode::kInvalidArgument, "tensor dimensions mismatch");
  }
}

std::int64_t IntersectionTensor::order() const {
  return std::accumulate(k_.begin(), k_.end(), std::int64_t{0});
}

IntersectionTensor IntersectionTensor::WithEntry(int h, int i, int j,
                                                 std::int64_t value) const {
  IntersectionTensor copy = *this;
  copy.p_[index(h, i, j)] = value;
  return copy;
}

IntersectionArray IntersectionArray::Create(std::vector<std::int64_t> b,
                                            std::vector<std::int64_t> c) {
  if (b.empty() || b.size() != c.size()) {
    throw Error(ErrorCode::kBadParameter,
                "intersection array needs d b-entries and d c-entries");
  }
  for (std::int64_t v : b) {
    if (v < 1) throw Error(ErrorCode::kBadParameter, "b_i must be >= 1");
  }
  for (std::int64_t v : c) {
    if (v < 1) throw Error(ErrorCode::kBadParameter, "c_i must be >= 1");
  }
  if (c.front() != 1) {
    throw Error(ErrorCode::kBadParameter, "c_1 must equal 1");
  }
  IntersectionArray arr;
  arr.b_ = std::move(b);
  arr.c_ = std::move(c);
  for (int i = 0; i <= arr.diameter(); ++i) {
    if (arr.a(i) < 0) {
      throw Error(ErrorCode::kBadParameter,
                  "a_" + std::to_string(i) + " = " + std::to_string(arr.a(i)) +
                      " is negative");
    }
  }
  return arr;
}

namespace {

std::vector<std::int64_t> ParseList(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? text.npos
                                                         : comma - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParseError,
                  "bad intersection array entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

IntersectionArray IntersectionArray::Parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '{' && ch != '}') compact += ch;
  }
  const std::size_t semi = compact.find(';');
  if (semi == std::string::npos ||
      compact.find(';', semi + 1) != std::string::npos) {
    throw Error(ErrorCode::kParseError,
                "expected 'b0,b1,...;c1,c2,...', got '" + std::string(text) +
                    "'");
  }
  const std::string_view view(compact);
  return Create(ParseList(view.substr(0, semi)),
                ParseList(view.substr(semi + 1)));
}

std::string IntersectionArray::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(b_[i]);
  }
  out += ";";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c_[i]);
  }
  return out + "}";
}

ColoredCompleteGraph distance_coloring(const Graph& g) {
  const DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.connected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is disconnected");
  }
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      colors[static_cast<std::size_t>(x) * n + y] = *dm.at(x, y);
    }
  }
  return ColoredCompleteGraph(n, dm.max_finite(), std::move(colors));
}

TensorResult count_tensor(const ColoredCompleteGraph& cg) {
  const int n = cg.order();
  const int m = cg.color_count();
  const std::size_t s = static_cast<std::size_t>(m) + 1;
  // Per base color: counts seen at the first base pair of that color.
  std::vector<std::vector<std::int64_t>> baseline(s);
  std::vector<Edge> baseline_pair(s);
  std::vector<std::int64_t> counts(s * s);
  for (int x = 0; x < n; ++x) {
    const auto row_x = cg.row(x);
    for (int y = 0; y < n; ++y) {
      const auto row_y = cg.row(y);
      std::fill(counts.begin(), counts.end(), 0);
      for (int z = 0; z < n; ++z) ++counts[row_x[z] * s + row_y[z]];
      const int h = row_x[y];
      if (baseline[h].empty()) {
        baseline[h] = counts;
        baseline_pair[h] = {x, y};
        continue;
      }
      if (baseline[h] == counts) continue;
      for (std::size_t ij = 0; ij < s * s; ++ij) {
        if (baseline[h][ij] != counts[ij]) {
          NonUniformReport report;
          report.h = h;
          report.i = static_cast<int>(ij / s);
          report.j = static_cast<int>(ij % s);
          report.first_base = baseline_pair[h];
          report.first_count = baseline[h][ij];
          report.second_base = {x, y};
          report.second_count = counts[ij];
          return report;
        }
      }
    }
  }
  std::vector<std::int64_t> p(s * s * s, 0);
  for (std::size_t h = 0; h < s; ++h) {
    if (baseline[h].empty()) continue;  // only when n == 0
    std::copy(baseline[h].begin(), baseline[h].end(), p.begin() + h * s * s);
  }
  std::vector<std::int64_t> k(s, 0);
  if (n > 0) {
    for (std::size_t i = 0; i < s; ++i) k[i] = baseline[0][i * s + i];
  }
  return IntersectionTensor(m, std::move(p), std::move(k));
}

DistanceRegularity is_distance_regular(const Graph& g) {
  const TensorResult result = count_tensor(distance_coloring(g));
  DistanceRegularity out;
  if (const auto* tensor = std::get_if<IntersectionTensor>(&result)) {
    out.distance_regular = true;
    out.tensor = *tensor;
  } else {
    out.witness = std::get<NonUniformReport>(result);
  }
  return out;
}

IntersectionArray extract_array(const IntersectionTensor& t) {
  const int d = t.d();
  if (d < 1) {
    throw Error(ErrorCode::kInconsistentTensor,
                "tensor has no diversity colors");
  }
  std::vector<std::int64_t> b(d);
  std::vector<std::int64_t> c(d);
  for (int i = 0; i < d; ++i) b[i] = t.p(i, 1, i + 1);
  for (int i = 1; i <= d; ++i) c[i - 1] = t.p(i, 1, i - 1);
  for (int i = 0; i <= d; ++i) {
    const std::int64_t bi = i < d ? b[i] : 0;
    const std::int64_t ci = i > 0 ? c[i - 1] : 0;
    if (t.p(i, 1, i) != b[0] - bi - ci) {
      throw Error(ErrorCode::kInconsistentTensor,
                  "a_" + std::to_string(i) + " = " +
                      std::to_string(t.p(i, 1, i)) + " but b_0 - b_i - c_i = " +
                      std::to_string(b[0] - bi - ci));
    }
  }
  try {
    return IntersectionArray::Create(std::move(b), std::move(c));
  } catch (const Error& e) {
    throw Error(ErrorCode::kInconsistentTensor, e.what());
  }
}

std::vector<std::int64_t> layer_sizes(const IntersectionArray& arr) {
  const int d = arr.diameter();
  std::vector<std::int64_t> k(d + 1);
  k[0] = 1;
  for (int i = 0; i < d; ++i) {
    const std::int64_t numerator = CheckedMul(k[i], arr.b(i));
    if (numerator % arr.c(i + 1) != 0) {
      throw Error(ErrorCode::kNonIntegralLayer,
                  "k_" + std::to_string(i + 1) + " = " +
                      std::to_string(numerator) + "/" +
                      std::to_string(arr.c(i + 1)) + " is not an integer");
    }
    k[i + 1] = numerator / arr.c(i + 1);
  }
  return k;
}

bool check_khp_identity(const IntersectionTensor& t) {
  const int d = t.d();
  for (int h = 0; h <= d; ++h) {
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        if (CheckedMul(t.k(h), t.p(h, i, j)) !=
            CheckedMul(t.k(i), t.p(i, h, j))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_row_sums(const IntersectionTensor& t) {
  const int d = t.d();
  for (int h = 0; h <= d; ++h) {
    for (int i = 0; i <= d; ++i) {
      std::int64_t sum = 0;
      for (int j = 0; j <= d; ++j) sum += t.p(h, i, j);
      if (sum != t.k(i)) return false;
    }
  }
  return true;
}

}  // namespace drra
