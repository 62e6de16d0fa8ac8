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

#include "drra/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "drra/error.hpp"

namespace drra {
namespace {

// Splits `text` into lines, dropping blank lines and everything after a `#`.
// Each entry keeps its 1-based line number for diagnostics.
struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = line.substr(0, line.find('#'));
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (parsed.tokens.empty()) continue;
    lines.push_back(std::move(parsed));
  }
  return lines;
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

int ParseInt(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) Fail(1, "missing header 'n <count>'");
  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "n") {
    Fail(header.number, "expected header 'n <count>'");
  }
  const int n = ParseInt(header.tokens[1], header.number);
  if (n < 0) Fail(header.number, "negative vertex count");
  std::vector<Edge> edges;
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2) Fail(line.number, "expected 'u v'");
    const int u = ParseInt(line.tokens[0], line.number);
    const int v = ParseInt(line.tokens[1], line.number);
    if (u < 0 || v >= n) Fail(line.number, "vertex out of range");
    if (u >= v) Fail(line.number, "edge must satisfy u < v");
    const std::size_t idx = static_cast<std::size_t>(u) * n + v;
    if (seen[idx]) Fail(line.number, "duplicate edge");
    seen[idx] = true;
    edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

ColoredCompleteGraph ParseColoring(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) Fail(1, "missing header 'n <count> colors <m>'");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "n" ||
      header.tokens[2] != "colors") {
    Fail(header.number, "expected header 'n <count> colors <m>'");
  }
  const int n = ParseInt(header.tokens[1], header.number);
  const int m = ParseInt(header.tokens[3], header.number);
  if (n < 0 || m < 0) Fail(header.number, "negative size");
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<int> colors(nn * nn, 0);
  std::vector<bool> seen(nn * nn, false);
  std::size_t pairs = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 3) Fail(line.number, "expected 'u v c'");
    const int u = ParseInt(line.tokens[0], line.number);
    const int v = ParseInt(line.tokens[1], line.number);
    const int c = ParseInt(line.tokens[2], line.number);
    if (u < 0 || v >= n) Fail(line.number, "point out of range");
    if (u >= v) Fail(line.number, "pair must satisfy u < v");
    if (c < 1 || c > m) Fail(line.number, "color out of range 1..m");
    const std::size_t idx = u * nn + v;
    if (seen[idx]) Fail(line.number, "duplicate pair");
    seen[idx] = true;
    colors[idx] = c;
    colors[v * nn + u] = c;
    ++pairs;
  }
  const std::size_t expected = n > 0 ? nn * (nn - 1) / 2 : 0;
  if (pairs != expected) {
    Fail(lines.back().number, "expected " + std::to_string(expected) +
                                  " pairs, got " + std::to_string(pairs));
  }
  try {
    return ColoredCompleteGraph(n, m, std::move(colors));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string FormatColoring(const ColoredCompleteGraph& cg) {
  std::ostringstream out;
  out << "n " << cg.order() << " colors " << cg.color_count() << '\n';
  for (int x = 0; x < cg.order(); ++x) {
    for (int y = x + 1; y < cg.order(); ++y) {
      out << x << ' ' << y << ' ' << cg.color(x, y) << '\n';
    }
  }
  return out.str();
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "write failed for " + path.string());
  }
}

}  // namespace drra
