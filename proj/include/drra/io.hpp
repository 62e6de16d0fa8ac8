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

#ifndef DRRA_IO_HPP_
#define DRRA_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "drra/coloring.hpp"
#include "drra/graph.hpp"

namespace drra {

// Edge-list text format:
//
//   # optional comment lines
//   n 10
//   0 5
//   0 6
//   ...
//
// One `u v` pair per line, 0-based, u < v. Throws Error(kParseError) with the
// offending line number.
Graph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const Graph& g);

// Coloring text format: header `n <count> colors <m>` followed by exactly one
// `u v c` line for every unordered pair u < v.
ColoredCompleteGraph ParseColoring(std::string_view text);
std::string FormatColoring(const ColoredCompleteGraph& cg);

// Throws Error(kIoError) if the file cannot be read or written.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace drra

#endif  // DRRA_IO_HPP_
