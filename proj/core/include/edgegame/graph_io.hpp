// Copyright 2026 The edgegame Authors
//
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "edgegame/graph.hpp"

namespace edgegame {

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   c <anything>        comment, ignored
//   p edge <n> <m>      header, exactly once, before any edge
//   e <u> <v>           m lines, 1-indexed endpoints
// Blank lines are ignored. Edges keep file order as their indices.

/// Throws ParseError (with the 1-based line) on syntax errors, loops,
/// duplicate edges, out-of-range vertices, or header/body count mismatch.
Graph parse_graph(std::string_view text);

/// Canonical form: header, then one `e u v` line per edge in index order
/// with u < v; LF line endings; no comments.
std::string write_graph(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const Graph& g, const std::filesystem::path& path);

}  // namespace edgegame
