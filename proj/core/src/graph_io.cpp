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

#include "edgegame/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace edgegame {

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge")
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
      if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
        throw ParseError(lineno, "duplicate edge");
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (tag != "c" && (ls >> extra)) throw ParseError(lineno, "trailing tokens");
  }
  if (!have_header) throw ParseError(lineno, "missing 'p edge' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(std::min(e.u, e.v) + 1) + " " +
           std::to_string(std::max(e.u, e.v) + 1) + "\n";
  }
  return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str()).renamed(path.stem().string());
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path.string());
  out << write_graph(g);
  if (!out) throw GraphError("write failed: " + path.string());
}

}  // namespace edgegame
