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

#include "edgegame/harness/render.hpp"

#include <charconv>
#include <filesystem>
#include <sstream>
#include <vector>

#include "edgegame/generators.hpp"
#include "edgegame/graph_io.hpp"

namespace edgegame::harness {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int to_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw GraphError("bad integer '" + std::string(s) + "' in graph spec");
  return v;
}

}  // namespace

Graph load_graph(std::string_view spec) {
  const std::filesystem::path path{std::string(spec)};
  if (std::filesystem::is_regular_file(path)) return read_graph_file(path);
  const auto parts = split(spec, ':');
  const auto family = parse_family(parts.front());
  if (!family || parts.size() < 2)
    throw GraphError("'" + std::string(spec) +
                     "' is neither a graph file nor a family spec like wheel:5");
  std::vector<int> params;
  for (std::size_t i = 1; i < parts.size(); ++i)
    for (std::string_view p : split(parts[i], ',')) params.push_back(to_int(p));
  return generate(*family, params);
}

EdgeNames::EdgeNames(const Graph& g) : graph_(&g) {
  try {
    wheel_ = wheel_layout(g);
  } catch (const NotAWheel&) {
  }
}

std::string EdgeNames::operator()(EdgeIndex e) const {
  if (wheel_) {
    for (std::size_t i = 0; i < wheel_->spokes.size(); ++i)
      if (wheel_->spokes[i] == e) return "s" + std::to_string(i + 1);
    for (std::size_t i = 0; i < wheel_->rim.size(); ++i)
      if (wheel_->rim[i] == e) return "r" + std::to_string(i + 1);
  }
  return "e" + std::to_string(e);
}

std::string describe_graph(const Graph& g) {
  std::ostringstream os;
  os << g.name() << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
  if (g.edge_count() > 0) {
    const Bounds b = trivial_bounds(g);
    os << ", max degree " << b.lower << ", trivial upper bound " << b.upper;
  }
  os << '\n';
  const EdgeNames names(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    os << "  edge " << e << " = " << names(e) << " (" << ed.u + 1 << "-" << ed.v + 1 << ")\n";
  }
  return os.str();
}

std::string render_state(const GameState& s) {
  const Graph& g = s.graph();
  const EdgeNames names(g);
  std::ostringstream os;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    os << "  " << e << "  " << names(e) << " (" << ed.u + 1 << "-" << ed.v + 1 << ")  ";
    if (s.is_colored(e)) {
      os << "color " << s.color_of(e);
    } else {
      os << "free {";
      bool first = true;
      for (Color c : colors_in(s.feasible_mask(e))) {
        os << (first ? "" : ",") << c;
        first = false;
      }
      os << "}";
    }
    os << '\n';
  }
  os << "status " << to_string(s.status());
  if (!s.is_terminal()) {
    os << ", " << to_string(s.side_to_move()) << " to move";
    if (s.side_to_move() == Side::maker) os << " (" << s.maker_submoves_left() << " sub-moves left)";
  }
  os << '\n';
  return os.str();
}

Json solve_json(const Graph& g, const Ruleset& rules, const SolveResult& r) {
  Json j;
  j["graph"] = g.name();
  j["m"] = rules.m;
  j["k"] = rules.k;
  j["winner"] = r.maker_wins ? "maker" : "breaker";
  j["nodes"] = r.nodes_expanded;
  j["table_hits"] = r.table_hits;
  j["table_size"] = r.table_size;
  if (r.principal_move) {
    j["principal_move"] = {{"edge", r.principal_move->edge}, {"color", r.principal_move->color}};
  } else {
    j["principal_move"] = nullptr;
  }
  j["timing"] = {{"wall_seconds", r.wall_seconds}};
  return j;
}

}  // namespace edgegame::harness
