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

#include "edgegame/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace edgegame {

namespace {

std::string rooted_form(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_form(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::vector<Vertex> tree_centers(const Graph& t) {
  std::vector<int> deg(t.vertex_count());
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = t.vertex_count();
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Builds the preorder-numbered tree described by an AHU string.
Graph tree_from_form(const std::string& form) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  int next = 0;
  for (char c : form) {
    if (c == '(') {
      Vertex v = next++;
      if (!stack.empty()) edges.push_back({stack.back(), v});
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return Graph(next, std::move(edges));
}

std::string tree_name(const Graph& t, int ordinal) {
  return "T" + std::to_string(t.edge_count()) + "_" + std::to_string(ordinal);
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw NotATree();
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    std::string f = rooted_form(tree, c, -1);
    if (best.empty() || f < best) best = std::move(f);
  }
  return best;
}

std::vector<Graph> enumerate_trees(int max_edges) {
  if (max_edges > kMaxTreeEdges)
    throw GraphError("enumerate_trees: max_edges above cap " + std::to_string(kMaxTreeEdges));
  std::vector<Graph> out;
  if (max_edges < 1) return out;

  // Grow every class by one leaf at every vertex, dedup by canonical form.
  std::set<std::string> layer{"(())"};
  for (int edges = 1; edges <= max_edges; ++edges) {
    int ordinal = 0;
    for (const auto& form : layer) {
      Graph t = tree_from_form(form);
      out.push_back(t.renamed(tree_name(t, ordinal++)));
    }
    if (edges == max_edges) break;
    std::set<std::string> next;
    for (const auto& form : layer) {
      Graph t = tree_from_form(form);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> e(t.edges().begin(), t.edges().end());
        e.push_back({v, t.vertex_count()});
        next.insert(tree_canonical_form(Graph(t.vertex_count() + 1, std::move(e))));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Edge> graph_canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  // Vertices are placed in order of (degree desc); only permutations that
  // respect that order are tried, which keeps the search small.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end) slots of equal degree
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<Edge> best;
  std::vector<int> label(n, -1);
  auto evaluate = [&]() {
    std::vector<Edge> cur;
    cur.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      int a = label[e.u], b = label[e.v];
      cur.push_back({std::min(a, b), std::max(a, b)});
    }
    auto less = [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    };
    std::sort(cur.begin(), cur.end(), less);
    if (best.empty() ||
        std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(), less))
      best = std::move(cur);
  };

  std::vector<std::vector<Vertex>> members;
  for (auto [b, e] : classes) members.emplace_back(order.begin() + b, order.begin() + e);
  std::function<void(std::size_t)> rec = [&](std::size_t cls) {
    if (cls == classes.size()) {
      evaluate();
      return;
    }
    auto& m = members[cls];
    std::sort(m.begin(), m.end());
    do {
      for (std::size_t i = 0; i < m.size(); ++i) label[m[i]] = classes[cls].first + static_cast<int>(i);
      rec(cls + 1);
    } while (std::next_permutation(m.begin(), m.end()));
  };
  rec(0);
  return best;
}

std::vector<Graph> enumerate_connected_graphs(int max_edges) {
  if (max_edges > kMaxConnectedGraphEdges)
    throw GraphError("enumerate_connected_graphs: max_edges above cap " +
                     std::to_string(kMaxConnectedGraphEdges));
  std::vector<Graph> out;
  if (max_edges < 1) return out;

  auto key_less = [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  };
  using Layer = std::set<std::vector<Edge>, decltype(key_less)>;
  auto vertices_of = [](const std::vector<Edge>& edges) {
    int n = 0;
    for (const Edge& e : edges) n = std::max({n, e.u + 1, e.v + 1});
    return n;
  };

  // Every connected graph with e+1 edges arises from one with e edges by
  // adding a pendant edge or a chord.
  Layer layer(key_less);
  layer.insert(std::vector<Edge>{{0, 1}});
  for (int edges = 1; edges <= max_edges; ++edges) {
    int ordinal = 0;
    for (const auto& form : layer) {
      out.emplace_back(vertices_of(form), form,
                       "G" + std::to_string(edges) + "_" + std::to_string(ordinal++));
    }
    if (edges == max_edges) break;
    Layer next(key_less);
    for (const auto& form : layer) {
      const int n = vertices_of(form);
      Graph g(n, form);
      for (Vertex u = 0; u < n; ++u) {
        std::vector<Edge> pendant = form;
        pendant.push_back({u, n});
        next.insert(graph_canonical_form(Graph(n + 1, std::move(pendant))));
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.find_edge(u, v)) continue;
          std::vector<Edge> chord = form;
          chord.push_back({u, v});
          next.insert(graph_canonical_form(Graph(n, std::move(chord))));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace edgegame
