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

#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <vector>

#include "edgegame/enumerate.hpp"
#include "edgegame/generators.hpp"
#include "oracles.hpp"

using namespace edgegame;

namespace {

std::map<int, int> count_by_edges(const std::vector<Graph>& gs) {
  std::map<int, int> c;
  for (const Graph& g : gs) ++c[g.edge_count()];
  return c;
}

// Pairwise exact isomorphism test within each edge count.
void expect_pairwise_distinct(const std::vector<Graph>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i].edge_count() == gs[j].edge_count())
        ASSERT_FALSE(oracle::isomorphic(gs[i], gs[j])) << i << " vs " << j;
}

}  // namespace

TEST(EnumerateTrees, SmallCases) {
  auto one = enumerate_trees(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].edge_count(), 1);

  auto three = enumerate_trees(3);
  ASSERT_EQ(three.size(), 4u);
  EXPECT_EQ(count_by_edges(three), (std::map<int, int>{{1, 1}, {2, 1}, {3, 2}}));
}

TEST(EnumerateTrees, CountsMatchPrueferOracle) {
  auto trees = count_by_edges(enumerate_trees(6));
  for (int edges = 1; edges <= 6; ++edges)
    EXPECT_EQ(trees[edges], oracle::unlabeled_tree_count(edges + 1)) << edges << " edges";
}

TEST(EnumerateTrees, CountsMatchKnownSequence) {
  const std::vector<int> known = {1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
  auto trees = count_by_edges(enumerate_trees(kMaxTreeEdges));
  for (int edges = 1; edges <= kMaxTreeEdges; ++edges) EXPECT_EQ(trees[edges], known[edges - 1]);
}

TEST(EnumerateTrees, EveryOutputIsATreeAndClassesAreDistinct) {
  auto trees = enumerate_trees(10);
  for (const Graph& t : trees) {
    EXPECT_EQ(t.edge_count(), t.vertex_count() - 1);
    EXPECT_TRUE(t.is_connected());
  }
  expect_pairwise_distinct(trees);
}

TEST(EnumerateTrees, CapIsEnforced) {
  EXPECT_THROW(enumerate_trees(kMaxTreeEdges + 1), GraphError);
}

TEST(EnumerateConnected, CountsAndDistinctness) {
  auto gs = enumerate_connected_graphs(6);
  EXPECT_EQ(count_by_edges(gs),
            (std::map<int, int>{{1, 1}, {2, 1}, {3, 3}, {4, 5}, {5, 12}, {6, 30}}));
  for (const Graph& g : gs) {
    EXPECT_TRUE(g.is_connected());
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_GT(g.degree(v), 0);
  }
  expect_pairwise_distinct(gs);
  EXPECT_THROW(enumerate_connected_graphs(kMaxConnectedGraphEdges + 1), GraphError);
}

TEST(EnumerateConnected, ContainsEveryConnectedSubgraphOfK5) {
  // Brute force: every connected edge subset of K5 with <= 6 edges must be
  // isomorphic to some enumerated representative.
  auto reps = enumerate_connected_graphs(6);
  std::vector<Edge> k5;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) k5.push_back({a, b});
  for (unsigned mask = 1; mask < (1u << k5.size()); ++mask) {
    if (std::popcount(mask) > 6) continue;
    std::vector<int> relabel(5, -1);
    int n = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k5.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      for (Vertex v : {k5[i].u, k5[i].v})
        if (relabel[v] < 0) relabel[v] = n++;
      edges.push_back({relabel[k5[i].u], relabel[k5[i].v]});
    }
    Graph g(n, edges);
    if (!g.is_connected()) continue;
    bool found = false;
    for (const Graph& r : reps) {
      if (oracle::isomorphic(r, g)) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found) << "mask " << mask;
  }
}

TEST(CanonicalForms, InvariantUnderRelabeling) {
  Graph a(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  Graph b(5, {{4, 3}, {3, 2}, {3, 0}, {0, 1}});
  EXPECT_EQ(tree_canonical_form(a), tree_canonical_form(b));
  EXPECT_NE(tree_canonical_form(a), tree_canonical_form(path_graph(5)));
  EXPECT_EQ(graph_canonical_form(wheel_graph(4)),
            graph_canonical_form(Graph(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {0, 2}, {2, 1}, {1, 3}, {3, 0}})));
}
