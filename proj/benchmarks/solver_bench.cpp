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

#include <benchmark/benchmark.h>

#include "edgegame/enumerate.hpp"
#include "edgegame/generators.hpp"
#include "edgegame/solver.hpp"
#include "edgegame/strategy.hpp"

using namespace edgegame;

namespace {

void BM_SolveWheel(benchmark::State& state) {
  const Graph g = wheel_graph(static_cast<int>(state.range(0)));
  const Ruleset rules(static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto r = maker_wins(g, rules);
    nodes = r.nodes_expanded;
    benchmark::DoNotOptimize(r.maker_wins);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveWheel)->Args({4, 3, 4})->Args({4, 3, 5})->Args({5, 2, 5})->Args({5, 1, 5})->Unit(benchmark::kMillisecond);

void BM_IndexTrees(benchmark::State& state) {
  const auto trees = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int sum = 0;
    for (const Graph& t : trees) sum += game_chromatic_index(t, 2);
    benchmark::DoNotOptimize(sum);
  }
  state.counters["trees"] = static_cast<double>(trees.size());
}
BENCHMARK(BM_IndexTrees)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CanonicalKey(benchmark::State& state) {
  auto g = std::make_shared<const Graph>(wheel_graph(6));
  GameState s = replay(g, Ruleset(2, 6), std::vector<Move>{{0, 3}, {7, 1}, {2, 0}, {9, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(s));
}
BENCHMARK(BM_CanonicalKey);

void BM_LegalMoves(benchmark::State& state) {
  auto g = std::make_shared<const Graph>(wheel_graph(6));
  GameState s(g, Ruleset(2, 6));
  for (auto _ : state) benchmark::DoNotOptimize(s.legal_moves());
}
BENCHMARK(BM_LegalMoves);

void BM_RefereeWheel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = std::make_shared<const Graph>(wheel_graph(n));
  const Ruleset rules(2, n);
  WheelMakerStrategy strat(g, rules);
  for (auto _ : state) benchmark::DoNotOptimize(referee_exhaustive(g, rules, strat).maker_always_wins);
}
BENCHMARK(BM_RefereeWheel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_RefereeTrees(benchmark::State& state) {
  const auto trees = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int wins = 0;
    for (const Graph& t : trees) {
      auto g = std::make_shared<const Graph>(t);
      const Ruleset rules(1, t.max_degree() + 2);
      TreeMakerStrategy strat(g, rules);
      wins += referee_exhaustive(g, rules, strat).maker_always_wins;
    }
    benchmark::DoNotOptimize(wins);
  }
}
BENCHMARK(BM_RefereeTrees)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
