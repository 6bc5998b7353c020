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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "edgegame/enumerate.hpp"
#include "edgegame/generators.hpp"
#include "edgegame/graph_io.hpp"
#include "edgegame/harness/render.hpp"
#include "edgegame/harness/suites.hpp"
#include "edgegame/solver.hpp"
#include "edgegame/strategy.hpp"
#include "edgegame/transcript.hpp"

namespace edgegame::cli {

using harness::Json;
using harness::kExitCap;
using harness::kExitFail;
using harness::kExitPass;
using harness::kExitUsage;

namespace {

SolverOptions to_options(const SolverFlags& f) {
  SolverOptions o;
  o.max_edges = f.max_edges;
  o.max_colors = f.max_colors;
  o.cap_override = f.cap_override;
  o.node_budget = f.node_budget;
  return o;
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(2) << '\n';
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string feasible_list(const GameState& s, EdgeIndex e) {
  std::string out = "{";
  for (Color c : colors_in(s.feasible_mask(e))) out += (out.size() > 1 ? "," : "") + std::to_string(c);
  return out + "}";
}

std::unique_ptr<MakerStrategy> pick_strategy(const std::string& name, std::shared_ptr<const Graph> g,
                                             Ruleset rules) {
  if (name == "auto") return make_strategy_for(g, rules);
  if (name == "tree") return std::make_unique<TreeMakerStrategy>(g, rules);
  if (name == "fastfill")
    return std::make_unique<TreeMakerStrategy>(g, rules, TreeStrategyOptions{TreeVariant::fastfill});
  if (name == "caterpillar") return std::make_unique<CaterpillarMakerStrategy>(g, rules);
  if (name == "wheel") return std::make_unique<WheelMakerStrategy>(g, rules);
  throw StrategyError("unknown strategy '" + name + "' (auto, tree, fastfill, caterpillar, wheel)");
}

}  // namespace

int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::string spec = a.family;
  for (std::size_t i = 0; i < a.params.size(); ++i) spec += ":" + a.params[i];
  if (a.params.empty()) throw GraphError("gen: missing parameters for " + a.family);
  const Graph g = harness::load_graph(spec);
  if (a.out.empty()) {
    out << write_graph(g);
    err << harness::describe_graph(g);
  } else {
    write_graph_file(g, a.out);
    out << harness::describe_graph(g) << "wrote " << a.out << '\n';
  }
  return kExitPass;
}

int run_index(const IndexArgs& a, std::ostream& out, std::ostream&) {
  const Graph g = harness::load_graph(a.graph);
  const SolverOptions opts = to_options(a.solver);
  Json j;
  j["graph"] = g.name();
  j["m"] = a.m;
  if (a.profile) {
    const WinProfile p = win_profile(g, a.m, opts);
    j["index"] = p.index();
    j["bounds"] = {{"lower", p.bounds.lower}, {"upper", p.bounds.upper}};
    j["profile"] = p.outcomes;
    j["monotone"] = p.monotone;
    out << g.name() << " m=" << a.m << ": index " << p.index() << '\n';
    for (std::size_t k = 0; k < p.outcomes.size(); ++k)
      out << "  k=" << k << "  " << (p.outcomes[k] ? "maker" : "breaker") << '\n';
    out << "  monotone in k: " << (p.monotone ? "yes" : "no") << '\n';
  } else {
    const int idx = game_chromatic_index(g, a.m, opts);
    j["index"] = idx;
    if (g.edge_count() > 0) {
      const Bounds b = trivial_bounds(g);
      j["bounds"] = {{"lower", b.lower}, {"upper", b.upper}};
    }
    out << g.name() << " m=" << a.m << ": index " << idx << '\n';
  }
  write_json(a.json, j);
  return kExitPass;
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream&) {
  const Graph g = harness::load_graph(a.graph);
  const Ruleset rules(a.m, a.k);
  const SolveResult r = maker_wins(g, rules, to_options(a.solver));
  out << g.name() << " m=" << a.m << " k=" << a.k << ": " << (r.maker_wins ? "Maker" : "Breaker")
      << " wins (" << r.nodes_expanded << " nodes, " << r.table_hits << " table hits)\n";
  if (r.principal_move) {
    const harness::EdgeNames names(g);
    out << "  winning first move: edge " << r.principal_move->edge << " ("
        << names(r.principal_move->edge) << ") color " << r.principal_move->color << '\n';
  }
  write_json(a.json, harness::solve_json(g, rules, r));
  return kExitPass;
}

int run_play(const PlayArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  auto g = std::make_shared<const Graph>(harness::load_graph(a.graph));
  const Ruleset rules(a.m, a.k);
  if (a.role != "maker" && a.role != "breaker") {
    err << "play: --role must be maker or breaker\n";
    return kExitUsage;
  }
  const Side human = a.role == "maker" ? Side::maker : Side::breaker;
  std::unique_ptr<Solver> solver;
  std::unique_ptr<MakerStrategy> strategy;
  std::unique_ptr<BreakerHeuristic> heuristic;
  if (a.engine == "solver") {
    solver = std::make_unique<Solver>(g, rules, to_options(a.solver));
  } else if (a.engine == "strategy") {
    if (human != Side::breaker) {
      err << "play: the strategy engine plays Maker; use --role breaker\n";
      return kExitUsage;
    }
    strategy = make_strategy_for(g, rules);
  } else if (a.engine == "heuristic") {
    if (human != Side::maker) {
      err << "play: the heuristic engine plays Breaker; use --role maker\n";
      return kExitUsage;
    }
    const auto kind = parse_breaker_kind(a.breaker_kind);
    if (!kind) {
      err << "play: unknown Breaker kind '" << a.breaker_kind << "'\n";
      return kExitUsage;
    }
    heuristic = std::make_unique<BreakerHeuristic>(*kind, a.seed);
  } else {
    err << "play: --engine must be solver, strategy or heuristic\n";
    return kExitUsage;
  }

  const harness::EdgeNames names(*g);
  GameState s(g, rules);
  std::vector<TranscriptLine> transcript;
  auto play = [&](const Move& mv, std::string note) {
    transcript.push_back({s.side_to_move(), mv, std::move(note)});
    s.apply(mv);
  };

  out << harness::describe_graph(*g) << "You are " << to_string(human)
      << ". Enter moves as 'e <edge> <color>'; 'show' prints the board, 'quit' ends.\n";
  out << harness::render_state(s);
  bool quit = false;
  while (!s.is_terminal() && !quit) {
    if (s.side_to_move() != human) {
      if (solver) {
        const Move mv = solver->best_move(s);
        play(mv, "solver");
        out << to_string(opponent(human)) << " colors edge " << mv.edge << " (" << names(mv.edge)
            << ") with " << mv.color << '\n';
      } else if (strategy) {
        for (const PlannedMove& pm : strategy->plan_turn(s)) {
          if (!s.is_legal(pm.move)) throw StrategyFault("strategy planned an illegal move", {});
          play(pm.move, pm.rule);
          out << "maker colors edge " << pm.move.edge << " (" << names(pm.move.edge) << ") with "
              << pm.move.color << "  [" << pm.rule << "]\n";
        }
      } else {
        const Move mv = heuristic->choose(s);
        play(mv, "heuristic");
        out << "breaker colors edge " << mv.edge << " (" << names(mv.edge) << ") with " << mv.color
            << '\n';
      }
      if (!s.is_terminal() && s.side_to_move() == human) out << harness::render_state(s);
      continue;
    }
    out << "> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) break;
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd)) continue;
    if (cmd == "quit" || cmd == "q") {
      quit = true;
      break;
    }
    if (cmd == "show") {
      out << harness::render_state(s);
      continue;
    }
    long edge = -1, color = -1;
    if (cmd != "e" || !(ls >> edge >> color)) {
      out << "expected 'e <edge> <color>', 'show' or 'quit'\n";
      continue;
    }
    if (edge < 0 || edge >= g->edge_count()) {
      out << "no edge " << edge << " (edges are 0.." << g->edge_count() - 1 << ")\n";
      continue;
    }
    const EdgeIndex e = static_cast<EdgeIndex>(edge);
    if (s.is_colored(e)) {
      out << "edge " << e << " is already colored\n";
      continue;
    }
    if (color < 0 || color >= rules.k || !s.is_legal({e, static_cast<Color>(color)})) {
      out << "color " << color << " is not feasible on edge " << e << "; feasible "
          << feasible_list(s, e) << '\n';
      continue;
    }
    play({e, static_cast<Color>(color)}, "human");
  }
  out << "result: " << to_string(s.status()) << '\n';
  const std::string text = format_transcript(transcript);
  out << text;
  if (!a.transcript.empty()) {
    std::ofstream f(a.transcript);
    f << text;
  }
  return kExitPass;
}

int run_replay(const ReplayArgs& a, std::ostream& out, std::ostream& err) {
  auto g = std::make_shared<const Graph>(harness::load_graph(a.graph));
  const auto lines = parse_transcript(read_text(a.transcript));
  try {
    const GameState s = replay_transcript(g, Ruleset(a.m, a.k), lines);
    out << harness::render_state(s);
  } catch (const ReplayError& ex) {
    err << "replay: " << ex.what() << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int run_referee(const RefereeArgs& a, std::ostream& out, std::ostream& err) {
  auto g = std::make_shared<const Graph>(harness::load_graph(a.graph));
  const Ruleset rules(a.m, a.k);
  const auto strategy = pick_strategy(a.strategy, g, rules);
  RefereeOptions opts;
  opts.check_invariants = a.check_invariants;
  opts.node_budget = a.node_budget;
  RefereeResult r;
  try {
    r = referee_exhaustive(g, rules, *strategy, opts);
  } catch (const StrategyFault& ex) {
    err << "strategy fault: " << ex.what() << '\n' << ex.trace().to_text();
    return kExitFail;
  }
  out << strategy->name() << " on " << g->name() << " m=" << a.m << " k=" << a.k << ": "
      << (r.maker_always_wins ? "Maker wins against every Breaker line" : "refuted") << " ("
      << r.breaker_nodes << " Breaker nodes, " << r.memo_hits << " memo hits)\n";
  if (r.refutation) {
    out << "refutation:\n" << r.refutation->to_text();
  } else {
    out << "sample line:\n" << r.sample.to_text();
  }
  Json j;
  j["graph"] = g->name();
  j["m"] = a.m;
  j["k"] = a.k;
  j["strategy"] = strategy->name();
  j["maker_always_wins"] = r.maker_always_wins;
  j["breaker_nodes"] = r.breaker_nodes;
  j["refutation"] = r.refutation ? Json(r.refutation->to_text()) : Json(nullptr);
  j["sample"] = r.sample.to_text();
  write_json(a.json, j);
  return r.maker_always_wins ? kExitPass : kExitFail;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<harness::Suite> suites;
  if (a.suite == "all") {
    suites.assign(harness::all_suites().begin(), harness::all_suites().end());
  } else if (auto s = harness::parse_suite(a.suite)) {
    suites.push_back(*s);
  } else {
    err << "verify: unknown suite '" << a.suite << "'\n";
    return kExitUsage;
  }
  harness::SuiteOptions o;
  o.max_edges = a.max_edges;
  o.referee_max_edges = a.referee_max_edges;
  o.max_n = a.max_n;
  o.m1 = a.m1;
  o.m2 = a.m2;
  o.cap_override = a.cap_override;
  o.referee = !a.no_referee;
  o.workers = a.workers;
  int code = kExitPass;
  Json reports = Json::array();
  for (harness::Suite s : suites) {
    const harness::VerificationReport rep = harness::run_suite(s, o);
    if (a.quiet) {
      const auto sum = rep.summary();
      out << rep.suite << ": " << sum.pass << " pass, " << sum.fail << " fail, " << sum.skipped
          << " skipped, " << sum.info << " info\n";
    } else {
      out << rep.to_text();
    }
    const int c = rep.exit_code();
    if (c == kExitFail || (c == kExitCap && code == kExitPass)) code = c;
    reports.push_back(rep.to_json());
  }
  write_json(a.json, suites.size() == 1 ? reports.front() : Json{{"reports", reports}});
  return code;
}

int run_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  if (a.m1 <= a.m2 || a.m2 < 1) {
    err << "scan: need m1 > m2 >= 1\n";
    return kExitUsage;
  }
  std::vector<Graph> graphs;
  const std::string& f = a.family;
  if (f == "wheel") {
    for (int n = 3; n <= a.max_n; ++n) graphs.push_back(wheel_graph(n));
  } else if (f == "path") {
    for (int n = 2; n <= a.max_n; ++n) graphs.push_back(path_graph(n));
  } else if (f == "cycle") {
    for (int n = 3; n <= a.max_n; ++n) graphs.push_back(cycle_graph(n));
  } else if (f == "star") {
    for (int t = 1; t <= a.max_n; ++t) graphs.push_back(star_graph(t));
  } else if (f == "tree" || f == "caterpillar") {
    for (Graph& t : enumerate_trees(a.max_edges)) {
      if (f == "caterpillar") {
        if (t.edge_count() < 2) continue;
        try {
          spine(t);
        } catch (const GraphError&) {
          continue;
        }
      }
      graphs.push_back(std::move(t));
    }
  } else if (f == "connected") {
    graphs = enumerate_connected_graphs(a.max_edges);
  } else {
    err << "scan: unknown family '" << f
        << "' (wheel, path, cycle, star, tree, caterpillar, connected)\n";
    return kExitUsage;
  }
  const SolverOptions opts = to_options(a.solver);
  Json witnesses = Json::array();
  Json skipped = Json::array();
  for (const Graph& g : graphs) {
    try {
      for (const auto& w : scan_monotonicity_counterexamples(a.m1, a.m2, std::span(&g, 1), opts)) {
        witnesses.push_back(
            {{"graph", w.graph.name()}, {"index_m1", w.index_m1}, {"index_m2", w.index_m2}});
        out << "witness " << w.graph.name() << ": index " << w.index_m1 << " with m=" << a.m1
            << " > " << w.index_m2 << " with m=" << a.m2 << '\n';
      }
    } catch (const CapExceeded& ex) {
      skipped.push_back({{"graph", g.name()}, {"reason", ex.what()}});
    }
  }
  out << graphs.size() << " graphs scanned, " << witnesses.size() << " witnesses, " << skipped.size()
      << " skipped\n";
  const bool bias_pair = bias_multiplier(a.m1, a.m2).has_value();
  Json j{{"m1", a.m1},
         {"m2", a.m2},
         {"family", f},
         {"graphs_scanned", graphs.size()},
         {"witnesses", witnesses},
         {"skipped", skipped}};
  write_json(a.json, j);
  if (bias_pair && !witnesses.empty()) {
    err << "scan: witnesses found although m1 = k*m2 + k - 1\n";
    return kExitFail;
  }
  return skipped.empty() ? kExitPass : kExitCap;
}

}  // namespace edgegame::cli
