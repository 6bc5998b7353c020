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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "edgegame/harness/report.hpp"
#include "edgegame/solver.hpp"
#include "edgegame/strategy.hpp"

using namespace edgegame;
using namespace edgegame::cli;

namespace {

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--max-edges", f.max_edges, "Refuse to search graphs with more edges");
  cmd->add_option("--max-colors", f.max_colors, "Refuse to search larger palettes");
  cmd->add_flag("--cap-override", f.cap_override, "Ignore --max-edges / --max-colors");
  cmd->add_option("--node-budget", f.node_budget, "Abort after this many search nodes (0 = none)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edgegame: the (m,1) edge coloring game"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family graph in the graph file format");
  gen_cmd->add_option("family", gen.family, "path, cycle, star, wheel or caterpillar")->required();
  gen_cmd->add_option("params", gen.params, "n, t, or spine length and leg counts (3 3,0,3)")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output file (stdout if omitted)");

  IndexArgs index;
  auto* index_cmd = app.add_subcommand("index", "Game chromatic index for a given m");
  index_cmd->add_option("--graph", index.graph, "Graph file or family spec such as wheel:4")
      ->required();
  index_cmd->add_option("--m", index.m, "Maker moves per turn")->required()->check(CLI::PositiveNumber);
  index_cmd->add_flag("--profile", index.profile, "Solve every k up to the trivial upper bound");
  index_cmd->add_option("--json", index.json, "Write a JSON record here");
  add_solver_flags(index_cmd, index.solver);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Perfect-play winner for given m and k");
  solve_cmd->add_option("--graph", solve.graph)->required();
  solve_cmd->add_option("--m", solve.m)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--k", solve.k)->required()->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--json", solve.json);
  add_solver_flags(solve_cmd, solve.solver);

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Interactive game against an engine");
  play_cmd->add_option("--graph", play.graph)->required();
  play_cmd->add_option("--m", play.m)->required()->check(CLI::PositiveNumber);
  play_cmd->add_option("--k", play.k)->required()->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--role", play.role, "Your side: maker or breaker");
  play_cmd->add_option("--engine", play.engine, "solver, strategy (Maker) or heuristic (Breaker)");
  play_cmd->add_option("--breaker", play.breaker_kind, "random, fresh_color_attack or lookahead");
  play_cmd->add_option("--seed", play.seed, "Seed for the random Breaker");
  play_cmd->add_option("--transcript", play.transcript, "Write the transcript here on exit");
  add_solver_flags(play_cmd, play.solver);

  ReplayArgs replay;
  auto* replay_cmd = app.add_subcommand("replay", "Check a transcript and show the final position");
  replay_cmd->add_option("--graph", replay.graph)->required();
  replay_cmd->add_option("--m", replay.m)->required()->check(CLI::PositiveNumber);
  replay_cmd->add_option("--k", replay.k)->required()->check(CLI::NonNegativeNumber);
  replay_cmd->add_option("--transcript", replay.transcript)->required();

  RefereeArgs referee;
  auto* referee_cmd =
      app.add_subcommand("referee", "Run a scripted Maker strategy against every Breaker line");
  referee_cmd->add_option("--graph", referee.graph)->required();
  referee_cmd->add_option("--m", referee.m)->required()->check(CLI::PositiveNumber);
  referee_cmd->add_option("--k", referee.k)->required()->check(CLI::NonNegativeNumber);
  referee_cmd->add_option("--strategy", referee.strategy, "auto, tree, fastfill, caterpillar, wheel");
  referee_cmd->add_flag("!--no-invariants", referee.check_invariants, "Skip invariant checks");
  referee_cmd->add_option("--node-budget", referee.node_budget);
  referee_cmd->add_option("--json", referee.json);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "prop1, paths_cycles, trees, trees_diam, caterpillars, wheels_small, "
                   "wheels_general, prop7, nonmono or all")
      ->required();
  verify_cmd->add_option("--max-edges", verify.max_edges);
  verify_cmd->add_option("--referee-max-edges", verify.referee_max_edges);
  verify_cmd->add_option("--max-n", verify.max_n);
  verify_cmd->add_option("--m1", verify.m1);
  verify_cmd->add_option("--m2", verify.m2);
  verify_cmd->add_flag("--cap-override", verify.cap_override);
  verify_cmd->add_flag("--no-referee", verify.no_referee, "Skip strategy referee checks");
  verify_cmd->add_flag("--quiet", verify.quiet, "Print only the summary line");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--json", verify.json);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Look for graphs whose index grows with m");
  scan_cmd->add_option("--m1", scan.m1)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--m2", scan.m2)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--family", scan.family,
                       "wheel, path, cycle, star, tree, caterpillar or connected");
  scan_cmd->add_option("--max-n", scan.max_n, "Largest order for wheel/path/cycle/star");
  scan_cmd->add_option("--json", scan.json);
  scan_cmd->add_option("--max-edges", scan.max_edges, "Largest enumerated tree / connected graph");
  scan_cmd->add_flag("--cap-override", scan.solver.cap_override, "Lift the solver caps");
  scan_cmd->add_option("--node-budget", scan.solver.node_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : harness::kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, std::cout, std::cerr);
    if (*index_cmd) return run_index(index, std::cout, std::cerr);
    if (*solve_cmd) return run_solve(solve, std::cout, std::cerr);
    if (*play_cmd) return run_play(play, std::cin, std::cout, std::cerr);
    if (*replay_cmd) return run_replay(replay, std::cout, std::cerr);
    if (*referee_cmd) return run_referee(referee, std::cout, std::cerr);
    if (*verify_cmd) return run_verify(verify, std::cout, std::cerr);
    if (*scan_cmd) return run_scan(scan, std::cout, std::cerr);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return harness::kExitCap;
  } catch (const StrategyFault& e) {
    std::cerr << "strategy fault: " << e.what() << '\n' << e.trace().to_text();
    return harness::kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return harness::kExitUsage;
  }
  return harness::kExitUsage;
}
