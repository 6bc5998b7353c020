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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edgegame::cli {

struct SolverFlags {
  int max_edges = 12;
  int max_colors = 8;
  bool cap_override = false;
  std::uint64_t node_budget = 0;
};

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string out;
};

struct IndexArgs {
  std::string graph;
  int m = 1;
  bool profile = false;
  std::string json;
  SolverFlags solver;
};

struct SolveArgs {
  std::string graph;
  int m = 1;
  int k = 0;
  std::string json;
  SolverFlags solver;
};

struct PlayArgs {
  std::string graph;
  int m = 1;
  int k = 0;
  std::string role = "breaker";
  std::string engine = "solver";
  std::string breaker_kind = "fresh_color_attack";
  std::uint64_t seed = 0;
  std::string transcript;
  SolverFlags solver;
};

struct ReplayArgs {
  std::string graph;
  int m = 1;
  int k = 0;
  std::string transcript;
};

struct RefereeArgs {
  std::string graph;
  int m = 1;
  int k = 0;
  std::string strategy = "auto";
  bool check_invariants = true;
  std::uint64_t node_budget = 200'000'000;
  std::string json;
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_edges;
  std::optional<int> referee_max_edges;
  std::optional<int> max_n;
  std::optional<int> m1;
  std::optional<int> m2;
  bool cap_override = false;
  bool no_referee = false;
  bool quiet = false;
  unsigned workers = 0;
  std::string json;
};

struct ScanArgs {
  int m1 = 3;
  int m2 = 2;
  std::string family = "connected";
  int max_n = 4;
  int max_edges = 6;
  std::string json;
  SolverFlags solver;
};

// Each returns the process exit code.
int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err);
int run_index(const IndexArgs& a, std::ostream& out, std::ostream& err);
int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err);
int run_play(const PlayArgs& a, std::istream& in, std::ostream& out, std::ostream& err);
int run_replay(const ReplayArgs& a, std::ostream& out, std::ostream& err);
int run_referee(const RefereeArgs& a, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err);
int run_scan(const ScanArgs& a, std::ostream& out, std::ostream& err);

}  // namespace edgegame::cli
