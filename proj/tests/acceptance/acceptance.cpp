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

// Acceptance gate: prints one PASS / FAIL / SKIP line per criterion.
//
// Usage: edgegame_acceptance [--known-red N]...
// A criterion listed with --known-red still prints FAIL when it fails, but
// does not make the exit status nonzero; if it unexpectedly passes, the
// run fails so the list gets revisited.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgegame/enumerate.hpp"
#include "edgegame/generators.hpp"
#include "edgegame/solver.hpp"
#include "edgegame/strategy.hpp"
#include "oracles.hpp"

using namespace edgegame;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct EnvelopeViolation {
  std::string graph;
  int m;
  int index;
};

// Every index computed anywhere in this run, checked against the
// max-degree / edge-degree envelope.
std::vector<EnvelopeViolation> envelope_violations;
int envelope_checked = 0;

int index_of(const Graph& g, int m, SolverOptions opts = {}) {
  const int idx = game_chromatic_index(g, m, opts);
  const Bounds b = trivial_bounds(g);
  ++envelope_checked;
  if (idx < b.lower || idx > b.upper) envelope_violations.push_back({g.name(), m, idx});
  return idx;
}

std::shared_ptr<const Graph> share(const Graph& g) { return std::make_shared<const Graph>(g); }

bool is_caterpillar(const Graph& t) {
  if (t.edge_count() < 2) return false;
  try {
    spine(t);
    return true;
  } catch (const NotACaterpillar&) {
    return false;
  }
}

Outcome fail_unless(bool ok, std::string detail) {
  return {ok ? Verdict::pass : Verdict::fail, std::move(detail)};
}

// 1. Small wheels.
Outcome small_wheels() {
  struct Case {
    int n, m, expected;
  };
  const Case cases[] = {{3, 2, 3}, {3, 3, 3}, {3, 4, 3}, {4, 2, 4}, {4, 4, 4}, {4, 5, 4}, {4, 3, 5}};
  std::ostringstream bad;
  int ok = 0;
  for (const Case& c : cases) {
    const int got = index_of(wheel_graph(c.n), c.m);
    if (got == c.expected) {
      ++ok;
    } else {
      bad << " W" << c.n << " m=" << c.m << " got " << got << " want " << c.expected << ";";
    }
  }
  return fail_unless(ok == 7, std::to_string(ok) + "/7 indices match" + bad.str());
}

// 2. W5 with m in {2, 3}.
Outcome w5() {
  std::ostringstream d;
  bool ok = true;
  for (int m : {2, 3}) {
    try {
      const int got = index_of(wheel_graph(5), m);
      d << "m=" << m << ": " << got << "  ";
      ok = ok && got == 5;
    } catch (const CapExceeded& e) {
      return {Verdict::skip, std::string("cap exceeded: ") + e.what()};
    }
  }
  return fail_unless(ok, d.str());
}

// 3. Monotonicity witness among wheels up to W4.
Outcome nonmono() {
  std::vector<Graph> wheels = {wheel_graph(3), wheel_graph(4)};
  auto w = scan_monotonicity_counterexamples(3, 2, wheels);
  std::ostringstream d;
  for (const auto& x : w) d << "(" << x.graph.name() << ", " << x.index_m1 << ", " << x.index_m2 << ") ";
  const bool ok = w.size() == 1 && w[0].graph.edge_count() == 8 && w[0].index_m1 == 5 && w[0].index_m2 == 4;
  return fail_unless(ok, "witnesses: " + (w.empty() ? std::string("none") : d.str()));
}

// 4. Caterpillars with max degree >= 4.
Outcome caterpillars() {
  int instances = 0, index_bad = 0, referee_bad = 0;
  for (const Graph& t : enumerate_trees(9)) {
    if (t.max_degree() < 4 || !is_caterpillar(t)) continue;
    auto g = share(t);
    for (int m = 2; m <= 3; ++m) {
      ++instances;
      if (index_of(t, m) != t.max_degree()) ++index_bad;
      const Ruleset rules(m, t.max_degree());
      CaterpillarMakerStrategy strat(g, rules);
      if (!referee_exhaustive(g, rules, strat).maker_always_wins) ++referee_bad;
    }
  }
  return fail_unless(index_bad == 0 && referee_bad == 0 && instances > 0,
                     std::to_string(instances) + " instances, " + std::to_string(index_bad) +
                         " index mismatches, " + std::to_string(referee_bad) + " referee failures");
}

// 5. Trees: index bounds and the scripted tree strategy.
Outcome trees() {
  int solved = 0, bound_bad = 0, diam_bad = 0, cat3 = 0, cat3_bad = 0, refereed = 0, referee_bad = 0;
  for (const Graph& t : enumerate_trees(8)) {
    const int delta = t.max_degree();
    const int diam = diameter(t);
    for (int m = 1; m <= 3; ++m) {
      const int idx = index_of(t, m);
      ++solved;
      if (idx > delta + 2) ++bound_bad;
      if (m >= diam - 2 && idx > delta + 1) ++diam_bad;
    }
  }
  for (const Graph& t : enumerate_trees(9)) {
    if (t.max_degree() == 3 && is_caterpillar(t)) {
      for (int m = 2; m <= 3; ++m) {
        ++cat3;
        if (index_of(t, m) > 4) ++cat3_bad;
      }
    }
    auto g = share(t);
    for (int m = 1; m <= 3; ++m) {
      const Ruleset rules(m, t.max_degree() + 2);
      TreeMakerStrategy strat(g, rules);
      ++refereed;
      if (!referee_exhaustive(g, rules, strat).maker_always_wins) ++referee_bad;
    }
  }
  std::ostringstream d;
  d << solved << " tree solves (" << bound_bad << " above D+2, " << diam_bad << " above D+1 with m >= diam-2), "
    << cat3 << " D=3 caterpillar solves (" << cat3_bad << " above 4), " << refereed << " referee runs ("
    << referee_bad << " failed)";
  return fail_unless(bound_bad + diam_bad + cat3_bad + referee_bad == 0, d.str());
}

// 6. Bias pairs m1 = t*m2 + t - 1.
Outcome prop7() {
  std::vector<Graph> graphs = enumerate_trees(7);
  graphs.push_back(wheel_graph(3));
  graphs.push_back(wheel_graph(4));
  int checked = 0, violations = 0;
  std::ostringstream bad;
  for (auto [m1, m2] : {std::pair{3, 1}, std::pair{5, 2}}) {
    for (const Graph& g : graphs) {
      const int a = index_of(g, m1), b = index_of(g, m2);
      ++checked;
      if (a > b) {
        ++violations;
        bad << " " << g.name() << " (" << m1 << "," << m2 << ")";
      }
    }
  }
  return fail_unless(violations == 0,
                     std::to_string(checked) + " comparisons, " + std::to_string(violations) + " violations" + bad.str());
}

// 7. Envelope on every index of this run, plus full win profiles.
Outcome envelope() {
  int profiles = 0, profile_bad = 0;
  std::vector<Graph> graphs = enumerate_connected_graphs(6);
  for (int n = 3; n <= 5; ++n) graphs.push_back(wheel_graph(n));
  for (const Graph& g : graphs) {
    for (int m = 1; m <= 3; ++m) {
      const WinProfile p = win_profile(g, m);
      ++profiles;
      bool ok = p.outcomes.back();
      for (int k = 0; k < g.max_degree(); ++k) ok = ok && !p.outcomes[k];
      const int idx = p.index();
      ++envelope_checked;
      if (idx < p.bounds.lower || idx > p.bounds.upper) envelope_violations.push_back({g.name(), m, idx});
      if (!ok) ++profile_bad;
    }
  }
  std::ostringstream d;
  d << envelope_checked << " indices inside the envelope check (" << envelope_violations.size()
    << " outside), " << profiles << " profiles (" << profile_bad << " malformed)";
  for (const auto& v : envelope_violations) d << " " << v.graph << " m=" << v.m << " -> " << v.index;
  return fail_unless(envelope_violations.empty() && profile_bad == 0, d.str());
}

// 8. Solver against plain minimax.
Outcome oracle_equivalence() {
  int instances = 0, mismatches = 0;
  for (const Graph& g : enumerate_connected_graphs(6)) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 1; k <= 5; ++k) {
        oracle::BruteForce brute(g, m, k);
        ++instances;
        if (brute.maker_wins() != maker_wins(g, Ruleset(m, k)).maker_wins) ++mismatches;
      }
    }
  }
  return fail_unless(mismatches == 0 && instances == 780,
                     std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches");
}

// 9. Paths and cycles up to ten vertices.
Outcome paths_cycles(std::string& table) {
  std::ostringstream tab, d;
  bool ok = true;
  for (char fam : {'P', 'C'}) {
    for (int m = 1; m <= 3; ++m) {
      const int first = fam == 'P' ? 2 : 3;
      std::vector<int> vals;
      tab << "    " << fam << " m=" << m << ":";
      for (int n = first; n <= 10; ++n) {
        vals.push_back(index_of(fam == 'P' ? path_graph(n) : cycle_graph(n), m));
        tab << " " << vals.back();
      }
      int threshold = -1;
      for (int i = static_cast<int>(vals.size()) - 1; i >= 0 && vals[i] == 3; --i) threshold = first + i;
      d << fam << " m=" << m << " from n=" << (threshold < 0 ? std::string("none") : std::to_string(threshold))
        << "; ";
      tab << "  (3 from n=" << (threshold < 0 ? std::string("none") : std::to_string(threshold)) << ")\n";
      if (threshold < 0) ok = false;
    }
  }
  table = tab.str();
  return fail_unless(ok, "index settles at 3: " + d.str());
}

// 10. Scripted wheel strategy on W5 and W6.
Outcome wheel_referee() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {5, 6}) {
    auto g = share(wheel_graph(n));
    const Ruleset rules(2, n);
    WheelMakerStrategy strat(g, rules);
    try {
      auto r = referee_exhaustive(g, rules, strat);
      d << "W" << n << ": " << (r.maker_always_wins ? "holds" : "refuted") << " (" << r.breaker_nodes
        << " Breaker nodes)  ";
      ok = ok && r.maker_always_wins;
    } catch (const CapExceeded& e) {
      return {Verdict::skip, std::string("cap exceeded: ") + e.what()};
    }
  }
  return fail_unless(ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-red" && i + 1 < argc) {
      known_red.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: edgegame_acceptance [--known-red N]...\n";
      return 2;
    }
  }

  std::string table;
  struct Entry {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  // Criterion 7 runs last because it audits indices computed by the others.
  const std::vector<Entry> entries = {
      {1, "small wheels: W3 and W4 indices", small_wheels},
      {2, "W5 index for m in {2,3}", w5},
      {3, "monotonicity witness among W3, W4", nonmono},
      {4, "caterpillars with max degree >= 4", caterpillars},
      {5, "trees: index bounds and tree-strategy referee", trees},
      {6, "bias pairs (3,1) and (5,2) never increase the index", prop7},
      {8, "solver agrees with plain minimax", oracle_equivalence},
      {9, "paths and cycles settle at index 3 by n=10", [&] { return paths_cycles(table); }},
      {10, "wheel strategy referee on W5 and W6", wheel_referee},
      {7, "degree envelope and win-profile shape", envelope},
  };

  struct Line {
    int id;
    std::string text;
    Verdict verdict;
  };
  std::vector<Line> lines;
  for (const Entry& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {Verdict::fail, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "SKIP";
    char head[96];
    std::snprintf(head, sizeof head, "%s  %2d  %-52s %7.2fs  ", tag, e.id, e.title, secs);
    std::string text = head + o.detail;
    if (known_red.count(e.id) && o.verdict != Verdict::pass) text += "  [known red]";
    lines.push_back({e.id, text, o.verdict});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });

  int unexpected = 0;
  for (const Line& l : lines) {
    std::cout << l.text << '\n';
    if (l.id == 9) std::cout << table;
    const bool red = known_red.count(l.id) > 0;
    if (l.verdict != Verdict::pass && !red) ++unexpected;
    if (l.verdict == Verdict::pass && red) {
      std::cout << "      criterion " << l.id << " is listed as known red but passed\n";
      ++unexpected;
    }
  }
  const auto passed = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return l.verdict == Verdict::pass; });
  std::cout << passed << "/" << lines.size() << " criteria pass";
  if (!known_red.empty()) std::cout << "; " << known_red.size() << " listed as known red";
  std::cout << '\n';
  return unexpected == 0 ? 0 : 1;
}
