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

#include <optional>
#include <span>
#include <string_view>

#include "edgegame/harness/report.hpp"

namespace edgegame::harness {

enum class Suite {
  prop1,
  paths_cycles,
  trees,
  trees_diam,
  caterpillars,
  wheels_small,
  wheels_general,
  prop7,
  nonmono,
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);
std::span<const Suite> all_suites();

/// Size knobs. Unset fields take the suite's default.
struct SuiteOptions {
  std::optional<int> max_edges;          // solver sweeps
  std::optional<int> referee_max_edges;  // strategy referee sweeps
  std::optional<int> max_n;              // wheel / path / cycle order
  std::optional<int> m1;
  std::optional<int> m2;
  bool cap_override = false;
  bool referee = true;
  unsigned workers = 0;  // 0 = hardware concurrency
};

/// Throws std::invalid_argument for options the suite cannot honour (for
/// example an m1/m2 pair that is not of the form m1 = k*m2 + k - 1 in prop7).
VerificationReport run_suite(Suite suite, const SuiteOptions& options = {});

}  // namespace edgegame::harness
