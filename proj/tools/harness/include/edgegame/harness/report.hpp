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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace edgegame::harness {

using Json = nlohmann::ordered_json;

enum class Outcome { pass, fail, skipped, info };
enum class Provenance { paper, derived, trivial };

std::string_view to_string(Outcome o);
std::string_view to_string(Provenance p);

/// One checked (or tabulated) instance of a verification suite.
///
/// `expected` and `observed` are compared for equality; `data` carries the
/// measured quantities behind them. Records with `Outcome::info` have no
/// expectation and only feed tables.
struct Record {
  std::string key;    // unique within a suite, used for ordering
  std::string graph;  // graph name
  int m = 0;
  std::optional<int> k;
  std::string check;
  Provenance provenance = Provenance::derived;
  Json expected;
  Json observed;
  Json data = Json::object();
  Outcome outcome = Outcome::info;
  std::uint64_t nodes = 0;
  std::string note;
  double wall_seconds = 0;  // reported under "timing" only
};

/// Sets the outcome from expected == observed.
Record& judge(Record& r);

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int info = 0;
  int total = 0;
};

struct VerificationReport {
  std::string suite;
  Json parameters = Json::object();
  std::vector<Record> records;
  /// Suite-specific tables derived from the records.
  Json findings = Json::object();

  Summary summary() const;
  bool passed() const { return summary().fail == 0; }
  /// 0 = all checks passed, 1 = some check failed, 3 = nothing failed but
  /// some instance hit a cap.
  int exit_code() const;
  /// Orders records by key.
  void sort();

  /// Everything except "timing" is a pure function of the inputs.
  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

inline constexpr std::string_view kReportSchema = "edgegame.verification/1";

}  // namespace edgegame::harness
