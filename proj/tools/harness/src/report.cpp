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

#include "edgegame/harness/report.hpp"

#include <algorithm>
#include <sstream>

namespace edgegame::harness {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      return "skipped";
    case Outcome::info:
      return "info";
  }
  return "?";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper:
      return "paper";
    case Provenance::derived:
      return "derived";
    case Provenance::trivial:
      return "trivial";
  }
  return "?";
}

Record& judge(Record& r) {
  r.outcome = r.expected == r.observed ? Outcome::pass : Outcome::fail;
  return r;
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const Record& r : records) {
    switch (r.outcome) {
      case Outcome::pass:
        ++s.pass;
        break;
      case Outcome::fail:
        ++s.fail;
        break;
      case Outcome::skipped:
        ++s.skipped;
        break;
      case Outcome::info:
        ++s.info;
        break;
    }
  }
  s.total = static_cast<int>(records.size());
  return s;
}

int VerificationReport::exit_code() const {
  const Summary s = summary();
  if (s.fail) return kExitFail;
  if (s.skipped) return kExitCap;
  return kExitPass;
}

void VerificationReport::sort() {
  std::stable_sort(records.begin(), records.end(),
                   [](const Record& a, const Record& b) { return a.key < b.key; });
}

Json VerificationReport::to_json(bool include_timing) const {
  Json out;
  out["schema"] = kReportSchema;
  out["suite"] = suite;
  out["parameters"] = parameters;
  const Summary s = summary();
  out["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail},
                    {"skipped", s.skipped}, {"info", s.info}};
  Json recs = Json::array();
  for (const Record& r : records) {
    Json j;
    j["key"] = r.key;
    j["graph"] = r.graph;
    j["m"] = r.m;
    j["k"] = r.k ? Json(*r.k) : Json(nullptr);
    j["check"] = r.check;
    j["provenance"] = to_string(r.provenance);
    j["expected"] = r.expected;
    j["observed"] = r.observed;
    j["outcome"] = to_string(r.outcome);
    j["nodes"] = r.nodes;
    j["data"] = r.data;
    if (!r.note.empty()) j["note"] = r.note;
    recs.push_back(std::move(j));
  }
  out["records"] = std::move(recs);
  out["findings"] = findings;
  if (include_timing) {
    Json per = Json::object();
    double total = 0;
    for (const Record& r : records) {
      per[r.key] = r.wall_seconds;
      total += r.wall_seconds;
    }
    out["timing"] = {{"wall_seconds_total", total}, {"per_record", std::move(per)}};
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const Record& r : records) {
    os << to_string(r.outcome) << "  " << r.key;
    if (r.outcome == Outcome::fail)
      os << "  expected " << r.expected.dump() << " observed " << r.observed.dump();
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  const Summary s = summary();
  os << suite << ": " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped, "
     << s.info << " info\n";
  return os.str();
}

}  // namespace edgegame::harness
