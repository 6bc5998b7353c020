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

#include "edgegame/transcript.hpp"

#include <sstream>

#include "edgegame/graph_io.hpp"

namespace edgegame {

std::string format_transcript_line(const TranscriptLine& line) {
  std::string out = std::string(to_string(line.side)) + " " + std::to_string(line.move.edge) +
                    " " + std::to_string(line.move.color);
  if (!line.note.empty()) out += " # " + line.note;
  return out;
}

std::string format_transcript(const std::vector<TranscriptLine>& lines) {
  std::string out;
  for (const auto& l : lines) out += format_transcript_line(l) + "\n";
  return out;
}

std::vector<TranscriptLine> parse_transcript(std::string_view text) {
  std::vector<TranscriptLine> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string note;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      note = raw.substr(hash + 1);
      raw.resize(hash);
      auto first = note.find_first_not_of(' ');
      note = first == std::string::npos ? "" : note.substr(first);
      while (!note.empty() && (note.back() == ' ' || note.back() == '\r')) note.pop_back();
    }
    std::istringstream ls(raw);
    std::string side;
    if (!(ls >> side)) continue;
    TranscriptLine line;
    if (side == "maker" || side == "M") {
      line.side = Side::maker;
    } else if (side == "breaker" || side == "B") {
      line.side = Side::breaker;
    } else {
      throw ParseError(lineno, "unknown side '" + side + "'");
    }
    if (!(ls >> line.move.edge >> line.move.color))
      throw ParseError(lineno, "expected '<side> <edge> <color>'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens");
    line.note = std::move(note);
    out.push_back(std::move(line));
  }
  return out;
}

GameState replay_transcript(std::shared_ptr<const Graph> graph, Ruleset rules,
                            const std::vector<TranscriptLine>& lines) {
  GameState s(std::move(graph), rules);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!s.is_terminal() && s.side_to_move() != lines[i].side)
      throw ReplayError(i, "expected a " + std::string(to_string(s.side_to_move())) + " move");
    try {
      s.apply(lines[i].move);
    } catch (const IllegalMove& ex) {
      throw ReplayError(i, ex.what());
    }
  }
  return s;
}

}  // namespace edgegame
