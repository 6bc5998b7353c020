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

#include <string>
#include <string_view>
#include <vector>

#include "edgegame/game.hpp"

namespace edgegame {

// One move per line: `<side> <edge-index> <color>`, side is `maker` or
// `breaker` (`M` / `B` accepted on input). Anything after `#` is an
// annotation; strategy traces put the rule tag there.

struct TranscriptLine {
  Side side = Side::maker;
  Move move;
  std::string note;

  friend bool operator==(const TranscriptLine&, const TranscriptLine&) = default;
};

std::string format_transcript_line(const TranscriptLine& line);
std::string format_transcript(const std::vector<TranscriptLine>& lines);

/// Throws ParseError with the 1-based line number.
std::vector<TranscriptLine> parse_transcript(std::string_view text);

/// Replays a transcript and also checks that each line's side matches the
/// side to move. Throws ReplayError.
GameState replay_transcript(std::shared_ptr<const Graph> graph, Ruleset rules,
                            const std::vector<TranscriptLine>& lines);

}  // namespace edgegame
