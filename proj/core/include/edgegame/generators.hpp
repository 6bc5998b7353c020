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

#include "edgegame/graph.hpp"

namespace edgegame {

enum class Family { path, cycle, star, wheel, caterpillar };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

// Vertex and edge numbering is part of the contract:
//   path n:    vertices 0..n-1, edge i = (i, i+1)
//   cycle n:   as path plus edge n-1 = (n-1, 0)
//   star t:    centre 0, leaves 1..t, edge i = (0, i+1)
//   wheel n:   hub 0, rim 1..n; spoke s_i = edge i-1 = (0, i),
//              rim r_i = edge n+i-1 = (i, i mod n + 1)
//   caterpillar legs[0..L-1]: spine vertices 0..L-1, spine edges first
//              (edge i = (i, i+1)), then the legs of spine vertex 0, 1, ...
//              with fresh vertices L, L+1, ... in that order.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph wheel_graph(int n);
/// `legs[i]` pendant edges on the i-th constructed spine vertex. A spine
/// endpoint without legs is itself a leaf, so the intrinsic spine reported by
/// spine() can be shorter than legs.size().
Graph caterpillar_graph(std::span<const int> legs);

/// Dispatch by family; `params` as documented above (caterpillar:
/// spine length followed by that many leg counts). Throws GraphError on
/// out-of-range parameters.
Graph generate(Family family, std::span<const int> params);

}  // namespace edgegame
