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

#include "edgegame/generators.hpp"

#include <string>
#include <vector>

namespace edgegame {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  if (name == "caterpillar") return Family::caterpillar;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::caterpillar: return "caterpillar";
  }
  return "?";
}

Graph path_graph(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges), "C" + std::to_string(n));
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star: leaf count must be >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges), "K1," + std::to_string(leaves));
}

Graph wheel_graph(int n) {
  require(n >= 3, "wheel: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  return Graph(n + 1, std::move(edges), "W" + std::to_string(n));
}

Graph caterpillar_graph(std::span<const int> legs) {
  const int spine_len = static_cast<int>(legs.size());
  require(spine_len >= 1, "caterpillar: spine length must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine_len; ++i) edges.push_back({i, i + 1});
  int next = spine_len;
  std::string name = "Cat(";
  for (int i = 0; i < spine_len; ++i) {
    require(legs[i] >= 0, "caterpillar: negative leg count");
    for (int j = 0; j < legs[i]; ++j) edges.push_back({i, next++});
    name += (i ? "," : "") + std::to_string(legs[i]);
  }
  require(!edges.empty(), "caterpillar: graph would have no edges");
  return Graph(next, std::move(edges), name + ")");
}

Graph generate(Family family, std::span<const int> params) {
  auto single = [&](const char* what) {
    require(params.size() == 1, std::string(what) + " takes exactly one parameter");
    return params[0];
  };
  switch (family) {
    case Family::path: return path_graph(single("path"));
    case Family::cycle: return cycle_graph(single("cycle"));
    case Family::star: return star_graph(single("star"));
    case Family::wheel: return wheel_graph(single("wheel"));
    case Family::caterpillar: {
      require(!params.empty(), "caterpillar: missing spine length");
      const int len = params[0];
      require(len >= 1, "caterpillar: spine length must be >= 1");
      require(static_cast<int>(params.size()) == len + 1,
              "caterpillar: expected one leg count per spine vertex");
      return caterpillar_graph(params.subspan(1));
    }
  }
  throw GraphError("unknown family");
}

}  // namespace edgegame
