// Copyright 2026 The acsets Authors
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

#include <cstddef>
#include <deque>
#include <vector>

#include "acsets/error.hpp"
#include "acsets/finset.hpp"
#include "acsets/instance.hpp"

namespace acsets::graphs {

/// Whether some edge runs u -> v, by scanning the out-edges of u.
template <class G>
bool has_edge(const G& g, Part u, Part v) {
  for (Part e : g.template incident<"src">(u)) {
    if (g.template subpart<"tgt">(e) == v) return true;
  }
  return false;
}

/// Depth-first search from s. parents[s] = s, unreached vertices get 0.
/// Neighbors are tried in ascending out-edge order. Works on any graph type
/// with V, E, src, tgt. Errors: OutOfRange.
template <class G>
std::vector<Part> dfs_parents(const G& g, Part s) {
  const std::size_t n = g.template nparts<"V">();
  if (s < 1 || static_cast<std::size_t>(s) > n) {
    fail(Errc::OutOfRange, "start vertex " + std::to_string(s) + " outside 1.." + std::to_string(n));
  }
  std::vector<Part> parents(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::vector<Part> stack{s};
  seen[s] = 1;
  parents[s] = s;
  while (!stack.empty()) {
    const Part v = stack.back();
    Part u = 0;
    for (Part e : g.template incident<"src">(v)) {
      const Part w = g.template subpart<"tgt">(e);
      if (!seen[w]) {
        u = w;
        break;
      }
    }
    if (u == 0) {
      stack.pop_back();
    } else {
      seen[u] = 1;
      stack.push_back(u);
      parents[u] = v;
    }
  }
  parents.erase(parents.begin());
  return parents;
}

/// Breadth-first search from s, same conventions as dfs_parents.
template <class G>
std::vector<Part> bfs_parents(const G& g, Part s) {
  const std::size_t n = g.template nparts<"V">();
  if (s < 1 || static_cast<std::size_t>(s) > n) {
    fail(Errc::OutOfRange, "start vertex " + std::to_string(s) + " outside 1.." + std::to_string(n));
  }
  std::vector<Part> parents(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::deque<Part> queue{s};
  seen[s] = 1;
  parents[s] = s;
  while (!queue.empty()) {
    const Part v = queue.front();
    queue.pop_front();
    for (Part e : g.template incident<"src">(v)) {
      const Part w = g.template subpart<"tgt">(e);
      if (!seen[w]) {
        seen[w] = 1;
        parents[w] = v;
        queue.push_back(w);
      }
    }
  }
  parents.erase(parents.begin());
  return parents;
}

/// Weak components as the coequalizer of src, tgt: E -> V, numbered by first
/// occurrence. Errors: IncompleteInstance.
template <class G>
FinFunction connected_components(const G& g) {
  const std::size_t nv = g.template nparts<"V">();
  const std::size_t ne = g.template nparts<"E">();
  std::vector<Part> src(ne);
  std::vector<Part> tgt(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    src[e] = g.template subpart<"src">(static_cast<Part>(e + 1));
    tgt[e] = g.template subpart<"tgt">(static_cast<Part>(e + 1));
    if (src[e] == 0 || tgt[e] == 0) {
      fail(Errc::IncompleteInstance, "edge " + std::to_string(e + 1) + " has an undefined endpoint");
    }
  }
  return coequalizer(FinFunction(std::move(src), nv), FinFunction(std::move(tgt), nv));
}

/// Adds one loop per vertex (appended after the original edges) and returns
/// the result on ReflGr. Errors: IncompleteInstance, SchemaMismatch.
Instance free_reflexive(const Instance& g);

}  // namespace acsets::graphs
