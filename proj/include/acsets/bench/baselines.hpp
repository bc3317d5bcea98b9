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

// Hand-written graph structures the engine is measured against. Vertices and
// edges are numbered from 1, like parts.

#include <cstddef>
#include <deque>
#include <numeric>
#include <vector>

#include "acsets/finset.hpp"

namespace acsets::bench {

struct EdgeList {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<Part> src;
  std::vector<Part> tgt;

  void add_vertices(std::size_t n) { vertices += n; }
  Part add_edge(Part u, Part v) {
    src.push_back(u);
    tgt.push_back(v);
    return static_cast<Part>(++edges);
  }
};

struct AdjacencyList {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<Part> src;
  std::vector<Part> tgt;
  std::vector<std::vector<Part>> src_index;
  std::vector<std::vector<Part>> tgt_index;

  void add_vertices(std::size_t n) {
    vertices += n;
    src_index.resize(vertices);
    tgt_index.resize(vertices);
  }
  Part add_edge(Part u, Part v) {
    src.push_back(u);
    tgt.push_back(v);
    const auto e = static_cast<Part>(++edges);
    src_index[u - 1].push_back(e);
    tgt_index[v - 1].push_back(e);
    return e;
  }
  const std::vector<Part>& out_edges(Part v) const { return src_index[v - 1]; }
  bool has_edge(Part u, Part v) const {
    for (Part e : src_index[u - 1]) {
      if (tgt[e - 1] == v) return true;
    }
    return false;
  }
};

/// Same contract as graphs::dfs_parents.
inline std::vector<Part> dfs_parents(const AdjacencyList& g, Part s) {
  std::vector<Part> parents(g.vertices, 0);
  std::vector<char> seen(g.vertices, 0);
  std::vector<Part> stack{s};
  seen[s - 1] = 1;
  parents[s - 1] = s;
  while (!stack.empty()) {
    const Part v = stack.back();
    Part next = 0;
    for (Part e : g.out_edges(v)) {
      const Part w = g.tgt[e - 1];
      if (!seen[w - 1]) {
        next = w;
        break;
      }
    }
    if (next == 0) {
      stack.pop_back();
    } else {
      seen[next - 1] = 1;
      parents[next - 1] = v;
      stack.push_back(next);
    }
  }
  return parents;
}

inline std::vector<Part> bfs_parents(const AdjacencyList& g, Part s) {
  std::vector<Part> parents(g.vertices, 0);
  std::vector<char> seen(g.vertices, 0);
  std::deque<Part> queue{s};
  seen[s - 1] = 1;
  parents[s - 1] = s;
  while (!queue.empty()) {
    const Part v = queue.front();
    queue.pop_front();
    for (Part e : g.out_edges(v)) {
      const Part w = g.tgt[e - 1];
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        parents[w - 1] = v;
        queue.push_back(w);
      }
    }
  }
  return parents;
}

/// Weak components by path-halving union-find, labeled 1.. in order of first
/// vertex.
inline std::vector<Part> connected_components(const EdgeList& g) {
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t e = 0; e < g.edges; ++e) {
    const auto a = find(static_cast<std::size_t>(g.src[e] - 1));
    const auto b = find(static_cast<std::size_t>(g.tgt[e] - 1));
    if (a != b) parent[a < b ? b : a] = a < b ? a : b;
  }
  std::vector<Part> label(g.vertices, 0);
  std::vector<Part> root_label(g.vertices, 0);
  Part next = 0;
  for (std::size_t v = 0; v < g.vertices; ++v) {
    const auto r = find(v);
    if (root_label[r] == 0) root_label[r] = ++next;
    label[v] = root_label[r];
  }
  return label;
}

}  // namespace acsets::bench
