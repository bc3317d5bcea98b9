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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "acsets/error.hpp"
#include "acsets/fixed_string.hpp"
#include "acsets/instance.hpp"

namespace acsets::graphs {

using EdgePairs = std::vector<std::pair<Part, Part>>;

/// Adds a pair of edges u -> v and v -> u paired by inv. A self-loop also
/// gets two edges. Errors: OutOfRange.
template <class G>
std::pair<Part, Part> add_symmetric_edge(G& g, Part u, Part v) {
  const auto nv = static_cast<Part>(g.template nparts<"V">());
  if (u < 1 || u > nv || v < 1 || v > nv) {
    fail(Errc::OutOfRange, "edge endpoint outside 1.." + std::to_string(nv));
  }
  auto range = g.template add_parts<"E">(2);
  const Part e = range.front();
  const Part f = e + 1;
  g.template set_subpart<"src">(e, u);
  g.template set_subpart<"tgt">(e, v);
  g.template set_subpart<"src">(f, v);
  g.template set_subpart<"tgt">(f, u);
  g.template set_subpart<"inv">(e, f);
  g.template set_subpart<"inv">(f, e);
  return {e, f};
}

template <class G>
void add_edges(G& g, const EdgePairs& edges) {
  for (const auto& [u, v] : edges) {
    g.template add_part<"E">(assign<"src">(u), assign<"tgt">(v));
  }
}

template <class G>
void add_symmetric_edges(G& g, const EdgePairs& edges) {
  for (const auto& [u, v] : edges) add_symmetric_edge(g, u, v);
}

// Edge lists in the order the graph constructors insert them.
EdgePairs path_edges(std::size_t n);
/// Every ordered pair u != v, lexicographically.
EdgePairs complete_edges(std::size_t n);
/// 1 -> i for i = 2..n.
EdgePairs star_edges(std::size_t n);
/// Unordered pairs u < v, lexicographically.
EdgePairs complete_pairs(std::size_t n);

/// G(n, p) over ordered pairs without loops, visited lexicographically with
/// geometric skips. Errors: BadParameter.
EdgePairs erdos_renyi_edges(std::size_t n, double p, std::uint64_t seed);
/// Directed ring lattice i -> i+j (j = 1..k/2), then each edge's target is
/// rewired with probability beta, avoiding loops and repeated edges.
/// Errors: BadParameter.
EdgePairs watts_strogatz_edges(std::size_t n, std::size_t k, double beta, std::uint64_t seed);
/// Chung-Lu model with expected degrees `weights`, sampled by the
/// Miller-Hagberg skipping method. Loops allowed. Errors: BadParameter.
EdgePairs expected_degree_edges(std::span<const double> weights, std::uint64_t seed);

template <class G>
void build_graph(G& g, std::size_t n, const EdgePairs& edges) {
  g.template add_parts<"V">(n);
  add_edges(g, edges);
}

// Runtime instances on Gr (indexed src, tgt) and SymGr (indexed src).
Instance make_graph(std::size_t n, const EdgePairs& edges);
Instance make_symmetric_graph(std::size_t n, const EdgePairs& undirected);

Instance path_graph(std::size_t n);
Instance complete_graph(std::size_t n);
Instance star_graph(std::size_t n);
Instance symmetric_path_graph(std::size_t n);
Instance symmetric_complete_graph(std::size_t n);
Instance symmetric_star_graph(std::size_t n);
Instance erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Instance watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);
Instance expected_degree_graph(std::span<const double> weights, std::uint64_t seed);

/// The 46-vertex, 69-edge Tutte graph, each edge oriented from the smaller
/// vertex number.
EdgePairs tutte_edges();
Instance tutte_graph();

}  // namespace acsets::graphs
