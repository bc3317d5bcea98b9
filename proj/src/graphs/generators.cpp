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

#include "acsets/graphs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "acsets/graphs/random.hpp"
#include "acsets/graphs/schemas.hpp"

namespace acsets::graphs {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(Errc::BadParameter, std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

EdgePairs path_edges(std::size_t n) {
  EdgePairs out;
  for (std::size_t i = 1; i < n; ++i) out.emplace_back(static_cast<Part>(i), static_cast<Part>(i + 1));
  return out;
}

EdgePairs complete_edges(std::size_t n) {
  EdgePairs out;
  out.reserve(n * (n > 0 ? n - 1 : 0));
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = 1; v <= n; ++v) {
      if (u != v) out.emplace_back(static_cast<Part>(u), static_cast<Part>(v));
    }
  }
  return out;
}

EdgePairs star_edges(std::size_t n) {
  EdgePairs out;
  for (std::size_t i = 2; i <= n; ++i) out.emplace_back(1, static_cast<Part>(i));
  return out;
}

EdgePairs complete_pairs(std::size_t n) {
  EdgePairs out;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) out.emplace_back(static_cast<Part>(u), static_cast<Part>(v));
  }
  return out;
}

EdgePairs erdos_renyi_edges(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "edge probability");
  EdgePairs out;
  if (n < 2 || p == 0.0) return out;
  const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n - 1);
  auto emit = [&](std::uint64_t k) {
    const std::uint64_t u = k / (n - 1);
    const std::uint64_t w = k % (n - 1);
    const std::uint64_t v = w < u ? w : w + 1;
    out.emplace_back(static_cast<Part>(u + 1), static_cast<Part>(v + 1));
  };
  if (p == 1.0) {
    for (std::uint64_t k = 0; k < slots; ++k) emit(k);
    return out;
  }
  Xoshiro256 rng(seed);
  const double log_q = std::log1p(-p);
  std::uint64_t k = 0;
  while (true) {
    const double r = rng.uniform();
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip >= static_cast<double>(slots - k)) break;
    k += static_cast<std::uint64_t>(skip);
    emit(k);
    if (++k >= slots) break;
  }
  return out;
}

EdgePairs watts_strogatz_edges(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  check_probability(beta, "rewiring probability");
  if (k >= n && n > 0) fail(Errc::BadParameter, "ring degree k must be below n");
  EdgePairs out;
  std::unordered_set<std::uint64_t> present;
  auto key = [n](Part u, Part v) {
    return static_cast<std::uint64_t>(u - 1) * n + static_cast<std::uint64_t>(v - 1);
  };
  const std::size_t half = k / 2;
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Part u = static_cast<Part>(i + 1);
      Part v = static_cast<Part>((i + j) % n + 1);
      out.emplace_back(u, v);
      present.insert(key(u, v));
    }
  }
  Xoshiro256 rng(seed);
  for (auto& [u, v] : out) {
    if (rng.uniform() >= beta) continue;
    // Every other vertex is already a target: nothing to rewire to.
    if (half >= n - 1) continue;
    Part w;
    do {
      w = static_cast<Part>(rng.below(n) + 1);
    } while (w == u || present.count(key(u, w)));
    present.erase(key(u, v));
    present.insert(key(u, w));
    v = w;
  }
  return out;
}

EdgePairs expected_degree_edges(std::span<const double> weights, std::uint64_t seed) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      fail(Errc::BadParameter, "expected degrees must be finite and non-negative");
    }
  }
  EdgePairs out;
  const std::size_t n = weights.size();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (n == 0 || total == 0.0) return out;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  Xoshiro256 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double wu = weights[order[i]];
    if (wu == 0.0) break;
    std::size_t j = i;
    double p = std::min(wu * weights[order[j]] / total, 1.0);
    while (j < n && p > 0.0) {
      if (p != 1.0) {
        const double r = rng.uniform();
        const double skip = std::floor(std::log1p(-r) / std::log1p(-p));
        if (skip >= static_cast<double>(n - j)) break;
        j += static_cast<std::size_t>(skip);
      }
      if (j >= n) break;
      const double q = std::min(wu * weights[order[j]] / total, 1.0);
      if (rng.uniform() < q / p) {
        out.emplace_back(static_cast<Part>(order[i] + 1), static_cast<Part>(order[j] + 1));
      }
      p = q;
      ++j;
    }
  }
  return out;
}

Instance make_graph(std::size_t n, const EdgePairs& edges) {
  Instance g(graph_schema(), {}, IndexSpec{{"src", "tgt"}, {}});
  g.add_parts(g.schema().ob("V"), n);
  const ObId e = g.schema().ob("E");
  const HomId src = g.schema().hom("src");
  const HomId tgt = g.schema().hom("tgt");
  Part first = g.add_parts(e, edges.size()).front();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    g.set_hom(first + static_cast<Part>(i), src, edges[i].first);
    g.set_hom(first + static_cast<Part>(i), tgt, edges[i].second);
  }
  return g;
}

Instance make_symmetric_graph(std::size_t n, const EdgePairs& undirected) {
  Instance g(symmetric_graph_schema(), {}, IndexSpec{{"src"}, {}});
  g.add_parts(g.schema().ob("V"), n);
  add_symmetric_edges(g, undirected);
  return g;
}

Instance path_graph(std::size_t n) { return make_graph(n, path_edges(n)); }
Instance complete_graph(std::size_t n) { return make_graph(n, complete_edges(n)); }
Instance star_graph(std::size_t n) { return make_graph(n, star_edges(n)); }
Instance symmetric_path_graph(std::size_t n) { return make_symmetric_graph(n, path_edges(n)); }
Instance symmetric_complete_graph(std::size_t n) {
  return make_symmetric_graph(n, complete_pairs(n));
}
Instance symmetric_star_graph(std::size_t n) { return make_symmetric_graph(n, star_edges(n)); }

Instance erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  return make_graph(n, erdos_renyi_edges(n, p, seed));
}
Instance watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  return make_graph(n, watts_strogatz_edges(n, k, beta, seed));
}
Instance expected_degree_graph(std::span<const double> weights, std::uint64_t seed) {
  return make_graph(weights.size(), expected_degree_edges(weights, seed));
}

EdgePairs tutte_edges() {
  return {{1, 2},   {1, 3},   {1, 4},   {2, 5},   {2, 27},  {3, 11},  {3, 12},  {4, 19},  {4, 20},
          {5, 6},   {5, 34},  {6, 7},   {6, 30},  {7, 8},   {7, 28},  {8, 9},   {8, 15},  {9, 10},
          {9, 39},  {10, 11}, {10, 38}, {11, 40}, {12, 13}, {12, 40}, {13, 14}, {13, 36}, {14, 15},
          {14, 16}, {15, 35}, {16, 17}, {16, 23}, {17, 18}, {17, 45}, {18, 19}, {18, 44}, {19, 46},
          {20, 21}, {20, 46}, {21, 22}, {21, 42}, {22, 23}, {22, 24}, {23, 41}, {24, 25}, {24, 28},
          {25, 26}, {25, 33}, {26, 27}, {26, 32}, {27, 34}, {28, 29}, {29, 30}, {29, 33}, {30, 31},
          {31, 32}, {31, 34}, {32, 33}, {35, 36}, {35, 39}, {36, 37}, {37, 38}, {37, 40}, {38, 39},
          {41, 42}, {41, 45}, {42, 43}, {43, 44}, {43, 46}, {44, 45}};
}

Instance tutte_graph() { return make_graph(46, tutte_edges()); }

}  // namespace acsets::graphs
