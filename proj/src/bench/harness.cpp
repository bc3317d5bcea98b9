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

#include "acsets/bench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "acsets/bench/baselines.hpp"
#include "acsets/error.hpp"
#include "acsets/graphs/algorithms.hpp"
#include "acsets/graphs/generators.hpp"
#include "acsets/graphs/random.hpp"
#include "acsets/graphs/schemas.hpp"

namespace acsets::bench {

namespace {

using graphs::EdgePairs;
using Checksum = std::uint64_t;
using Run = std::function<Checksum()>;

// Unindexed labels, for make-discrete.
template <class T>
using PlainLabeledGraph = StaticACSet<graphs::LabeledGraphDesc, std::tuple<T>, Indexed<"src", "tgt">>;

constexpr double kMinSampleNs = 1e6;

// Keeps the timed calls observable.
volatile Checksum g_sink = 0;

struct Case {
  std::size_t ops = 1;
  Run acset;
  Run baseline;
};

struct CaseSpec {
  std::string category;
  std::string benchmark;
  std::size_t size;
  std::function<Case()> make;
};

inline Checksum mix(Checksum h, std::uint64_t v) {
  return (h ^ v) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
}

Checksum mix_all(Checksum h, std::span<const Part> values) {
  for (Part v : values) h = mix(h, static_cast<std::uint64_t>(v));
  return h;
}

template <class G>
void build(G& g, std::size_t n, const EdgePairs& edges, bool symmetric) {
  g.template add_parts<"V">(n);
  if constexpr (std::is_same_v<G, graphs::SymmetricGraph>) {
    graphs::add_symmetric_edges(g, edges);
  } else {
    graphs::add_edges(g, edges);
  }
  (void)symmetric;
}

void build(AdjacencyList& a, std::size_t n, const EdgePairs& edges, bool symmetric) {
  a.add_vertices(n);
  for (const auto& [u, v] : edges) {
    a.add_edge(u, v);
    if (symmetric) a.add_edge(v, u);
  }
}

void build(EdgeList& a, std::size_t n, const EdgePairs& edges, bool symmetric) {
  a.add_vertices(n);
  for (const auto& [u, v] : edges) {
    a.add_edge(u, v);
    if (symmetric) a.add_edge(v, u);
  }
}

// Graph and SymmetricGraph share the same four cases.

template <class G>
Case make_path_case(std::size_t n, bool symmetric) {
  Case c;
  c.ops = n;
  c.acset = [n, symmetric] {
    G g;
    g.template add_parts<"V">(n);
    for (std::size_t i = 1; i < n; ++i) {
      const auto u = static_cast<Part>(i);
      if constexpr (std::is_same_v<G, graphs::SymmetricGraph>) {
        graphs::add_symmetric_edge(g, u, u + 1);
      } else {
        g.template add_part<"E">(assign<"src">(u), assign<"tgt">(u + 1));
      }
    }
    (void)symmetric;
    const std::size_t ne = g.template nparts<"E">();
    return mix(ne, ne ? static_cast<std::uint64_t>(g.template subpart<"tgt">(static_cast<Part>(ne))) : 0);
  };
  c.baseline = [n, symmetric] {
    AdjacencyList a;
    a.add_vertices(n);
    for (std::size_t i = 1; i < n; ++i) {
      const auto u = static_cast<Part>(i);
      a.add_edge(u, u + 1);
      if (symmetric) a.add_edge(u + 1, u);
    }
    return mix(a.edges, a.edges ? static_cast<std::uint64_t>(a.tgt.back()) : 0);
  };
  return c;
}

template <class G>
Case iter_edges_case(std::size_t n, bool symmetric) {
  auto g = std::make_shared<G>();
  auto a = std::make_shared<AdjacencyList>();
  const EdgePairs edges = graphs::path_edges(n);
  build(*g, n, edges, symmetric);
  build(*a, n, edges, symmetric);
  Case c;
  c.ops = a->edges == 0 ? 1 : a->edges;
  c.acset = [g] {
    std::uint64_t s = 0;
    const auto ne = static_cast<Part>(g->template nparts<"E">());
    for (Part e = 1; e <= ne; ++e) {
      s += static_cast<std::uint64_t>(g->template subpart<"src">(e) + g->template subpart<"tgt">(e));
    }
    return s;
  };
  c.baseline = [a] {
    std::uint64_t s = 0;
    for (std::size_t e = 0; e < a->edges; ++e) s += static_cast<std::uint64_t>(a->src[e] + a->tgt[e]);
    return s;
  };
  return c;
}

template <class G>
Case iter_neighbors_case(std::size_t n, bool symmetric) {
  auto g = std::make_shared<G>();
  auto a = std::make_shared<AdjacencyList>();
  const EdgePairs edges = graphs::path_edges(n);
  build(*g, n, edges, symmetric);
  build(*a, n, edges, symmetric);
  Case c;
  c.ops = n;
  c.acset = [g] {
    std::uint64_t s = 0;
    const auto nv = static_cast<Part>(g->template nparts<"V">());
    for (Part v = 1; v <= nv; ++v) {
      for (Part e : g->template incident<"src">(v)) {
        s += static_cast<std::uint64_t>(g->template subpart<"tgt">(e));
      }
    }
    return s;
  };
  c.baseline = [a] {
    std::uint64_t s = 0;
    const auto nv = static_cast<Part>(a->vertices);
    for (Part v = 1; v <= nv; ++v) {
      for (Part e : a->out_edges(v)) s += static_cast<std::uint64_t>(a->tgt[e - 1]);
    }
    return s;
  };
  return c;
}

template <class G>
Case has_edge_case(std::size_t n, bool symmetric) {
  auto g = std::make_shared<G>();
  auto a = std::make_shared<AdjacencyList>();
  const EdgePairs edges = symmetric ? graphs::complete_pairs(n) : graphs::complete_edges(n);
  build(*g, n, edges, symmetric);
  build(*a, n, edges, symmetric);
  Case c;
  c.ops = n * n;
  c.acset = [g, n] {
    std::uint64_t count = 0;
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t v = 1; v <= n; ++v) {
        count += graphs::has_edge(*g, static_cast<Part>(u), static_cast<Part>(v)) ? 1 : 0;
      }
    }
    return count;
  };
  c.baseline = [a, n] {
    std::uint64_t count = 0;
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t v = 1; v <= n; ++v) {
        count += a->has_edge(static_cast<Part>(u), static_cast<Part>(v)) ? 1 : 0;
      }
    }
    return count;
  };
  return c;
}

template <class G>
Case components_case(std::size_t n, const EdgePairs& edges, bool symmetric) {
  auto g = std::make_shared<G>();
  auto a = std::make_shared<EdgeList>();
  build(*g, n, edges, symmetric);
  build(*a, n, edges, symmetric);
  Case c;
  c.ops = n + a->edges;
  c.acset = [g] {
    FinFunction f = graphs::connected_components(*g);
    return mix_all(mix(0, f.codom().n), f.values());
  };
  c.baseline = [a] {
    std::vector<Part> labels = connected_components(*a);
    const Part k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    return mix_all(mix(0, static_cast<std::uint64_t>(k)), labels);
  };
  return c;
}

std::shared_ptr<const std::vector<std::string>> make_labels(std::size_t n) {
  auto labels = std::make_shared<std::vector<std::string>>();
  labels->reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels->push_back("vertex-" + std::to_string(i));
  return labels;
}

struct LabeledBaseline {
  AdjacencyList graph;
  std::vector<std::string> label;
  std::unordered_map<std::string, Part> by_label;
};

Case make_discrete_case(std::size_t n, bool indexed) {
  auto labels = make_labels(n);
  Case c;
  c.ops = n;
  auto finish = [](std::size_t nv, const std::string& last) {
    return mix(nv, last.size());
  };
  if (indexed) {
    c.acset = [labels, finish] {
      graphs::LabeledGraph<std::string> g;
      for (const auto& l : *labels) g.add_part<"V">(assign<"label">(l));
      const std::size_t nv = g.nparts<"V">();
      return finish(nv, nv ? g.subpart<"label">(static_cast<Part>(nv)) : std::string());
    };
    c.baseline = [labels, finish] {
      LabeledBaseline b;
      for (const auto& l : *labels) {
        b.graph.add_vertices(1);
        b.label.push_back(l);
        b.by_label.emplace(l, static_cast<Part>(b.graph.vertices));
      }
      return finish(b.graph.vertices, b.label.empty() ? std::string() : b.label.back());
    };
  } else {
    c.acset = [labels, finish] {
      PlainLabeledGraph<std::string> g;
      for (const auto& l : *labels) g.add_part<"V">(assign<"label">(l));
      const std::size_t nv = g.nparts<"V">();
      return finish(nv, nv ? g.subpart<"label">(static_cast<Part>(nv)) : std::string());
    };
    c.baseline = [labels, finish] {
      LabeledBaseline b;
      for (const auto& l : *labels) {
        b.graph.add_vertices(1);
        b.label.push_back(l);
      }
      return finish(b.graph.vertices, b.label.empty() ? std::string() : b.label.back());
    };
  }
  return c;
}

Case iter_labels_case(std::size_t n) {
  auto labels = make_labels(n);
  auto g = std::make_shared<graphs::LabeledGraph<std::string>>();
  auto b = std::make_shared<LabeledBaseline>();
  for (const auto& l : *labels) {
    g->add_part<"V">(assign<"label">(l));
    b->graph.add_vertices(1);
    b->label.push_back(l);
  }
  Case c;
  c.ops = n;
  c.acset = [g] {
    std::uint64_t s = 0;
    const auto nv = static_cast<Part>(g->nparts<"V">());
    for (Part v = 1; v <= nv; ++v) {
      const std::string& l = g->subpart<"label">(v);
      s += l.size() + static_cast<unsigned char>(l.back());
    }
    return s;
  };
  c.baseline = [b] {
    std::uint64_t s = 0;
    for (const std::string& l : b->label) s += l.size() + static_cast<unsigned char>(l.back());
    return s;
  };
  return c;
}

Case indexed_lookup_case(std::size_t n) {
  auto labels = make_labels(n);
  auto g = std::make_shared<graphs::LabeledGraph<std::string>>();
  auto b = std::make_shared<LabeledBaseline>();
  for (const auto& l : *labels) {
    g->add_part<"V">(assign<"label">(l));
    b->graph.add_vertices(1);
    b->label.push_back(l);
    b->by_label.emplace(l, static_cast<Part>(b->graph.vertices));
  }
  Case c;
  c.ops = n;
  c.acset = [g, labels] {
    std::uint64_t s = 0;
    for (const auto& l : *labels) s += static_cast<std::uint64_t>(g->incident<"label">(l)[0]);
    return s;
  };
  c.baseline = [b, labels] {
    std::uint64_t s = 0;
    for (const auto& l : *labels) s += static_cast<std::uint64_t>(b->by_label.find(l)->second);
    return s;
  };
  return c;
}

struct WeightedBaseline {
  AdjacencyList graph;
  std::vector<double> weight;
};

// A path on n vertices with edge e weighted e / 2.
std::pair<std::shared_ptr<graphs::WeightedGraph<double>>, std::shared_ptr<WeightedBaseline>> weighted_path(
    std::size_t n) {
  auto g = std::make_shared<graphs::WeightedGraph<double>>();
  auto b = std::make_shared<WeightedBaseline>();
  g->add_parts<"V">(n);
  b->graph.add_vertices(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto u = static_cast<Part>(i);
    const double w = 0.5 * static_cast<double>(i);
    g->add_part<"E">(assign<"src">(u), assign<"tgt">(u + 1), assign<"dec">(w));
    b->graph.add_edge(u, u + 1);
    b->weight.push_back(w);
  }
  return {g, b};
}

Case sum_weights_case(std::size_t n) {
  auto [g, b] = weighted_path(n);
  Case c;
  c.ops = std::max<std::size_t>(n - 1, 1);
  c.acset = [g = g] {
    double s = 0;
    const auto ne = static_cast<Part>(g->nparts<"E">());
    for (Part e = 1; e <= ne; ++e) s += g->subpart<"dec">(e);
    return std::bit_cast<Checksum>(s);
  };
  c.baseline = [b = b] {
    double s = 0;
    for (double w : b->weight) s += w;
    return std::bit_cast<Checksum>(s);
  };
  return c;
}

// Bulk update through the column view, or one set_subpart per edge.
Case increment_weights_case(std::size_t n, bool per_part) {
  auto [g, b] = weighted_path(n);
  Case c;
  c.ops = std::max<std::size_t>(n - 1, 1);
  if (per_part) {
    c.acset = [g = g] {
      const auto ne = static_cast<Part>(g->nparts<"E">());
      for (Part e = 1; e <= ne; ++e) g->set_subpart<"dec">(e, g->subpart<"dec">(e) + 1.0);
      return ne ? std::bit_cast<Checksum>(g->subpart<"dec">(ne)) : 0;
    };
  } else {
    c.acset = [g = g] {
      for (double& w : g->mutable_column<"dec">()) w += 1.0;
      const auto ne = static_cast<Part>(g->nparts<"E">());
      return ne ? std::bit_cast<Checksum>(g->subpart<"dec">(ne)) : 0;
    };
  }
  c.baseline = [b = b] {
    for (double& w : b->weight) w += 1.0;
    return b->weight.empty() ? 0 : std::bit_cast<Checksum>(b->weight.back());
  };
  return c;
}

// Random graph construction, timed from the edge sampler through the
// finished structure.
Case random_case(std::size_t n, std::function<EdgePairs()> sample) {
  Case c;
  c.ops = n;
  c.acset = [n, sample] {
    graphs::Graph g;
    graphs::build_graph(g, n, sample());
    const auto tgt = g.column<"tgt">();
    return mix_all(mix(0, g.nparts<"E">()), tgt);
  };
  c.baseline = [n, sample] {
    AdjacencyList a;
    build(a, n, sample(), false);
    return mix_all(mix(0, a.edges), a.tgt);
  };
  return c;
}

Case search_case(std::size_t n, double p, std::uint64_t seed, bool depth_first) {
  auto g = std::make_shared<graphs::Graph>();
  auto a = std::make_shared<AdjacencyList>();
  const EdgePairs edges = graphs::erdos_renyi_edges(n, p, seed);
  build(*g, n, edges, false);
  build(*a, n, edges, false);
  Case c;
  c.ops = n;
  c.acset = [g, depth_first] {
    auto parents = depth_first ? graphs::dfs_parents(*g, 1) : graphs::bfs_parents(*g, 1);
    return mix_all(0, parents);
  };
  c.baseline = [a, depth_first] {
    auto parents = depth_first ? dfs_parents(*a, 1) : bfs_parents(*a, 1);
    return mix_all(0, parents);
  };
  return c;
}

std::vector<double> sampled_weights(std::size_t n, double mean, std::uint64_t seed) {
  graphs::Xoshiro256 rng(seed);
  std::vector<double> w(n);
  for (auto& x : w) x = 2.0 * mean * rng.uniform();
  return w;
}

std::vector<CaseSpec> all_cases(const BenchOptions& o) {
  using graphs::Graph;
  using graphs::SymmetricGraph;
  std::vector<CaseSpec> cases;
  auto add = [&](std::string cat, std::string name, std::size_t size, std::function<Case()> make) {
    cases.push_back({std::move(cat), std::move(name), size, std::move(make)});
  };
  for (bool sym : {false, true}) {
    const std::string cat = sym ? "SymmetricGraph" : "Graph";
    for (std::size_t n : o.sizes) {
      if (sym) {
        add(cat, "iter-neighbors", n, [n] { return iter_neighbors_case<SymmetricGraph>(n, true); });
        add(cat, "iter-edges", n, [n] { return iter_edges_case<SymmetricGraph>(n, true); });
        add(cat, "make-path", n, [n] { return make_path_case<SymmetricGraph>(n, true); });
      } else {
        add(cat, "iter-neighbors", n, [n] { return iter_neighbors_case<Graph>(n, false); });
        add(cat, "iter-edges", n, [n] { return iter_edges_case<Graph>(n, false); });
        add(cat, "make-path", n, [n] { return make_path_case<Graph>(n, false); });
      }
    }
    if (sym) {
      add(cat, "has-edge", 100, [] { return has_edge_case<SymmetricGraph>(100, true); });
    } else {
      add(cat, "has-edge", 100, [] { return has_edge_case<Graph>(100, false); });
    }
  }
  for (std::size_t n : o.sizes) {
    add("GraphConnComponents", "path-graph", n,
        [n] { return components_case<Graph>(n, graphs::path_edges(n), false); });
  }
  add("GraphConnComponents", "complete100", 100,
      [] { return components_case<Graph>(100, graphs::complete_edges(100), false); });
  add("GraphConnComponents", "path500", 500,
      [] { return components_case<Graph>(500, graphs::path_edges(500), false); });
  for (std::size_t n : o.sizes) {
    add("GraphConnComponents", "star-graph", n,
        [n] { return components_case<Graph>(n, graphs::star_edges(n), false); });
  }
  const std::string sym_cc = "SymmetricGraphConnComponents";
  for (std::size_t n : o.sizes) {
    add(sym_cc, "path-graph-components", n,
        [n] { return components_case<SymmetricGraph>(n, graphs::path_edges(n), true); });
  }
  for (std::size_t n : o.sizes) {
    add(sym_cc, "star-graph-components", n,
        [n] { return components_case<SymmetricGraph>(n, graphs::star_edges(n), true); });
  }
  add(sym_cc, "complete100", 100,
      [] { return components_case<SymmetricGraph>(100, graphs::complete_pairs(100), true); });
  add(sym_cc, "path500", 500, [] { return components_case<SymmetricGraph>(500, graphs::path_edges(500), true); });
  add(sym_cc, "tutte", 46, [] { return components_case<SymmetricGraph>(46, graphs::tutte_edges(), true); });
  for (std::size_t n : o.sizes) {
    add("LabeledGraph", "indexed-lookup", n, [n] { return indexed_lookup_case(n); });
    add("LabeledGraph", "make-discrete", n, [n] { return make_discrete_case(n, false); });
    add("LabeledGraph", "iter-labels", n, [n] { return iter_labels_case(n); });
    add("LabeledGraph", "make-discrete-indexed", n, [n] { return make_discrete_case(n, true); });
  }
  for (std::size_t n : o.sizes) {
    add("WeightedGraph", "sum-weights", n, [n] { return sum_weights_case(n); });
    add("WeightedGraph", "increment-weights", n, [n] { return increment_weights_case(n, false); });
    add("WeightedGraph", "increment-weights-subpart", n, [n] { return increment_weights_case(n, true); });
  }
  const std::uint64_t seed = o.seed;
  const std::size_t nr = 10000;
  add("RandomGraph", "expected_degree_graph-10000-10", nr, [nr, seed] {
    auto w = std::make_shared<std::vector<double>>(sampled_weights(nr, 10.0, seed));
    return random_case(nr, [w, seed] { return graphs::expected_degree_edges(*w, seed + 1); });
  });
  add("RandomGraph", "watts_strogatz-10000-10", nr, [nr, seed] {
    return random_case(nr, [nr, seed] { return graphs::watts_strogatz_edges(nr, 10, 0.1, seed); });
  });
  add("RandomGraph", "erdos_renyi-10000-0.001", nr, [nr, seed] {
    return random_case(nr, [nr, seed] { return graphs::erdos_renyi_edges(nr, 0.001, seed); });
  });
  add("Searching", "dfs_erdos_renyi-10000-0.001", nr, [nr, seed] { return search_case(nr, 0.001, seed, true); });
  add("Searching", "bfs_erdos_renyi-10000-0.001", nr, [nr, seed] { return search_case(nr, 0.001, seed, false); });
  return cases;
}

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point start) {
  return std::chrono::duration<double, std::nano>(Clock::now() - start).count();
}

std::size_t batch_for(const Run& f, Checksum& sink) {
  auto start = Clock::now();
  sink ^= f();
  const double once = std::max(elapsed_ns(start), 1.0);
  return once >= kMinSampleNs ? 1 : static_cast<std::size_t>(std::ceil(kMinSampleNs / once));
}

double median(std::vector<double> xs) {
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid), xs.end());
  double hi = xs[mid];
  if (xs.size() % 2 == 1) return hi;
  return 0.5 * (hi + *std::max_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(mid)));
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

std::vector<std::string> bench_categories() {
  return {"Graph",        "SymmetricGraph", "GraphConnComponents", "SymmetricGraphConnComponents",
          "LabeledGraph", "WeightedGraph",  "RandomGraph",         "Searching"};
}

BenchReport run_benchmarks(const BenchOptions& o) {
  if (o.reps < 20) fail(Errc::BadParameter, "at least 20 repetitions are required");
  if (o.sizes.empty()) fail(Errc::BadParameter, "no benchmark sizes given");
  for (std::size_t n : o.sizes) {
    if (n < 2) fail(Errc::BadParameter, "benchmark sizes must be at least 2");
  }
  auto cats = bench_categories();
  if (o.suite != "all" && std::find(cats.begin(), cats.end(), o.suite) == cats.end()) {
    fail(Errc::BadParameter, "unknown benchmark suite '" + o.suite + "'");
  }
  std::vector<CaseSpec> selected;
  for (auto& spec : all_cases(o)) {
    if (o.suite != "all" && spec.category != o.suite) continue;
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), spec.benchmark) == o.only.end()) continue;
    selected.push_back(std::move(spec));
  }
  if (selected.empty()) fail(Errc::BadParameter, "no benchmark matches the selection");

  BenchReport report;
  Checksum sink = 0;
  for (const auto& spec : selected) {
    Case c = spec.make();
    const Checksum got = c.acset();
    const Checksum want = c.baseline();
    if (got != want) {
      fail(Errc::ResultMismatch, spec.category + "/" + spec.benchmark + " size " + std::to_string(spec.size) +
                                     ": acset result differs from baseline");
    }
    const std::size_t acset_batch = batch_for(c.acset, sink);
    const std::size_t base_batch = batch_for(c.baseline, sink);
    std::vector<double> acset_ns;
    std::vector<double> base_ns;
    for (std::size_t r = 0; r < o.reps; ++r) {
      auto start = Clock::now();
      for (std::size_t b = 0; b < acset_batch; ++b) sink ^= c.acset();
      acset_ns.push_back(elapsed_ns(start) / static_cast<double>(acset_batch * c.ops));
      start = Clock::now();
      for (std::size_t b = 0; b < base_batch; ++b) sink ^= c.baseline();
      base_ns.push_back(elapsed_ns(start) / static_cast<double>(base_batch * c.ops));
    }
    BenchRow row{spec.category, spec.benchmark, spec.size, median(acset_ns), median(base_ns), 0};
    row.ratio = row.baseline_ns > 0 ? row.acset_ns / row.baseline_ns : 0;
    if (o.on_row) o.on_row(row);
    report.rows.push_back(std::move(row));
  }
  g_sink = g_sink ^ sink;
  return report;
}

std::string BenchReport::csv() const {
  std::ostringstream out;
  out << "category,benchmark,size,acset_ns,baseline_ns,ratio\n";
  for (const auto& r : rows) {
    out << r.category << ',' << r.benchmark << ',' << r.size << ',' << format_double(r.acset_ns, 3) << ','
        << format_double(r.baseline_ns, 3) << ',' << format_double(r.ratio, 4) << '\n';
  }
  return out.str();
}

std::string BenchReport::table() const {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"category", "benchmark", "size", "acset ns/op", "baseline ns/op", "ratio"});
  for (const auto& r : rows) {
    cells.push_back({r.category, r.benchmark, std::to_string(r.size), format_double(r.acset_ns, 3),
                     format_double(r.baseline_ns, 3), format_double(r.ratio, 3)});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < 6; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < 6; ++i) {
      const std::string pad(width[i] - row[i].size(), ' ');
      if (i < 2) {
        out << row[i] << pad;
      } else {
        out << pad << row[i];
      }
      out << (i + 1 < 6 ? "  " : "\n");
    }
  }
  return out.str();
}

const BenchRow* BenchReport::find(std::string_view category, std::string_view benchmark, std::size_t size) const {
  for (const auto& r : rows) {
    if (r.category == category && r.benchmark == benchmark && r.size == size) return &r;
  }
  return nullptr;
}

}  // namespace acsets::bench
