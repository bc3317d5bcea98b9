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

#include "acsets/finset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "acsets/error.hpp"

namespace acsets {

FinFunction::FinFunction(std::vector<Part> values, std::size_t codom)
    : values_(std::move(values)), codom_(codom) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    Part v = values_[i];
    if (v < 1 || static_cast<std::size_t>(v) > codom_) {
      fail(Errc::OutOfRange, "value " + std::to_string(v) + " at " + std::to_string(i + 1) +
                                 " is outside 1.." + std::to_string(codom_));
    }
  }
}

FinFunction FinFunction::identity(std::size_t n) {
  std::vector<Part> values(n);
  std::iota(values.begin(), values.end(), Part{1});
  return FinFunction(std::move(values), n);
}

FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (f.codom() != g.dom()) {
    fail(Errc::NonComposable, "codomain " + std::to_string(f.codom().n) +
                                  " does not match domain " + std::to_string(g.dom().n));
  }
  std::vector<Part> values;
  values.reserve(f.dom().n);
  for (Part v : f.values()) values.push_back(g(v));
  return FinFunction(std::move(values), g.codom().n);
}

UnionFind::UnionFind(std::size_t n) : parent_(n), class_size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (class_size_[a] < class_size_[b]) std::swap(a, b);
  parent_[b] = a;
  class_size_[a] += class_size_[b];
  return true;
}

FinFunction UnionFind::quotient_projection() {
  const std::size_t n = parent_.size();
  std::vector<Part> label_of_root(n, 0);
  std::vector<Part> values(n);
  Part next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (label_of_root[root] == 0) label_of_root[root] = ++next;
    values[i] = label_of_root[root];
  }
  return FinFunction(std::move(values), static_cast<std::size_t>(next));
}

FinFunction coequalizer(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom() || f.codom() != g.codom()) {
    fail(Errc::NonParallel, "coequalizer needs a parallel pair");
  }
  UnionFind sets(f.codom().n);
  for (std::size_t i = 0; i < f.dom().n; ++i) {
    sets.unite(static_cast<std::size_t>(f.values()[i] - 1),
               static_cast<std::size_t>(g.values()[i] - 1));
  }
  return sets.quotient_projection();
}

void FinSetDiagram::check() const {
  if (objects.size() != shape.vertices) {
    fail(Errc::InvalidDiagram, "expected " + std::to_string(shape.vertices) +
                                   " objects, got " + std::to_string(objects.size()));
  }
  if (arrows.size() != shape.arrows.size()) {
    fail(Errc::InvalidDiagram, "expected " + std::to_string(shape.arrows.size()) +
                                   " arrows, got " + std::to_string(arrows.size()));
  }
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& arrow = shape.arrows[a];
    if (arrow.src >= shape.vertices || arrow.tgt >= shape.vertices) {
      fail(Errc::InvalidDiagram, "arrow " + std::to_string(a) + " leaves the shape");
    }
    if (arrows[a].dom() != objects[arrow.src] || arrows[a].codom() != objects[arrow.tgt]) {
      fail(Errc::InvalidDiagram,
           "arrow " + std::to_string(a) + " does not match its dom/codom objects");
    }
  }
}

Cocone colimit(const FinSetDiagram& d) {
  d.check();
  std::vector<std::size_t> offset(d.objects.size() + 1, 0);
  for (std::size_t v = 0; v < d.objects.size(); ++v) offset[v + 1] = offset[v] + d.objects[v].n;

  UnionFind sets(offset.back());
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& arrow = d.shape.arrows[a];
    const auto values = d.arrows[a].values();
    for (std::size_t x = 0; x < values.size(); ++x) {
      sets.unite(offset[arrow.src] + x,
                 offset[arrow.tgt] + static_cast<std::size_t>(values[x] - 1));
    }
  }
  FinFunction projection = sets.quotient_projection();

  Cocone out;
  out.apex = projection.codom();
  for (std::size_t v = 0; v < d.objects.size(); ++v) {
    std::vector<Part> leg(projection.values().begin() + static_cast<std::ptrdiff_t>(offset[v]),
                          projection.values().begin() + static_cast<std::ptrdiff_t>(offset[v + 1]));
    out.legs.emplace_back(std::move(leg), out.apex.n);
  }
  return out;
}

namespace {

struct LimitSearch {
  const FinSetDiagram& d;
  // Arrow that fixes x_v from an earlier vertex, if any.
  std::vector<std::ptrdiff_t> forced_by;
  // Arrows checked once vertex v is assigned (both ends <= v).
  std::vector<std::vector<std::size_t>> checks;
  std::vector<Part> tuple;
  std::vector<std::vector<Part>> legs;
  std::size_t count = 0;

  explicit LimitSearch(const FinSetDiagram& diagram)
      : d(diagram),
        forced_by(diagram.shape.vertices, -1),
        checks(diagram.shape.vertices),
        tuple(diagram.shape.vertices, 0),
        legs(diagram.shape.vertices) {
    for (std::size_t a = 0; a < d.shape.arrows.size(); ++a) {
      const auto& arrow = d.shape.arrows[a];
      std::size_t last = std::max(arrow.src, arrow.tgt);
      checks[last].push_back(a);
      if (arrow.src < arrow.tgt && forced_by[arrow.tgt] < 0) {
        forced_by[arrow.tgt] = static_cast<std::ptrdiff_t>(a);
      }
    }
  }

  bool consistent(std::size_t v) const {
    for (std::size_t a : checks[v]) {
      const auto& arrow = d.shape.arrows[a];
      if (d.arrows[a](tuple[arrow.src]) != tuple[arrow.tgt]) return false;
    }
    return true;
  }

  void run(std::size_t v) {
    if (v == d.shape.vertices) {
      ++count;
      for (std::size_t w = 0; w < tuple.size(); ++w) legs[w].push_back(tuple[w]);
      return;
    }
    if (forced_by[v] >= 0) {
      std::size_t a = static_cast<std::size_t>(forced_by[v]);
      tuple[v] = d.arrows[a](tuple[d.shape.arrows[a].src]);
      if (consistent(v)) run(v + 1);
      return;
    }
    const auto n = static_cast<Part>(d.objects[v].n);
    for (Part x = 1; x <= n; ++x) {
      tuple[v] = x;
      if (consistent(v)) run(v + 1);
    }
  }
};

}  // namespace

Cone limit(const FinSetDiagram& d) {
  d.check();
  LimitSearch search(d);
  search.run(0);
  Cone out;
  out.apex = FinSet{search.count};
  for (std::size_t v = 0; v < d.objects.size(); ++v) {
    out.legs.emplace_back(std::move(search.legs[v]), d.objects[v].n);
  }
  return out;
}

FinFunction factorize(const Cocone& colim, const FinSetDiagram& d, const Cocone& c) {
  d.check();
  if (c.legs.size() != d.objects.size() || colim.legs.size() != d.objects.size()) {
    fail(Errc::NotACocone, "cocone has the wrong number of legs");
  }
  for (std::size_t v = 0; v < c.legs.size(); ++v) {
    if (c.legs[v].dom() != d.objects[v] || c.legs[v].codom() != c.apex) {
      fail(Errc::NotACocone, "leg " + std::to_string(v) + " has the wrong dom/codom");
    }
  }
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& arrow = d.shape.arrows[a];
    if (compose(d.arrows[a], c.legs[arrow.tgt]) != c.legs[arrow.src]) {
      fail(Errc::NotACocone, "cocone square for arrow " + std::to_string(a) + " fails");
    }
  }
  std::vector<Part> values(colim.apex.n, 0);
  for (std::size_t v = 0; v < c.legs.size(); ++v) {
    for (std::size_t x = 0; x < d.objects[v].n; ++x) {
      auto k = static_cast<std::size_t>(colim.legs[v].values()[x] - 1);
      Part target = c.legs[v].values()[x];
      if (values[k] == 0) {
        values[k] = target;
      } else if (values[k] != target) {
        fail(Errc::NotACocone, "competing cocone separates glued elements");
      }
    }
  }
  for (Part v : values) {
    if (v == 0) fail(Errc::NotACocone, "colimit legs are not jointly surjective");
  }
  return FinFunction(std::move(values), c.apex.n);
}

FinFunction factorize(const Cone& lim, const FinSetDiagram& d, const Cone& c) {
  d.check();
  if (c.legs.size() != d.objects.size() || lim.legs.size() != d.objects.size()) {
    fail(Errc::NotACone, "cone has the wrong number of legs");
  }
  for (std::size_t v = 0; v < c.legs.size(); ++v) {
    if (c.legs[v].dom() != c.apex || c.legs[v].codom() != d.objects[v]) {
      fail(Errc::NotACone, "leg " + std::to_string(v) + " has the wrong dom/codom");
    }
  }
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& arrow = d.shape.arrows[a];
    if (compose(c.legs[arrow.src], d.arrows[a]) != c.legs[arrow.tgt]) {
      fail(Errc::NotACone, "cone triangle for arrow " + std::to_string(a) + " fails");
    }
  }
  std::map<std::vector<Part>, Part> index;
  for (std::size_t i = 0; i < lim.apex.n; ++i) {
    std::vector<Part> key;
    for (const auto& leg : lim.legs) key.push_back(leg.values()[i]);
    index.emplace(std::move(key), static_cast<Part>(i + 1));
  }
  std::vector<Part> values;
  values.reserve(c.apex.n);
  for (std::size_t x = 0; x < c.apex.n; ++x) {
    std::vector<Part> key;
    for (const auto& leg : c.legs) key.push_back(leg.values()[x]);
    auto it = index.find(key);
    if (it == index.end()) fail(Errc::NotACone, "competing cone hits no limit element");
    values.push_back(it->second);
  }
  return FinFunction(std::move(values), lim.apex.n);
}

Cocone coproduct(std::span<const FinSet> sets) {
  FinSetDiagram d{Shape::discrete(sets.size()), {sets.begin(), sets.end()}, {}};
  return colimit(d);
}

Cone product(std::span<const FinSet> sets) {
  FinSetDiagram d{Shape::discrete(sets.size()), {sets.begin(), sets.end()}, {}};
  return limit(d);
}

Cocone pushout(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom()) fail(Errc::InvalidDiagram, "pushout legs must share a domain");
  FinSetDiagram d{Shape::span(), {f.codom(), g.codom(), f.dom()}, {f, g}};
  return colimit(d);
}

Cone pullback(const FinFunction& f, const FinFunction& g) {
  if (f.codom() != g.codom()) fail(Errc::InvalidDiagram, "pullback legs must share a codomain");
  FinSetDiagram d{Shape::cospan(), {f.dom(), g.dom(), f.codom()}, {f, g}};
  return limit(d);
}

Cone equalizer(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom() || f.codom() != g.codom()) {
    fail(Errc::NonParallel, "equalizer needs a parallel pair");
  }
  FinSetDiagram d{Shape::parallel_pair(), {f.dom(), f.codom()}, {f, g}};
  return limit(d);
}

}  // namespace acsets
