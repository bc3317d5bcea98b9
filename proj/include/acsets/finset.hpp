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

namespace acsets {

/// Parts are numbered 1..n; 0 marks an undefined reference.
using Part = std::int64_t;

/// The finite set {1, ..., n}.
struct FinSet {
  std::size_t n = 0;
  friend bool operator==(FinSet, FinSet) = default;
};

/// A function {1..m} -> {1..n} stored as its value sequence.
class FinFunction {
 public:
  FinFunction() = default;
  /// Errors: OutOfRange if some value is outside 1..codom.
  FinFunction(std::vector<Part> values, std::size_t codom);

  static FinFunction identity(std::size_t n);

  FinSet dom() const noexcept { return FinSet{values_.size()}; }
  FinSet codom() const noexcept { return FinSet{codom_}; }
  std::span<const Part> values() const noexcept { return values_; }

  Part operator()(Part x) const { return values_[static_cast<std::size_t>(x - 1)]; }

  friend bool operator==(const FinFunction&, const FinFunction&) = default;

 private:
  std::vector<Part> values_;
  std::size_t codom_ = 0;
};

/// Diagrammatic composite x |-> g(f(x)). Errors: NonComposable.
FinFunction compose(const FinFunction& f, const FinFunction& g);

/// Disjoint sets over {0..n-1} with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t find(std::size_t x);
  /// Returns true when two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b);

  /// Class label (1-based) of every element, classes numbered by first
  /// occurrence in 0..n-1 order.
  FinFunction quotient_projection();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> class_size_;
};

/// Projection onto the quotient of codom(f) by the equivalence generated by
/// f(a) ~ g(a). Classes are numbered by first occurrence. Errors: NonParallel.
FinFunction coequalizer(const FinFunction& f, const FinFunction& g);

/// A free finite category: vertices 0..n-1 and arrows between them.
struct Shape {
  struct Arrow {
    std::size_t src = 0;
    std::size_t tgt = 0;
    friend bool operator==(Arrow, Arrow) = default;
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;

  static Shape discrete(std::size_t n) { return Shape{n, {}}; }
  /// 0 => 1 (two arrows).
  static Shape parallel_pair() { return Shape{2, {{0, 1}, {0, 1}}}; }
  /// Vertices (B, C, A) with arrows A -> B and A -> C.
  static Shape span() { return Shape{3, {{2, 0}, {2, 1}}}; }
  /// Vertices (B, C, A) with arrows B -> A and C -> A.
  static Shape cospan() { return Shape{3, {{0, 2}, {1, 2}}}; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

struct FinSetDiagram {
  Shape shape;
  std::vector<FinSet> objects;
  std::vector<FinFunction> arrows;

  /// Errors: InvalidDiagram.
  void check() const;
};

struct Cocone {
  FinSet apex;
  std::vector<FinFunction> legs;
};

struct Cone {
  FinSet apex;
  std::vector<FinFunction> legs;
};

/// Quotient of the disjoint union of the objects by the arrows. Apex elements
/// are numbered by first occurrence in (vertex, element) order.
Cocone colimit(const FinSetDiagram& d);

/// Set of matching tuples, enumerated in lexicographic order of
/// (x_0, x_1, ...) with arrow constraints applied as soon as both ends are set.
Cone limit(const FinSetDiagram& d);

/// Unique u with u . colim.legs[i] == c.legs[i]. Errors: NotACocone.
FinFunction factorize(const Cocone& colim, const FinSetDiagram& d, const Cocone& c);

/// Unique u with lim.legs[i] . u == c.legs[i]. Errors: NotACone.
FinFunction factorize(const Cone& lim, const FinSetDiagram& d, const Cone& c);

// Common shapes. Pushout/pullback cones list legs in (B, C, A) order.
Cocone coproduct(std::span<const FinSet> sets);
Cone product(std::span<const FinSet> sets);
Cocone pushout(const FinFunction& f, const FinFunction& g);   // f: A->B, g: A->C
Cone pullback(const FinFunction& f, const FinFunction& g);    // f: B->A, g: C->A
Cone equalizer(const FinFunction& f, const FinFunction& g);

}  // namespace acsets
