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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "acsets/finset.hpp"
#include "acsets/instance.hpp"

namespace acsets {

using InstancePtr = std::shared_ptr<const Instance>;

inline InstancePtr share(Instance x) { return std::make_shared<const Instance>(std::move(x)); }

/// A natural transformation between instances on the same schema, one
/// FinFunction per object, preserving attributes.
struct ACSetMorphism {
  InstancePtr dom;
  InstancePtr codom;
  std::vector<FinFunction> components;  // indexed by ObId

  const FinFunction& operator[](ObId ob) const { return components.at(ob.index); }
  const FinFunction& component(std::string_view ob) const {
    return components.at(dom->schema().ob(ob).index);
  }
};

/// Checks naturality and attribute preservation. An undefined hom value is
/// treated as mapping to undefined.
/// Errors: SchemaMismatch, BadParameter (component sizes), NotNatural,
/// AttributeMismatch.
ACSetMorphism make_morphism(InstancePtr dom, InstancePtr codom, std::vector<FinFunction> components);
ACSetMorphism make_morphism(InstancePtr dom, InstancePtr codom,
                            const std::map<std::string, std::vector<Part>>& components);

/// As make_morphism without the attribute check: a morphism of the
/// underlying C-sets.
ACSetMorphism make_cset_morphism(InstancePtr dom, InstancePtr codom,
                                 std::vector<FinFunction> components);

ACSetMorphism identity_morphism(InstancePtr x);

/// Diagrammatic composite: first f, then g. Errors: NonComposable.
ACSetMorphism compose(const ACSetMorphism& f, const ACSetMorphism& g);

bool operator==(const ACSetMorphism& f, const ACSetMorphism& g);

struct ACSetDiagram {
  Shape shape;
  std::vector<InstancePtr> objects;
  std::vector<ACSetMorphism> arrows;
  /// Used when the diagram has no vertices; otherwise taken from objects.
  std::shared_ptr<const Schema> schema;
  Typing typing;

  /// Errors: InvalidDiagram.
  void check() const;
  FinSetDiagram at(ObId ob) const;
};

struct ACSetCocone {
  InstancePtr apex;
  std::vector<ACSetMorphism> legs;
};

struct ACSetCone {
  InstancePtr apex;
  std::vector<ACSetMorphism> legs;
};

/// Pointwise colimit. Homs on a class come from any member (naturality makes
/// the choice irrelevant); attributes of merged parts must agree.
/// Errors: InvalidDiagram, IncompleteInstance, AttributeConflict.
ACSetCocone acset_colimit(const ACSetDiagram& d);

/// Pointwise limit of the underlying C-sets, restricted to the tuples whose
/// components agree on every attribute reachable by a path. Tuples stay in
/// lexicographic order.
/// Errors: InvalidDiagram, IncompleteInstance.
ACSetCone acset_limit(const ACSetDiagram& d);

/// Errors: NotACocone.
ACSetMorphism factorize(const ACSetCocone& colim, const ACSetDiagram& d, const ACSetCocone& c);
/// Errors: NotACone.
ACSetMorphism factorize(const ACSetCone& lim, const ACSetDiagram& d, const ACSetCone& c);

ACSetCocone acset_coproduct(const std::vector<InstancePtr>& xs);
ACSetCone acset_product(const std::vector<InstancePtr>& xs);
/// f: A -> B, g: A -> C. Legs in (B, C, A) order.
ACSetCocone acset_pushout(const ACSetMorphism& f, const ACSetMorphism& g);
/// f: B -> A, g: C -> A. Legs in (B, C, A) order.
ACSetCone acset_pullback(const ACSetMorphism& f, const ACSetMorphism& g);

}  // namespace acsets
