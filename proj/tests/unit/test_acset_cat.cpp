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


#include "acsets/acset_cat.hpp"

#include <vector>

#include "acsets/graphs/algorithms.hpp"
#include "acsets/graphs/generators.hpp"
#include "acsets/graphs/schemas.hpp"
#include "doctest.h"
#include "support/errors.hpp"
#include "support/oracles.hpp"
#include "support/random_acsets.hpp"

using namespace acsets;
using acsets::testing::error_of;

namespace {

std::vector<Part> vals(const FinFunction& f) { return {f.values().begin(), f.values().end()}; }

InstancePtr weighted_edge(std::int64_t w) {
  Instance g = acsets::testing::empty_graph(3);
  g.add_parts(g.schema().ob("V"), 2);
  acsets::testing::add_edge(g, 1, 2, Value(w));
  return share(std::move(g));
}

InstancePtr dynamical(const std::vector<Part>& suc) {
  Instance x(graphs::canned_schema("Dyn"));
  x.add_parts(x.schema().ob("X"), suc.size());
  for (std::size_t i = 0; i < suc.size(); ++i) x.set_subpart(static_cast<Part>(i + 1), "suc", Value(suc[i]));
  return share(std::move(x));
}

InstancePtr vertex_weights(const std::vector<std::int64_t>& ws) {
  Instance x(graphs::canned_schema("VertexWeightedGraph"), {{"X", ValueType::Int}});
  for (auto w : ws) x.add_part("V", {{"weight", Value(w)}});
  return share(std::move(x));
}

}  // namespace

TEST_CASE("morphisms") {
  auto p2 = share(graphs::path_graph(2));
  auto p3 = share(graphs::path_graph(3));
  const ACSetMorphism id = identity_morphism(p3);
  CHECK(vals(id.component("V")) == std::vector<Part>{1, 2, 3});

  const ACSetMorphism f = make_morphism(p2, p3, {{"V", {1, 2}}, {"E", {1}}});
  CHECK(vals(f.component("V")) == std::vector<Part>{1, 2});
  const ACSetMorphism g = make_morphism(p2, p3, {{"V", {2, 3}}, {"E", {2}}});
  CHECK_FALSE(f == g);

  CHECK(error_of([&] { make_morphism(p2, p3, {{"V", {2, 1}}, {"E", {1}}}); }) == Errc::NotNatural);
  CHECK(error_of([&] { make_morphism(p2, p3, {{"V", {1, 2}}}); }).has_value());
  CHECK(error_of([&] {
          make_morphism(weighted_edge(1), weighted_edge(2), {{"V", {1, 2}}, {"E", {1}}});
        }) == Errc::AttributeMismatch);
  // The underlying C-set map is fine.
  CHECK_FALSE(error_of([&] {
                make_cset_morphism(weighted_edge(1), weighted_edge(2),
                                   {FinFunction({1, 2}, 2), FinFunction({1}, 1)});
              }).has_value());

  CHECK(compose(id, id) == id);
  CHECK(compose(f, identity_morphism(p3)) == f);
  CHECK(error_of([&] { compose(f, f); }) == Errc::NonComposable);
}

TEST_CASE("coproduct of dynamical systems") {
  auto cycle = dynamical({2, 1});
  auto fixed = dynamical({1});
  const ACSetCocone sum = acset_coproduct({cycle, fixed});
  CHECK(sum.apex->nparts("X") == 3);
  CHECK(sum.apex->hom_column(sum.apex->schema().hom("suc"))[2] == 3);
  CHECK(vals(sum.legs[1].component("X")) == std::vector<Part>{3});
  std::vector<Part> suc;
  for (Part x : sum.apex->parts("X")) suc.push_back(sum.apex->subpart<"suc">(x));
  CHECK(suc == std::vector<Part>{2, 1, 3});
}

TEST_CASE("pushout of open paths") {
  Instance vertex(graphs::graph_schema());
  vertex.add_parts(vertex.schema().ob("V"), 1);
  auto point = share(std::move(vertex));
  auto p2 = share(graphs::path_graph(2));
  const ACSetMorphism end = make_morphism(point, p2, {{"V", {2}}, {"E", {}}});
  const ACSetMorphism start = make_morphism(point, p2, {{"V", {1}}, {"E", {}}});
  const ACSetCocone po = acset_pushout(end, start);
  CHECK(po.apex->nparts("V") == 3);
  CHECK(po.apex->nparts("E") == 2);
  CHECK(*po.apex == graphs::path_graph(3));
  CHECK(compose(end, po.legs[0]) == compose(start, po.legs[1]));
  const ACSetDiagram d{Shape::span(), {p2, p2, point}, {end, start}, nullptr, {}};
  CHECK(factorize(po, d, po) == identity_morphism(po.apex));
}

TEST_CASE("attribute conflicts in colimits") {
  auto one = vertex_weights({1});
  auto two = vertex_weights({1, 2});
  // Glue the two vertices of `two` by a coequalizer of C-set maps.
  const ACSetMorphism f = make_cset_morphism(one, two, {FinFunction({1}, 2), FinFunction({}, 0)});
  const ACSetMorphism g = make_cset_morphism(one, two, {FinFunction({2}, 2), FinFunction({}, 0)});
  const ACSetDiagram d{Shape::parallel_pair(), {one, two}, {f, g}, nullptr, {}};
  CHECK(error_of([&] { acset_colimit(d); }) == Errc::AttributeConflict);
}

TEST_CASE("products") {
  auto p2 = share(graphs::path_graph(2));
  const ACSetCone prod = acset_product({p2, p2});
  CHECK(prod.apex->nparts("V") == 4);
  CHECK(prod.apex->nparts("E") == 1);

  auto r2 = share(graphs::free_reflexive(*p2));
  const ACSetCone refl = acset_product({r2, r2});
  CHECK(refl.apex->nparts("V") == 4);
  CHECK(refl.apex->nparts("E") == 9);
  CHECK(refl.apex->validate().ok());

  const ACSetCone disjoint = acset_product({weighted_edge(1), weighted_edge(2)});
  CHECK(disjoint.apex->nparts("V") == 4);
  CHECK(disjoint.apex->nparts("E") == 0);
  const ACSetCone same = acset_product({weighted_edge(2), weighted_edge(2)});
  CHECK(same.apex->nparts("E") == 1);
  CHECK(same.apex->subpart(1, "dec") == Value(2));
}

TEST_CASE("vertex attributes prune dependent edges") {
  // Edges whose endpoints disagree on weight cannot be paired.
  Instance a(graphs::canned_schema("VertexWeightedGraph"), {{"X", ValueType::Int}});
  a.add_part("V", {{"weight", Value(1)}});
  a.add_part("V", {{"weight", Value(2)}});
  a.add_part("E", {{"src", Value(1)}, {"tgt", Value(2)}});
  Instance b(graphs::canned_schema("VertexWeightedGraph"), {{"X", ValueType::Int}});
  b.add_part("V", {{"weight", Value(1)}});
  b.add_part("V", {{"weight", Value(3)}});
  b.add_part("E", {{"src", Value(1)}, {"tgt", Value(2)}});
  auto pa = share(std::move(a));
  auto pb = share(std::move(b));
  const ACSetCone prod = acset_product({pa, pb});
  CHECK(prod.apex->nparts("V") == 1);
  CHECK(prod.apex->nparts("E") == 0);
  const ACSetDiagram d{Shape::discrete(2), {pa, pb}, {}, pa->schema_ptr(), pa->typing()};
  CHECK(acsets::testing::matches_limit(prod, d, acsets::testing::brute_limit(d)));
}

TEST_CASE("factorization through coproducts and products") {
  auto g = share(graphs::path_graph(2));
  auto h = share(graphs::path_graph(3));
  const ACSetCocone sum = acset_coproduct({g, h});
  const ACSetDiagram d{Shape::discrete(2), {g, h}, {}, nullptr, {}};
  CHECK(factorize(sum, d, sum) == identity_morphism(sum.apex));

  // A hand-built cocone into a graph with an extra vertex.
  Instance target = graphs::path_graph(5);
  target.add_parts(target.schema().ob("V"), 1);
  auto t = share(std::move(target));
  const ACSetCocone manual{t, {make_morphism(g, t, {{"V", {1, 2}}, {"E", {1}}}),
                               make_morphism(h, t, {{"V", {3, 4, 5}}, {"E", {3, 4}}})}};
  const ACSetMorphism u = factorize(sum, d, manual);
  CHECK(vals(u.component("V")) == std::vector<Part>{1, 2, 3, 4, 5});
  CHECK(vals(u.component("E")) == std::vector<Part>{1, 3, 4});
  for (std::size_t i = 0; i < 2; ++i) CHECK(compose(sum.legs[i], u) == manual.legs[i]);

  // Legs of the wrong length.
  const ACSetCocone broken{t, {manual.legs[0]}};
  CHECK(error_of([&] { factorize(sum, d, broken); }) == Errc::NotACocone);

  const ACSetCone prod = acset_product({g, h});
  CHECK(factorize(prod, d, prod) == identity_morphism(prod.apex));
  const ACSetCone diag{g, {identity_morphism(g), make_morphism(g, h, {{"V", {1, 2}}, {"E", {1}}})}};
  const ACSetMorphism v = factorize(prod, d, diag);
  for (std::size_t i = 0; i < 2; ++i) CHECK(compose(v, prod.legs[i]) == diag.legs[i]);
}

TEST_CASE("colimit inputs must be complete") {
  Instance partial(graphs::graph_schema());
  partial.add_parts(partial.schema().ob("E"), 1);
  auto x = share(std::move(partial));
  CHECK(error_of([&] { acset_coproduct({x}); }) == Errc::IncompleteInstance);
}

TEST_CASE("pushouts are pointwise") {
  acsets::testing::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto a = share(acsets::testing::random_graph(rng, 3, 3, i % 2 ? 2 : 0));
    const ACSetMorphism f = acsets::testing::random_morphism_from(rng, a, 4, 3, i % 2 ? 2 : 0);
    const ACSetMorphism g = acsets::testing::random_morphism_from(rng, a, 4, 3, i % 2 ? 2 : 0);
    const ACSetCocone po = acset_pushout(f, g);
    for (const char* ob : {"V", "E"}) {
      const ObId c = a->schema().ob(ob);
      CHECK(po.apex->nparts(c) == pushout(f[c], g[c]).apex.n);
    }
    CHECK(compose(f, po.legs[0]) == compose(g, po.legs[1]));
  }
}
