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


#include "acsets/cospan.hpp"

#include <vector>

#include "acsets/graphs/generators.hpp"
#include "acsets/graphs/schemas.hpp"
#include "acsets/migration.hpp"
#include "doctest.h"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace acsets;
using acsets::testing::cospans_isomorphic;
using acsets::testing::error_of;

namespace {

StructuredCospan open_path(std::size_t n) {
  return open(share(graphs::path_graph(n)), "V", {1}, {static_cast<Part>(n)});
}

InstancePtr vertex_foot(std::size_t n) {
  Instance foot(foot_schema(*graphs::graph_schema(), "V"));
  foot.add_parts(ObId{0}, n);
  return share(std::move(foot));
}

}  // namespace

TEST_CASE("open") {
  const StructuredCospan p3 = open_path(3);
  CHECK(p3.left_ids() == std::vector<Part>{1});
  CHECK(p3.right_ids() == std::vector<Part>{3});
  CHECK(p3.left_foot->nparts(ObId{0}) == 1);
  CHECK(p3.left_leg.codom == p3.apex);

  const StructuredCospan closed = open(share(graphs::path_graph(2)), "V", {}, {});
  CHECK(closed.left_foot->nparts(ObId{0}) == 0);
  CHECK(closed.right_ids().empty());

  auto petri = graphs::canned_schema("PetriNet");
  Instance net(petri);
  net.add_parts(net.schema().ob("Species"), 2);
  const Part t = net.add_parts(net.schema().ob("Transition"), 1).front();
  net.add_part("Input", {{"is", Value(1)}, {"it", Value(t)}});
  net.add_part("Output", {{"os", Value(2)}, {"ot", Value(t)}});
  const StructuredCospan open_net = open(share(std::move(net)), "Species", {1}, {1});
  CHECK(open_net.left_ids() == open_net.right_ids());

  CHECK(error_of([] { open(share(graphs::path_graph(2)), "E", {}, {}); }) == Errc::ObHasOutgoingHoms);
  CHECK(error_of([] { open(share(graphs::path_graph(2)), "V", {3}, {}); }) == Errc::OutOfRange);
}

TEST_CASE("composing open paths") {
  const StructuredCospan p3 = compose_cospans(open_path(2), open_path(2));
  CHECK(p3.apex->nparts("V") == 3);
  CHECK(p3.apex->nparts("E") == 2);
  CHECK(p3.left_ids() == std::vector<Part>{1});
  CHECK(p3.right_ids() == std::vector<Part>{3});
  CHECK(cospans_isomorphic(p3, open_path(3)));
  CHECK_FALSE(cospans_isomorphic(p3, open(share(graphs::path_graph(3)), "V", {3}, {1})));

  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const StructuredCospan c = compose_cospans(open_path(n), open_path(m));
      CHECK(c.apex->nparts("V") == n + m - 1);
      CHECK(c.apex->nparts("E") == n + m - 2);
    }
  }
}

TEST_CASE("identity cospans") {
  const StructuredCospan id1 = identity_cospan(vertex_foot(1), "V", graphs::graph_schema());
  CHECK(id1.apex->nparts("V") == 1);
  CHECK(id1.apex->nparts("E") == 0);
  const StructuredCospan a = open_path(4);
  CHECK(cospans_isomorphic(compose_cospans(id1, a), a));
  CHECK(cospans_isomorphic(compose_cospans(a, id1), a));

  const StructuredCospan id0 = identity_cospan(vertex_foot(0), "V", graphs::graph_schema());
  CHECK(id0.apex->nparts("V") == 0);

  auto vws = graphs::canned_schema("VertexWeightedGraph");
  Instance weights(foot_schema(*vws, "V"), {{"X", ValueType::Int}});
  weights.add_part("V", {{"weight", Value(7)}});
  const StructuredCospan idw = identity_cospan(share(std::move(weights)), "V", vws);
  CHECK(idw.apex->subpart(1, "weight") == Value(7));
}

TEST_CASE("foot mismatches") {
  const StructuredCospan two_ends = open(share(graphs::path_graph(3)), "V", {1}, {1, 3});
  CHECK(error_of([&] { compose_cospans(two_ends, open_path(2)); }) == Errc::FootMismatch);
  const StructuredCospan sym = open(share(graphs::symmetric_path_graph(2)), "V", {1}, {2});
  CHECK(error_of([&] { compose_cospans(open_path(2), sym); }) == Errc::SchemaMismatch);
}

TEST_CASE("gluing along two points closes a cycle") {
  // Two paths 1->2->3 sharing both endpoints: a 4-cycle shape with 4 vertices.
  const StructuredCospan a = open(share(graphs::path_graph(3)), "V", {}, {1, 3});
  const StructuredCospan b = open(share(graphs::path_graph(3)), "V", {3, 1}, {});
  const StructuredCospan c = compose_cospans(a, b);
  CHECK(c.apex->nparts("V") == 4);
  CHECK(c.apex->nparts("E") == 4);
}

TEST_CASE("feet carry attributes") {
  auto vws = graphs::canned_schema("VertexWeightedGraph");
  Instance x(vws, {{"X", ValueType::Int}});
  x.add_part("V", {{"weight", Value(1)}});
  x.add_part("V", {{"weight", Value(2)}});
  x.add_part("E", {{"src", Value(1)}, {"tgt", Value(2)}});
  auto apex = share(std::move(x));
  const StructuredCospan a = open(apex, "V", {1}, {2});
  const StructuredCospan b = open(apex, "V", {1}, {2});
  // Right foot weighs 2, left foot of b weighs 1.
  CHECK(error_of([&] { compose_cospans(a, b); }) == Errc::FootMismatch);
  const StructuredCospan flipped = open(apex, "V", {2}, {1});
  const StructuredCospan ab = compose_cospans(a, flipped);
  CHECK(ab.apex->nparts("V") == 3);
  CHECK(ab.apex->subpart(ab.right_ids()[0], "weight") == Value(1));
}

TEST_CASE("relabel_foot") {
  const StructuredCospan c = open(share(graphs::path_graph(3)), "V", {1, 2}, {3});
  const StructuredCospan r = relabel_foot(c, FootSide::Left, {2, 1});
  CHECK(r.left_ids() == std::vector<Part>{2, 1});
  CHECK(r.right_ids() == std::vector<Part>{3});
  CHECK(error_of([&] { relabel_foot(c, FootSide::Left, {1, 1}); }) == Errc::BadParameter);
  CHECK(error_of([&] { relabel_foot(c, FootSide::Right, {1, 2}); }) == Errc::BadParameter);
}
