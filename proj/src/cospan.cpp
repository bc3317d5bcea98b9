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

#include <algorithm>

#include "acsets/error.hpp"
#include "acsets/migration.hpp"

namespace acsets {

namespace {

InstancePtr make_foot(const Instance& apex, ObId ob, const std::vector<Part>& ids) {
  const Schema& s = apex.schema();
  Instance foot(foot_schema(s, s.ob_name(ob)), apex.typing());
  foot.add_parts(ObId{0}, ids.size());
  const auto attrs = s.attrs_from(ob);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 1 || static_cast<std::size_t>(ids[i]) > apex.nparts(ob)) {
      fail(Errc::OutOfRange, "foot id " + std::to_string(ids[i]) + " outside 1.." +
                                 std::to_string(apex.nparts(ob)));
    }
    for (std::size_t a = 0; a < attrs.size(); ++a) {
      foot.set_attr(static_cast<Part>(i + 1), AttrId{a}, apex.attr(ids[i], attrs[a]));
    }
  }
  return share(std::move(foot));
}

ACSetMorphism make_leg(const InstancePtr& foot, const InstancePtr& apex, ObId ob,
                       const std::vector<Part>& ids) {
  auto dom = share(discrete_instance(*foot, apex->schema().ob_name(ob), apex->schema_ptr()));
  std::vector<FinFunction> comps;
  for (std::size_t c = 0; c < apex->schema().obs().size(); ++c) {
    comps.emplace_back(c == ob.index ? ids : std::vector<Part>{}, apex->nparts(ObId{c}));
  }
  return make_morphism(std::move(dom), apex, std::move(comps));
}

std::vector<Part> leg_ids(const ACSetMorphism& leg, std::string_view ob) {
  auto values = leg.component(ob).values();
  return {values.begin(), values.end()};
}

}  // namespace

std::vector<Part> StructuredCospan::left_ids() const { return leg_ids(left_leg, target_ob); }
std::vector<Part> StructuredCospan::right_ids() const { return leg_ids(right_leg, target_ob); }

StructuredCospan open(InstancePtr apex, std::string_view target_ob, const std::vector<Part>& left_ids,
                      const std::vector<Part>& right_ids) {
  const Schema& s = apex->schema();
  ObId ob = s.ob(target_ob);
  if (!s.homs_from(ob).empty()) {
    fail(Errc::ObHasOutgoingHoms, "object '" + std::string(target_ob) + "' has outgoing homs");
  }
  StructuredCospan out;
  out.target_ob = std::string(target_ob);
  out.apex = apex;
  out.left_foot = make_foot(*apex, ob, left_ids);
  out.right_foot = make_foot(*apex, ob, right_ids);
  out.left_leg = make_leg(out.left_foot, apex, ob, left_ids);
  out.right_leg = make_leg(out.right_foot, apex, ob, right_ids);
  return out;
}

StructuredCospan compose_cospans(const StructuredCospan& a, const StructuredCospan& b) {
  if (a.target_ob != b.target_ob || !(a.apex->schema() == b.apex->schema()) ||
      a.apex->typing() != b.apex->typing()) {
    fail(Errc::SchemaMismatch, "cospans live over different schemas or feet objects");
  }
  if (!(*a.right_foot == *b.left_foot)) {
    fail(Errc::FootMismatch, "right foot has " + std::to_string(a.right_foot->nparts(ObId{0})) +
                                 " parts, left foot has " +
                                 std::to_string(b.left_foot->nparts(ObId{0})) +
                                 " (feet must agree exactly)");
  }
  ACSetCocone po = acset_pushout(a.right_leg, b.left_leg);
  StructuredCospan out;
  out.target_ob = a.target_ob;
  out.left_foot = a.left_foot;
  out.right_foot = b.right_foot;
  out.apex = po.apex;
  out.left_leg = compose(a.left_leg, po.legs[0]);
  out.right_leg = compose(b.right_leg, po.legs[1]);
  return out;
}

StructuredCospan identity_cospan(InstancePtr foot, std::string_view target_ob,
                                 std::shared_ptr<const Schema> full) {
  auto apex = share(discrete_instance(*foot, target_ob, full));
  StructuredCospan out;
  out.target_ob = std::string(target_ob);
  out.left_foot = foot;
  out.right_foot = foot;
  out.apex = apex;
  out.left_leg = identity_morphism(apex);
  out.right_leg = out.left_leg;
  return out;
}

StructuredCospan relabel_foot(const StructuredCospan& c, FootSide side, const std::vector<Part>& order) {
  const InstancePtr& foot = side == FootSide::Left ? c.left_foot : c.right_foot;
  const std::size_t n = foot->nparts(ObId{0});
  std::vector<Part> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != n || sorted[i] != static_cast<Part>(i + 1)) {
      fail(Errc::BadParameter, "foot order is not a permutation of 1.." + std::to_string(n));
    }
  }
  if (order.size() != n) fail(Errc::BadParameter, "foot order has the wrong length");
  std::vector<Part> ids = side == FootSide::Left ? c.left_ids() : c.right_ids();
  std::vector<Part> permuted;
  for (Part i : order) permuted.push_back(ids[static_cast<std::size_t>(i - 1)]);
  std::vector<Part> left = side == FootSide::Left ? permuted : c.left_ids();
  std::vector<Part> right = side == FootSide::Right ? permuted : c.right_ids();
  return open(c.apex, c.target_ob, left, right);
}

}  // namespace acsets
