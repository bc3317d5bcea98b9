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

#include <algorithm>
#include <cassert>
#include <optional>

#include "acsets/error.hpp"

namespace acsets {

namespace {

void check_compatible(const Instance& a, const Instance& b, Errc code) {
  if (!(a.schema() == b.schema()) || a.typing() != b.typing()) {
    fail(code, "instances have different schemas or typings");
  }
}

ACSetMorphism build_morphism(InstancePtr dom, InstancePtr codom,
                             std::vector<FinFunction> components, bool check_attrs) {
  check_compatible(*dom, *codom, Errc::SchemaMismatch);
  const Schema& s = dom->schema();
  if (components.size() != s.obs().size()) {
    fail(Errc::BadParameter, "expected " + std::to_string(s.obs().size()) + " components, got " +
                                 std::to_string(components.size()));
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].dom().n != dom->nparts(ObId{c}) ||
        components[c].codom().n != codom->nparts(ObId{c})) {
      fail(Errc::BadParameter, "component at " + s.obs()[c] + " has the wrong shape");
    }
  }
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    const FinFunction& fa = components[hom.dom.index];
    const FinFunction& fb = components[hom.codom.index];
    for (Part p = 1; p <= static_cast<Part>(dom->nparts(hom.dom)); ++p) {
      Part x = dom->hom(p, HomId{h});
      Part lhs = x == 0 ? 0 : fb(x);
      Part rhs = codom->hom(fa(p), HomId{h});
      if (lhs != rhs) {
        fail(Errc::NotNatural, "square for '" + hom.name + "' fails at part " + std::to_string(p));
      }
    }
  }
  if (check_attrs) {
    for (std::size_t a = 0; a < s.attrs().size(); ++a) {
      const auto& attr = s.attrs()[a];
      const FinFunction& f = components[attr.dom.index];
      for (Part p = 1; p <= static_cast<Part>(dom->nparts(attr.dom)); ++p) {
        if (!(dom->attr(p, AttrId{a}) == codom->attr(f(p), AttrId{a}))) {
          fail(Errc::AttributeMismatch, "attr '" + attr.name + "' not preserved at part " +
                                            std::to_string(p));
        }
      }
    }
  }
  return ACSetMorphism{std::move(dom), std::move(codom), std::move(components)};
}

void require_complete(const std::vector<InstancePtr>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!xs[i]->is_complete()) {
      fail(Errc::IncompleteInstance, "diagram object " + std::to_string(i) + " has undefined entries");
    }
  }
}

std::shared_ptr<const Schema> diagram_schema(const ACSetDiagram& d) {
  return d.objects.empty() ? d.schema : d.objects.front()->schema_ptr();
}

Typing diagram_typing(const ACSetDiagram& d) {
  return d.objects.empty() ? d.typing : d.objects.front()->typing();
}

IndexSpec diagram_index(const ACSetDiagram& d) {
  return d.objects.empty() ? IndexSpec{} : d.objects.front()->index_spec();
}

void debug_validate([[maybe_unused]] const Instance& x) {
#ifndef NDEBUG
  assert(x.validate().ok());
#endif
}

}  // namespace

ACSetMorphism make_morphism(InstancePtr dom, InstancePtr codom,
                            std::vector<FinFunction> components) {
  return build_morphism(std::move(dom), std::move(codom), std::move(components), true);
}

ACSetMorphism make_morphism(InstancePtr dom, InstancePtr codom,
                            const std::map<std::string, std::vector<Part>>& components) {
  const Schema& s = dom->schema();
  std::vector<FinFunction> comps;
  for (std::size_t c = 0; c < s.obs().size(); ++c) {
    auto it = components.find(s.obs()[c]);
    std::vector<Part> values = it == components.end() ? std::vector<Part>{} : it->second;
    comps.emplace_back(std::move(values), codom->nparts(ObId{c}));
  }
  for (const auto& [name, values] : components) s.ob(name);
  return make_morphism(std::move(dom), std::move(codom), std::move(comps));
}

ACSetMorphism make_cset_morphism(InstancePtr dom, InstancePtr codom,
                                 std::vector<FinFunction> components) {
  return build_morphism(std::move(dom), std::move(codom), std::move(components), false);
}

ACSetMorphism identity_morphism(InstancePtr x) {
  std::vector<FinFunction> comps;
  for (std::size_t c = 0; c < x->schema().obs().size(); ++c) {
    comps.push_back(FinFunction::identity(x->nparts(ObId{c})));
  }
  return ACSetMorphism{x, x, std::move(comps)};
}

ACSetMorphism compose(const ACSetMorphism& f, const ACSetMorphism& g) {
  if (f.codom != g.dom && !(*f.codom == *g.dom)) {
    fail(Errc::NonComposable, "codomain of the first morphism is not the domain of the second");
  }
  std::vector<FinFunction> comps;
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    comps.push_back(compose(f.components[c], g.components[c]));
  }
  return ACSetMorphism{f.dom, g.codom, std::move(comps)};
}

bool operator==(const ACSetMorphism& f, const ACSetMorphism& g) {
  return *f.dom == *g.dom && *f.codom == *g.codom && f.components == g.components;
}

void ACSetDiagram::check() const {
  if (objects.size() != shape.vertices || arrows.size() != shape.arrows.size()) {
    fail(Errc::InvalidDiagram, "diagram does not match its shape");
  }
  if (objects.empty() && !schema) fail(Errc::InvalidDiagram, "empty diagram needs a schema");
  for (const auto& x : objects) {
    if (!x) fail(Errc::InvalidDiagram, "null diagram object");
    check_compatible(*x, *objects.front(), Errc::InvalidDiagram);
  }
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& arrow = shape.arrows[a];
    const auto& m = arrows[a];
    if (arrow.src >= objects.size() || arrow.tgt >= objects.size()) {
      fail(Errc::InvalidDiagram, "arrow " + std::to_string(a) + " leaves the shape");
    }
    bool dom_ok = m.dom == objects[arrow.src] || *m.dom == *objects[arrow.src];
    bool codom_ok = m.codom == objects[arrow.tgt] || *m.codom == *objects[arrow.tgt];
    if (!dom_ok || !codom_ok) {
      fail(Errc::InvalidDiagram, "arrow " + std::to_string(a) + " has the wrong endpoints");
    }
  }
}

FinSetDiagram ACSetDiagram::at(ObId ob) const {
  FinSetDiagram out;
  out.shape = shape;
  for (const auto& x : objects) out.objects.push_back(FinSet{x->nparts(ob)});
  for (const auto& m : arrows) out.arrows.push_back(m[ob]);
  return out;
}

ACSetCocone acset_colimit(const ACSetDiagram& d) {
  d.check();
  require_complete(d.objects);
  auto schema = diagram_schema(d);
  const Schema& s = *schema;
  const std::size_t nobs = s.obs().size();

  std::vector<Cocone> per_ob;
  for (std::size_t c = 0; c < nobs; ++c) per_ob.push_back(colimit(d.at(ObId{c})));

  Instance apex(schema, diagram_typing(d), diagram_index(d));
  for (std::size_t c = 0; c < nobs; ++c) apex.add_parts(ObId{c}, per_ob[c].apex.n);

  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    const Cocone& ca = per_ob[hom.dom.index];
    const Cocone& cb = per_ob[hom.codom.index];
    std::vector<bool> done(ca.apex.n, false);
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
      const Instance& x = *d.objects[i];
      for (Part p = 1; p <= static_cast<Part>(x.nparts(hom.dom)); ++p) {
        Part k = ca.legs[i](p);
        if (done[static_cast<std::size_t>(k - 1)]) continue;
        done[static_cast<std::size_t>(k - 1)] = true;
        apex.set_hom(k, HomId{h}, cb.legs[i](x.hom(p, HomId{h})));
      }
    }
  }

  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    const auto& attr = s.attrs()[a];
    const Cocone& cc = per_ob[attr.dom.index];
    std::vector<bool> done(cc.apex.n, false);
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
      const Instance& x = *d.objects[i];
      for (Part p = 1; p <= static_cast<Part>(x.nparts(attr.dom)); ++p) {
        Part k = cc.legs[i](p);
        const Value& v = x.attr(p, AttrId{a});
        if (!done[static_cast<std::size_t>(k - 1)]) {
          done[static_cast<std::size_t>(k - 1)] = true;
          apex.set_attr(k, AttrId{a}, v);
        } else if (!(apex.attr(k, AttrId{a}) == v)) {
          fail(Errc::AttributeConflict,
               "class " + std::to_string(k) + " of " + s.ob_name(attr.dom) + " has values " +
                   apex.attr(k, AttrId{a}).to_display() + " and " + v.to_display() +
                   " for '" + attr.name + "'");
        }
      }
    }
  }
  debug_validate(apex);

  ACSetCocone out{share(std::move(apex)), {}};
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    std::vector<FinFunction> comps;
    for (std::size_t c = 0; c < nobs; ++c) comps.push_back(per_ob[c].legs[i]);
    out.legs.push_back(ACSetMorphism{d.objects[i], out.apex, std::move(comps)});
  }
  return out;
}

ACSetCone acset_limit(const ACSetDiagram& d) {
  d.check();
  require_complete(d.objects);
  auto schema = diagram_schema(d);
  const Schema& s = *schema;
  const std::size_t nobs = s.obs().size();
  const std::size_t nv = d.objects.size();
  if (nv == 0 && !s.attrs().empty()) {
    fail(Errc::InvalidDiagram, "the empty limit has no attribute values");
  }

  // Tuples per object, in lexicographic order.
  std::vector<std::vector<std::vector<Part>>> tuples(nobs);
  std::vector<std::map<std::vector<Part>, std::size_t>> position(nobs);
  for (std::size_t c = 0; c < nobs; ++c) {
    Cone cone = limit(d.at(ObId{c}));
    for (Part t = 1; t <= static_cast<Part>(cone.apex.n); ++t) {
      std::vector<Part> tuple(nv);
      for (std::size_t i = 0; i < nv; ++i) tuple[i] = cone.legs[i](t);
      position[c].emplace(tuple, tuples[c].size());
      tuples[c].push_back(std::move(tuple));
    }
  }

  // hom_image[h][t] = position of the image tuple in the codomain.
  std::vector<std::vector<std::size_t>> hom_image(s.homs().size());
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    for (const auto& t : tuples[hom.dom.index]) {
      std::vector<Part> image(nv);
      for (std::size_t i = 0; i < nv; ++i) image[i] = d.objects[i]->hom(t[i], HomId{h});
      hom_image[h].push_back(position[hom.codom.index].at(image));
    }
  }

  // Keep tuples whose direct attributes agree, then drop tuples that reach a
  // dropped tuple through a hom until nothing changes.
  std::vector<std::vector<char>> alive(nobs);
  for (std::size_t c = 0; c < nobs; ++c) alive[c].assign(tuples[c].size(), 1);
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    const auto& attr = s.attrs()[a];
    const std::size_t c = attr.dom.index;
    for (std::size_t t = 0; t < tuples[c].size(); ++t) {
      const Value& first = d.objects[0]->attr(tuples[c][t][0], AttrId{a});
      for (std::size_t i = 1; i < nv && alive[c][t]; ++i) {
        if (!(d.objects[i]->attr(tuples[c][t][i], AttrId{a}) == first)) alive[c][t] = 0;
      }
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t h = 0; h < s.homs().size(); ++h) {
      const auto& hom = s.homs()[h];
      auto& src = alive[hom.dom.index];
      const auto& tgt = alive[hom.codom.index];
      for (std::size_t t = 0; t < src.size(); ++t) {
        if (src[t] && !tgt[hom_image[h][t]]) {
          src[t] = 0;
          changed = true;
        }
      }
    }
  }

  std::vector<std::vector<Part>> renumber(nobs);
  Instance apex(schema, diagram_typing(d), diagram_index(d));
  for (std::size_t c = 0; c < nobs; ++c) {
    renumber[c].assign(tuples[c].size(), 0);
    Part next = 0;
    for (std::size_t t = 0; t < tuples[c].size(); ++t) {
      if (alive[c][t]) renumber[c][t] = ++next;
    }
    apex.add_parts(ObId{c}, static_cast<std::size_t>(next));
  }
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const std::size_t c = s.homs()[h].dom.index;
    const std::size_t b = s.homs()[h].codom.index;
    for (std::size_t t = 0; t < tuples[c].size(); ++t) {
      if (renumber[c][t] != 0) apex.set_hom(renumber[c][t], HomId{h}, renumber[b][hom_image[h][t]]);
    }
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    const std::size_t c = s.attrs()[a].dom.index;
    for (std::size_t t = 0; t < tuples[c].size(); ++t) {
      if (renumber[c][t] != 0) {
        apex.set_attr(renumber[c][t], AttrId{a}, d.objects[0]->attr(tuples[c][t][0], AttrId{a}));
      }
    }
  }
  debug_validate(apex);

  ACSetCone out{share(std::move(apex)), {}};
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<FinFunction> comps;
    for (std::size_t c = 0; c < nobs; ++c) {
      std::vector<Part> values;
      for (std::size_t t = 0; t < tuples[c].size(); ++t) {
        if (renumber[c][t] != 0) values.push_back(tuples[c][t][i]);
      }
      comps.emplace_back(std::move(values), d.objects[i]->nparts(ObId{c}));
    }
    out.legs.push_back(ACSetMorphism{out.apex, d.objects[i], std::move(comps)});
  }
  return out;
}

ACSetMorphism factorize(const ACSetCocone& colim, const ACSetDiagram& d, const ACSetCocone& c) {
  const Schema& s = *diagram_schema(d);
  if (c.legs.size() != d.objects.size()) fail(Errc::NotACocone, "wrong number of legs");
  std::vector<FinFunction> comps;
  for (std::size_t ob = 0; ob < s.obs().size(); ++ob) {
    FinSetDiagram fd = d.at(ObId{ob});
    Cocone lim{FinSet{colim.apex->nparts(ObId{ob})}, {}};
    Cocone other{FinSet{c.apex->nparts(ObId{ob})}, {}};
    for (const auto& leg : colim.legs) lim.legs.push_back(leg[ObId{ob}]);
    for (const auto& leg : c.legs) other.legs.push_back(leg[ObId{ob}]);
    comps.push_back(factorize(lim, fd, other));
  }
  try {
    return make_morphism(colim.apex, c.apex, std::move(comps));
  } catch (const Error& e) {
    fail(Errc::NotACocone, std::string("mediating map is not a morphism: ") + e.what());
  }
}

ACSetMorphism factorize(const ACSetCone& lim, const ACSetDiagram& d, const ACSetCone& c) {
  const Schema& s = *diagram_schema(d);
  const std::size_t nv = d.objects.size();
  if (c.legs.size() != nv) fail(Errc::NotACone, "wrong number of legs");
  for (std::size_t a = 0; a < d.arrows.size(); ++a) {
    const auto& arrow = d.shape.arrows[a];
    for (std::size_t ob = 0; ob < s.obs().size(); ++ob) {
      if (!(compose(c.legs[arrow.src][ObId{ob}], d.arrows[a][ObId{ob}]) ==
            c.legs[arrow.tgt][ObId{ob}])) {
        fail(Errc::NotACone, "competing cone does not commute with arrow " + std::to_string(a));
      }
    }
  }
  std::vector<FinFunction> comps;
  for (std::size_t ob = 0; ob < s.obs().size(); ++ob) {
    std::map<std::vector<Part>, Part> index;
    const std::size_t n = lim.apex->nparts(ObId{ob});
    for (Part t = 1; t <= static_cast<Part>(n); ++t) {
      std::vector<Part> tuple(nv);
      for (std::size_t i = 0; i < nv; ++i) tuple[i] = lim.legs[i][ObId{ob}](t);
      index.emplace(std::move(tuple), t);
    }
    std::vector<Part> values;
    for (Part q = 1; q <= static_cast<Part>(c.apex->nparts(ObId{ob})); ++q) {
      std::vector<Part> tuple(nv);
      for (std::size_t i = 0; i < nv; ++i) tuple[i] = c.legs[i][ObId{ob}](q);
      auto it = index.find(tuple);
      if (it == index.end()) {
        fail(Errc::NotACone, "competing cone part " + std::to_string(q) + " of " +
                                 s.ob_name(ObId{ob}) + " has no matching limit part");
      }
      values.push_back(it->second);
    }
    comps.emplace_back(std::move(values), n);
  }
  try {
    return make_morphism(c.apex, lim.apex, std::move(comps));
  } catch (const Error& e) {
    fail(Errc::NotACone, std::string("mediating map is not a morphism: ") + e.what());
  }
}

namespace {

ACSetDiagram discrete_diagram(const std::vector<InstancePtr>& xs) {
  ACSetDiagram d;
  d.shape = Shape::discrete(xs.size());
  d.objects = xs;
  return d;
}

}  // namespace

ACSetCocone acset_coproduct(const std::vector<InstancePtr>& xs) {
  return acset_colimit(discrete_diagram(xs));
}

ACSetCone acset_product(const std::vector<InstancePtr>& xs) {
  return acset_limit(discrete_diagram(xs));
}

ACSetCocone acset_pushout(const ACSetMorphism& f, const ACSetMorphism& g) {
  ACSetDiagram d;
  d.shape = Shape::span();
  d.objects = {f.codom, g.codom, f.dom};
  d.arrows = {f, g};
  return acset_colimit(d);
}

ACSetCone acset_pullback(const ACSetMorphism& f, const ACSetMorphism& g) {
  ACSetDiagram d;
  d.shape = Shape::cospan();
  d.objects = {f.dom, g.dom, f.codom};
  d.arrows = {f, g};
  return acset_limit(d);
}

}  // namespace acsets
