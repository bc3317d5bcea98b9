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

#include "acsets/schema.hpp"

#include <set>
#include <utility>

#include "acsets/error.hpp"

namespace acsets {

std::string to_string(const Path& path) {
  std::string out = path.dom + ":[";
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (i > 0) out += ",";
    out += path.edges[i];
  }
  out += "]";
  return out;
}

namespace {

template <class T>
std::optional<T> lookup(const std::vector<std::string>& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return T{i};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ObId> Schema::find_ob(std::string_view name) const {
  return lookup<ObId>(obs_, name);
}

std::optional<AttrTypeId> Schema::find_attrtype(std::string_view name) const {
  return lookup<AttrTypeId>(attrtypes_, name);
}

std::optional<Generator> Schema::find_generator(std::string_view name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) return std::nullopt;
  return it->second;
}

std::optional<HomId> Schema::find_hom(std::string_view name) const {
  auto gen = find_generator(name);
  if (!gen || !gen->is_hom()) return std::nullopt;
  return HomId{gen->index};
}

std::optional<AttrId> Schema::find_attr(std::string_view name) const {
  auto gen = find_generator(name);
  if (!gen || gen->is_hom()) return std::nullopt;
  return AttrId{gen->index};
}

ObId Schema::ob(std::string_view name) const {
  if (auto id = find_ob(name)) return *id;
  fail(Errc::UnknownName, "no object '" + std::string(name) + "' in schema " + name_);
}

HomId Schema::hom(std::string_view name) const {
  if (auto id = find_hom(name)) return *id;
  fail(Errc::UnknownName, "no hom '" + std::string(name) + "' in schema " + name_);
}

AttrTypeId Schema::attrtype(std::string_view name) const {
  if (auto id = find_attrtype(name)) return *id;
  fail(Errc::UnknownName,
       "no attribute type '" + std::string(name) + "' in schema " + name_);
}

AttrId Schema::attr(std::string_view name) const {
  if (auto id = find_attr(name)) return *id;
  fail(Errc::UnknownName, "no attr '" + std::string(name) + "' in schema " + name_);
}

Generator Schema::generator(std::string_view name) const {
  if (auto gen = find_generator(name)) return *gen;
  fail(Errc::UnknownName, "no hom or attr '" + std::string(name) + "' in schema " + name_);
}

std::string_view Schema::sort_name(Sort sort) const {
  return sort.is_ob() ? std::string_view(obs_.at(sort.index))
                      : std::string_view(attrtypes_.at(sort.index));
}

std::vector<HomId> Schema::homs_from(ObId ob) const {
  std::vector<HomId> out;
  for (std::size_t i = 0; i < homs_.size(); ++i) {
    if (homs_[i].dom == ob) out.push_back(HomId{i});
  }
  return out;
}

std::vector<HomId> Schema::homs_into(ObId ob) const {
  std::vector<HomId> out;
  for (std::size_t i = 0; i < homs_.size(); ++i) {
    if (homs_[i].codom == ob) out.push_back(HomId{i});
  }
  return out;
}

std::vector<AttrId> Schema::attrs_from(ObId ob) const {
  std::vector<AttrId> out;
  for (std::size_t i = 0; i < attrs_.size(); ++i) {
    if (attrs_[i].dom == ob) out.push_back(AttrId{i});
  }
  return out;
}

Sort Schema::codom(const Path& path) const {
  auto start = find_ob(path.dom);
  if (!start) {
    fail(Errc::UnknownObject, "path " + to_string(path) + " starts at an undeclared object");
  }
  Sort current{Sort::Kind::Ob, start->index};
  for (const auto& step : path.edges) {
    Generator gen = generator(step);
    if (!current.is_ob()) {
      fail(Errc::NonComposable,
           "path " + to_string(path) + " continues after an attribute");
    }
    if (gen.is_hom()) {
      const Hom& h = homs_[gen.index];
      if (h.dom.index != current.index) {
        fail(Errc::NonComposable, "path " + to_string(path) + ": '" + step +
                                      "' does not start at " + obs_[current.index]);
      }
      current = Sort{Sort::Kind::Ob, h.codom.index};
    } else {
      const Attr& a = attrs_[gen.index];
      if (a.dom.index != current.index) {
        fail(Errc::NonComposable, "path " + to_string(path) + ": '" + step +
                                      "' does not start at " + obs_[current.index]);
      }
      current = Sort{Sort::Kind::AttrType, a.codom.index};
    }
  }
  return current;
}

SchemaDecl Schema::decl() const {
  SchemaDecl d;
  d.name = name_;
  d.obs = obs_;
  for (const auto& h : homs_) d.homs.push_back({h.name, obs_[h.dom.index], obs_[h.codom.index]});
  d.attrtypes = attrtypes_;
  for (const auto& a : attrs_) {
    d.attrs.push_back({a.name, obs_[a.dom.index], attrtypes_[a.codom.index]});
  }
  d.equations = equations_;
  return d;
}

bool operator==(const Schema& a, const Schema& b) {
  if (&a == &b) return true;
  if (a.name_ != b.name_ || a.obs_ != b.obs_ || a.attrtypes_ != b.attrtypes_ ||
      a.equations_ != b.equations_ || a.homs_.size() != b.homs_.size() ||
      a.attrs_.size() != b.attrs_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.homs_.size(); ++i) {
    const auto& x = a.homs_[i];
    const auto& y = b.homs_[i];
    if (x.name != y.name || x.dom != y.dom || x.codom != y.codom) return false;
  }
  for (std::size_t i = 0; i < a.attrs_.size(); ++i) {
    const auto& x = a.attrs_[i];
    const auto& y = b.attrs_[i];
    if (x.name != y.name || x.dom != y.dom || x.codom != y.codom) return false;
  }
  return true;
}

Schema build_presentation(const SchemaDecl& decl) {
  Schema s;
  s.name_ = decl.name;

  std::set<std::string, std::less<>> names;
  auto claim = [&](const std::string& name) {
    if (!names.insert(name).second) {
      fail(Errc::DuplicateName, "name '" + name + "' declared twice in schema " + decl.name);
    }
  };
  for (const auto& ob : decl.obs) claim(ob);
  for (const auto& h : decl.homs) claim(h.name);
  for (const auto& t : decl.attrtypes) claim(t);
  for (const auto& a : decl.attrs) claim(a.name);

  s.obs_ = decl.obs;
  s.attrtypes_ = decl.attrtypes;

  for (const auto& h : decl.homs) {
    auto dom = s.find_ob(h.dom);
    auto codom = s.find_ob(h.codom);
    if (!dom || !codom) {
      fail(Errc::UnknownObject, "hom '" + h.name + "' : " + h.dom + " -> " + h.codom +
                                    " refers to an undeclared object");
    }
    s.generators_.emplace(h.name, Generator{Generator::Kind::Hom, s.homs_.size()});
    s.homs_.push_back({h.name, *dom, *codom});
  }
  for (const auto& a : decl.attrs) {
    auto dom = s.find_ob(a.dom);
    auto codom = s.find_attrtype(a.codom);
    if (!dom || !codom) {
      fail(Errc::UnknownObject, "attr '" + a.name + "' : " + a.dom + " -> " + a.codom +
                                    " needs an object domain and an attribute type codomain");
    }
    s.generators_.emplace(a.name, Generator{Generator::Kind::Attr, s.attrs_.size()});
    s.attrs_.push_back({a.name, *dom, *codom});
  }

  for (const auto& eq : decl.equations) {
    if (eq.lhs.dom != eq.rhs.dom) {
      fail(Errc::NonParallelEquation, to_string(eq.lhs) + " = " + to_string(eq.rhs) +
                                          " have different domains");
    }
    if (s.codom(eq.lhs) != s.codom(eq.rhs)) {
      fail(Errc::NonParallelEquation, to_string(eq.lhs) + " = " + to_string(eq.rhs) +
                                          " have different codomains");
    }
  }
  s.equations_ = decl.equations;
  return s;
}

Path compose_paths(const Schema& schema, const Path& p, const Path& q) {
  Sort mid = schema.codom(p);
  if (!mid.is_ob()) {
    fail(Errc::NonComposable, to_string(p) + " ends in an attribute type");
  }
  if (schema.ob_name(ObId{mid.index}) != q.dom) {
    fail(Errc::NonComposable, to_string(p) + " does not end where " + to_string(q) + " starts");
  }
  schema.codom(q);
  Path out = p;
  out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
  return out;
}

SchemaMorphism make_schema_morphism(std::shared_ptr<const Schema> source,
                                    std::shared_ptr<const Schema> target,
                                    const SchemaMorphismDecl& decl) {
  SchemaMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  const Schema& src = *m.source;
  const Schema& tgt = *m.target;

  for (const auto& ob : src.obs()) {
    auto it = decl.ob_map.find(ob);
    if (it == decl.ob_map.end()) fail(Errc::IllTypedImage, "object '" + ob + "' is not mapped");
    auto image = tgt.find_ob(it->second);
    if (!image) {
      fail(Errc::IllTypedImage, "object '" + ob + "' maps to '" + it->second +
                                    "', which is not an object of " + tgt.name());
    }
    m.ob_map.push_back(*image);
  }
  for (const auto& t : src.attrtypes()) {
    auto it = decl.attrtype_map.find(t);
    if (it == decl.attrtype_map.end()) {
      fail(Errc::IllTypedImage, "attribute type '" + t + "' is not mapped");
    }
    auto image = tgt.find_attrtype(it->second);
    if (!image) {
      fail(Errc::IllTypedImage, "attribute type '" + t + "' maps to '" + it->second +
                                    "', which is not an attribute type of " + tgt.name());
    }
    m.attrtype_map.push_back(*image);
  }
  for (const auto& h : src.homs()) {
    auto it = decl.hom_map.find(h.name);
    if (it == decl.hom_map.end()) fail(Errc::IllTypedImage, "hom '" + h.name + "' is not mapped");
    m.hom_map.push_back(Path{tgt.ob_name(m.ob_map[h.dom.index]), it->second});
  }
  for (const auto& a : src.attrs()) {
    auto it = decl.attr_map.find(a.name);
    if (it == decl.attr_map.end()) {
      fail(Errc::IllTypedImage, "attr '" + a.name + "' is not mapped");
    }
    m.attr_map.push_back(Path{tgt.ob_name(m.ob_map[a.dom.index]), it->second});
  }
  check_schema_morphism(m);
  return m;
}

SchemaMorphismDecl to_decl(const SchemaMorphism& m) {
  SchemaMorphismDecl d;
  const Schema& src = *m.source;
  const Schema& tgt = *m.target;
  for (std::size_t i = 0; i < m.ob_map.size(); ++i) {
    d.ob_map[src.obs()[i]] = tgt.ob_name(m.ob_map[i]);
  }
  for (std::size_t i = 0; i < m.attrtype_map.size(); ++i) {
    d.attrtype_map[src.attrtypes()[i]] = tgt.attrtype_name(m.attrtype_map[i]);
  }
  for (std::size_t i = 0; i < m.hom_map.size(); ++i) {
    d.hom_map[src.homs()[i].name] = m.hom_map[i].edges;
  }
  for (std::size_t i = 0; i < m.attr_map.size(); ++i) {
    d.attr_map[src.attrs()[i].name] = m.attr_map[i].edges;
  }
  return d;
}

namespace {

Sort image_codom(const SchemaMorphism& m, const Path& image, const std::string& what) {
  try {
    return m.target->codom(image);
  } catch (const Error& e) {
    fail(Errc::IllTypedImage, "image of " + what + " is ill typed: " + e.what());
  }
}

}  // namespace

MorphismReport check_schema_morphism(const SchemaMorphism& m) {
  const Schema& src = *m.source;
  const Schema& tgt = *m.target;
  if (m.ob_map.size() != src.obs().size() ||
      m.attrtype_map.size() != src.attrtypes().size() ||
      m.hom_map.size() != src.homs().size() || m.attr_map.size() != src.attrs().size()) {
    fail(Errc::IllTypedImage, "schema morphism is not total on generators");
  }
  for (std::size_t i = 0; i < src.homs().size(); ++i) {
    const auto& h = src.homs()[i];
    const Path& image = m.hom_map[i];
    ObId dom = m.ob_map[h.dom.index];
    ObId codom = m.ob_map[h.codom.index];
    if (image.dom != tgt.ob_name(dom)) {
      fail(Errc::IllTypedImage, "image of hom '" + h.name + "' starts at " + image.dom +
                                    ", expected " + tgt.ob_name(dom));
    }
    Sort got = image_codom(m, image, "hom '" + h.name + "'");
    if (got != Sort{Sort::Kind::Ob, codom.index}) {
      fail(Errc::IllTypedImage, "image of hom '" + h.name + "' ends at " +
                                    std::string(tgt.sort_name(got)) + ", expected " +
                                    tgt.ob_name(codom));
    }
  }
  for (std::size_t i = 0; i < src.attrs().size(); ++i) {
    const auto& a = src.attrs()[i];
    const Path& image = m.attr_map[i];
    ObId dom = m.ob_map[a.dom.index];
    AttrTypeId codom = m.attrtype_map[a.codom.index];
    if (image.dom != tgt.ob_name(dom)) {
      fail(Errc::IllTypedImage, "image of attr '" + a.name + "' starts at " + image.dom +
                                    ", expected " + tgt.ob_name(dom));
    }
    Sort got = image_codom(m, image, "attr '" + a.name + "'");
    if (got != Sort{Sort::Kind::AttrType, codom.index}) {
      fail(Errc::IllTypedImage, "image of attr '" + a.name + "' ends at " +
                                    std::string(tgt.sort_name(got)) + ", expected " +
                                    tgt.attrtype_name(codom));
    }
  }
  return MorphismReport{src.equations()};
}

Path map_path(const SchemaMorphism& m, const Path& path) {
  const Schema& src = *m.source;
  Path out{m.target->ob_name(m.ob_map[src.ob(path.dom).index]), {}};
  for (const auto& step : path.edges) {
    Generator gen = src.generator(step);
    const Path& image = gen.is_hom() ? m.hom_map[gen.index] : m.attr_map[gen.index];
    out.edges.insert(out.edges.end(), image.edges.begin(), image.edges.end());
  }
  return out;
}

SchemaMorphism identity_morphism(std::shared_ptr<const Schema> schema) {
  SchemaMorphism m;
  m.source = schema;
  m.target = schema;
  for (std::size_t i = 0; i < schema->obs().size(); ++i) m.ob_map.push_back(ObId{i});
  for (std::size_t i = 0; i < schema->attrtypes().size(); ++i) {
    m.attrtype_map.push_back(AttrTypeId{i});
  }
  for (const auto& h : schema->homs()) {
    m.hom_map.push_back(Path{schema->ob_name(h.dom), {h.name}});
  }
  for (const auto& a : schema->attrs()) {
    m.attr_map.push_back(Path{schema->ob_name(a.dom), {a.name}});
  }
  return m;
}

SchemaMorphism compose(const SchemaMorphism& f, const SchemaMorphism& g) {
  if (!(*f.target == *g.source)) {
    fail(Errc::NonComposable, "schema morphisms do not compose: " + f.target->name() +
                                  " vs " + g.source->name());
  }
  SchemaMorphism m;
  m.source = f.source;
  m.target = g.target;
  for (ObId ob : f.ob_map) m.ob_map.push_back(g.ob_map[ob.index]);
  for (AttrTypeId t : f.attrtype_map) m.attrtype_map.push_back(g.attrtype_map[t.index]);
  for (const auto& p : f.hom_map) m.hom_map.push_back(map_path(g, p));
  for (const auto& p : f.attr_map) m.attr_map.push_back(map_path(g, p));
  return m;
}

}  // namespace acsets
