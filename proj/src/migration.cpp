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

#include "acsets/migration.hpp"

#include <vector>

#include "acsets/error.hpp"

namespace acsets {

namespace {

bool same_presentation(const Schema& a, const Schema& b) {
  SchemaDecl x = a.decl();
  SchemaDecl y = b.decl();
  x.name.clear();
  y.name.clear();
  return build_presentation(x) == build_presentation(y);
}

void require_no_outgoing(const Schema& full, ObId ob) {
  if (!full.homs_from(ob).empty()) {
    fail(Errc::ObHasOutgoingHoms, "object '" + full.ob_name(ob) + "' has outgoing homs");
  }
}

}  // namespace

Instance delta_migrate(const SchemaMorphism& m, const Instance& x, IndexSpec index) {
  if (!(*m.target == x.schema())) {
    fail(Errc::SchemaMismatch, "instance is not on the target schema '" + m.target->name() + "'");
  }
  if (!x.is_complete()) fail(Errc::IncompleteInstance, "instance has undefined entries");
  const Schema& src = *m.source;
  const Schema& tgt = *m.target;

  Typing typing;
  for (std::size_t t = 0; t < src.attrtypes().size(); ++t) {
    typing.emplace(src.attrtypes()[t], x.typing().at(tgt.attrtype_name(m.attrtype_map[t])));
  }
  Instance out(m.source, std::move(typing), std::move(index));
  for (std::size_t c = 0; c < src.obs().size(); ++c) {
    out.add_parts(ObId{c}, x.nparts(m.ob_map[c]));
  }
  for (std::size_t h = 0; h < src.homs().size(); ++h) {
    const Path& path = m.hom_map[h];
    for (Part p : out.parts(src.homs()[h].dom)) {
      out.set_hom(p, HomId{h}, x.subpart(p, path).as_int());
    }
  }
  for (std::size_t a = 0; a < src.attrs().size(); ++a) {
    const Path& path = m.attr_map[a];
    for (Part p : out.parts(src.attrs()[a].dom)) out.set_attr(p, AttrId{a}, x.subpart(p, path));
  }
  ValidationReport report = out.validate();
  if (!report.ok()) {
    fail(Errc::EquationViolation, "migrated instance breaks an equation: " + report.to_string());
  }
  return out;
}

Instance map_attributes(const std::map<std::string, AttrFunction>& gammas, const Typing& typing,
                        const Instance& x) {
  const Schema& s = x.schema();
  for (const auto& [name, fn] : gammas) s.attrtype(name);
  Typing out_typing = x.typing();
  for (const auto& [name, type] : typing) {
    if (out_typing.count(name)) out_typing[name] = type;
  }
  Instance out(x.schema_ptr(), out_typing, x.index_spec());
  for (std::size_t c = 0; c < s.obs().size(); ++c) out.add_parts(ObId{c}, x.nparts(ObId{c}));
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    auto column = x.hom_column(HomId{h});
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i] != 0) out.set_hom(static_cast<Part>(i + 1), HomId{h}, column[i]);
    }
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    auto it = gammas.find(s.attrtype_name(s.attrs()[a].codom));
    auto column = x.attr_column(AttrId{a});
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i].is_undefined()) continue;
      Value v = it == gammas.end() ? column[i] : it->second(column[i]);
      out.set_attr(static_cast<Part>(i + 1), AttrId{a}, std::move(v));
    }
  }
  return out;
}

Instance filter_by_attributes(const std::map<std::string, AttrPredicate>& preds,
                              const Instance& x) {
  const Schema& s = x.schema();
  for (const auto& [name, pred] : preds) s.attrtype(name);
  const std::size_t nobs = s.obs().size();

  std::vector<std::vector<char>> dead(nobs);
  for (std::size_t c = 0; c < nobs; ++c) dead[c].assign(x.nparts(ObId{c}), 0);
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    auto it = preds.find(s.attrtype_name(s.attrs()[a].codom));
    if (it == preds.end()) continue;
    auto column = x.attr_column(AttrId{a});
    auto& flags = dead[s.attrs()[a].dom.index];
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (!column[i].is_undefined() && !it->second(column[i])) flags[i] = 1;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t h = 0; h < s.homs().size(); ++h) {
      auto column = x.hom_column(HomId{h});
      auto& from = dead[s.homs()[h].dom.index];
      const auto& to = dead[s.homs()[h].codom.index];
      for (std::size_t i = 0; i < column.size(); ++i) {
        if (!from[i] && column[i] != 0 && to[static_cast<std::size_t>(column[i] - 1)]) {
          from[i] = 1;
          changed = true;
        }
      }
    }
  }

  std::vector<std::vector<Part>> renumber(nobs);
  Instance out(x.schema_ptr(), x.typing(), x.index_spec());
  for (std::size_t c = 0; c < nobs; ++c) {
    renumber[c].assign(dead[c].size(), 0);
    Part next = 0;
    for (std::size_t i = 0; i < dead[c].size(); ++i) {
      if (!dead[c][i]) renumber[c][i] = ++next;
    }
    out.add_parts(ObId{c}, static_cast<std::size_t>(next));
  }
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    auto column = x.hom_column(HomId{h});
    const auto& from = renumber[s.homs()[h].dom.index];
    const auto& to = renumber[s.homs()[h].codom.index];
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (from[i] != 0 && column[i] != 0) {
        out.set_hom(from[i], HomId{h}, to[static_cast<std::size_t>(column[i] - 1)]);
      }
    }
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    auto column = x.attr_column(AttrId{a});
    const auto& from = renumber[s.attrs()[a].dom.index];
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (from[i] != 0) out.set_attr(from[i], AttrId{a}, column[i]);
    }
  }
  return out;
}

std::shared_ptr<const Schema> foot_schema(const Schema& full, std::string_view ob) {
  ObId id = full.ob(ob);
  SchemaDecl decl;
  decl.name = full.name() + "." + std::string(ob);
  decl.obs.emplace_back(ob);
  decl.attrtypes = full.attrtypes();
  for (AttrId a : full.attrs_from(id)) {
    const auto& attr = full.attr(a);
    decl.attrs.push_back({attr.name, std::string(ob), full.attrtype_name(attr.codom)});
  }
  return make_schema(decl);
}

SchemaMorphism foot_inclusion(std::shared_ptr<const Schema> full, std::string_view ob) {
  auto foot = foot_schema(*full, ob);
  SchemaMorphismDecl decl;
  decl.ob_map.emplace(std::string(ob), std::string(ob));
  for (const auto& t : full->attrtypes()) decl.attrtype_map.emplace(t, t);
  for (const auto& a : foot->attrs()) decl.attr_map.emplace(a.name, std::vector{a.name});
  SchemaMorphism m = make_schema_morphism(foot, std::move(full), decl);
  check_schema_morphism(m);
  return m;
}

Instance discrete_instance(const Instance& foot, std::string_view target_ob,
                           std::shared_ptr<const Schema> full, IndexSpec index) {
  ObId ob = full->ob(target_ob);
  require_no_outgoing(*full, ob);
  auto expected = foot_schema(*full, target_ob);
  if (!same_presentation(foot.schema(), *expected)) {
    fail(Errc::SchemaMismatch, "foot schema does not match object '" + std::string(target_ob) + "'");
  }
  Instance out(full, foot.typing(), std::move(index));
  out.add_parts(ob, foot.nparts(ObId{0}));
  const auto attrs = full->attrs_from(ob);
  for (std::size_t a = 0; a < attrs.size(); ++a) {
    auto column = foot.attr_column(AttrId{a});
    for (std::size_t i = 0; i < column.size(); ++i) {
      out.set_attr(static_cast<Part>(i + 1), attrs[a], column[i]);
    }
  }
  return out;
}

}  // namespace acsets
