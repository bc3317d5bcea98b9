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

#include "acsets/instance.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace acsets {

namespace {

void sorted_insert(std::vector<Part>& list, Part p) {
  if (list.empty() || list.back() < p) {
    list.push_back(p);
    return;
  }
  list.insert(std::lower_bound(list.begin(), list.end(), p), p);
}

void sorted_erase(std::vector<Part>& list, Part p) {
  auto it = std::lower_bound(list.begin(), list.end(), p);
  if (it != list.end() && *it == p) list.erase(it);
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    if (v.kind == Violation::Kind::Undefined) {
      out << "undefined " << v.what << " at " << v.ob << "#" << v.part << "\n";
    } else {
      out << "equation " << v.what << " fails at " << v.ob << "#" << v.part << "\n";
    }
  }
  return out.str();
}

Instance::Instance(std::shared_ptr<const Schema> schema, Typing typing, IndexSpec index)
    : schema_(std::move(schema)), index_spec_(std::move(index)) {
  const Schema& s = *schema_;
  for (const auto& t : s.attrtypes()) {
    auto it = typing.find(t);
    if (it == typing.end()) {
      fail(Errc::IncompleteTyping, "attribute type '" + t + "' has no value type");
    }
    typing_.emplace(t, it->second);
  }
  for (const auto& a : s.attrs()) attr_types_.push_back(typing_.at(s.attrtype_name(a.codom)));

  hom_kind_.assign(s.homs().size(), IndexKind::None);
  attr_kind_.assign(s.attrs().size(), IndexKind::None);
  std::set<std::string> seen;
  auto mark = [&](const std::string& name, IndexKind kind) {
    if (!seen.insert(name).second) {
      fail(Errc::BadIndexSpec, "column '" + name + "' is listed twice in the index spec");
    }
    auto gen = s.find_generator(name);
    if (!gen) fail(Errc::BadIndexSpec, "index spec names unknown column '" + name + "'");
    (gen->is_hom() ? hom_kind_[gen->index] : attr_kind_[gen->index]) = kind;
  };
  for (const auto& name : index_spec_.indexed) mark(name, IndexKind::Inverse);
  for (const auto& name : index_spec_.unique_indexed) mark(name, IndexKind::Unique);

  nparts_.assign(s.obs().size(), 0);
  homs_.resize(s.homs().size());
  attrs_.resize(s.attrs().size());
  hom_index_.resize(s.homs().size());
  hom_owner_.resize(s.homs().size());
  attr_index_.resize(s.attrs().size());
  attr_owner_.resize(s.attrs().size());
}

void Instance::check_part(ObId ob, Part p, std::string_view what) const {
  if (p < 1 || static_cast<std::size_t>(p) > nparts_[ob.index]) {
    fail(Errc::OutOfRange, std::string(what) + ": part " + std::to_string(p) + " of " +
                               schema_->ob_name(ob) + " outside 1.." +
                               std::to_string(nparts_[ob.index]));
  }
}

void Instance::check_attr_value(AttrId a, const Value& v) const {
  if (v.is_undefined()) return;
  if (v.type() != attr_types_[a.index]) {
    fail(Errc::TypeMismatch, "attr '" + schema_->attr(a).name + "' expects " +
                                 std::string(to_string(attr_types_[a.index])) + ", got " +
                                 v.to_display());
  }
}

PartRange Instance::add_parts(ObId ob, std::size_t k) {
  const Schema& s = *schema_;
  const std::size_t old = nparts_.at(ob.index);
  const std::size_t now = old + k;
  nparts_[ob.index] = now;
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    if (hom.dom == ob) homs_[h].resize(now, 0);
    if (hom.codom == ob) {
      if (hom_kind_[h] == IndexKind::Inverse) hom_index_[h].resize(now);
      if (hom_kind_[h] == IndexKind::Unique) hom_owner_[h].resize(now, 0);
    }
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    if (s.attrs()[a].dom == ob) attrs_[a].resize(now);
  }
  return part_range(static_cast<Part>(old + 1), static_cast<Part>(now));
}

PartRange Instance::add_parts(std::string_view ob_name, std::size_t k,
                              const ColumnAssignments& columns) {
  const Schema& s = *schema_;
  auto ob_id = s.find_ob(ob_name);
  if (!ob_id) fail(Errc::UnknownObject, "no object '" + std::string(ob_name) + "'");
  const ObId ob = *ob_id;
  const std::size_t old = nparts_[ob.index];

  // Validate everything before mutating.
  std::vector<Generator> gens;
  for (const auto& [name, values] : columns) {
    Generator gen = s.generator(name);
    ObId dom = gen.is_hom() ? s.homs()[gen.index].dom : s.attrs()[gen.index].dom;
    if (dom != ob) {
      fail(Errc::UnknownName, "column '" + name + "' does not belong to " + s.ob_name(ob));
    }
    if (values.size() != k) {
      fail(Errc::BadParameter, "column '" + name + "' has " + std::to_string(values.size()) +
                                   " values for " + std::to_string(k) + " new parts");
    }
    if (gen.is_hom()) {
      const auto& hom = s.homs()[gen.index];
      std::size_t limit = nparts_[hom.codom.index] + (hom.codom == ob ? k : 0);
      std::set<Part> keys;
      for (const auto& v : values) {
        Part target = 0;
        if (!v.is_undefined()) {
          if (v.type() != ValueType::Int) {
            fail(Errc::TypeMismatch, "hom '" + name + "' expects a part id, got " + v.to_display());
          }
          target = v.as_int();
        }
        if (target < 0 || static_cast<std::size_t>(target) > limit) {
          fail(Errc::DanglingReference, "hom '" + name + "' value " + std::to_string(target) +
                                            " exceeds " + std::to_string(limit) + " parts of " +
                                            s.ob_name(hom.codom));
        }
        if (hom_kind_[gen.index] == IndexKind::Unique && target != 0) {
          bool taken = static_cast<std::size_t>(target) <= hom_owner_[gen.index].size() &&
                       hom_owner_[gen.index][target - 1] != 0;
          if (taken || !keys.insert(target).second) {
            fail(Errc::DuplicateKey, "hom '" + name + "' already maps a part to " +
                                         std::to_string(target));
          }
        }
      }
    } else {
      AttrId a{gen.index};
      std::vector<Value> keys;
      for (const auto& v : values) {
        check_attr_value(a, v);
        if (attr_kind_[a.index] == IndexKind::Unique && !v.is_undefined()) {
          if (attr_owner_[a.index].count(v) ||
              std::find(keys.begin(), keys.end(), v) != keys.end()) {
            fail(Errc::DuplicateKey, "attr '" + name + "' already has key " + v.to_display());
          }
          keys.push_back(v);
        }
      }
    }
    gens.push_back(gen);
  }

  PartRange range = add_parts(ob, k);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& values = columns[c].second;
    for (std::size_t i = 0; i < k; ++i) {
      Part p = static_cast<Part>(old + 1 + i);
      if (gens[c].is_hom()) {
        link_hom(HomId{gens[c].index}, p, values[i].is_undefined() ? 0 : values[i].as_int());
      } else {
        link_attr(AttrId{gens[c].index}, p, values[i]);
      }
    }
  }
  return range;
}

Part Instance::add_part(std::string_view ob,
                        std::initializer_list<std::pair<std::string_view, Value>> values) {
  ColumnAssignments columns;
  for (const auto& [name, v] : values) columns.emplace_back(std::string(name), std::vector{v});
  return add_parts(ob, 1, columns).front();
}

Part Instance::hom(Part p, HomId h) const {
  check_part(schema_->hom(h).dom, p, schema_->hom(h).name);
  return homs_[h.index][static_cast<std::size_t>(p - 1)];
}

const Value& Instance::attr(Part p, AttrId a) const {
  check_part(schema_->attr(a).dom, p, schema_->attr(a).name);
  return attrs_[a.index][static_cast<std::size_t>(p - 1)];
}

Value Instance::subpart(Part p, std::string_view name) const {
  Generator gen = schema_->generator(name);
  if (gen.is_hom()) {
    Part v = hom(p, HomId{gen.index});
    return v == 0 ? Value{} : Value(v);
  }
  return attr(p, AttrId{gen.index});
}

Value Instance::subpart(Part p, const Path& path) const {
  const Schema& s = *schema_;
  s.codom(path);
  check_part(s.ob(path.dom), p, to_string(path));
  Part current = p;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    Generator gen = s.generator(path.edges[i]);
    if (gen.is_hom()) {
      current = homs_[gen.index][static_cast<std::size_t>(current - 1)];
      if (current == 0) {
        fail(Errc::UndefinedTraversal, "path " + to_string(path) + " from part " +
                                           std::to_string(p) + " hits undefined '" +
                                           path.edges[i] + "'");
      }
    } else {
      const Value& v = attrs_[gen.index][static_cast<std::size_t>(current - 1)];
      if (v.is_undefined()) {
        fail(Errc::UndefinedTraversal, "path " + to_string(path) + " from part " +
                                           std::to_string(p) + " hits undefined '" +
                                           path.edges[i] + "'");
      }
      return v;
    }
  }
  return Value(current);
}

std::vector<Value> Instance::subpart(std::span<const Part> parts, std::string_view name) const {
  std::vector<Value> out;
  out.reserve(parts.size());
  for (Part p : parts) out.push_back(subpart(p, name));
  return out;
}

void Instance::unlink_hom(HomId h, Part p) {
  Part old = homs_[h.index][static_cast<std::size_t>(p - 1)];
  if (old == 0) return;
  if (hom_kind_[h.index] == IndexKind::Inverse) {
    sorted_erase(hom_index_[h.index][static_cast<std::size_t>(old - 1)], p);
  } else if (hom_kind_[h.index] == IndexKind::Unique) {
    hom_owner_[h.index][static_cast<std::size_t>(old - 1)] = 0;
  }
  homs_[h.index][static_cast<std::size_t>(p - 1)] = 0;
}

void Instance::link_hom(HomId h, Part p, Part value) {
  unlink_hom(h, p);
  homs_[h.index][static_cast<std::size_t>(p - 1)] = value;
  if (value == 0) return;
  if (hom_kind_[h.index] == IndexKind::Inverse) {
    sorted_insert(hom_index_[h.index][static_cast<std::size_t>(value - 1)], p);
  } else if (hom_kind_[h.index] == IndexKind::Unique) {
    hom_owner_[h.index][static_cast<std::size_t>(value - 1)] = p;
  }
}

void Instance::unlink_attr(AttrId a, Part p) {
  Value& old = attrs_[a.index][static_cast<std::size_t>(p - 1)];
  if (old.is_undefined()) return;
  if (attr_kind_[a.index] == IndexKind::Inverse) {
    auto it = attr_index_[a.index].find(old);
    sorted_erase(it->second, p);
    if (it->second.empty()) attr_index_[a.index].erase(it);
  } else if (attr_kind_[a.index] == IndexKind::Unique) {
    attr_owner_[a.index].erase(old);
  }
  old = Value{};
}

void Instance::link_attr(AttrId a, Part p, Value value) {
  unlink_attr(a, p);
  if (!value.is_undefined()) {
    if (attr_kind_[a.index] == IndexKind::Inverse) {
      sorted_insert(attr_index_[a.index][value], p);
    } else if (attr_kind_[a.index] == IndexKind::Unique) {
      attr_owner_[a.index].emplace(value, p);
    }
  }
  attrs_[a.index][static_cast<std::size_t>(p - 1)] = std::move(value);
}

void Instance::set_hom(Part p, HomId h, Part value) {
  const auto& hom = schema_->hom(h);
  check_part(hom.dom, p, hom.name);
  if (value != 0) check_part(hom.codom, value, hom.name + " value");
  Part current = homs_[h.index][static_cast<std::size_t>(p - 1)];
  if (current == value) return;
  if (hom_kind_[h.index] == IndexKind::Unique && value != 0 &&
      hom_owner_[h.index][static_cast<std::size_t>(value - 1)] != 0) {
    fail(Errc::DuplicateKey, "hom '" + hom.name + "' already maps a part to " +
                                 std::to_string(value));
  }
  link_hom(h, p, value);
}

void Instance::set_attr(Part p, AttrId a, Value value) {
  const auto& attr = schema_->attr(a);
  check_part(attr.dom, p, attr.name);
  check_attr_value(a, value);
  const Value& current = attrs_[a.index][static_cast<std::size_t>(p - 1)];
  if (current == value) return;
  if (attr_kind_[a.index] == IndexKind::Unique && !value.is_undefined() &&
      attr_owner_[a.index].count(value)) {
    fail(Errc::DuplicateKey, "attr '" + attr.name + "' already has key " + value.to_display());
  }
  link_attr(a, p, std::move(value));
}

void Instance::set_subpart(Part p, std::string_view name, const Value& value) {
  Generator gen = schema_->generator(name);
  if (gen.is_hom()) {
    if (!value.is_undefined() && value.type() != ValueType::Int) {
      fail(Errc::TypeMismatch, "hom '" + std::string(name) + "' expects a part id, got " +
                                   value.to_display());
    }
    set_hom(p, HomId{gen.index}, value.is_undefined() ? 0 : value.as_int());
  } else {
    set_attr(p, AttrId{gen.index}, value);
  }
}

PartList Instance::incident(Part value, HomId h) const {
  const auto& hom = schema_->hom(h);
  if (value >= 1 && static_cast<std::size_t>(value) <= nparts_[hom.codom.index]) {
    if (hom_kind_[h.index] == IndexKind::Inverse) {
      return PartList(&hom_index_[h.index][static_cast<std::size_t>(value - 1)]);
    }
    if (hom_kind_[h.index] == IndexKind::Unique) {
      const Part& owner = hom_owner_[h.index][static_cast<std::size_t>(value - 1)];
      return PartList(&owner, owner == 0 ? 0 : 1);
    }
  }
  std::vector<Part> out;
  const auto& column = homs_[h.index];
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i] == value) out.push_back(static_cast<Part>(i + 1));
  }
  return PartList(std::move(out));
}

PartList Instance::incident(const Value& value, AttrId a) const {
  check_attr_value(a, value);
  if (!value.is_undefined()) {
    if (attr_kind_[a.index] == IndexKind::Inverse) {
      static const std::vector<Part> kEmpty;
      auto it = attr_index_[a.index].find(value);
      return PartList(it == attr_index_[a.index].end() ? &kEmpty : &it->second);
    }
    if (attr_kind_[a.index] == IndexKind::Unique) {
      auto it = attr_owner_[a.index].find(value);
      if (it == attr_owner_[a.index].end()) return PartList();
      return PartList(&it->second, 1);
    }
  }
  std::vector<Part> out;
  const auto& column = attrs_[a.index];
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i] == value) out.push_back(static_cast<Part>(i + 1));
  }
  return PartList(std::move(out));
}

PartList Instance::incident(const Value& value, std::string_view name) const {
  Generator gen = schema_->generator(name);
  if (gen.is_hom()) {
    if (value.is_undefined()) return incident(Part{0}, HomId{gen.index});
    if (value.type() != ValueType::Int) {
      fail(Errc::TypeMismatch, "hom '" + std::string(name) + "' expects a part id, got " +
                                   value.to_display());
    }
    return incident(value.as_int(), HomId{gen.index});
  }
  return incident(value, AttrId{gen.index});
}

std::vector<Part> Instance::incident_scan(const Value& value, std::string_view name) const {
  Generator gen = schema_->generator(name);
  std::vector<Part> out;
  if (gen.is_hom()) {
    Part target = value.is_undefined() ? 0 : value.as_int();
    const auto& column = homs_[gen.index];
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i] == target) out.push_back(static_cast<Part>(i + 1));
    }
  } else {
    const auto& column = attrs_[gen.index];
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i] == value) out.push_back(static_cast<Part>(i + 1));
    }
  }
  return out;
}

std::vector<Part> Instance::refs_to(HomId h, Part value) const {
  return incident(value, h).to_vector();
}

void Instance::rem_part(ObId ob, Part p) {
  const Schema& s = *schema_;
  check_part(ob, p, "rem_part");
  const Part last = static_cast<Part>(nparts_[ob.index]);
  const auto into = s.homs_into(ob);

  // References to p become undefined; references to the last part follow it.
  for (HomId h : into) {
    for (Part q : refs_to(h, p)) unlink_hom(h, q);
  }
  if (p != last) {
    for (HomId h : into) {
      for (Part q : refs_to(h, last)) link_hom(h, q, p);
    }
  }

  // Move the last part's own data into slot p and truncate.
  for (HomId h : s.homs_from(ob)) {
    Part v = homs_[h.index][static_cast<std::size_t>(last - 1)];
    unlink_hom(h, last);
    if (p != last) link_hom(h, p, v);
    homs_[h.index].pop_back();
  }
  for (AttrId a : s.attrs_from(ob)) {
    Value v = attrs_[a.index][static_cast<std::size_t>(last - 1)];
    unlink_attr(a, last);
    if (p != last) link_attr(a, p, std::move(v));
    attrs_[a.index].pop_back();
  }
  for (HomId h : into) {
    if (hom_kind_[h.index] == IndexKind::Inverse) hom_index_[h.index].pop_back();
    if (hom_kind_[h.index] == IndexKind::Unique) hom_owner_[h.index].pop_back();
  }
  --nparts_[ob.index];
}

namespace {

struct ResolvedPath {
  ObId dom;
  std::vector<Generator> steps;
};

}  // namespace

ValidationReport Instance::validate() const {
  const Schema& s = *schema_;
  ValidationReport report;
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    for (std::size_t i = 0; i < homs_[h].size(); ++i) {
      if (homs_[h][i] == 0) {
        report.violations.push_back({Violation::Kind::Undefined, s.ob_name(hom.dom),
                                     static_cast<Part>(i + 1), hom.name});
      }
    }
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    const auto& attr = s.attrs()[a];
    for (std::size_t i = 0; i < attrs_[a].size(); ++i) {
      if (attrs_[a][i].is_undefined()) {
        report.violations.push_back({Violation::Kind::Undefined, s.ob_name(attr.dom),
                                     static_cast<Part>(i + 1), attr.name});
      }
    }
  }

  auto resolve = [&](const Path& path) {
    ResolvedPath r{s.ob(path.dom), {}};
    for (const auto& step : path.edges) r.steps.push_back(s.generator(step));
    return r;
  };
  // Evaluates without throwing; nullopt when an undefined value is hit.
  auto eval = [&](const ResolvedPath& path, Part p) -> std::optional<Value> {
    Part current = p;
    for (const auto& gen : path.steps) {
      if (gen.is_hom()) {
        current = homs_[gen.index][static_cast<std::size_t>(current - 1)];
        if (current == 0) return std::nullopt;
      } else {
        const Value& v = attrs_[gen.index][static_cast<std::size_t>(current - 1)];
        if (v.is_undefined()) return std::nullopt;
        return v;
      }
    }
    return Value(current);
  };

  for (const auto& eq : s.equations()) {
    ResolvedPath lhs = resolve(eq.lhs);
    ResolvedPath rhs = resolve(eq.rhs);
    std::string label = to_string(eq.lhs) + " = " + to_string(eq.rhs);
    for (Part p = 1; p <= static_cast<Part>(nparts_[lhs.dom.index]); ++p) {
      auto x = eval(lhs, p);
      auto y = eval(rhs, p);
      if (x && y && !(*x == *y)) {
        report.violations.push_back(
            {Violation::Kind::Equation, s.ob_name(lhs.dom), p, label});
      }
    }
  }
  return report;
}

bool Instance::is_complete() const {
  for (const auto& column : homs_) {
    if (std::find(column.begin(), column.end(), Part{0}) != column.end()) return false;
  }
  for (const auto& column : attrs_) {
    for (const auto& v : column) {
      if (v.is_undefined()) return false;
    }
  }
  return true;
}

bool operator==(const Instance& a, const Instance& b) {
  return *a.schema_ == *b.schema_ && a.typing_ == b.typing_ && a.nparts_ == b.nparts_ &&
         a.homs_ == b.homs_ && a.attrs_ == b.attrs_;
}

}  // namespace acsets
