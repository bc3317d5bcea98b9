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

#include "acsets/io/json.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "acsets/error.hpp"
#include "acsets/graphs/schemas.hpp"

namespace acsets::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(Errc::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(as_string(item, where));
  return out;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  }
  bad(where, "expected an integer");
}

Json path_json(const Path& p) { return Json(p.edges); }

Json value_to_json(const Value& v) {
  if (v.is_undefined()) return nullptr;
  switch (*v.type()) {
    case ValueType::Int:
      return v.as_int();
    case ValueType::Float: {
      double d = v.as_float();
      if (std::isnan(d)) return "NaN";
      if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
      return d;
    }
    case ValueType::String:
      return v.as_string();
    case ValueType::Bool:
      return v.as_bool();
  }
  return nullptr;
}

Value value_from_json(const Json& j, ValueType type, const std::string& where) {
  if (j.is_null()) return Value{};
  auto mismatch = [&] {
    fail(Errc::TypeMismatch, where + ": " + j.dump() + " is not a " + std::string(to_string(type)));
  };
  switch (type) {
    case ValueType::Int:
      if (!j.is_number_integer() && !j.is_number_unsigned()) mismatch();
      return Value(as_int(j, where));
    case ValueType::Float:
      if (j.is_number()) return Value(j.get<double>());
      if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "NaN") return Value(std::numeric_limits<double>::quiet_NaN());
        if (s == "Infinity") return Value(std::numeric_limits<double>::infinity());
        if (s == "-Infinity") return Value(-std::numeric_limits<double>::infinity());
      }
      mismatch();
      break;
    case ValueType::String:
      if (!j.is_string()) mismatch();
      return Value(j.get<std::string>());
    case ValueType::Bool:
      if (!j.is_boolean()) mismatch();
      return Value(j.get<bool>());
  }
  return Value{};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return parse(read_text(path));
  } catch (const Error& e) {
    if (e.code() != Errc::ParseError) throw;
    std::string_view what = e.what();
    what.remove_prefix(std::min(what.size(), to_string(e.code()).size() + 2));
    fail(Errc::ParseError, path.string() + ": " + std::string(what));
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write '" + path.string() + "'");
  out << text;
}

Json to_json(const Schema& s) {
  Json j;
  j["name"] = s.name();
  j["obs"] = s.obs();
  Json homs = Json::array();
  for (const auto& h : s.homs()) {
    homs.push_back({{"name", h.name}, {"dom", s.ob_name(h.dom)}, {"codom", s.ob_name(h.codom)}});
  }
  j["homs"] = std::move(homs);
  j["attrtypes"] = s.attrtypes();
  Json attrs = Json::array();
  for (const auto& a : s.attrs()) {
    attrs.push_back(
        {{"name", a.name}, {"dom", s.ob_name(a.dom)}, {"codom", s.attrtype_name(a.codom)}});
  }
  j["attrs"] = std::move(attrs);
  Json eqs = Json::array();
  for (const auto& eq : s.equations()) {
    eqs.push_back({{"dom", eq.lhs.dom}, {"lhs", path_json(eq.lhs)}, {"rhs", path_json(eq.rhs)}});
  }
  j["equations"] = std::move(eqs);
  return j;
}

std::shared_ptr<const Schema> schema_from_json(const Json& j) {
  const std::string where = "schema";
  SchemaDecl decl;
  decl.name = as_string(field(j, "name", where), where + ".name");
  decl.obs = as_strings(field(j, "obs", where), where + ".obs");
  for (const auto& h : field(j, "homs", where)) {
    decl.homs.push_back({as_string(field(h, "name", where), where), as_string(field(h, "dom", where), where),
                         as_string(field(h, "codom", where), where)});
  }
  decl.attrtypes = as_strings(field(j, "attrtypes", where), where + ".attrtypes");
  for (const auto& a : field(j, "attrs", where)) {
    decl.attrs.push_back({as_string(field(a, "name", where), where), as_string(field(a, "dom", where), where),
                          as_string(field(a, "codom", where), where)});
  }
  for (const auto& eq : field(j, "equations", where)) {
    std::string dom = as_string(field(eq, "dom", where), where);
    decl.equations.push_back({Path{dom, as_strings(field(eq, "lhs", where), where)},
                              Path{dom, as_strings(field(eq, "rhs", where), where)}});
  }
  return make_schema(decl);
}

std::shared_ptr<const Schema> resolve_schema(const Json& j, const std::filesystem::path& base) {
  if (j.is_object()) return schema_from_json(j);
  std::string ref = as_string(j, "schema");
  std::filesystem::path path = base.empty() ? std::filesystem::path(ref) : base / ref;
  if (std::filesystem::is_regular_file(path)) return schema_from_json(read_json_file(path));
  return graphs::canned_schema(ref);
}

Json to_json(const Typing& typing) {
  Json j = Json::object();
  for (const auto& [name, type] : typing) j[name] = std::string(to_string(type));
  return j;
}

Typing typing_from_json(const Json& j) {
  if (!j.is_object()) bad("typing", "expected an object");
  Typing out;
  for (const auto& [name, tag] : j.items()) {
    auto type = parse_value_type(as_string(tag, "typing." + name));
    if (!type) bad("typing." + name, "unknown value type '" + tag.get<std::string>() + "'");
    out.emplace(name, *type);
  }
  return out;
}

Json to_json(const Instance& x) {
  const Schema& s = x.schema();
  Json j;
  j["schema"] = to_json(s);
  Json typing = Json::object();
  for (const auto& t : s.attrtypes()) typing[t] = std::string(to_string(x.typing().at(t)));
  j["typing"] = std::move(typing);
  const IndexSpec& index = x.index_spec();
  if (!index.indexed.empty() || !index.unique_indexed.empty()) {
    j["index"] = {{"indexed", index.indexed}, {"unique", index.unique_indexed}};
  }
  Json parts = Json::object();
  for (std::size_t c = 0; c < s.obs().size(); ++c) parts[s.obs()[c]] = x.nparts(ObId{c});
  j["parts"] = std::move(parts);
  Json homs = Json::object();
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    auto column = x.hom_column(HomId{h});
    homs[s.homs()[h].name] = std::vector<Part>(column.begin(), column.end());
  }
  j["homs"] = std::move(homs);
  Json attrs = Json::object();
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    Json column = Json::array();
    for (const auto& v : x.attr_column(AttrId{a})) column.push_back(value_to_json(v));
    attrs[s.attrs()[a].name] = std::move(column);
  }
  j["attrs"] = std::move(attrs);
  return j;
}

Instance instance_from_json(const Json& j, const std::filesystem::path& base) {
  const std::string where = "instance";
  auto schema = resolve_schema(field(j, "schema", where), base);
  const Schema& s = *schema;
  Typing typing = j.contains("typing") ? typing_from_json(j["typing"]) : Typing{};
  IndexSpec index;
  if (j.contains("index")) {
    const Json& ij = j["index"];
    if (ij.contains("indexed")) index.indexed = as_strings(ij["indexed"], "index.indexed");
    if (ij.contains("unique")) index.unique_indexed = as_strings(ij["unique"], "index.unique");
  }
  Instance x(schema, std::move(typing), std::move(index));

  const Json& parts = field(j, "parts", where);
  const Json& homs = field(j, "homs", where);
  const Json& attrs = field(j, "attrs", where);
  if (!parts.is_object() || !homs.is_object() || !attrs.is_object()) {
    bad(where, "parts, homs and attrs must be objects");
  }
  if (parts.size() != s.obs().size() || homs.size() != s.homs().size() ||
      attrs.size() != s.attrs().size()) {
    fail(Errc::SchemaMismatch, "instance tables do not match schema '" + s.name() + "'");
  }
  for (std::size_t c = 0; c < s.obs().size(); ++c) {
    auto it = parts.find(s.obs()[c]);
    if (it == parts.end()) fail(Errc::SchemaMismatch, "no part count for '" + s.obs()[c] + "'");
    std::int64_t n = as_int(*it, "parts." + s.obs()[c]);
    if (n < 0) bad("parts." + s.obs()[c], "negative part count");
    x.add_parts(ObId{c}, static_cast<std::size_t>(n));
  }
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    auto it = homs.find(hom.name);
    if (it == homs.end()) fail(Errc::SchemaMismatch, "no column for hom '" + hom.name + "'");
    if (!it->is_array() || it->size() != x.nparts(hom.dom)) {
      bad("homs." + hom.name, "expected " + std::to_string(x.nparts(hom.dom)) + " values");
    }
    const Part limit = static_cast<Part>(x.nparts(hom.codom));
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& cell = (*it)[i];
      Part v = cell.is_null() ? 0 : as_int(cell, "homs." + hom.name);
      if (v < 0 || v > limit) {
        fail(Errc::DanglingReference, "homs." + hom.name + "[" + std::to_string(i) + "] = " +
                                          std::to_string(v) + " outside 0.." + std::to_string(limit));
      }
      if (v != 0) x.set_hom(static_cast<Part>(i + 1), HomId{h}, v);
    }
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    const auto& attr = s.attrs()[a];
    auto it = attrs.find(attr.name);
    if (it == attrs.end()) fail(Errc::SchemaMismatch, "no column for attr '" + attr.name + "'");
    if (!it->is_array() || it->size() != x.nparts(attr.dom)) {
      bad("attrs." + attr.name, "expected " + std::to_string(x.nparts(attr.dom)) + " values");
    }
    const ValueType type = x.attr_type(AttrId{a});
    for (std::size_t i = 0; i < it->size(); ++i) {
      Value v = value_from_json((*it)[i], type, "attrs." + attr.name);
      if (!v.is_undefined()) x.set_attr(static_cast<Part>(i + 1), AttrId{a}, std::move(v));
    }
  }
  return x;
}

Json to_json(const SchemaMorphism& m) {
  SchemaMorphismDecl decl = to_decl(m);
  Json j;
  j["source"] = to_json(*m.source);
  j["target"] = to_json(*m.target);
  // Generator order of the source, not map order.
  Json obs = Json::object();
  for (const auto& ob : m.source->obs()) obs[ob] = decl.ob_map.at(ob);
  j["ob_map"] = std::move(obs);
  Json types = Json::object();
  for (const auto& t : m.source->attrtypes()) types[t] = decl.attrtype_map.at(t);
  j["attrtype_map"] = std::move(types);
  Json homs = Json::object();
  for (const auto& h : m.source->homs()) homs[h.name] = decl.hom_map.at(h.name);
  j["hom_map"] = std::move(homs);
  Json attrs = Json::object();
  for (const auto& a : m.source->attrs()) attrs[a.name] = decl.attr_map.at(a.name);
  j["attr_map"] = std::move(attrs);
  return j;
}

SchemaMorphism schema_morphism_from_json(const Json& j, const std::filesystem::path& base) {
  const std::string where = "morphism";
  auto source = resolve_schema(field(j, "source", where), base);
  auto target = resolve_schema(field(j, "target", where), base);
  SchemaMorphismDecl decl;
  auto read_names = [&](const char* key, std::map<std::string, std::string>& out) {
    if (!j.contains(key)) return;
    for (const auto& [k, v] : j[key].items()) out.emplace(k, as_string(v, std::string(key) + "." + k));
  };
  auto read_paths = [&](const char* key, std::map<std::string, std::vector<std::string>>& out) {
    if (!j.contains(key)) return;
    for (const auto& [k, v] : j[key].items()) out.emplace(k, as_strings(v, std::string(key) + "." + k));
  };
  read_names("ob_map", decl.ob_map);
  read_names("attrtype_map", decl.attrtype_map);
  read_paths("hom_map", decl.hom_map);
  read_paths("attr_map", decl.attr_map);
  SchemaMorphism m = make_schema_morphism(source, target, decl);
  check_schema_morphism(m);
  return m;
}

Json to_json(const ACSetMorphism& f) {
  const Schema& s = f.dom->schema();
  Json comps = Json::object();
  for (std::size_t c = 0; c < s.obs().size(); ++c) {
    auto values = f.components[c].values();
    comps[s.obs()[c]] = std::vector<Part>(values.begin(), values.end());
  }
  return Json{{"components", std::move(comps)}};
}

ACSetMorphism acset_morphism_from_json(const Json& j, InstancePtr dom, InstancePtr codom) {
  const Json& comps = field(j, "components", "morphism");
  if (!comps.is_object()) bad("morphism.components", "expected an object");
  std::map<std::string, std::vector<Part>> values;
  for (const auto& [name, column] : comps.items()) {
    if (!column.is_array()) bad("morphism.components." + name, "expected an array");
    std::vector<Part> parts;
    for (const auto& cell : column) parts.push_back(as_int(cell, "morphism.components." + name));
    values.emplace(name, std::move(parts));
  }
  return make_morphism(std::move(dom), std::move(codom), values);
}

Json to_json(const StructuredCospan& c) {
  Json j;
  j["target_ob"] = c.target_ob;
  j["apex"] = to_json(*c.apex);
  j["left"] = c.left_ids();
  j["right"] = c.right_ids();
  return j;
}

StructuredCospan cospan_from_json(const Json& j, const std::filesystem::path& base) {
  const std::string where = "cospan";
  std::string ob = as_string(field(j, "target_ob", where), where + ".target_ob");
  auto apex = share(instance_from_json(field(j, "apex", where), base));
  auto ids = [&](const char* key) {
    const Json& arr = field(j, key, where);
    if (!arr.is_array()) bad(where + "." + key, "expected an array");
    std::vector<Part> out;
    for (const auto& cell : arr) out.push_back(as_int(cell, where + "." + key));
    return out;
  };
  return open(apex, ob, ids("left"), ids("right"));
}

std::string write_schema(const Schema& schema) { return dump(to_json(schema)); }

std::string write_instance(const Instance& x) { return dump(to_json(x)); }

Instance read_instance(std::string_view text, const std::filesystem::path& base) {
  return instance_from_json(parse(text), base);
}

Instance read_instance_file(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path), path.parent_path());
}

}  // namespace acsets::io
