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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acsets {

struct ObId {
  std::size_t index = 0;
  friend auto operator<=>(ObId, ObId) = default;
};
struct HomId {
  std::size_t index = 0;
  friend auto operator<=>(HomId, HomId) = default;
};
struct AttrTypeId {
  std::size_t index = 0;
  friend auto operator<=>(AttrTypeId, AttrTypeId) = default;
};
struct AttrId {
  std::size_t index = 0;
  friend auto operator<=>(AttrId, AttrId) = default;
};

/// The codomain of a path: either a combinatorial object or an attribute type.
struct Sort {
  enum class Kind : std::uint8_t { Ob, AttrType };
  Kind kind = Kind::Ob;
  std::size_t index = 0;

  bool is_ob() const noexcept { return kind == Kind::Ob; }
  friend bool operator==(Sort, Sort) = default;
};

/// A generator of the schema, resolved by name.
struct Generator {
  enum class Kind : std::uint8_t { Hom, Attr };
  Kind kind = Kind::Hom;
  std::size_t index = 0;

  bool is_hom() const noexcept { return kind == Kind::Hom; }
  friend bool operator==(Generator, Generator) = default;
};

/// A path in the free category on the schema's generators. Steps are applied
/// left to right; an empty path is the identity at `dom`.
struct Path {
  std::string dom;
  std::vector<std::string> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

std::string to_string(const Path& path);

struct Equation {
  Path lhs;
  Path rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

struct HomDecl {
  std::string name;
  std::string dom;
  std::string codom;
};

struct AttrDecl {
  std::string name;
  std::string dom;
  std::string codom;
};

/// Raw schema declaration, in declaration order.
struct SchemaDecl {
  std::string name;
  std::vector<std::string> obs;
  std::vector<HomDecl> homs;
  std::vector<std::string> attrtypes;
  std::vector<AttrDecl> attrs;
  std::vector<Equation> equations;
};

/// A validated, immutable finitely presented schema. Objects and homs form the
/// combinatorial part; attribute types are discrete and only receive attrs.
class Schema {
 public:
  struct Hom {
    std::string name;
    ObId dom;
    ObId codom;
  };
  struct Attr {
    std::string name;
    ObId dom;
    AttrTypeId codom;
  };

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& obs() const noexcept { return obs_; }
  const std::vector<Hom>& homs() const noexcept { return homs_; }
  const std::vector<std::string>& attrtypes() const noexcept { return attrtypes_; }
  const std::vector<Attr>& attrs() const noexcept { return attrs_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }

  std::optional<ObId> find_ob(std::string_view name) const;
  std::optional<HomId> find_hom(std::string_view name) const;
  std::optional<AttrTypeId> find_attrtype(std::string_view name) const;
  std::optional<AttrId> find_attr(std::string_view name) const;
  std::optional<Generator> find_generator(std::string_view name) const;

  // Throwing lookups (Errc::UnknownName).
  ObId ob(std::string_view name) const;
  HomId hom(std::string_view name) const;
  AttrTypeId attrtype(std::string_view name) const;
  AttrId attr(std::string_view name) const;
  Generator generator(std::string_view name) const;

  const Hom& hom(HomId id) const { return homs_.at(id.index); }
  const Attr& attr(AttrId id) const { return attrs_.at(id.index); }
  const std::string& ob_name(ObId id) const { return obs_.at(id.index); }
  const std::string& attrtype_name(AttrTypeId id) const { return attrtypes_.at(id.index); }
  std::string_view sort_name(Sort sort) const;

  std::vector<HomId> homs_from(ObId ob) const;
  std::vector<HomId> homs_into(ObId ob) const;
  std::vector<AttrId> attrs_from(ObId ob) const;

  /// Type-checks `path` and returns its codomain. Throws UnknownName,
  /// UnknownObject or NonComposable.
  Sort codom(const Path& path) const;

  SchemaDecl decl() const;

  friend bool operator==(const Schema& a, const Schema& b);

 private:
  friend Schema build_presentation(const SchemaDecl& decl);

  std::string name_;
  std::vector<std::string> obs_;
  std::vector<Hom> homs_;
  std::vector<std::string> attrtypes_;
  std::vector<Attr> attrs_;
  std::vector<Equation> equations_;
  std::map<std::string, Generator, std::less<>> generators_;
};

/// Validates a declaration. Errors: DuplicateName, UnknownObject,
/// NonParallelEquation (and NonComposable/UnknownName for ill-formed paths).
Schema build_presentation(const SchemaDecl& decl);

inline std::shared_ptr<const Schema> make_schema(const SchemaDecl& decl) {
  return std::make_shared<const Schema>(build_presentation(decl));
}

/// Concatenates p then q. Identity paths are units. Errors: NonComposable.
Path compose_paths(const Schema& schema, const Path& p, const Path& q);

/// A functor between schemas given on generators. Homs and attrs map to
/// paths in the target; obs and attribute types map to obs and attribute
/// types respectively.
struct SchemaMorphism {
  std::shared_ptr<const Schema> source;
  std::shared_ptr<const Schema> target;
  std::vector<ObId> ob_map;
  std::vector<AttrTypeId> attrtype_map;
  std::vector<Path> hom_map;
  std::vector<Path> attr_map;
};

/// Name-level description of a schema morphism.
struct SchemaMorphismDecl {
  std::map<std::string, std::string> ob_map;
  std::map<std::string, std::string> attrtype_map;
  std::map<std::string, std::vector<std::string>> hom_map;
  std::map<std::string, std::vector<std::string>> attr_map;
};

/// Resolves names against both schemas. Missing entries or unknown targets
/// raise IllTypedImage; the result still needs check_schema_morphism.
SchemaMorphism make_schema_morphism(std::shared_ptr<const Schema> source,
                                    std::shared_ptr<const Schema> target,
                                    const SchemaMorphismDecl& decl);

SchemaMorphismDecl to_decl(const SchemaMorphism& m);

struct MorphismReport {
  /// Equations of the source whose preservation is not decided syntactically.
  /// They are checked on instances at migration time.
  std::vector<Equation> unverified_equations;
};

/// Checks generator-level dom/codom compatibility. Errors: IllTypedImage.
MorphismReport check_schema_morphism(const SchemaMorphism& m);

/// Image of a source path under the morphism.
Path map_path(const SchemaMorphism& m, const Path& path);

SchemaMorphism identity_morphism(std::shared_ptr<const Schema> schema);

/// Diagrammatic composite: first `f`, then `g`.
SchemaMorphism compose(const SchemaMorphism& f, const SchemaMorphism& g);

}  // namespace acsets
