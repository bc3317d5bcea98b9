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

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acsets/error.hpp"
#include "acsets/finset.hpp"
#include "acsets/fixed_string.hpp"
#include "acsets/schema.hpp"
#include "acsets/value.hpp"

namespace acsets {

using PartRange = std::ranges::iota_view<Part, Part>;

inline PartRange part_range(Part first, Part last_inclusive) {
  return std::views::iota(first, last_inclusive + 1);
}

/// Result of incident(): a view into an index, or an owned scan result.
class PartList {
 public:
  PartList() = default;
  PartList(const Part* data, std::size_t n) : data_(data), size_(n) {}
  explicit PartList(const std::vector<Part>* ref) : data_(ref->data()), size_(ref->size()) {}
  explicit PartList(std::vector<Part> owned) : owned_(std::move(owned)), owns_(true) {}

  const Part* begin() const noexcept { return data(); }
  const Part* end() const noexcept { return data() + size(); }
  std::size_t size() const noexcept { return owns_ ? owned_.size() : size_; }
  bool empty() const noexcept { return size() == 0; }
  Part operator[](std::size_t i) const noexcept { return data()[i]; }
  std::vector<Part> to_vector() const { return {begin(), end()}; }

 private:
  const Part* data() const noexcept { return owns_ ? owned_.data() : data_; }

  const Part* data_ = nullptr;
  std::size_t size_ = 0;
  std::vector<Part> owned_;
  bool owns_ = false;
};

struct Violation {
  enum class Kind { Undefined, Equation };
  Kind kind = Kind::Undefined;
  std::string ob;
  Part part = 0;
  /// Column name for Undefined, "lhs = rhs" for Equation.
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

/// Per-column values for add_parts; each vector holds one value per new part.
using ColumnAssignments = std::vector<std::pair<std::string, std::vector<Value>>>;

/// An attributed C-set over a schema known at run time.
///
/// Hom columns store 1-based part ids with 0 meaning undefined; attribute
/// columns store tagged values. Inverse indexes keep their part lists sorted.
/// Single writer, many readers; no internal synchronization.
class Instance {
 public:
  enum class IndexKind : std::uint8_t { None, Inverse, Unique };

  /// Errors: IncompleteTyping, BadIndexSpec.
  Instance(std::shared_ptr<const Schema> schema, Typing typing = {}, IndexSpec index = {});

  const Schema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const Schema>& schema_ptr() const noexcept { return schema_; }
  const Typing& typing() const noexcept { return typing_; }
  const IndexSpec& index_spec() const noexcept { return index_spec_; }
  ValueType attr_type(AttrId a) const { return attr_types_.at(a.index); }
  IndexKind hom_index_kind(HomId h) const { return hom_kind_.at(h.index); }
  IndexKind attr_index_kind(AttrId a) const { return attr_kind_.at(a.index); }

  std::size_t nparts(ObId ob) const { return nparts_.at(ob.index); }
  std::size_t nparts(std::string_view ob) const { return nparts(schema_->ob(ob)); }
  PartRange parts(ObId ob) const { return part_range(1, static_cast<Part>(nparts(ob))); }
  PartRange parts(std::string_view ob) const { return parts(schema_->ob(ob)); }

  PartRange add_parts(ObId ob, std::size_t k);
  /// Errors: UnknownObject, UnknownName, TypeMismatch, DanglingReference,
  /// DuplicateKey, BadParameter (column length != k). Atomic on failure.
  PartRange add_parts(std::string_view ob, std::size_t k, const ColumnAssignments& columns = {});
  Part add_part(std::string_view ob,
                std::initializer_list<std::pair<std::string_view, Value>> values = {});

  Part hom(Part p, HomId h) const;
  const Value& attr(Part p, AttrId a) const;
  /// Raw column value; an undefined hom or attr yields Value{} (undefined).
  Value subpart(Part p, std::string_view name) const;
  /// Evaluates the path step by step. Errors: OutOfRange, UndefinedTraversal.
  Value subpart(Part p, const Path& path) const;
  std::vector<Value> subpart(std::span<const Part> parts, std::string_view name) const;

  /// Errors: OutOfRange, DuplicateKey.
  void set_hom(Part p, HomId h, Part value);
  /// Errors: OutOfRange, TypeMismatch, DuplicateKey.
  void set_attr(Part p, AttrId a, Value value);
  void set_subpart(Part p, std::string_view name, const Value& value);

  /// Sorted preimage of `value` under a hom, using the index when present.
  PartList incident(Part value, HomId h) const;
  PartList incident(const Value& value, AttrId a) const;
  PartList incident(const Value& value, std::string_view name) const;
  /// Same result computed by a full column scan, ignoring any index.
  std::vector<Part> incident_scan(const Value& value, std::string_view name) const;

  /// Pop-and-swap deletion: the last part of `ob` takes the id `p`; references
  /// to `p` become undefined and references to the last part follow it.
  /// Errors: OutOfRange.
  void rem_part(ObId ob, Part p);
  void rem_part(std::string_view ob, Part p) { rem_part(schema_->ob(ob), p); }

  /// Checks totality and every schema equation at every part.
  ValidationReport validate() const;
  bool is_complete() const;

  std::span<const Part> hom_column(HomId h) const { return homs_.at(h.index); }
  std::span<const Value> attr_column(AttrId a) const { return attrs_.at(a.index); }

  /// Data equality: schema, typing, part counts and columns. Indexes are
  /// derived data and do not take part.
  friend bool operator==(const Instance& a, const Instance& b);

  // Name-templated accessors shared with StaticACSet so generic algorithms
  // can target either. Hom columns only; names resolve per call.
  template <fixed_string Ob>
  std::size_t nparts() const {
    return nparts(Ob.view());
  }
  template <fixed_string Ob>
  PartRange parts() const {
    return parts(Ob.view());
  }
  template <fixed_string Ob>
  PartRange add_parts(std::size_t k) {
    return add_parts(schema_->ob(Ob.view()), k);
  }
  template <fixed_string Ob, class... Assigns>
  Part add_part(const Assigns&... assigns) {
    Part p = add_parts(schema_->ob(Ob.view()), 1).front();
    (set_subpart(p, Assigns::name, Value(assigns.value)), ...);
    return p;
  }
  template <fixed_string Hom>
  Part subpart(Part p) const {
    return hom(p, schema_->hom(Hom.view()));
  }
  template <fixed_string Hom>
  void set_subpart(Part p, Part value) {
    set_hom(p, schema_->hom(Hom.view()), value);
  }
  template <fixed_string Hom>
  PartList incident(Part value) const {
    return incident(value, schema_->hom(Hom.view()));
  }

 private:
  void check_part(ObId ob, Part p, std::string_view what) const;
  std::vector<Part> refs_to(HomId h, Part value) const;
  void unlink_hom(HomId h, Part p);
  void link_hom(HomId h, Part p, Part value);
  void unlink_attr(AttrId a, Part p);
  void link_attr(AttrId a, Part p, Value value);
  void check_attr_value(AttrId a, const Value& v) const;

  std::shared_ptr<const Schema> schema_;
  Typing typing_;
  IndexSpec index_spec_;
  std::vector<ValueType> attr_types_;
  std::vector<IndexKind> hom_kind_;
  std::vector<IndexKind> attr_kind_;

  std::vector<std::size_t> nparts_;
  std::vector<std::vector<Part>> homs_;
  std::vector<std::vector<Value>> attrs_;

  std::vector<std::vector<std::vector<Part>>> hom_index_;
  std::vector<std::vector<Part>> hom_owner_;
  std::vector<std::unordered_map<Value, std::vector<Part>, ValueHash>> attr_index_;
  std::vector<std::unordered_map<Value, Part, ValueHash>> attr_owner_;
};

/// make_instance in functional form.
inline Instance make_instance(std::shared_ptr<const Schema> schema, Typing typing = {},
                              IndexSpec index = {}) {
  return Instance(std::move(schema), std::move(typing), std::move(index));
}

}  // namespace acsets
