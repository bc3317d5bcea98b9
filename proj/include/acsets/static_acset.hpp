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

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acsets/error.hpp"
#include "acsets/finset.hpp"
#include "acsets/fixed_string.hpp"
#include "acsets/instance.hpp"
#include "acsets/schema.hpp"
#include "acsets/value.hpp"

namespace acsets {

// Compile-time schema descriptions. A description is a struct with
//   static constexpr std::string_view name;
//   static constexpr std::array<std::string_view, N> obs;
//   static constexpr std::array<HomSig, N> homs;
//   static constexpr std::array<std::string_view, N> attrtypes;
//   static constexpr std::array<AttrSig, N> attrs;
//   static constexpr std::array<EqSig, N> equations;
// Equation sides are space-separated generator names ("" is the identity).

struct HomSig {
  std::string_view name;
  std::string_view dom;
  std::string_view codom;
};
struct AttrSig {
  std::string_view name;
  std::string_view dom;
  std::string_view codom;
};
struct EqSig {
  std::string_view dom;
  std::string_view lhs;
  std::string_view rhs;
};

/// Columns carrying a sorted inverse-image index.
template <fixed_string... Names>
struct Indexed {
  static constexpr bool unique = false;
  static constexpr std::array<std::string_view, sizeof...(Names)> names{Names.view()...};
};

/// Columns carrying an injective key index.
template <fixed_string... Names>
struct UniqueIndexed {
  static constexpr bool unique = true;
  static constexpr std::array<std::string_view, sizeof...(Names)> names{Names.view()...};
};

namespace detail {

std::vector<std::string> split_path(std::string_view text);

// Out of line so the accessors stay small.
[[noreturn]] [[gnu::cold]] void fail_part_range(std::string_view ob, Part p, std::size_t n);
[[noreturn]] [[gnu::cold]] void fail_undefined_attr(std::string_view attr, Part p);

template <class Desc>
std::shared_ptr<const Schema> schema_from_desc() {
  SchemaDecl decl;
  decl.name = std::string(Desc::name);
  for (auto ob : Desc::obs) decl.obs.emplace_back(ob);
  for (const auto& h : Desc::homs) {
    decl.homs.push_back({std::string(h.name), std::string(h.dom), std::string(h.codom)});
  }
  for (auto t : Desc::attrtypes) decl.attrtypes.emplace_back(t);
  for (const auto& a : Desc::attrs) {
    decl.attrs.push_back({std::string(a.name), std::string(a.dom), std::string(a.codom)});
  }
  for (const auto& eq : Desc::equations) {
    decl.equations.push_back(
        {Path{std::string(eq.dom), split_path(eq.lhs)}, Path{std::string(eq.dom), split_path(eq.rhs)}});
  }
  return make_schema(decl);
}

template <class T, Instance::IndexKind K>
struct AttrColumn {
  struct NoIndex {};
  using Index = std::conditional_t<
      K == Instance::IndexKind::Inverse,
      std::unordered_map<T, std::vector<Part>, KeyHash<T>, KeyEqual<T>>,
      std::conditional_t<K == Instance::IndexKind::Unique,
                         std::unordered_map<T, Part, KeyHash<T>, KeyEqual<T>>, NoIndex>>;

  std::vector<T> values;
  std::vector<unsigned char> defined;
  [[no_unique_address]] Index index;
};

template <std::size_t N, class F>
constexpr void for_each_index(F&& f) {
  [&]<std::size_t... I>(std::index_sequence<I...>) {
    (f(std::integral_constant<std::size_t, I>{}), ...);
  }(std::make_index_sequence<N>{});
}

}  // namespace detail

template <class Desc, class Types = std::tuple<>, class... Specs>
class StaticACSet;

/// An acset whose schema is fixed at compile time. Names given as template
/// arguments resolve to column positions during compilation, so accessors are
/// direct vector operations. Semantics match Instance.
template <class Desc, class... Ts, class... Specs>
class StaticACSet<Desc, std::tuple<Ts...>, Specs...> {
 public:
  using IndexKind = Instance::IndexKind;

  static constexpr std::size_t kObs = Desc::obs.size();
  static constexpr std::size_t kHoms = Desc::homs.size();
  static constexpr std::size_t kAttrTypes = Desc::attrtypes.size();
  static constexpr std::size_t kAttrs = Desc::attrs.size();
  static_assert(sizeof...(Ts) == kAttrTypes, "one value type per attribute type");

 private:
  static constexpr std::size_t find_ob(std::string_view name) {
    for (std::size_t i = 0; i < kObs; ++i) {
      if (Desc::obs[i] == name) return i;
    }
    return kObs;
  }
  static constexpr std::size_t find_hom(std::string_view name) {
    for (std::size_t i = 0; i < kHoms; ++i) {
      if (Desc::homs[i].name == name) return i;
    }
    return kHoms;
  }
  static constexpr std::size_t find_attr(std::string_view name) {
    for (std::size_t i = 0; i < kAttrs; ++i) {
      if (Desc::attrs[i].name == name) return i;
    }
    return kAttrs;
  }
  static constexpr std::size_t find_attrtype(std::string_view name) {
    for (std::size_t i = 0; i < kAttrTypes; ++i) {
      if (Desc::attrtypes[i] == name) return i;
    }
    return kAttrTypes;
  }
  static constexpr IndexKind kind_of(std::string_view name) {
    IndexKind kind = IndexKind::None;
    (
        [&] {
          for (auto n : Specs::names) {
            if (n == name) kind = Specs::unique ? IndexKind::Unique : IndexKind::Inverse;
          }
        }(),
        ...);
    return kind;
  }
  static constexpr bool specs_valid() {
    std::size_t listed = 0;
    bool ok = true;
    (
        [&] {
          for (auto n : Specs::names) {
            ++listed;
            if (find_hom(n) == kHoms && find_attr(n) == kAttrs) ok = false;
          }
        }(),
        ...);
    std::size_t distinct = 0;
    for (std::size_t h = 0; h < kHoms; ++h) distinct += kind_of(Desc::homs[h].name) != IndexKind::None;
    for (std::size_t a = 0; a < kAttrs; ++a) distinct += kind_of(Desc::attrs[a].name) != IndexKind::None;
    return ok && distinct == listed;
  }
  static_assert(specs_valid(), "index spec names unknown or repeated columns");

  static constexpr std::array<std::size_t, kHoms> kHomDom = [] {
    std::array<std::size_t, kHoms> out{};
    for (std::size_t h = 0; h < kHoms; ++h) out[h] = find_ob(Desc::homs[h].dom);
    return out;
  }();
  static constexpr std::array<std::size_t, kHoms> kHomCodom = [] {
    std::array<std::size_t, kHoms> out{};
    for (std::size_t h = 0; h < kHoms; ++h) out[h] = find_ob(Desc::homs[h].codom);
    return out;
  }();
  static constexpr std::array<IndexKind, kHoms> kHomKind = [] {
    std::array<IndexKind, kHoms> out{};
    for (std::size_t h = 0; h < kHoms; ++h) out[h] = kind_of(Desc::homs[h].name);
    return out;
  }();

  template <std::size_t A>
  using attr_t = std::tuple_element_t<find_attrtype(Desc::attrs[A].codom), std::tuple<Ts...>>;
  template <std::size_t A>
  static constexpr std::size_t kAttrDom = find_ob(Desc::attrs[A].dom);
  template <std::size_t A>
  static constexpr IndexKind kAttrKind = kind_of(Desc::attrs[A].name);

  template <class Seq>
  struct AttrStorage;
  template <std::size_t... A>
  struct AttrStorage<std::index_sequence<A...>> {
    using type = std::tuple<detail::AttrColumn<attr_t<A>, kAttrKind<A>>...>;
  };

  template <fixed_string Ob>
  static consteval std::size_t ob_id() {
    constexpr std::size_t i = find_ob(Ob.view());
    static_assert(i < kObs, "unknown object");
    return i;
  }
  template <fixed_string Name>
  static constexpr bool is_hom = find_hom(Name.view()) < kHoms;
  template <fixed_string Name>
  static consteval std::size_t attr_id() {
    constexpr std::size_t i = find_attr(Name.view());
    static_assert(i < kAttrs, "unknown hom or attribute");
    return i;
  }

 public:
  template <fixed_string Attr>
  using attr_type = attr_t<attr_id<Attr>()>;

  StaticACSet() {
    nparts_.fill(0);
  }

  static const std::shared_ptr<const Schema>& schema() {
    static const std::shared_ptr<const Schema> s = detail::schema_from_desc<Desc>();
    return s;
  }
  static Typing typing() {
    Typing t;
    std::size_t i = 0;
    ((t.emplace(std::string(Desc::attrtypes[i++]), ValueTraits<Ts>::type)), ...);
    return t;
  }
  static IndexSpec index_spec() {
    IndexSpec spec;
    (
        [&] {
          for (auto n : Specs::names) {
            (Specs::unique ? spec.unique_indexed : spec.indexed).emplace_back(n);
          }
        }(),
        ...);
    return spec;
  }

  template <fixed_string Ob>
  std::size_t nparts() const noexcept {
    return nparts_[ob_id<Ob>()];
  }
  template <fixed_string Ob>
  PartRange parts() const noexcept {
    return part_range(1, static_cast<Part>(nparts_[ob_id<Ob>()]));
  }

  template <fixed_string Ob>
  PartRange add_parts(std::size_t k) {
    return grow(ob_id<Ob>(), k);
  }

  /// add_part<"E">(assign<"src">(1), assign<"tgt">(2)). Atomic on failure.
  template <fixed_string Ob, class... Assigns>
  Part add_part(const Assigns&... assigns) {
    constexpr std::size_t ob = ob_id<Ob>();
    (check_assign<ob, Assigns>(assigns.value), ...);
    static_assert(distinct_names<Assigns...>(), "column assigned twice");
    Part p = grow(ob, 1).front();
    (set_subpart<Assigns::literal>(p, assigns.value), ...);
    return p;
  }

  template <fixed_string Name>
  decltype(auto) subpart(Part p) const {
    if constexpr (is_hom<Name>) {
      constexpr std::size_t h = find_hom(Name.view());
      check_part(kHomDom[h], p);
      return homs_[h][static_cast<std::size_t>(p - 1)];
    } else {
      constexpr std::size_t a = attr_id<Name>();
      check_part(kAttrDom<a>, p);
      const auto& col = std::get<a>(attrs_);
      if (!col.defined[static_cast<std::size_t>(p - 1)]) [[unlikely]] {
        detail::fail_undefined_attr(Name.view(), p);
      }
      if constexpr (std::is_same_v<attr_t<a>, bool>) {
        return static_cast<bool>(col.values[static_cast<std::size_t>(p - 1)]);
      } else {
        return static_cast<const attr_t<a>&>(col.values[static_cast<std::size_t>(p - 1)]);
      }
    }
  }

  template <fixed_string Name>
  bool is_defined(Part p) const {
    if constexpr (is_hom<Name>) {
      return subpart<Name>(p) != 0;
    } else {
      constexpr std::size_t a = attr_id<Name>();
      check_part(kAttrDom<a>, p);
      return std::get<a>(attrs_).defined[static_cast<std::size_t>(p - 1)] != 0;
    }
  }

  template <fixed_string Name, class V>
  void set_subpart(Part p, const V& value) {
    if constexpr (is_hom<Name>) {
      constexpr std::size_t h = find_hom(Name.view());
      check_part(kHomDom[h], p);
      const Part v = static_cast<Part>(value);
      if (v != 0) check_part(kHomCodom[h], v);
      if (homs_[h][static_cast<std::size_t>(p - 1)] == v) return;
      if constexpr (kHomKind[h] == IndexKind::Unique) {
        if (v != 0 && hom_owner_[h][static_cast<std::size_t>(v - 1)] != 0) {
          fail(Errc::DuplicateKey, "hom '" + std::string(Name.view()) +
                                       "' already maps a part to " + std::to_string(v));
        }
      }
      link_hom(h, p, v);
    } else {
      constexpr std::size_t a = attr_id<Name>();
      using T = attr_t<a>;
      check_part(kAttrDom<a>, p);
      auto& col = std::get<a>(attrs_);
      const std::size_t i = static_cast<std::size_t>(p - 1);
      const T& v = value;
      if constexpr (kAttrKind<a> == IndexKind::None) {
        col.values[i] = v;
        col.defined[i] = 1;
        return;
      }
      if (col.defined[i] && KeyEqual<T>{}(col.values[i], v)) return;
      if constexpr (kAttrKind<a> == IndexKind::Unique) {
        if (col.index.count(v)) {
          fail(Errc::DuplicateKey, "attr '" + std::string(Name.view()) + "' already has key " +
                                       Value(v).to_display());
        }
      }
      unlink_attr<a>(p);
      link_attr<a>(p, v);
    }
  }

  /// Clears an attribute back to undefined.
  template <fixed_string Name>
  void clear_subpart(Part p) {
    if constexpr (is_hom<Name>) {
      set_subpart<Name>(p, Part{0});
    } else {
      constexpr std::size_t a = attr_id<Name>();
      check_part(kAttrDom<a>, p);
      unlink_attr<a>(p);
    }
  }

  /// Sorted preimage; index-backed when the column is indexed.
  template <fixed_string Name>
  PartList incident(Part value) const
    requires(is_hom<Name>)
  {
    constexpr std::size_t h = find_hom(Name.view());
    const std::size_t v = static_cast<std::size_t>(value - 1);
    if constexpr (kHomKind[h] == IndexKind::Inverse) {
      if (value >= 1 && v < hom_index_[h].size()) return PartList(&hom_index_[h][v]);
      return PartList();
    } else if constexpr (kHomKind[h] == IndexKind::Unique) {
      if (value >= 1 && v < hom_owner_[h].size()) {
        const Part& owner = hom_owner_[h][v];
        return PartList(&owner, owner == 0 ? 0 : 1);
      }
      return PartList();
    } else {
      return PartList(scan(homs_[h], value));
    }
  }

  template <fixed_string Name, class V>
  PartList incident(const V& value) const
    requires(!is_hom<Name>)
  {
    constexpr std::size_t a = attr_id<Name>();
    using T = attr_t<a>;
    const T& key = value;
    const auto& col = std::get<a>(attrs_);
    if constexpr (kAttrKind<a> == IndexKind::Inverse) {
      auto it = col.index.find(key);
      return it == col.index.end() ? PartList() : PartList(&it->second);
    } else if constexpr (kAttrKind<a> == IndexKind::Unique) {
      auto it = col.index.find(key);
      return it == col.index.end() ? PartList() : PartList(&it->second, 1);
    } else {
      std::vector<Part> out;
      for (std::size_t i = 0; i < col.values.size(); ++i) {
        if (col.defined[i] && KeyEqual<T>{}(col.values[i], key)) out.push_back(static_cast<Part>(i + 1));
      }
      return PartList(std::move(out));
    }
  }

  template <fixed_string Name>
  std::span<const Part> column() const
    requires(is_hom<Name>)
  {
    return homs_[find_hom(Name.view())];
  }

  /// Raw attribute values; entries at undefined parts are value-initialized.
  template <fixed_string Name>
  auto column() const
    requires(!is_hom<Name>)
  {
    constexpr std::size_t a = attr_id<Name>();
    static_assert(!std::is_same_v<attr_t<a>, bool>, "bool columns have no contiguous view");
    return std::span<const attr_t<a>>(std::get<a>(attrs_).values);
  }

  /// Writable view of an unindexed attribute column. Writes through it mark
  /// nothing as defined; use it for bulk updates of defined data.
  template <fixed_string Name>
  auto mutable_column()
    requires(!is_hom<Name>)
  {
    constexpr std::size_t a = attr_id<Name>();
    static_assert(kAttrKind<a> == IndexKind::None, "indexed columns must go through set_subpart");
    static_assert(!std::is_same_v<attr_t<a>, bool>, "bool columns have no contiguous view");
    return std::span<attr_t<a>>(std::get<a>(attrs_).values);
  }

  /// Pop-and-swap deletion, as Instance::rem_part.
  template <fixed_string Ob>
  void rem_part(Part p) {
    constexpr std::size_t ob = ob_id<Ob>();
    check_part(ob, p);
    const Part last = static_cast<Part>(nparts_[ob]);
    for (std::size_t h = 0; h < kHoms; ++h) {
      if (kHomCodom[h] != ob) continue;
      for (Part q : refs_to(h, p)) unlink_hom(h, q);
    }
    if (p != last) {
      for (std::size_t h = 0; h < kHoms; ++h) {
        if (kHomCodom[h] != ob) continue;
        for (Part q : refs_to(h, last)) link_hom(h, q, p);
      }
    }
    for (std::size_t h = 0; h < kHoms; ++h) {
      if (kHomDom[h] != ob) continue;
      Part v = homs_[h][static_cast<std::size_t>(last - 1)];
      unlink_hom(h, last);
      if (p != last) link_hom(h, p, v);
      homs_[h].pop_back();
    }
    detail::for_each_index<kAttrs>([&](auto A) {
      constexpr std::size_t a = decltype(A)::value;
      if constexpr (kAttrDom<a> == ob) {
        auto& col = std::get<a>(attrs_);
        const std::size_t li = static_cast<std::size_t>(last - 1);
        unlink_attr<a>(p);
        if (p != last && col.defined[li]) {
          attr_t<a> v = col.values[li];
          unlink_attr<a>(last);
          link_attr<a>(p, v);
        }
        col.values.pop_back();
        col.defined.pop_back();
      }
    });
    for (std::size_t h = 0; h < kHoms; ++h) {
      if (kHomCodom[h] != ob) continue;
      if (kHomKind[h] == IndexKind::Inverse) hom_index_[h].pop_back();
      if (kHomKind[h] == IndexKind::Unique) hom_owner_[h].pop_back();
    }
    --nparts_[ob];
  }

  Instance to_instance() const {
    Instance out(schema(), typing(), index_spec());
    for (std::size_t ob = 0; ob < kObs; ++ob) out.add_parts(ObId{ob}, nparts_[ob]);
    for (std::size_t h = 0; h < kHoms; ++h) {
      for (std::size_t i = 0; i < homs_[h].size(); ++i) {
        if (homs_[h][i] != 0) out.set_hom(static_cast<Part>(i + 1), HomId{h}, homs_[h][i]);
      }
    }
    detail::for_each_index<kAttrs>([&](auto A) {
      constexpr std::size_t a = decltype(A)::value;
      const auto& col = std::get<a>(attrs_);
      for (std::size_t i = 0; i < col.values.size(); ++i) {
        if (col.defined[i]) {
          out.set_attr(static_cast<Part>(i + 1), AttrId{a}, Value(attr_t<a>(col.values[i])));
        }
      }
    });
    return out;
  }

  /// Errors: SchemaMismatch when schema or typing differ.
  static StaticACSet from_instance(const Instance& x) {
    if (!(x.schema() == *schema()) || x.typing() != typing()) {
      fail(Errc::SchemaMismatch, "instance does not match schema " + std::string(Desc::name));
    }
    StaticACSet out;
    for (std::size_t ob = 0; ob < kObs; ++ob) out.grow(ob, x.nparts(ObId{ob}));
    for (std::size_t h = 0; h < kHoms; ++h) {
      auto col = x.hom_column(HomId{h});
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] == 0) continue;
        if (kHomKind[h] == IndexKind::Unique &&
            out.hom_owner_[h][static_cast<std::size_t>(col[i] - 1)] != 0) {
          fail(Errc::DuplicateKey, "hom '" + std::string(Desc::homs[h].name) + "' is not injective");
        }
        out.link_hom(h, static_cast<Part>(i + 1), col[i]);
      }
    }
    detail::for_each_index<kAttrs>([&](auto A) {
      constexpr std::size_t a = decltype(A)::value;
      auto col = x.attr_column(AttrId{a});
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i].is_undefined()) continue;
        attr_t<a> v = ValueTraits<attr_t<a>>::from(col[i]);
        if constexpr (kAttrKind<a> == IndexKind::Unique) {
          if (std::get<a>(out.attrs_).index.count(v)) {
            fail(Errc::DuplicateKey, "attr '" + std::string(Desc::attrs[a].name) + "' repeats a key");
          }
        }
        out.template link_attr<a>(static_cast<Part>(i + 1), v);
      }
    });
    return out;
  }

  ValidationReport validate() const { return to_instance().validate(); }

 private:
  PartRange grow(std::size_t ob, std::size_t k) {
    const std::size_t old = nparts_[ob];
    const std::size_t now = old + k;
    nparts_[ob] = now;
    for (std::size_t h = 0; h < kHoms; ++h) {
      if (kHomDom[h] == ob) homs_[h].resize(now, 0);
      if (kHomCodom[h] == ob) {
        if (kHomKind[h] == IndexKind::Inverse) hom_index_[h].resize(now);
        if (kHomKind[h] == IndexKind::Unique) hom_owner_[h].resize(now, 0);
      }
    }
    detail::for_each_index<kAttrs>([&](auto A) {
      constexpr std::size_t a = decltype(A)::value;
      if (kAttrDom<a> == ob) {
        std::get<a>(attrs_).values.resize(now);
        std::get<a>(attrs_).defined.resize(now, 0);
      }
    });
    return part_range(static_cast<Part>(old + 1), static_cast<Part>(now));
  }

  void check_part(std::size_t ob, Part p) const {
    if (static_cast<std::size_t>(p - 1) >= nparts_[ob]) [[unlikely]] {
      detail::fail_part_range(Desc::obs[ob], p, nparts_[ob]);
    }
  }

  template <std::size_t Ob, class Assign, class V>
  void check_assign(const V& value) const {
    constexpr auto name = Assign::literal;
    if constexpr (is_hom<name>) {
      constexpr std::size_t h = find_hom(name.view());
      static_assert(kHomDom[h] == Ob, "column does not belong to this object");
      const Part v = static_cast<Part>(value);
      const std::size_t limit = nparts_[kHomCodom[h]] + (kHomCodom[h] == Ob ? 1 : 0);
      if (v < 0 || static_cast<std::size_t>(v) > limit) {
        fail(Errc::DanglingReference, "hom '" + std::string(name.view()) + "' value " +
                                          std::to_string(v) + " has no target");
      }
      if constexpr (kHomKind[h] == IndexKind::Unique) {
        if (v != 0 && static_cast<std::size_t>(v) <= hom_owner_[h].size() &&
            hom_owner_[h][static_cast<std::size_t>(v - 1)] != 0) {
          fail(Errc::DuplicateKey, "hom '" + std::string(name.view()) +
                                       "' already maps a part to " + std::to_string(v));
        }
      }
    } else {
      constexpr std::size_t a = attr_id<name>();
      static_assert(kAttrDom<a> == Ob, "column does not belong to this object");
      if constexpr (kAttrKind<a> == IndexKind::Unique) {
        const attr_t<a>& key = value;
        if (std::get<a>(attrs_).index.count(key)) {
          fail(Errc::DuplicateKey, "attr '" + std::string(name.view()) + "' already has key " +
                                       Value(key).to_display());
        }
      }
    }
  }

  template <class... Assigns>
  static constexpr bool distinct_names() {
    std::array<std::string_view, sizeof...(Assigns)> names{Assigns::name...};
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (names[i] == names[j]) return false;
      }
    }
    return true;
  }

  static std::vector<Part> scan(const std::vector<Part>& column, Part value) {
    std::vector<Part> out;
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i] == value) out.push_back(static_cast<Part>(i + 1));
    }
    return out;
  }

  std::vector<Part> refs_to(std::size_t h, Part value) const {
    const std::size_t v = static_cast<std::size_t>(value - 1);
    if (kHomKind[h] == IndexKind::Inverse) return hom_index_[h][v];
    if (kHomKind[h] == IndexKind::Unique) {
      return hom_owner_[h][v] == 0 ? std::vector<Part>{} : std::vector<Part>{hom_owner_[h][v]};
    }
    return scan(homs_[h], value);
  }

  void unlink_hom(std::size_t h, Part p) {
    Part& slot = homs_[h][static_cast<std::size_t>(p - 1)];
    if (slot == 0) return;
    if (kHomKind[h] == IndexKind::Inverse) {
      auto& list = hom_index_[h][static_cast<std::size_t>(slot - 1)];
      auto it = std::lower_bound(list.begin(), list.end(), p);
      if (it != list.end() && *it == p) list.erase(it);
    } else if (kHomKind[h] == IndexKind::Unique) {
      hom_owner_[h][static_cast<std::size_t>(slot - 1)] = 0;
    }
    slot = 0;
  }

  void link_hom(std::size_t h, Part p, Part value) {
    unlink_hom(h, p);
    homs_[h][static_cast<std::size_t>(p - 1)] = value;
    if (value == 0) return;
    if (kHomKind[h] == IndexKind::Inverse) {
      auto& list = hom_index_[h][static_cast<std::size_t>(value - 1)];
      if (list.empty() || list.back() < p) {
        list.push_back(p);
      } else {
        list.insert(std::lower_bound(list.begin(), list.end(), p), p);
      }
    } else if (kHomKind[h] == IndexKind::Unique) {
      hom_owner_[h][static_cast<std::size_t>(value - 1)] = p;
    }
  }

  template <std::size_t A>
  void unlink_attr(Part p) {
    auto& col = std::get<A>(attrs_);
    const std::size_t i = static_cast<std::size_t>(p - 1);
    if (!col.defined[i]) return;
    if constexpr (kAttrKind<A> == IndexKind::Inverse) {
      auto it = col.index.find(col.values[i]);
      auto& list = it->second;
      list.erase(std::lower_bound(list.begin(), list.end(), p));
      if (list.empty()) col.index.erase(it);
    } else if constexpr (kAttrKind<A> == IndexKind::Unique) {
      col.index.erase(col.values[i]);
    }
    col.values[i] = attr_t<A>{};
    col.defined[i] = 0;
  }

  template <std::size_t A>
  void link_attr(Part p, const attr_t<A>& v) {
    auto& col = std::get<A>(attrs_);
    const std::size_t i = static_cast<std::size_t>(p - 1);
    col.values[i] = v;
    col.defined[i] = 1;
    if constexpr (kAttrKind<A> == IndexKind::Inverse) {
      auto& list = col.index[v];
      if (list.empty() || list.back() < p) {
        list.push_back(p);
      } else {
        list.insert(std::lower_bound(list.begin(), list.end(), p), p);
      }
    } else if constexpr (kAttrKind<A> == IndexKind::Unique) {
      col.index.emplace(v, p);
    }
  }

  std::array<std::size_t, kObs> nparts_{};
  std::array<std::vector<Part>, kHoms> homs_;
  std::array<std::vector<std::vector<Part>>, kHoms> hom_index_;
  std::array<std::vector<Part>, kHoms> hom_owner_;
  typename AttrStorage<std::make_index_sequence<kAttrs>>::type attrs_;
};

}  // namespace acsets
