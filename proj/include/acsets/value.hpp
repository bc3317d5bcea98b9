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

#include <bit>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace acsets {

/// Closed universe of attribute value types. Extending it means adding an
/// alternative here, a JSON encoding in io/json.cpp and a ValueTraits entry.
enum class ValueType : std::uint8_t { Int, Float, String, Bool };

std::string_view to_string(ValueType type) noexcept;
std::optional<ValueType> parse_value_type(std::string_view tag) noexcept;

struct Undefined {
  friend bool operator==(Undefined, Undefined) = default;
};

/// A tagged attribute value. Floats compare by bit pattern, so equality is an
/// equivalence relation (NaN equals itself, 0.0 differs from -0.0).
class Value {
 public:
  Value() = default;
  Value(Undefined) {}
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Value(T v) : data_(static_cast<std::int64_t>(v)) {}
  Value(double v) : data_(v) {}
  Value(bool v) : data_(v) {}
  Value(std::string v) : data_(std::move(v)) {}
  Value(const char* v) : data_(std::string(v)) {}
  Value(std::string_view v) : data_(std::string(v)) {}

  bool is_undefined() const noexcept { return data_.index() == 0; }
  std::optional<ValueType> type() const noexcept;

  std::int64_t as_int() const;
  double as_float() const;
  const std::string& as_string() const;
  bool as_bool() const;

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&data_);
  }

  friend bool operator==(const Value& a, const Value& b) noexcept;
  /// Total order: by type tag, then by value (floats by bit pattern).
  friend bool operator<(const Value& a, const Value& b) noexcept;

  std::size_t hash() const noexcept;
  std::string to_display() const;

 private:
  std::variant<Undefined, std::int64_t, double, std::string, bool> data_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept { return v.hash(); }
};

/// Assignment of a value type to each attribute type, by name.
using Typing = std::map<std::string, ValueType, std::less<>>;

/// Which columns carry an inverse-image index and which an injective key index.
struct IndexSpec {
  std::vector<std::string> indexed;
  std::vector<std::string> unique_indexed;

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

/// Compile-time mapping between C++ types and the value universe.
template <class T>
struct ValueTraits;

template <>
struct ValueTraits<std::int64_t> {
  static constexpr ValueType type = ValueType::Int;
  static std::int64_t from(const Value& v) { return v.as_int(); }
};
template <>
struct ValueTraits<double> {
  static constexpr ValueType type = ValueType::Float;
  static double from(const Value& v) { return v.as_float(); }
};
template <>
struct ValueTraits<std::string> {
  static constexpr ValueType type = ValueType::String;
  static std::string from(const Value& v) { return v.as_string(); }
};
template <>
struct ValueTraits<bool> {
  static constexpr ValueType type = ValueType::Bool;
  static bool from(const Value& v) { return v.as_bool(); }
};

/// Key equality/hash consistent with Value: doubles by bit pattern.
template <class T>
struct KeyHash {
  std::size_t operator()(const T& v) const noexcept {
    if constexpr (std::is_same_v<T, double>) {
      return std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(v));
    } else {
      return std::hash<T>{}(v);
    }
  }
};
template <class T>
struct KeyEqual {
  bool operator()(const T& a, const T& b) const noexcept {
    if constexpr (std::is_same_v<T, double>) {
      return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
    } else {
      return a == b;
    }
  }
};

}  // namespace acsets
