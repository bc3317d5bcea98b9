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

#include "acsets/value.hpp"

#include <sstream>

#include "acsets/error.hpp"

namespace acsets {

std::string_view to_string(ValueType type) noexcept {
  switch (type) {
    case ValueType::Int: return "int";
    case ValueType::Float: return "float";
    case ValueType::String: return "string";
    case ValueType::Bool: return "bool";
  }
  return "?";
}

std::optional<ValueType> parse_value_type(std::string_view tag) noexcept {
  if (tag == "int") return ValueType::Int;
  if (tag == "float") return ValueType::Float;
  if (tag == "string") return ValueType::String;
  if (tag == "bool") return ValueType::Bool;
  return std::nullopt;
}

std::optional<ValueType> Value::type() const noexcept {
  switch (data_.index()) {
    case 1: return ValueType::Int;
    case 2: return ValueType::Float;
    case 3: return ValueType::String;
    case 4: return ValueType::Bool;
    default: return std::nullopt;
  }
}

namespace {

[[noreturn]] void wrong_type(const Value& v, ValueType wanted) {
  fail(Errc::TypeMismatch, "expected " + std::string(to_string(wanted)) + ", got " +
                               v.to_display());
}

}  // namespace

std::int64_t Value::as_int() const {
  if (auto p = std::get_if<std::int64_t>(&data_)) return *p;
  wrong_type(*this, ValueType::Int);
}

double Value::as_float() const {
  if (auto p = std::get_if<double>(&data_)) return *p;
  wrong_type(*this, ValueType::Float);
}

const std::string& Value::as_string() const {
  if (auto p = std::get_if<std::string>(&data_)) return *p;
  wrong_type(*this, ValueType::String);
}

bool Value::as_bool() const {
  if (auto p = std::get_if<bool>(&data_)) return *p;
  wrong_type(*this, ValueType::Bool);
}

bool operator==(const Value& a, const Value& b) noexcept {
  if (a.data_.index() != b.data_.index()) return false;
  if (auto x = std::get_if<double>(&a.data_)) {
    return std::bit_cast<std::uint64_t>(*x) ==
           std::bit_cast<std::uint64_t>(std::get<double>(b.data_));
  }
  return a.data_ == b.data_;
}

bool operator<(const Value& a, const Value& b) noexcept {
  if (a.data_.index() != b.data_.index()) return a.data_.index() < b.data_.index();
  if (auto x = std::get_if<double>(&a.data_)) {
    return std::bit_cast<std::uint64_t>(*x) <
           std::bit_cast<std::uint64_t>(std::get<double>(b.data_));
  }
  return a.data_ < b.data_;
}

std::size_t Value::hash() const noexcept {
  std::size_t seed = data_.index() * 0x9e3779b97f4a7c15ULL;
  std::size_t h = std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return 0;
        } else {
          return KeyHash<T>{}(x);
        }
      },
      data_);
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string Value::to_display() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Undefined>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return "\"" + x + "\"";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          std::ostringstream out;
          out << x;
          return out.str();
        }
      },
      data_);
}

}  // namespace acsets
