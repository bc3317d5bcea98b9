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
#include <cstddef>
#include <string_view>
#include <type_traits>
#include <utility>

namespace acsets {

/// String literal usable as a template argument: subpart<"src">(e).
template <std::size_t N>
struct fixed_string {
  char data[N]{};

  constexpr fixed_string(const char (&s)[N]) { std::copy_n(s, N, data); }
  constexpr std::string_view view() const { return {data, N - 1}; }
};

/// A named column assignment passed to add_part: assign<"src">(v).
template <fixed_string Name, class V>
struct Assign {
  static constexpr auto literal = Name;
  static constexpr std::string_view name = Name.view();
  V value;
};

template <fixed_string Name, class V>
constexpr Assign<Name, std::decay_t<V>> assign(V&& value) {
  return {std::forward<V>(value)};
}

}  // namespace acsets
