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

#include "acsets/static_acset.hpp"

namespace acsets::detail {

std::vector<std::string> split_path(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

void fail_part_range(std::string_view ob, Part p, std::size_t n) {
  fail(Errc::OutOfRange,
       "part " + std::to_string(p) + " of " + std::string(ob) + " outside 1.." + std::to_string(n));
}

void fail_undefined_attr(std::string_view attr, Part p) {
  fail(Errc::UndefinedTraversal, "attr '" + std::string(attr) + "' undefined at part " + std::to_string(p));
}

}  // namespace acsets::detail
