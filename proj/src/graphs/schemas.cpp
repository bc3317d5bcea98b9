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

#include "acsets/graphs/schemas.hpp"

#include <functional>
#include <utility>

#include "acsets/error.hpp"

namespace acsets::graphs {

namespace {

using Entry = std::pair<std::string_view, std::function<std::shared_ptr<const Schema>()>>;

template <class Desc>
Entry entry() {
  return {Desc::name, [] { return schema_of<Desc>(); }};
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      entry<GrDesc>(),
      entry<SymGrDesc>(),
      entry<ReflGrDesc>(),
      entry<BipartiteGrDesc>(),
      entry<DynDesc>(),
      entry<TerminalDesc>(),
      entry<WeightedGraphDesc>(),
      entry<VertexWeightedGraphDesc>(),
      entry<LabeledGraphDesc>(),
      entry<RoadMapDesc>(),
      entry<PetriNetDesc>(),
      entry<PetriNetTokDesc>(),
      entry<PetriNetTypedTokDesc>(),
      entry<PetriNetRatesDesc>(),
      entry<PortGraphDesc>(),
      entry<TypedPortGraphDesc>(),
      entry<DirectedPortGraphDesc>(),
      entry<TypedDirectedPortGraphDesc>(),
      entry<UwdDesc>(),
      entry<TypedUwdDesc>(),
  };
  return entries;
}

}  // namespace

std::shared_ptr<const Schema> canned_schema(std::string_view name) {
  for (const auto& [key, make] : registry()) {
    if (key == name) return make();
  }
  fail(Errc::UnknownName, "no canned schema '" + std::string(name) + "'");
}

std::vector<std::string> canned_schema_names() {
  std::vector<std::string> out;
  for (const auto& [key, make] : registry()) out.emplace_back(key);
  return out;
}

}  // namespace acsets::graphs
