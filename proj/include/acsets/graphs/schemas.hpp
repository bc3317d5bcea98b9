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

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "acsets/schema.hpp"
#include "acsets/static_acset.hpp"

namespace acsets::graphs {

// Schema descriptions. Each one backs both a runtime schema and, where
// useful, a StaticACSet type.

struct GrDesc {
  static constexpr std::string_view name = "Gr";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 2> homs{{{"src", "E", "V"}, {"tgt", "E", "V"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct SymGrDesc {
  static constexpr std::string_view name = "SymGr";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 3> homs{
      {{"src", "E", "V"}, {"tgt", "E", "V"}, {"inv", "E", "E"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 3> equations{
      {{"E", "inv inv", ""}, {"E", "inv src", "tgt"}, {"E", "inv tgt", "src"}}};
};

struct ReflGrDesc {
  static constexpr std::string_view name = "ReflGr";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 3> homs{
      {{"src", "E", "V"}, {"tgt", "E", "V"}, {"refl", "V", "E"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 2> equations{{{"V", "refl src", ""}, {"V", "refl tgt", ""}}};
};

struct BipartiteGrDesc {
  static constexpr std::string_view name = "BipartiteGr";
  static constexpr std::array<std::string_view, 4> obs{"Va", "Vb", "Eab", "Eba"};
  static constexpr std::array<HomSig, 4> homs{{{"src_a", "Eab", "Va"},
                                               {"tgt_b", "Eab", "Vb"},
                                               {"src_b", "Eba", "Vb"},
                                               {"tgt_a", "Eba", "Va"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct DynDesc {
  static constexpr std::string_view name = "Dyn";
  static constexpr std::array<std::string_view, 1> obs{"X"};
  static constexpr std::array<HomSig, 1> homs{{{"suc", "X", "X"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

/// The terminal category, one object and no generators.
struct TerminalDesc {
  static constexpr std::string_view name = "1";
  static constexpr std::array<std::string_view, 1> obs{"*"};
  static constexpr std::array<HomSig, 0> homs{};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct WeightedGraphDesc {
  static constexpr std::string_view name = "WeightedGraph";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 2> homs{{{"src", "E", "V"}, {"tgt", "E", "V"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"X"};
  static constexpr std::array<AttrSig, 1> attrs{{{"dec", "E", "X"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

/// Graph with weighted vertices; used where colimits must merge attributes.
struct VertexWeightedGraphDesc {
  static constexpr std::string_view name = "VertexWeightedGraph";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 2> homs{{{"src", "E", "V"}, {"tgt", "E", "V"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"X"};
  static constexpr std::array<AttrSig, 1> attrs{{{"weight", "V", "X"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

struct LabeledGraphDesc {
  static constexpr std::string_view name = "LabeledGraph";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 2> homs{{{"src", "E", "V"}, {"tgt", "E", "V"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"Label"};
  static constexpr std::array<AttrSig, 1> attrs{{{"label", "V", "Label"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

struct RoadMapDesc {
  static constexpr std::string_view name = "RoadMap";
  static constexpr std::array<std::string_view, 2> obs{"V", "E"};
  static constexpr std::array<HomSig, 2> homs{{{"src", "E", "V"}, {"tgt", "E", "V"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"T"};
  static constexpr std::array<AttrSig, 3> attrs{{{"x", "V", "T"}, {"y", "V", "T"}, {"length", "E", "T"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

struct PetriNetDesc {
  static constexpr std::string_view name = "PetriNet";
  static constexpr std::array<std::string_view, 4> obs{"Species", "Transition", "Input", "Output"};
  static constexpr std::array<HomSig, 4> homs{{{"is", "Input", "Species"},
                                               {"it", "Input", "Transition"},
                                               {"os", "Output", "Species"},
                                               {"ot", "Output", "Transition"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct PetriNetTokDesc {
  static constexpr std::string_view name = "PetriNetTok";
  static constexpr std::array<std::string_view, 5> obs{"Species", "Transition", "Input", "Output",
                                                       "Tok"};
  static constexpr std::array<HomSig, 5> homs{{{"is", "Input", "Species"},
                                               {"it", "Input", "Transition"},
                                               {"os", "Output", "Species"},
                                               {"ot", "Output", "Transition"},
                                               {"tok", "Tok", "Species"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct PetriNetTypedTokDesc {
  static constexpr std::string_view name = "PetriNetTypedTok";
  static constexpr std::array<std::string_view, 5> obs{"Species", "Transition", "Input", "Output",
                                                       "Tok"};
  static constexpr std::array<HomSig, 5> homs{{{"is", "Input", "Species"},
                                               {"it", "Input", "Transition"},
                                               {"os", "Output", "Species"},
                                               {"ot", "Output", "Transition"},
                                               {"tok", "Tok", "Species"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"Type"};
  static constexpr std::array<AttrSig, 1> attrs{{{"ttype", "Tok", "Type"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

/// Typed tokens plus a rate constant per transition.
struct PetriNetRatesDesc {
  static constexpr std::string_view name = "PetriNetRates";
  static constexpr std::array<std::string_view, 5> obs{"Species", "Transition", "Input", "Output",
                                                       "Tok"};
  static constexpr std::array<HomSig, 5> homs{{{"is", "Input", "Species"},
                                               {"it", "Input", "Transition"},
                                               {"os", "Output", "Species"},
                                               {"ot", "Output", "Transition"},
                                               {"tok", "Tok", "Species"}}};
  static constexpr std::array<std::string_view, 2> attrtypes{"Type", "Rate"};
  static constexpr std::array<AttrSig, 2> attrs{
      {{"ttype", "Tok", "Type"}, {"rate", "Transition", "Rate"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

struct PortGraphDesc {
  static constexpr std::string_view name = "PortGraph";
  static constexpr std::array<std::string_view, 3> obs{"Box", "Port", "Wire"};
  static constexpr std::array<HomSig, 3> homs{
      {{"box", "Port", "Box"}, {"src", "Wire", "Port"}, {"tgt", "Wire", "Port"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct TypedPortGraphDesc {
  static constexpr std::string_view name = "TypedPortGraph";
  static constexpr std::array<std::string_view, 3> obs{"Box", "Port", "Wire"};
  static constexpr std::array<HomSig, 3> homs{
      {{"box", "Port", "Box"}, {"src", "Wire", "Port"}, {"tgt", "Wire", "Port"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"Type"};
  static constexpr std::array<AttrSig, 2> attrs{{{"ptype", "Port", "Type"}, {"wtype", "Wire", "Type"}}};
  static constexpr std::array<EqSig, 2> equations{
      {{"Wire", "src ptype", "wtype"}, {"Wire", "tgt ptype", "wtype"}}};
};

struct DirectedPortGraphDesc {
  static constexpr std::string_view name = "DirectedPortGraph";
  static constexpr std::array<std::string_view, 4> obs{"Box", "InPort", "OutPort", "Wire"};
  static constexpr std::array<HomSig, 4> homs{{{"ibox", "InPort", "Box"},
                                               {"obox", "OutPort", "Box"},
                                               {"src", "Wire", "OutPort"},
                                               {"tgt", "Wire", "InPort"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct TypedDirectedPortGraphDesc {
  static constexpr std::string_view name = "TypedDirectedPortGraph";
  static constexpr std::array<std::string_view, 4> obs{"Box", "InPort", "OutPort", "Wire"};
  static constexpr std::array<HomSig, 4> homs{{{"ibox", "InPort", "Box"},
                                               {"obox", "OutPort", "Box"},
                                               {"src", "Wire", "OutPort"},
                                               {"tgt", "Wire", "InPort"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"Type"};
  static constexpr std::array<AttrSig, 3> attrs{{{"iptype", "InPort", "Type"},
                                                 {"optype", "OutPort", "Type"},
                                                 {"wtype", "Wire", "Type"}}};
  static constexpr std::array<EqSig, 2> equations{
      {{"Wire", "src optype", "wtype"}, {"Wire", "tgt iptype", "wtype"}}};
};

struct UwdDesc {
  static constexpr std::string_view name = "UWD";
  static constexpr std::array<std::string_view, 4> obs{"Box", "Port", "Junction", "OuterPort"};
  static constexpr std::array<HomSig, 3> homs{{{"box", "Port", "Box"},
                                               {"junction", "Port", "Junction"},
                                               {"outer_junction", "OuterPort", "Junction"}}};
  static constexpr std::array<std::string_view, 0> attrtypes{};
  static constexpr std::array<AttrSig, 0> attrs{};
  static constexpr std::array<EqSig, 0> equations{};
};

struct TypedUwdDesc {
  static constexpr std::string_view name = "TypedUWD";
  static constexpr std::array<std::string_view, 4> obs{"Box", "Port", "Junction", "OuterPort"};
  static constexpr std::array<HomSig, 3> homs{{{"box", "Port", "Box"},
                                               {"junction", "Port", "Junction"},
                                               {"outer_junction", "OuterPort", "Junction"}}};
  static constexpr std::array<std::string_view, 1> attrtypes{"Type"};
  static constexpr std::array<AttrSig, 3> attrs{{{"port_type", "Port", "Type"},
                                                 {"junction_type", "Junction", "Type"},
                                                 {"outer_port_type", "OuterPort", "Type"}}};
  static constexpr std::array<EqSig, 0> equations{};
};

template <class Desc>
const std::shared_ptr<const Schema>& schema_of() {
  static const std::shared_ptr<const Schema> s = acsets::detail::schema_from_desc<Desc>();
  return s;
}

inline const std::shared_ptr<const Schema>& graph_schema() { return schema_of<GrDesc>(); }
inline const std::shared_ptr<const Schema>& symmetric_graph_schema() { return schema_of<SymGrDesc>(); }
inline const std::shared_ptr<const Schema>& reflexive_graph_schema() { return schema_of<ReflGrDesc>(); }
inline const std::shared_ptr<const Schema>& weighted_graph_schema() {
  return schema_of<WeightedGraphDesc>();
}
inline const std::shared_ptr<const Schema>& labeled_graph_schema() {
  return schema_of<LabeledGraphDesc>();
}
inline const std::shared_ptr<const Schema>& terminal_schema() { return schema_of<TerminalDesc>(); }

/// Every canned schema, by schema name.
std::shared_ptr<const Schema> canned_schema(std::string_view name);
std::vector<std::string> canned_schema_names();

// Compile-time specialized graph types.
using Graph = StaticACSet<GrDesc, std::tuple<>, Indexed<"src", "tgt">>;
using SymmetricGraph = StaticACSet<SymGrDesc, std::tuple<>, Indexed<"src">>;
template <class T>
using WeightedGraph = StaticACSet<WeightedGraphDesc, std::tuple<T>, Indexed<"src", "tgt">>;
template <class T>
using LabeledGraph =
    StaticACSet<LabeledGraphDesc, std::tuple<T>, Indexed<"src", "tgt">, UniqueIndexed<"label">>;
template <class T>
using RoadMap = StaticACSet<RoadMapDesc, std::tuple<T>, Indexed<"src", "tgt">>;

}  // namespace acsets::graphs
