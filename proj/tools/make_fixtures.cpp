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

// Writes the fixture corpus. Usage: acsets_make_fixtures <dir>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>

#include "acsets/graphs/algorithms.hpp"
#include "acsets/graphs/generators.hpp"
#include "acsets/graphs/schemas.hpp"
#include "acsets/io/json.hpp"

namespace fs = std::filesystem;
using namespace acsets;

namespace {

struct Writer {
  fs::path root;
  io::Json manifest = io::Json::object();

  void put(const std::string& section, const std::string& rel, const io::Json& j, io::Json entry = nullptr) {
    fs::create_directories((root / rel).parent_path());
    io::write_text_file(root / rel, io::dump(j));
    if (!manifest.contains(section)) manifest[section] = io::Json::array();
    if (entry.is_null()) {
      manifest[section].push_back(rel);
    } else {
      entry["file"] = rel;
      manifest[section].push_back(std::move(entry));
    }
  }
};

Instance typed_port_graph() {
  Instance x(graphs::schema_of<graphs::TypedPortGraphDesc>(), {{"Type", ValueType::String}},
             {{"box", "src", "tgt"}, {}});
  x.add_parts("Box", 2);
  x.add_parts("Port", 4, {{"box", {Value(Part{1}), Value(Part{1}), Value(Part{2}), Value(Part{2})}},
                          {"ptype", {Value("A"), Value("B"), Value("A"), Value("B")}}});
  x.add_parts("Wire", 2, {{"src", {Value(Part{1}), Value(Part{2})}},
                          {"tgt", {Value(Part{3}), Value(Part{4})}},
                          {"wtype", {Value("A"), Value("B")}}});
  return x;
}

Instance weighted_path() {
  Instance x(graphs::weighted_graph_schema(), {{"X", ValueType::Float}}, {{"src", "tgt"}, {}});
  x.add_parts("V", 6);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  x.add_parts("E", 5, {{"src", {Value(Part{1}), Value(Part{2}), Value(Part{3}), Value(Part{4}), Value(Part{5})}},
                       {"tgt", {Value(Part{2}), Value(Part{3}), Value(Part{4}), Value(Part{5}), Value(Part{6})}},
                       {"dec", {Value(1.5), Value(nan), Value(), Value(-inf), Value(0.1)}}});
  return x;
}

Instance labeled_graph() {
  Instance x(graphs::labeled_graph_schema(), {{"Label", ValueType::String}}, {{"src", "tgt"}, {"label"}});
  x.add_parts("V", 3, {{"label", {Value("a"), Value("b"), Value("c")}}});
  x.add_parts("E", 3, {{"src", {Value(Part{1}), Value(Part{2}), Value(Part{3})}},
                       {"tgt", {Value(Part{2}), Value(Part{3}), Value(Part{1})}}});
  return x;
}

Instance road_map() {
  Instance x(graphs::schema_of<graphs::RoadMapDesc>(), {{"T", ValueType::Float}}, {{"src", "tgt"}, {}});
  x.add_parts("V", 3, {{"x", {Value(0.0), Value(3.0), Value(3.0)}}, {"y", {Value(0.0), Value(0.0), Value(4.0)}}});
  x.add_parts("E", 3, {{"src", {Value(Part{1}), Value(Part{2}), Value(Part{1})}},
                       {"tgt", {Value(Part{2}), Value(Part{3}), Value(Part{3})}},
                       {"length", {Value(3.0), Value(4.0), Value(5.0)}}});
  return x;
}

// S + I -> 2I (infection), I -> R (recovery).
Instance sir_petri_net() {
  Instance x(graphs::schema_of<graphs::PetriNetRatesDesc>(),
             {{"Type", ValueType::String}, {"Rate", ValueType::Float}}, {{"is", "it", "os", "ot", "tok"}, {}});
  x.add_parts("Species", 3);
  x.add_parts("Transition", 2, {{"rate", {Value(0.3), Value(0.1)}}});
  x.add_parts("Input", 3, {{"is", {Value(Part{1}), Value(Part{2}), Value(Part{2})}},
                           {"it", {Value(Part{1}), Value(Part{1}), Value(Part{2})}}});
  x.add_parts("Output", 3, {{"os", {Value(Part{2}), Value(Part{2}), Value(Part{3})}},
                            {"ot", {Value(Part{1}), Value(Part{1}), Value(Part{2})}}});
  x.add_parts("Tok", 4, {{"tok", {Value(Part{1}), Value(Part{1}), Value(Part{1}), Value(Part{2})}},
                         {"ttype", {Value("susceptible"), Value("susceptible"), Value("susceptible"),
                                    Value("infected")}}});
  return x;
}

// Two boxes sharing one junction, with one outer port on each junction.
Instance typed_uwd() {
  Instance x(graphs::schema_of<graphs::TypedUwdDesc>(), {{"Type", ValueType::String}}, {});
  x.add_parts("Box", 2);
  x.add_parts("Junction", 3, {{"junction_type", {Value("X"), Value("X"), Value("Y")}}});
  x.add_parts("Port", 4, {{"box", {Value(Part{1}), Value(Part{1}), Value(Part{2}), Value(Part{2})}},
                          {"junction", {Value(Part{1}), Value(Part{2}), Value(Part{2}), Value(Part{3})}},
                          {"port_type", {Value("X"), Value("X"), Value("X"), Value("Y")}}});
  x.add_parts("OuterPort", 2, {{"outer_junction", {Value(Part{1}), Value(Part{3})}},
                               {"outer_port_type", {Value("X"), Value("Y")}}});
  return x;
}

Instance dynamical_cycle() {
  Instance x(graphs::schema_of<graphs::DynDesc>());
  x.add_parts("X", 4, {{"suc", {Value(Part{2}), Value(Part{3}), Value(Part{1}), Value(Part{1})}}});
  return x;
}

Instance bipartite() {
  Instance x(graphs::schema_of<graphs::BipartiteGrDesc>());
  x.add_parts("Va", 2);
  x.add_parts("Vb", 2);
  x.add_parts("Eab", 3, {{"src_a", {Value(Part{1}), Value(Part{1}), Value(Part{2})}},
                         {"tgt_b", {Value(Part{1}), Value(Part{2}), Value(Part{2})}}});
  x.add_parts("Eba", 1, {{"src_b", {Value(Part{1})}}, {"tgt_a", {Value(Part{2})}}});
  return x;
}

Instance symmetric_loop() {
  Instance x(graphs::symmetric_graph_schema(), {}, {{"src"}, {}});
  x.add_parts("V", 1);
  x.add_parts("E", 2, {{"src", {Value(Part{1}), Value(Part{1})}},
                       {"tgt", {Value(Part{1}), Value(Part{1})}},
                       {"inv", {Value(Part{2}), Value(Part{1})}}});
  return x;
}

io::Json components(std::vector<std::pair<std::string, std::vector<Part>>> comps) {
  io::Json c = io::Json::object();
  for (auto& [ob, values] : comps) c[ob] = values;
  return io::Json{{"components", std::move(c)}};
}

io::Json cospan(const Instance& apex, std::vector<Part> left, std::vector<Part> right) {
  io::Json j;
  j["target_ob"] = "V";
  j["apex"] = io::to_json(apex);
  j["left"] = left;
  j["right"] = right;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acsets_make_fixtures <dir>\n";
    return 2;
  }
  try {
    Writer w{argv[1]};

    for (const auto& name : graphs::canned_schema_names()) {
      w.put("schemas", "schemas/" + name + ".json", io::to_json(*graphs::canned_schema(name)));
    }

    w.put("instances", "instances/path3.json", io::to_json(graphs::path_graph(3)));
    w.put("instances", "instances/tutte.json", io::to_json(graphs::tutte_graph()));
    const Instance sym_path = graphs::symmetric_path_graph(4);
    w.put("instances", "instances/symmetric_path4.json", io::to_json(sym_path));
    w.put("instances", "instances/symmetric_triangle.json",
          io::to_json(graphs::make_symmetric_graph(3, graphs::complete_pairs(3))));
    w.put("instances", "instances/symmetric_loop.json", io::to_json(symmetric_loop()));
    const Instance refl = graphs::free_reflexive(graphs::path_graph(3));
    w.put("instances", "instances/reflexive_path3.json", io::to_json(refl));
    const Instance ports = typed_port_graph();
    w.put("instances", "instances/typed_port_graph.json", io::to_json(ports));
    w.put("instances", "instances/weighted_path.json", io::to_json(weighted_path()));
    w.put("instances", "instances/labeled_graph.json", io::to_json(labeled_graph()));
    w.put("instances", "instances/road_map.json", io::to_json(road_map()));
    w.put("instances", "instances/sir_petri_net.json", io::to_json(sir_petri_net()));
    w.put("instances", "instances/typed_uwd.json", io::to_json(typed_uwd()));
    w.put("instances", "instances/dynamical_cycle.json", io::to_json(dynamical_cycle()));
    w.put("instances", "instances/bipartite.json", io::to_json(bipartite()));

    // One injected equation violation each, at the part named in the manifest.
    Instance flipped = sym_path;
    flipped.set_subpart(1, "inv", Value(Part{4}));
    w.put("invalid", "invalid/symmetric_path4_flipped_inv.json", io::to_json(flipped),
          {{"ob", "E"}, {"part", 1}});
    Instance broken = refl;
    broken.set_subpart(2, "refl", Value(Part{3}));
    w.put("invalid", "invalid/reflexive_path3_broken_refl.json", io::to_json(broken), {{"ob", "V"}, {"part", 2}});
    Instance mistyped = ports;
    mistyped.set_subpart(2, "wtype", Value("A"));
    w.put("invalid", "invalid/typed_port_graph_mistyped.json", io::to_json(mistyped),
          {{"ob", "Wire"}, {"part", 2}});

    const auto gr = graphs::graph_schema();
    const auto symgr = graphs::symmetric_graph_schema();
    SchemaMorphismDecl forget;
    forget.ob_map = {{"V", "V"}, {"E", "E"}};
    forget.hom_map = {{"src", {"src"}}, {"tgt", {"tgt"}}};
    w.put("schema_morphisms", "morphisms/gr_to_symgr.json", io::to_json(make_schema_morphism(gr, symgr, forget)));
    SchemaMorphismDecl vertices;
    vertices.ob_map = {{"*", "V"}};
    w.put("schema_morphisms", "morphisms/terminal_to_gr.json",
          io::to_json(make_schema_morphism(graphs::terminal_schema(), gr, vertices)));
    w.put("schema_morphisms", "morphisms/identity_gr.json", io::to_json(identity_morphism(gr)));
    w.put("schema_morphisms", "morphisms/identity_symgr.json", io::to_json(identity_morphism(symgr)));

    // Gluing two P2s end to start.
    w.put("instances", "open_paths/point.json", io::to_json(graphs::path_graph(1)));
    w.put("instances", "open_paths/p2.json", io::to_json(graphs::path_graph(2)));
    w.put("acset_morphisms", "open_paths/point_to_p2_end.json", components({{"V", {2}}, {"E", {}}}),
          {{"dom", "open_paths/point.json"}, {"codom", "open_paths/p2.json"}});
    w.put("acset_morphisms", "open_paths/point_to_p2_start.json", components({{"V", {1}}, {"E", {}}}),
          {{"dom", "open_paths/point.json"}, {"codom", "open_paths/p2.json"}});

    w.put("cospans", "cospans/open_p2.json", cospan(graphs::path_graph(2), {1}, {2}));
    w.put("cospans", "cospans/open_p3.json", cospan(graphs::path_graph(3), {1}, {3}));

    io::write_text_file(w.root / "manifest.json", io::dump(w.manifest));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
