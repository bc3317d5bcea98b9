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

#include <string>
#include <vector>

#include "acsets/graphs/generators.hpp"
#include "acsets/graphs/schemas.hpp"
#include "doctest.h"
#include "support/errors.hpp"

using namespace acsets;
using acsets::testing::error_of;
using graphs::Graph;

namespace {

template <class G>
std::vector<Part> col(const G& g, std::span<const Part> c) {
  (void)g;
  return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("schema matches the runtime presentation") {
  CHECK(*Graph::schema() == *graphs::graph_schema());
  CHECK(*graphs::WeightedGraph<double>::schema() == *graphs::weighted_graph_schema());
  CHECK(graphs::WeightedGraph<double>::typing().at("X") == ValueType::Float);
  CHECK(graphs::LabeledGraph<std::string>::typing().at("Label") == ValueType::String);
}

TEST_CASE("parts and homs") {
  Graph g;
  CHECK(g.nparts<"V">() == 0);
  g.add_parts<"V">(3);
  const Part e = g.add_part<"E">(assign<"src">(Part{1}), assign<"tgt">(Part{2}));
  g.add_part<"E">(assign<"src">(Part{2}), assign<"tgt">(Part{3}));
  CHECK(e == 1);
  CHECK(g.subpart<"src">(2) == 2);
  CHECK(g.incident<"src">(2).to_vector() == std::vector<Part>{2});
  CHECK(g.incident<"tgt">(1).empty());
  CHECK(col(g, g.column<"tgt">()) == std::vector<Part>{2, 3});
  CHECK(g.to_instance() == graphs::path_graph(3));

  CHECK(error_of([&] { g.subpart<"src">(3); }) == Errc::OutOfRange);
  CHECK(error_of([&] { g.set_subpart<"src">(1, Part{7}); }) == Errc::OutOfRange);
  CHECK(error_of([&] { g.add_part<"E">(assign<"src">(Part{9})); }) == Errc::DanglingReference);
  CHECK(g.nparts<"E">() == 2);

  g.set_subpart<"src">(1, Part{3});
  CHECK(g.incident<"src">(3).to_vector() == std::vector<Part>{1});
  CHECK(g.incident<"src">(1).empty());
}

TEST_CASE("pop-and-swap matches the runtime instance") {
  Graph g;
  graphs::build_graph(g, 3, graphs::path_edges(3));
  Instance x = graphs::path_graph(3);
  g.rem_part<"V">(1);
  x.rem_part("V", 1);
  CHECK(g.to_instance() == x);
  CHECK(col(g, g.column<"src">()) == std::vector<Part>{0, 2});
  CHECK(g.incident<"tgt">(1).to_vector() == std::vector<Part>{2});
  g.rem_part<"E">(1);
  x.rem_part("E", 1);
  CHECK(g.to_instance() == x);
}

TEST_CASE("attributes") {
  graphs::WeightedGraph<double> g;
  g.add_parts<"V">(2);
  const Part e = g.add_part<"E">(assign<"src">(Part{1}), assign<"tgt">(Part{2}), assign<"dec">(0.5));
  const Part f = g.add_parts<"E">(1).front();
  CHECK(g.subpart<"dec">(e) == 0.5);
  CHECK_FALSE(g.is_defined<"dec">(f));
  CHECK(error_of([&] { g.subpart<"dec">(f); }) == Errc::UndefinedTraversal);
  g.set_subpart<"dec">(f, 2.0);
  CHECK(g.incident<"dec">(2.0).to_vector() == std::vector<Part>{2});
  for (double& w : g.mutable_column<"dec">()) w *= 2;
  CHECK(g.subpart<"dec">(e) == 1.0);
  g.clear_subpart<"dec">(e);
  CHECK_FALSE(g.is_defined<"dec">(e));
  CHECK(g.to_instance().subpart(e, "dec").is_undefined());
  CHECK_FALSE(g.validate().ok());
}

TEST_CASE("unique labels") {
  graphs::LabeledGraph<std::string> g;
  g.add_part<"V">(assign<"label">(std::string("a")));
  g.add_part<"V">(assign<"label">(std::string("b")));
  CHECK(g.incident<"label">(std::string("b")).to_vector() == std::vector<Part>{2});
  CHECK(error_of([&] { g.set_subpart<"label">(1, std::string("b")); }) == Errc::DuplicateKey);
  CHECK(error_of([&] { g.add_part<"V">(assign<"label">(std::string("a"))); }) == Errc::DuplicateKey);
  CHECK(g.nparts<"V">() == 2);
  g.rem_part<"V">(1);
  CHECK(g.subpart<"label">(1) == "b");
  CHECK(g.incident<"label">(std::string("a")).empty());
  CHECK(g.incident<"label">(std::string("b")).to_vector() == std::vector<Part>{1});
  g.add_part<"V">(assign<"label">(std::string("a")));
  CHECK(g.incident<"label">(std::string("a")).to_vector() == std::vector<Part>{2});
}

TEST_CASE("removing a defined part before an undefined last part") {
  StaticACSet<graphs::WeightedGraphDesc, std::tuple<std::int64_t>, Indexed<"dec">> g;
  g.add_parts<"V">(1);
  g.add_part<"E">(assign<"src">(Part{1}), assign<"tgt">(Part{1}), assign<"dec">(std::int64_t{4}));
  g.add_part<"E">(assign<"src">(Part{1}), assign<"tgt">(Part{1}));
  g.rem_part<"E">(1);
  CHECK_FALSE(g.is_defined<"dec">(1));
  CHECK(g.incident<"dec">(std::int64_t{4}).empty());
}

TEST_CASE("symmetric graphs") {
  graphs::SymmetricGraph g;
  g.add_parts<"V">(2);
  const auto [e, f] = graphs::add_symmetric_edge(g, 1, 2);
  CHECK(g.subpart<"inv">(e) == f);
  CHECK(g.subpart<"src">(f) == 2);
  CHECK(g.validate().ok());
  CHECK(g.to_instance() == graphs::symmetric_path_graph(2));
}
