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


#include <cmath>
#include <filesystem>
#include <string>

#include "acsets/graphs/generators.hpp"
#include "acsets/graphs/schemas.hpp"
#include "acsets/io/json.hpp"
#include "doctest.h"
#include "support/errors.hpp"
#include "support/oracles.hpp"

using namespace acsets;
using acsets::testing::error_of;

namespace {

const std::filesystem::path kFixtures = ACSETS_FIXTURES_DIR;

std::string slurp(const std::filesystem::path& p) { return io::dump(io::read_json_file(p)); }

}  // namespace

TEST_CASE("instance json shape") {
  const Instance empty(graphs::graph_schema());
  const io::Json j = io::to_json(empty);
  CHECK(j["parts"] == io::Json::parse(R"({"V":0,"E":0})"));
  CHECK(j["homs"] == io::Json::parse(R"({"src":[],"tgt":[]})"));
  CHECK(j["attrs"] == io::Json::object());
  CHECK(j["schema"]["name"] == "Gr");

  const Instance p3 = graphs::path_graph(3);
  const std::string text = io::write_instance(p3);
  CHECK(io::to_json(p3)["homs"] == io::Json::parse(R"({"src":[1,2],"tgt":[2,3]})"));
  const Instance back = io::read_instance(text);
  CHECK(back == p3);
  CHECK(io::write_instance(back) == text);
}

TEST_CASE("undefined homs") {
  Instance g = graphs::path_graph(2);
  g.set_subpart(1, "tgt", Value{});
  const io::Json j = io::to_json(g);
  CHECK(j["homs"]["tgt"][0] == 0);
  const Instance back = io::instance_from_json(j);
  CHECK(back.subpart(1, "tgt").is_undefined());
  CHECK(back.subpart(1, "src") == Value(1));
}

TEST_CASE("non-finite floats") {
  const Instance w = io::read_instance_file(kFixtures / "instances/weighted_path.json");
  CHECK(w.subpart(1, "dec") == Value(1.5));
  CHECK(std::isnan(w.subpart(2, "dec").as_float()));
  CHECK(w.subpart(3, "dec").is_undefined());
  CHECK(w.subpart(4, "dec").as_float() == -INFINITY);
  const io::Json j = io::to_json(w);
  CHECK(j["attrs"]["dec"] == io::Json::parse(R"([1.5,"NaN",null,"-Infinity",0.1])"));
}

TEST_CASE("read errors") {
  const auto read = [](const std::string& s) { return error_of([&] { io::read_instance(s); }); };
  try {
    io::read_instance(R"({"schema": "Gr", "parts": )");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK(read(R"({"schema":"Gr","parts":{"V":1},"homs":{"src":[],"tgt":[]},"attrs":{}})") ==
        Errc::SchemaMismatch);
  CHECK(read(R"({"schema":"Gr","parts":{"V":1,"E":1},"homs":{"src":[1],"tgt":[2]},"attrs":{}})") ==
        Errc::DanglingReference);
  CHECK(read(R"({"schema":"Gr","parts":{"V":1,"E":1},"homs":{"src":[1],"tgt":[-1]},"attrs":{}})") ==
        Errc::DanglingReference);
  CHECK(read(R"({"schema":"WeightedGraph","typing":{"X":"int"},"parts":{"V":2,"E":1},)"
             R"("homs":{"src":[1],"tgt":[2]},"attrs":{"dec":["heavy"]}})") == Errc::TypeMismatch);
  CHECK(read(R"({"schema":"WeightedGraph","typing":{"X":"int"},"parts":{"V":2,"E":1},)"
             R"("homs":{"src":[1],"tgt":[2]},"attrs":{"dec":[1.5]}})") == Errc::TypeMismatch);
  CHECK(read(R"({"schema":"NoSuchSchema","parts":{},"homs":{},"attrs":{}})") == Errc::UnknownName);
  CHECK(error_of([] { io::read_instance_file(kFixtures / "nope.json"); }) == Errc::ParseError);
}

TEST_CASE("fixture round trips") {
  for (const auto& entry : std::filesystem::recursive_directory_iterator(kFixtures / "schemas")) {
    const auto s = io::schema_from_json(io::read_json_file(entry.path()));
    CHECK(io::write_schema(*s) == slurp(entry.path()));
  }
  for (const char* name : {"gr_to_symgr", "terminal_to_gr", "identity_gr"}) {
    const auto path = kFixtures / "morphisms" / (std::string(name) + ".json");
    const SchemaMorphism m = io::schema_morphism_from_json(io::read_json_file(path));
    CHECK(io::dump(io::to_json(m)) == slurp(path));
  }
  const auto cospan_path = kFixtures / "cospans/open_p2.json";
  const StructuredCospan c = io::cospan_from_json(io::read_json_file(cospan_path));
  CHECK(c.apex->nparts("V") == 2);
  CHECK(io::dump(io::to_json(c)) == slurp(cospan_path));
  const StructuredCospan again = io::cospan_from_json(io::to_json(c));
  CHECK(acsets::testing::cospans_isomorphic(c, again));
}

TEST_CASE("acset morphism json") {
  const auto dir = kFixtures / "open_paths";
  auto point = std::make_shared<const Instance>(io::read_instance_file(dir / "point.json"));
  auto p2 = std::make_shared<const Instance>(io::read_instance_file(dir / "p2.json"));
  const ACSetMorphism f = io::acset_morphism_from_json(io::read_json_file(dir / "point_to_p2_end.json"), point, p2);
  CHECK(f.component("V")(1) == 2);
  CHECK(io::dump(io::to_json(f)) == slurp(dir / "point_to_p2_end.json"));
}
