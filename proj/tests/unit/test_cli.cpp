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


#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "acsets/io/json.hpp"
#include "cli.hpp"
#include "doctest.h"

using namespace acsets;

namespace {

const std::filesystem::path kFixtures = ACSETS_FIXTURES_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "acsets");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& rel) { return (kFixtures / rel).string(); }

Instance parse_instance(const std::string& text) { return io::read_instance(text); }

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", fx("instances/symmetric_path4.json")}).code == 0);
  const Run bad = run({"validate", fx("invalid/symmetric_path4_flipped_inv.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("E#1") != std::string::npos);
  CHECK(run({"validate", fx("missing.json")}).code == 1);
}

TEST_CASE("info") {
  const Run r = run({"info", fx("instances/weighted_path.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("E: 5 parts") != std::string::npos);
  CHECK(r.out.find("1 undefined") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"limit", "--shape", "sideways", fx("instances/path3.json")}).code == 2);
  CHECK(run({"bench", "--reps", "3"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compose-cospans") != std::string::npos);
}

TEST_CASE("migrate") {
  const Run r = run({"migrate", "--morphism", fx("morphisms/gr_to_symgr.json"), "--input",
                     fx("instances/symmetric_path4.json")});
  REQUIRE(r.code == 0);
  const Instance g = parse_instance(r.out);
  CHECK(g.schema().name() == "Gr");
  CHECK(g.nparts("V") == 4);
  CHECK(g.nparts("E") == 6);
}

TEST_CASE("colimits and limits") {
  const Run p = run({"colimit", "--shape", "pushout", fx("open_paths/point.json"),
                     fx("open_paths/point_to_p2_end.json"), fx("open_paths/p2.json"),
                     fx("open_paths/point_to_p2_start.json"), fx("open_paths/p2.json")});
  REQUIRE(p.code == 0);
  const Instance p3 = parse_instance(p.out);
  CHECK(p3.nparts("V") == 3);
  CHECK(p3.nparts("E") == 2);

  const Run c = run({"colimit", "--shape", "coproduct", fx("instances/path3.json"), fx("instances/path3.json")});
  REQUIRE(c.code == 0);
  CHECK(parse_instance(c.out).nparts("V") == 6);

  const Run x = run({"limit", "--shape", "product", fx("instances/path3.json"), fx("instances/path3.json")});
  REQUIRE(x.code == 0);
  CHECK(parse_instance(x.out).nparts("V") == 9);
  CHECK(parse_instance(x.out).nparts("E") == 4);

  const Run mistyped = run({"colimit", "--shape", "pushout", fx("open_paths/point.json"),
                            fx("open_paths/point_to_p2_end.json"), fx("open_paths/p2.json")});
  CHECK(mistyped.code != 0);
}

TEST_CASE("compose cospans") {
  const Run r = run({"compose-cospans", fx("cospans/open_p2.json"), fx("cospans/open_p3.json")});
  REQUIRE(r.code == 0);
  const io::Json j = io::parse(r.out);
  CHECK(j["apex"]["parts"]["V"] == 4);
  CHECK(j["apex"]["parts"]["E"] == 3);
}

TEST_CASE("map-attrs and filter") {
  const Run m = run({"map-attrs", "--input", fx("instances/weighted_path.json"), "--expr", "X=mul:2"});
  REQUIRE(m.code == 0);
  const Instance doubled = parse_instance(m.out);
  CHECK(doubled.subpart(1, "dec") == Value(3.0));
  CHECK(doubled.subpart(3, "dec").is_undefined());

  const Run f = run({"filter", "--input", fx("instances/weighted_path.json"), "--pred", "X>1"});
  REQUIRE(f.code == 0);
  const Instance kept = parse_instance(f.out);
  CHECK(kept.nparts("E") == 2);
  CHECK(kept.nparts("V") == 6);
  CHECK(run({"filter", "--input", fx("instances/weighted_path.json"), "--pred", "X~1"}).code == 2);
}

TEST_CASE("output files") {
  const auto dir = std::filesystem::temp_directory_path() / "acsets_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "p3.json";
  const Run r = run({"limit", "--shape", "product", fx("instances/path3.json"), "--output", path.string()});
  REQUIRE(r.code == 0);
  CHECK(io::read_instance_file(path) == io::read_instance_file(fx("instances/path3.json")));
  std::filesystem::remove_all(dir);
}

TEST_CASE("bench") {
  const Run r = run({"-q", "bench", "--suite", "WeightedGraph", "--sizes", "1e3", "--reps", "20", "--only",
                     "sum-weights"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sum-weights") != std::string::npos);
  CHECK(run({"bench", "--suite", "Nope", "--sizes", "1e3"}).code != 0);
}
