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


#include <algorithm>
#include <sstream>
#include <string>

#include "acsets/bench/harness.hpp"
#include "doctest.h"
#include "support/errors.hpp"

using namespace acsets;
using acsets::testing::error_of;

TEST_CASE("options are checked") {
  bench::BenchOptions o;
  o.sizes = {1000};
  o.reps = 19;
  CHECK(error_of([&] { bench::run_benchmarks(o); }) == Errc::BadParameter);
  o.reps = 20;
  o.sizes.clear();
  CHECK(error_of([&] { bench::run_benchmarks(o); }) == Errc::BadParameter);
  o.sizes = {1000};
  o.suite = "Nope";
  CHECK(error_of([&] { bench::run_benchmarks(o); }) == Errc::BadParameter);
}

TEST_CASE("small run") {
  bench::BenchOptions o;
  o.suite = "WeightedGraph";
  o.sizes = {1000};
  std::size_t streamed = 0;
  o.on_row = [&](const bench::BenchRow&) { ++streamed; };
  const bench::BenchReport r = bench::run_benchmarks(o);
  REQUIRE_FALSE(r.rows.empty());
  CHECK(streamed == r.rows.size());
  for (const auto& row : r.rows) {
    CHECK(row.category == "WeightedGraph");
    CHECK(row.size == 1000);
    CHECK(row.acset_ns > 0);
    CHECK(row.baseline_ns > 0);
    CHECK(row.ratio == doctest::Approx(row.acset_ns / row.baseline_ns));
  }
  CHECK(r.find("WeightedGraph", "sum-weights", 1000) != nullptr);
  CHECK(r.find("WeightedGraph", "sum-weights", 10) == nullptr);

  const std::string csv = r.csv();
  CHECK(csv.rfind("category,benchmark,size,acset_ns,baseline_ns,ratio\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.rows.size() + 1);
  CHECK(r.table().find("sum-weights") != std::string::npos);
}

TEST_CASE("every category runs") {
  const auto cats = bench::bench_categories();
  CHECK(std::find(cats.begin(), cats.end(), "Graph") != cats.end());
  bench::BenchOptions o;
  o.sizes = {1000};
  const bench::BenchReport r = bench::run_benchmarks(o);
  for (const auto& cat : cats) {
    CHECK_MESSAGE(std::any_of(r.rows.begin(), r.rows.end(), [&](const auto& row) { return row.category == cat; }),
                  cat);
  }
}

TEST_CASE("make-path cost per edge is flat") {
  bench::BenchOptions o;
  o.suite = "Graph";
  o.only = {"make-path"};
  const bench::BenchReport r = bench::run_benchmarks(o);
  REQUIRE(r.rows.size() == 4);
  double lo = r.rows.front().acset_ns, hi = lo;
  for (const auto& row : r.rows) {
    lo = std::min(lo, row.acset_ns);
    hi = std::max(hi, row.acset_ns);
  }
  CHECK(hi / lo <= 2.0);
}
