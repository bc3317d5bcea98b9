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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace acsets::bench {

struct BenchRow {
  std::string category;
  std::string benchmark;
  std::size_t size = 0;
  double acset_ns = 0;  // median per-op time
  double baseline_ns = 0;
  double ratio = 0;  // acset_ns / baseline_ns
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Header `category,benchmark,size,acset_ns,baseline_ns,ratio`.
  std::string csv() const;
  std::string table() const;
  const BenchRow* find(std::string_view category, std::string_view benchmark, std::size_t size) const;
};

struct BenchOptions {
  std::string suite = "all";  // "all" or one category
  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  std::uint64_t seed = 20200707;
  std::size_t reps = 20;
  std::vector<std::string> only;  // benchmark names; empty keeps all
  std::function<void(const BenchRow&)> on_row;
};

std::vector<std::string> bench_categories();

/// Checks every case's acset result against its baseline, then times both.
/// Errors: BadParameter, ResultMismatch.
BenchReport run_benchmarks(const BenchOptions& options);

}  // namespace acsets::bench
