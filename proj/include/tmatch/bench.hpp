// Copyright 2026 The tmatch Authors
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

#ifndef TMATCH_BENCH_HPP_
#define TMATCH_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmatch/matching.hpp"
#include "tmatch/oracle.hpp"
#include "tmatch/temporal_graph.hpp"
#include "tmatch/window_dp.hpp"

namespace tmatch {

struct BenchRecord {
  std::string instance;
  std::string algo;
  int delta = 1;
  std::size_t size = 0;
  std::optional<std::size_t> oracle;
  double millis = 0.0;

  // size / oracle (1 when the oracle size is 0); empty without an oracle.
  std::optional<double> ratio() const;
  // instance, algo, delta, size, oracle, ratio, millis separated by tabs;
  // '-' marks an absent oracle.
  std::string to_line() const;
};

struct BenchCase {
  std::string id;
  TemporalGraph graph;
};

struct BenchConfig {
  int delta = 2;
  std::vector<std::string> algos = {"greedy", "template"};
  bool with_oracle = true;
  OracleConfig oracle;
  WindowDpConfig window_dp;
  int jobs = 1;
};

bool is_known_algo(const std::string& algo);

// Solves g with the named algorithm ("oracle", "greedy", "template",
// "window-dp", "fpt-k"); "fpt-k" reports the largest k it accepts.
DeltaMatching run_algo(const std::string& algo, const TemporalGraph& g, int delta,
                       const BenchConfig& config);

// One record per (case, algorithm). The oracle column is filled when the
// case fits the oracle budget.
std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& cases,
                                   const BenchConfig& config);

// Seeded random cases named "rand-<i>".
std::vector<BenchCase> random_bench_cases(int count, std::uint64_t seed);

}  // namespace tmatch

#endif  // TMATCH_BENCH_HPP_
