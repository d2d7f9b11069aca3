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

#include "tmatch/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "tmatch/approx.hpp"
#include "tmatch/errors.hpp"
#include "tmatch/fpt_k.hpp"
#include "tmatch/generators.hpp"

namespace tmatch {

std::optional<double> BenchRecord::ratio() const {
  if (!oracle) return std::nullopt;
  if (*oracle == 0) return 1.0;
  return static_cast<double>(size) / static_cast<double>(*oracle);
}

std::string BenchRecord::to_line() const {
  std::ostringstream out;
  out << instance << '\t' << algo << '\t' << delta << '\t' << size << '\t';
  char buf[32];
  if (oracle) {
    out << *oracle << '\t';
    std::snprintf(buf, sizeof buf, "%.4f", *ratio());
    out << buf << '\t';
  } else {
    out << "-\t-\t";
  }
  std::snprintf(buf, sizeof buf, "%.3f", millis);
  out << buf;
  return out.str();
}

bool is_known_algo(const std::string& algo) {
  return algo == "oracle" || algo == "greedy" || algo == "template" ||
         algo == "window-dp" || algo == "fpt-k";
}

DeltaMatching run_algo(const std::string& algo, const TemporalGraph& g, int delta,
                       const BenchConfig& config) {
  if (algo == "oracle") return solve_exact(g, delta, config.oracle);
  if (algo == "greedy") return approx_greedy(g, delta);
  if (algo == "template") return approx_template(g, delta, config.jobs);
  if (algo == "window-dp") return solve_window_dp(g, delta, config.window_dp);
  if (algo == "fpt-k") {
    DeltaMatching best{delta, {}};
    for (int k = 1;; ++k) {
      FptDecision d = solve_fpt_k(g, delta, k);
      if (!d.yes) return best;
      best = std::move(d.witness);
    }
  }
  throw PreconditionError("unknown algorithm: " + algo);
}

std::vector<BenchRecord> run_bench(const std::vector<BenchCase>& cases,
                                   const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  for (const auto& c : cases) {
    std::optional<std::size_t> oracle;
    if (config.with_oracle && c.graph.time_edge_count() <= config.oracle.budget) {
      oracle = solve_exact(c.graph, config.delta, config.oracle).size();
    }
    for (const auto& algo : config.algos) {
      const auto start = Clock::now();
      const DeltaMatching m = run_algo(algo, c.graph, config.delta, config);
      const auto stop = Clock::now();
      BenchRecord r;
      r.instance = c.id;
      r.algo = algo;
      r.delta = config.delta;
      r.size = m.size();
      r.oracle = oracle;
      r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BenchCase> random_bench_cases(int count, std::uint64_t seed) {
  std::vector<BenchCase> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const int n = 4 + static_cast<int>(s % 2);
    out.push_back({"rand-" + std::to_string(i), random_temporal_graph(n, 0.6, 6, 0.3, s)});
  }
  return out;
}

}  // namespace tmatch
