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

#ifndef TMATCH_TESTS_TEST_UTIL_HPP_
#define TMATCH_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "tmatch/generators.hpp"
#include "tmatch/line_graph.hpp"
#include "tmatch/matroid.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch::testing {

// Temporal path v1 - v2 - v3 - v4 - v5 with e1:{2}, e2:{1,3}, e3:{1}, e4:{2}.
inline TemporalGraph fig7() {
  return TemporalGraph(5, 3, {{1, 2, {2}}, {2, 3, {1, 3}}, {3, 4, {1}}, {4, 5, {2}}});
}

// Path a - b - c with ab:{1,2}, bc:{2}.
inline TemporalGraph p3_toy() {
  return TemporalGraph(3, 2, {{1, 2, {1, 2}}, {2, 3, {2}}});
}

// Small seeded instance: n in [2, max_n], T in [1, max_t], at most
// max_time_edges time edges.
inline TemporalGraph random_small(std::uint64_t seed, int max_n = 6, int max_t = 6,
                                  std::size_t max_time_edges = 25) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  const int min_n = std::min(max_n, 3);
  for (;;) {
    const int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
    const int t = 1 + static_cast<int>(rng() % max_t);
    const double edge_prob = 0.4 + 0.6 * static_cast<double>(rng() % 101) / 100.0;
    const double label_prob = 0.2 + 0.5 * static_cast<double>(rng() % 101) / 100.0;
    TemporalGraph g = random_temporal_graph(n, edge_prob, t, label_prob, rng());
    if (g.time_edge_count() <= max_time_edges) return g;
  }
}

// build_line_graph(grid_to_temporal_path(cells), 2) equals the induced
// diagonal grid under the map (path edge i, label t) -> (row rmin + i - 1, t).
inline bool grid_round_trip(const std::vector<Cell>& cells) {
  const TemporalGraph g = grid_to_temporal_path(cells);
  const TemporalLineGraph lg = build_line_graph(g, 2);
  int rmin = cells.front().row;
  for (const auto& c : cells) rmin = std::min(rmin, c.row);
  std::vector<Cell> image;
  for (const auto& e : lg.time_edges) {
    if (e.v != e.u + 1) return false;
    image.push_back({rmin + e.u - 1, e.t});
  }
  std::vector<Cell> sorted_image = image;
  std::vector<Cell> sorted_cells = cells;
  std::sort(sorted_image.begin(), sorted_image.end());
  std::sort(sorted_cells.begin(), sorted_cells.end());
  if (sorted_image != sorted_cells) return false;
  const int n = static_cast<int>(image.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (lg.graph.has_edge(i, j) != king_adjacent(image[i], image[j])) return false;
    }
  }
  return true;
}

inline bool disjoint_sets(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

// Exhaustive check of max q-representativeness in a uniform matroid, where
// X + Y is independent iff X and Y are disjoint and |Y| <= q.
inline bool is_max_representative(const RepFamilyRequest& req, const WeightedSetFamily& kept) {
  const int ground = req.representation.cols();
  const int q = req.slack();
  for (unsigned mask = 0; mask < (1u << ground); ++mask) {
    if (std::popcount(mask) > q) continue;
    std::vector<int> y;
    for (int i = 0; i < ground; ++i) {
      if (mask >> i & 1) y.push_back(i);
    }
    std::uint64_t best_all = 0;
    bool any = false;
    for (const auto& s : req.family) {
      if (disjoint_sets(s.elements, y)) {
        best_all = std::max(best_all, s.weight);
        any = true;
      }
    }
    if (!any) continue;
    bool covered = false;
    for (const auto& s : kept.sets) {
      if (disjoint_sets(s.elements, y) && s.weight >= best_all) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace tmatch::testing

#endif  // TMATCH_TESTS_TEST_UTIL_HPP_
