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

#ifndef TMATCH_WINDOW_DP_HPP_
#define TMATCH_WINDOW_DP_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tmatch/matching.hpp"
#include "tmatch/matroid.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// Uniform-matroid instance for one delta-window. Ground elements are laid
// out as: vertices (element v - 1 for vertex v), then window time edges,
// then vertex appearances, then 5 * nu dummies.
struct WindowMatroidInstance {
  int delta = 1;
  int nu = 0;
  int window = 1;
  Interval slots;
  int vertex_count = 0;
  std::vector<TimeEdge> edge_elements;                          // canonical order
  std::vector<std::pair<Vertex, TimeSlot>> vertex_appearances;  // sorted (v, t)
  int dummy_count = 0;
  std::vector<std::vector<int>> edge_blocks;   // one per edge element, sorted
  std::vector<std::vector<int>> dummy_blocks;  // nu blocks of 5 dummies
  int rank = 0;                                // 5 * nu * delta
  PrimeFieldMatrix representation;             // rank x ground_size()

  int ground_size() const;
  int edge_element(std::size_t i) const;       // element id of edge_elements[i]
  bool is_edge_element(int element) const;
  const TimeEdge& edge_of(int element) const;  // element must be an edge element
  std::uint64_t weight(const std::vector<int>& x) const;
};

// Window w covers slots [delta * (w - 1) + 1, delta * w] clipped to the
// lifetime.
WindowMatroidInstance build_window_instance(const TemporalGraph& g, int delta,
                                            int nu, int window);

struct WindowFamily {
  int window = 1;
  std::vector<DeltaMatching> matchings;  // distinct, in selection order
};

WindowFamily l_complete_family(const TemporalGraph& g, int delta, int nu, int window,
                               std::uint64_t cap = kDefaultMinorCap);

struct WindowDpConfig {
  std::uint64_t cap = kDefaultMinorCap;
  int jobs = 1;
};

struct WindowDpStats {
  std::size_t windows = 0;
  std::size_t max_family_size = 0;
};

// Exact maximum delta-temporal matching via window families and a dynamic
// program over consecutive windows.
DeltaMatching solve_window_dp(const TemporalGraph& g, int delta,
                              const WindowDpConfig& config = {},
                              WindowDpStats* stats = nullptr);

}  // namespace tmatch

#endif  // TMATCH_WINDOW_DP_HPP_
