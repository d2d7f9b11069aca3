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

#ifndef TMATCH_APPROX_HPP_
#define TMATCH_APPROX_HPP_

#include <vector>

#include "tmatch/matching.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// Family of (partial) delta-windows inside [1, T] with consecutive windows
// exactly delta - 1 slots apart.
struct DeltaTemplate {
  std::vector<Interval> windows;

  bool covers(TimeSlot t) const;
  friend bool operator==(const DeltaTemplate&, const DeltaTemplate&) = default;
};

// All 2*delta - 1 templates for lifetime T, in shift order: the first one
// starts with the single-slot window [1, 1] and each next one is shifted
// right by one slot. Throws PreconditionError unless 1 <= delta <= T.
std::vector<DeltaTemplate> enumerate_templates(int delta, int lifetime);

// Number of templates with a window containing t.
int coverage_count(const std::vector<DeltaTemplate>& templates, TimeSlot t);

// Template algorithm: for every template, solve each window optimally,
// take the union, complete it greedily, and keep the largest result (first
// template wins ties). Guarantees size >= delta / (2 delta - 1) * optimum.
// With jobs > 1 the templates are evaluated concurrently; the result does
// not depend on jobs.
DeltaMatching approx_template(const TemporalGraph& g, int delta, int jobs = 1);

// Slot-ascending greedy: in every slot, add snapshot edges in canonical
// order unless blocked by the current solution. Maximal, size >= optimum / 2.
DeltaMatching approx_greedy(const TemporalGraph& g, int delta);

}  // namespace tmatch

#endif  // TMATCH_APPROX_HPP_
