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

#ifndef TMATCH_MATCHING_HPP_
#define TMATCH_MATCHING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// A set of pairwise delta-independent time edges. `members` is kept in
// canonical (t, u, v) order by every producer in this library.
struct DeltaMatching {
  int delta = 1;
  std::vector<TimeEdge> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  void normalize();

  friend bool operator==(const DeltaMatching&, const DeltaMatching&) = default;
};

// Vertex-disjoint, or at least `delta` slots apart.
bool delta_independent(const TimeEdge& a, const TimeEdge& b, int delta);

// True iff time edge `e` delta-blocks the vertex appearance (v, t).
bool blocks(const TimeEdge& e, Vertex v, TimeSlot t, int delta);

struct Violation {
  enum class Kind { kMissingTimeEdge, kConflict };
  Kind kind = Kind::kConflict;
  TimeEdge first;
  TimeEdge second;  // only meaningful for kConflict
  std::string describe() const;
};

// First violation in canonical order, or nullopt when `m` is a
// delta-temporal matching of `g`. Missing members are reported before
// conflicting pairs.
std::optional<Violation> validate(const TemporalGraph& g,
                                  const std::vector<TimeEdge>& m, int delta);
std::optional<Violation> validate(const TemporalGraph& g, const DeltaMatching& m);

// Adds time edges of `g` in canonical order whenever they stay independent
// of everything chosen so far. The result is maximal.
DeltaMatching greedy_complete(const TemporalGraph& g, DeltaMatching m);

// True iff no time edge of `g` outside `m` can be added to `m`.
bool is_maximal(const TemporalGraph& g, const DeltaMatching& m);

}  // namespace tmatch

#endif  // TMATCH_MATCHING_HPP_
