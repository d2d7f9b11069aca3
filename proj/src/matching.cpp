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

#include "tmatch/matching.hpp"

#include <algorithm>
#include <cstdlib>

namespace tmatch {

namespace {

std::string format(const TimeEdge& e) {
  return "({" + std::to_string(e.u) + "," + std::to_string(e.v) + "}," +
         std::to_string(e.t) + ")";
}

bool independent_of_all(const TimeEdge& e, const std::vector<TimeEdge>& chosen,
                        int delta) {
  return std::all_of(chosen.begin(), chosen.end(), [&](const TimeEdge& c) {
    return delta_independent(e, c, delta);
  });
}

}  // namespace

void DeltaMatching::normalize() { std::sort(members.begin(), members.end()); }

bool delta_independent(const TimeEdge& a, const TimeEdge& b, int delta) {
  return !a.shares_vertex(b) || std::abs(a.t - b.t) >= delta;
}

bool blocks(const TimeEdge& e, Vertex v, TimeSlot t, int delta) {
  return e.touches(v) && std::abs(e.t - t) <= delta - 1;
}

std::string Violation::describe() const {
  if (kind == Kind::kMissingTimeEdge) {
    return "time edge " + format(first) + " is not in the graph";
  }
  return "time edges " + format(first) + " and " + format(second) +
         " are in conflict";
}

std::optional<Violation> validate(const TemporalGraph& g,
                                  const std::vector<TimeEdge>& m, int delta) {
  std::vector<TimeEdge> sorted = m;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& e : sorted) {
    if (!g.has_time_edge(e)) {
      return Violation{Violation::Kind::kMissingTimeEdge, e, {}};
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!delta_independent(sorted[i], sorted[j], delta)) {
        return Violation{Violation::Kind::kConflict, sorted[i], sorted[j]};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate(const TemporalGraph& g, const DeltaMatching& m) {
  return validate(g, m.members, m.delta);
}

DeltaMatching greedy_complete(const TemporalGraph& g, DeltaMatching m) {
  for (const auto& e : g.time_edges()) {
    if (independent_of_all(e, m.members, m.delta)) m.members.push_back(e);
  }
  m.normalize();
  return m;
}

bool is_maximal(const TemporalGraph& g, const DeltaMatching& m) {
  for (const auto& e : g.time_edges()) {
    if (std::find(m.members.begin(), m.members.end(), e) != m.members.end()) {
      continue;
    }
    if (independent_of_all(e, m.members, m.delta)) return false;
  }
  return true;
}

}  // namespace tmatch
