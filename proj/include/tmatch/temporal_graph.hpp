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

#ifndef TMATCH_TEMPORAL_GRAPH_HPP_
#define TMATCH_TEMPORAL_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tmatch/static_graph.hpp"

namespace tmatch {

using Vertex = int;
using TimeSlot = int;

// Appearance of edge {u, v} (u < v) at time slot t. The natural order
// (t, u, v) is the canonical order used for every tie-break in the library.
struct TimeEdge {
  TimeSlot t = 0;
  Vertex u = 0;
  Vertex v = 0;

  TimeEdge() = default;
  TimeEdge(Vertex a, Vertex b, TimeSlot time);

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_vertex(const TimeEdge& o) const {
    return touches(o.u) || touches(o.v);
  }

  friend auto operator<=>(const TimeEdge&, const TimeEdge&) = default;
};

// Closed interval [lo, hi] of time slots.
struct Interval {
  TimeSlot lo = 1;
  TimeSlot hi = 1;

  Interval() = default;
  Interval(TimeSlot lo, TimeSlot hi);

  int length() const { return hi - lo + 1; }
  bool contains(TimeSlot t) const { return lo <= t && t <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// An edge of the underlying graph together with its ascending label list.
struct LabeledEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<TimeSlot> labels;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Temporal graph on vertices 1..n with lifetime T.
//
// Immutable after construction. Edges are normalized to u < v and kept in
// lexicographic order; every edge carries at least one label, labels are
// strictly ascending and lie in [1, T].
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Validates and canonicalizes. Edge orientation and label order in the
  // input are free; self-loops, duplicate edges, duplicate labels, empty
  // label lists and labels outside [1, T] throw PreconditionError.
  TemporalGraph(int n, int lifetime, std::vector<LabeledEdge> edges);

  int vertex_count() const { return n_; }
  int lifetime() const { return lifetime_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  std::size_t time_edge_count() const { return time_edge_count_; }

  // All time edges in canonical (t, u, v) order.
  std::vector<TimeEdge> time_edges() const;

  bool has_time_edge(const TimeEdge& e) const;

  // Index of edge {u, v} in edges(), if present.
  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;

  // Earliest label of {u, v}; the edge must exist.
  TimeSlot earliest_label(Vertex u, Vertex v) const;

  // Largest label over all edges, 0 for an edgeless graph.
  TimeSlot max_label() const;
  // Smallest label over all edges, 0 for an edgeless graph.
  TimeSlot min_label() const;

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

 private:
  int n_ = 0;
  int lifetime_ = 1;
  std::vector<LabeledEdge> edges_;
  std::size_t time_edge_count_ = 0;
};

// Edges active at slot t. Throws std::out_of_range unless 1 <= t <= T.
StaticGraph snapshot(const TemporalGraph& g, TimeSlot t);

// Keeps only labels inside `w` (absolute labels, lifetime unchanged).
TemporalGraph restrict(const TemporalGraph& g, Interval w);

// Deletes the given appearances; edges left without labels are dropped.
// Throws ConsistencyError for a time edge that is not in `g`.
TemporalGraph remove_time_edges(const TemporalGraph& g,
                                std::span<const TimeEdge> removed);

// Static graph of all edges with at least one label.
StaticGraph underlying(const TemporalGraph& g);

struct ShiftedGraph {
  TemporalGraph graph;
  int offset = 0;
};

// Moves the first non-empty snapshot to slot 1; labels drop by `offset`.
// The lifetime drops by the same amount. Throws PreconditionError for an
// edgeless graph.
ShiftedGraph shift_to_first_activity(const TemporalGraph& g);

struct CompressedGraph {
  TemporalGraph graph;
  // original_slot[t] is the slot of `g` that slot t of `graph` came from
  // (index 0 unused).
  std::vector<TimeSlot> original_slot;
};

// Shortens every run of at least `delta` consecutive edgeless snapshots to
// delta - 1 slots; such a run at the end is removed. Keeps the maximum size
// of a delta-temporal matching.
CompressedGraph compress_idle_gaps_mapped(const TemporalGraph& g, int delta);
TemporalGraph compress_idle_gaps(const TemporalGraph& g, int delta);

// Inserts one edgeless slot after every `delta` slots: t -> t + (t-1)/delta.
// g has a delta-matching of size k iff the result has a (delta+1)-matching
// of size k.
TemporalGraph pad_delta(const TemporalGraph& g, int delta);

// Same graph with a larger lifetime (trailing edgeless snapshots).
TemporalGraph with_lifetime(const TemporalGraph& g, int lifetime);

}  // namespace tmatch

#endif  // TMATCH_TEMPORAL_GRAPH_HPP_
