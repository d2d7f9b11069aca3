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

#include "tmatch/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tmatch/errors.hpp"

namespace tmatch {

TimeEdge::TimeEdge(Vertex a, Vertex b, TimeSlot time)
    : t(time), u(std::min(a, b)), v(std::max(a, b)) {}

Interval::Interval(TimeSlot l, TimeSlot h) : lo(l), hi(h) {
  if (lo > hi) {
    throw PreconditionError("interval [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "] is empty");
  }
}

TemporalGraph::TemporalGraph(int n, int lifetime, std::vector<LabeledEdge> edges)
    : n_(n), lifetime_(lifetime), edges_(std::move(edges)) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  if (lifetime_ < 1) throw PreconditionError("lifetime must be positive");
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "} out of vertex range");
    }
    if (e.labels.empty()) {
      throw PreconditionError("edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "} has no labels");
    }
    std::sort(e.labels.begin(), e.labels.end());
    if (std::adjacent_find(e.labels.begin(), e.labels.end()) != e.labels.end()) {
      throw PreconditionError("duplicate label on edge {" + std::to_string(e.u) +
                              "," + std::to_string(e.v) + "}");
    }
    if (e.labels.front() < 1 || e.labels.back() > lifetime_) {
      throw PreconditionError("label outside [1,T] on edge {" +
                              std::to_string(e.u) + "," + std::to_string(e.v) +
                              "}");
    }
    time_edge_count_ += e.labels.size();
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const LabeledEdge& a, const LabeledEdge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw PreconditionError("duplicate edge {" + std::to_string(edges_[i].u) +
                              "," + std::to_string(edges_[i].v) + "}");
    }
  }
}

std::vector<TimeEdge> TemporalGraph::time_edges() const {
  std::vector<TimeEdge> out;
  out.reserve(time_edge_count_);
  for (const auto& e : edges_) {
    for (TimeSlot t : e.labels) out.emplace_back(e.u, e.v, t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> TemporalGraph::find_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const LabeledEdge& e, const std::pair<int, int>& k) {
                               return std::pair(e.u, e.v) < k;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool TemporalGraph::has_time_edge(const TimeEdge& e) const {
  auto idx = find_edge(e.u, e.v);
  if (!idx) return false;
  const auto& labels = edges_[*idx].labels;
  return std::binary_search(labels.begin(), labels.end(), e.t);
}

TimeSlot TemporalGraph::earliest_label(Vertex u, Vertex v) const {
  auto idx = find_edge(u, v);
  if (!idx) {
    throw ConsistencyError("edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "} not in graph");
  }
  return edges_[*idx].labels.front();
}

TimeSlot TemporalGraph::max_label() const {
  TimeSlot best = 0;
  for (const auto& e : edges_) best = std::max(best, e.labels.back());
  return best;
}

TimeSlot TemporalGraph::min_label() const {
  TimeSlot best = 0;
  for (const auto& e : edges_) {
    if (best == 0 || e.labels.front() < best) best = e.labels.front();
  }
  return best;
}

StaticGraph snapshot(const TemporalGraph& g, TimeSlot t) {
  if (t < 1 || t > g.lifetime()) {
    throw std::out_of_range("snapshot slot " + std::to_string(t) +
                            " outside [1," + std::to_string(g.lifetime()) + "]");
  }
  StaticGraph s(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (std::binary_search(e.labels.begin(), e.labels.end(), t)) {
      s.add_edge(e.u - 1, e.v - 1);
    }
  }
  return s;
}

TemporalGraph restrict(const TemporalGraph& g, Interval w) {
  std::vector<LabeledEdge> kept;
  for (const auto& e : g.edges()) {
    LabeledEdge r{e.u, e.v, {}};
    for (TimeSlot t : e.labels) {
      if (w.contains(t)) r.labels.push_back(t);
    }
    if (!r.labels.empty()) kept.push_back(std::move(r));
  }
  return TemporalGraph(g.vertex_count(), g.lifetime(), std::move(kept));
}

TemporalGraph remove_time_edges(const TemporalGraph& g,
                                std::span<const TimeEdge> removed) {
  std::vector<LabeledEdge> edges = g.edges();
  for (const auto& te : removed) {
    auto idx = g.find_edge(te.u, te.v);
    if (!idx) {
      throw ConsistencyError("time edge ({" + std::to_string(te.u) + "," +
                             std::to_string(te.v) + "}," +
                             std::to_string(te.t) + ") not in graph");
    }
    auto& labels = edges[*idx].labels;
    auto it = std::lower_bound(labels.begin(), labels.end(), te.t);
    if (it == labels.end() || *it != te.t) {
      throw ConsistencyError("time edge ({" + std::to_string(te.u) + "," +
                             std::to_string(te.v) + "}," +
                             std::to_string(te.t) + ") not in graph");
    }
    labels.erase(it);
  }
  std::erase_if(edges, [](const LabeledEdge& e) { return e.labels.empty(); });
  return TemporalGraph(g.vertex_count(), g.lifetime(), std::move(edges));
}

StaticGraph underlying(const TemporalGraph& g) {
  StaticGraph s(g.vertex_count());
  for (const auto& e : g.edges()) s.add_edge(e.u - 1, e.v - 1);
  return s;
}

ShiftedGraph shift_to_first_activity(const TemporalGraph& g) {
  if (g.time_edge_count() == 0) {
    throw PreconditionError("shift_to_first_activity needs a time edge");
  }
  const int offset = g.min_label() - 1;
  std::vector<LabeledEdge> edges = g.edges();
  for (auto& e : edges) {
    for (auto& t : e.labels) t -= offset;
  }
  return {TemporalGraph(g.vertex_count(), g.lifetime() - offset, std::move(edges)),
          offset};
}

CompressedGraph compress_idle_gaps_mapped(const TemporalGraph& g, int delta) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  const int T = g.lifetime();
  std::vector<char> active(T + 1, 0);
  for (const auto& e : g.edges()) {
    for (TimeSlot t : e.labels) active[t] = 1;
  }
  // new_slot[t] == 0 marks a dropped slot.
  std::vector<TimeSlot> new_slot(T + 1, 0);
  std::vector<TimeSlot> original{0};
  int next = 1;
  int t = 1;
  while (t <= T) {
    if (active[t]) {
      new_slot[t] = next++;
      original.push_back(t);
      ++t;
      continue;
    }
    int run_end = t;
    while (run_end + 1 <= T && !active[run_end + 1]) ++run_end;
    const int run = run_end - t + 1;
    const bool trailing = run_end == T;
    int keep = run;
    if (run >= delta) keep = trailing ? 0 : delta - 1;
    for (int i = 0; i < keep; ++i) {
      new_slot[t + i] = next++;
      original.push_back(t + i);
    }
    t = run_end + 1;
  }
  int lifetime = next - 1;
  if (lifetime < 1) {
    // Edgeless input whose whole lifetime is one long idle run.
    lifetime = 1;
    original.push_back(1);
  }
  std::vector<LabeledEdge> edges = g.edges();
  for (auto& e : edges) {
    for (auto& label : e.labels) label = new_slot[label];
  }
  return {TemporalGraph(g.vertex_count(), lifetime, std::move(edges)),
          std::move(original)};
}

TemporalGraph compress_idle_gaps(const TemporalGraph& g, int delta) {
  return compress_idle_gaps_mapped(g, delta).graph;
}

TemporalGraph pad_delta(const TemporalGraph& g, int delta) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  auto remap = [delta](TimeSlot t) { return t + (t - 1) / delta; };
  std::vector<LabeledEdge> edges = g.edges();
  for (auto& e : edges) {
    for (auto& t : e.labels) t = remap(t);
  }
  return TemporalGraph(g.vertex_count(), remap(g.lifetime()), std::move(edges));
}

TemporalGraph with_lifetime(const TemporalGraph& g, int lifetime) {
  return TemporalGraph(g.vertex_count(), lifetime, g.edges());
}

}  // namespace tmatch
