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

#include "tmatch/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tmatch/errors.hpp"

namespace tmatch {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform01(rng) * (hi - lo + 1));
}

void require_cubic(const StaticGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw PreconditionError("graph is not cubic: vertex " + std::to_string(v) +
                              " has degree " + std::to_string(g.degree(v)));
    }
  }
}

int parity_copy(int color) { return color % 2; }

TimeSlot gadget_slot(int color) { return color <= 2 ? 1 : 3; }

bool connected(const StaticGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

}  // namespace

Vertex reduction_vertex_copy(int v, int c) { return 2 * v + 1 + c; }

Vertex reduction_edge_vertex(const StaticGraph& source, int i) {
  return 2 * source.vertex_count() + 1 + i;
}

CertifiedInstance cubic_reduction(const StaticGraph& g, std::optional<int> alpha_known) {
  require_cubic(g);
  const int n = g.vertex_count();
  const auto edges = g.edges();
  CertifiedInstance out;
  out.delta = 2;
  out.source = g;
  out.coloring = four_edge_coloring_cubic(g);
  out.provenance = "cubic-reduction";

  std::vector<LabeledEdge> labeled;
  for (int v = 0; v < n; ++v) {
    labeled.push_back({reduction_vertex_copy(v, 0), reduction_vertex_copy(v, 1), {2}});
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int color = out.coloring.at(edges[i]);
    const Vertex w = reduction_edge_vertex(g, static_cast<int>(i));
    const int c = parity_copy(color);
    const TimeSlot t = gadget_slot(color);
    labeled.push_back({w, reduction_vertex_copy(edges[i].u, c), {t}});
    labeled.push_back({w, reduction_vertex_copy(edges[i].v, c), {t}});
  }
  out.graph = TemporalGraph(2 * n + static_cast<int>(edges.size()), 3, std::move(labeled));
  if (alpha_known) out.certified_mu = *alpha_known + 3 * n / 2;
  return out;
}

std::vector<int> extract_independent_set(const StaticGraph& g,
                                         const CertifiedInstance& instance,
                                         const DeltaMatching& m) {
  if (m.delta != 2) throw ConsistencyError("matching must use delta 2");
  if (auto violation = validate(instance.graph, m.members, 2)) {
    throw ConsistencyError("invalid matching: " + violation->describe());
  }
  const int n = g.vertex_count();
  const auto edges = g.edges();
  std::set<TimeEdge> members(m.members.begin(), m.members.end());
  auto gadget = [](int v) {
    return TimeEdge(reduction_vertex_copy(v, 0), reduction_vertex_copy(v, 1), 2);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < edges.size() && !changed; ++i) {
      const auto [u, v] = edges[i];
      if (!members.contains(gadget(u)) || !members.contains(gadget(v))) continue;
      const int color = instance.coloring.at(edges[i]);
      members.erase(gadget(u));
      members.emplace(reduction_edge_vertex(g, static_cast<int>(i)),
                      reduction_vertex_copy(u, parity_copy(color)), gadget_slot(color));
      changed = true;
    }
  }
  const std::vector<TimeEdge> canonical(members.begin(), members.end());
  if (validate(instance.graph, canonical, 2)) {
    throw ConsistencyError("canonicalization produced an invalid matching");
  }
  std::vector<int> s;
  for (int v = 0; v < n; ++v) {
    if (members.contains(gadget(v))) s.push_back(v);
  }
  return s;
}

CertifiedInstance complete_underlying_augment(const CertifiedInstance& instance) {
  if (instance.graph.lifetime() != 3) {
    throw PreconditionError("instance does not come from cubic_reduction");
  }
  const int n = instance.graph.vertex_count();
  std::map<std::pair<Vertex, Vertex>, std::vector<TimeSlot>> labels;
  for (const auto& e : instance.graph.edges()) labels[{e.u, e.v}] = e.labels;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) labels[{u, v}].push_back(5);
  }
  std::vector<LabeledEdge> edges;
  for (auto& [uv, ls] : labels) edges.push_back({uv.first, uv.second, std::move(ls)});
  CertifiedInstance out = instance;
  out.graph = TemporalGraph(n, 5, std::move(edges));
  if (instance.certified_mu) out.certified_mu = *instance.certified_mu + n / 2;
  out.provenance = instance.provenance + "+complete-augment";
  return out;
}

TemporalGraph random_temporal_graph(int n, double edge_prob, int lifetime,
                                    double label_prob, std::uint64_t seed) {
  if (n < 1 || lifetime < 1) throw PreconditionError("n and T must be positive");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0) || !(label_prob >= 0.0 && label_prob <= 1.0)) {
    throw PreconditionError("probabilities must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<LabeledEdge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (uniform01(rng) >= edge_prob) continue;
      std::vector<TimeSlot> labels;
      if (label_prob > 0.0) {
        while (labels.empty()) {
          for (TimeSlot t = 1; t <= lifetime; ++t) {
            if (uniform01(rng) < label_prob) labels.push_back(t);
          }
        }
      } else {
        labels.push_back(uniform_int(rng, 1, lifetime));
      }
      edges.push_back({u, v, std::move(labels)});
    }
  }
  return TemporalGraph(n, lifetime, std::move(edges));
}

StaticGraph named_cubic_graph(std::string_view name) {
  if (name == "k4") {
    return StaticGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "k33") {
    StaticGraph g(6);
    for (int a = 0; a < 3; ++a) {
      for (int b = 3; b < 6; ++b) g.add_edge(a, b);
    }
    return g;
  }
  if (name == "prism") {
    return StaticGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                           {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "petersen") {
    StaticGraph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
      g.add_edge(i, 5 + i);
    }
    return g;
  }
  if (name == "cube") {
    StaticGraph g(8);
    for (int v = 0; v < 8; ++v) {
      for (int bit = 1; bit < 8; bit <<= 1) {
        if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
      }
    }
    return g;
  }
  throw PreconditionError("unknown cubic graph: " + std::string(name));
}

std::vector<std::string> named_cubic_graph_names() {
  return {"k4", "k33", "prism", "petersen", "cube"};
}

StaticGraph random_cubic_graph(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("cubic graphs need an even n >= 4");
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), 3, v);
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[uniform_int(rng, 0, static_cast<int>(i) - 1)]);
    }
    StaticGraph g(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const int a = points[i];
      const int b = points[i + 1];
      if (a == b || g.has_edge(a, b)) {
        simple = false;
      } else {
        g.add_edge(a, b);
      }
    }
    if (simple && connected(g)) return g;
  }
}

std::vector<Cell> random_connected_cells(int rows, int cols, int count,
                                         std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw PreconditionError("grid dimensions must be positive");
  if (count < 1 || count > rows * cols) throw PreconditionError("cell count out of range");
  std::mt19937_64 rng(seed);
  std::set<Cell> chosen = {{uniform_int(rng, 1, rows), uniform_int(rng, 1, cols)}};
  while (static_cast<int>(chosen.size()) < count) {
    std::vector<Cell> frontier;
    for (const auto& c : chosen) {
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const Cell d{c.row + dr, c.col + dc};
          if (d.row < 1 || d.row > rows || d.col < 1 || d.col > cols) continue;
          if (!chosen.contains(d)) frontier.push_back(d);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    chosen.insert(frontier[uniform_int(rng, 0, static_cast<int>(frontier.size()) - 1)]);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace tmatch
