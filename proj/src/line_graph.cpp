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

#include "tmatch/line_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "tmatch/errors.hpp"

namespace tmatch {

TemporalLineGraph build_line_graph(const TemporalGraph& g, int delta) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  TemporalLineGraph lg;
  lg.delta = delta;
  lg.time_edges = g.time_edges();
  const int n = static_cast<int>(lg.time_edges.size());
  lg.graph = StaticGraph(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!delta_independent(lg.time_edges[i], lg.time_edges[j], delta)) {
        lg.graph.add_edge(i, j);
      }
    }
  }
  return lg;
}

DeltaMatching matching_via_line_graph(const TemporalGraph& g, int delta,
                                      std::size_t max_vertices) {
  if (g.time_edge_count() > max_vertices) {
    throw ResourceLimitError("line graph has " +
                             std::to_string(g.time_edge_count()) +
                             " vertices, budget is " +
                             std::to_string(max_vertices));
  }
  TemporalLineGraph lg = build_line_graph(g, delta);
  DeltaMatching m{delta, {}};
  for (int v : maximum_independent_set_bruteforce(lg.graph)) {
    m.members.push_back(lg.time_edges[v]);
  }
  m.normalize();
  return m;
}

bool king_adjacent(const Cell& a, const Cell& b) {
  const int dr = a.row - b.row;
  const int dc = a.col - b.col;
  return (a != b) && dr * dr + dc * dc <= 2;
}

StaticGraph induced_diagonal_grid(const std::vector<Cell>& cells) {
  const int n = static_cast<int>(cells.size());
  StaticGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (king_adjacent(cells[i], cells[j])) g.add_edge(i, j);
    }
  }
  return g;
}

TemporalGraph grid_to_temporal_path(const std::vector<Cell>& input) {
  if (input.empty()) throw PreconditionError("empty cell set");
  std::vector<Cell> cells = input;
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw PreconditionError("duplicate cell");
  }
  for (const auto& c : cells) {
    if (c.row < 1 || c.col < 1) {
      throw PreconditionError("cell coordinates are 1-based");
    }
  }

  // Connectivity under king moves.
  std::vector<char> seen(cells.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (!seen[j] && king_adjacent(cells[i], cells[j])) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != cells.size()) throw PreconditionError("cell set is disconnected");

  // Connected sets occupy a contiguous band of rows.
  int rmin = cells.front().row;
  int rmax = cells.back().row;
  int lifetime = 0;
  std::map<int, std::vector<TimeSlot>> labels_by_row;
  for (const auto& c : cells) {
    labels_by_row[c.row].push_back(c.col);
    lifetime = std::max(lifetime, c.col);
  }
  std::vector<LabeledEdge> edges;
  for (auto& [row, labels] : labels_by_row) {
    const int i = row - rmin + 1;
    edges.push_back({i, i + 1, std::move(labels)});
  }
  return TemporalGraph(rmax - rmin + 2, lifetime, std::move(edges));
}

}  // namespace tmatch
