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

#ifndef TMATCH_LINE_GRAPH_HPP_
#define TMATCH_LINE_GRAPH_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "tmatch/matching.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// Conflict graph of the time edges of a temporal graph: vertex i stands for
// time_edges[i] (canonical order) and two vertices are adjacent iff the
// time edges share an endpoint and are fewer than delta slots apart.
struct TemporalLineGraph {
  int delta = 1;
  std::vector<TimeEdge> time_edges;
  StaticGraph graph;
};

TemporalLineGraph build_line_graph(const TemporalGraph& g, int delta);

// Maximum delta-temporal matching read off a maximum independent set of the
// line graph. Throws ResourceLimitError when the line graph has more than
// `max_vertices` vertices.
DeltaMatching matching_via_line_graph(const TemporalGraph& g, int delta,
                                      std::size_t max_vertices = 64);

// Grid cell (row, column), both 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Temporal path whose 2-temporal line graph is the king's-graph induced on
// `cells`. Occupied rows rmin..rmax become path edges {i, i+1} with
// i = row - rmin + 1; column j becomes label j, so the lifetime is the
// largest column. Throws PreconditionError for an empty or disconnected
// cell set.
TemporalGraph grid_to_temporal_path(const std::vector<Cell>& cells);

// Subgraph of the king's graph induced on `cells`; vertex i is cells[i].
StaticGraph induced_diagonal_grid(const std::vector<Cell>& cells);

bool king_adjacent(const Cell& a, const Cell& b);

}  // namespace tmatch

#endif  // TMATCH_LINE_GRAPH_HPP_
