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

#ifndef TMATCH_GENERATORS_HPP_
#define TMATCH_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmatch/line_graph.hpp"
#include "tmatch/matching.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

struct CertifiedInstance {
  TemporalGraph graph;
  int delta = 2;
  std::optional<int> certified_mu;
  std::string provenance;
  // Source cubic graph and the 4-edge-coloring used by the reduction.
  StaticGraph source;
  std::map<StaticEdge, int> coloring;
};

// Temporal vertex carrying copy c (0 or 1) of source vertex v (0-based).
Vertex reduction_vertex_copy(int v, int c);
// Temporal vertex of the gadget for the edge with index i in source.edges().
Vertex reduction_edge_vertex(const StaticGraph& source, int i);

// Reduction from independent set on a cubic graph to 2-temporal matching
// with lifetime 3. With alpha_known, certified_mu = alpha_known + 3n/2.
CertifiedInstance cubic_reduction(const StaticGraph& g,
                                  std::optional<int> alpha_known = std::nullopt);

// Independent set of g (sorted, 0-based) of size at least |m| - 3n/2 read off
// a valid 2-temporal matching of the reduction after canonicalization.
std::vector<int> extract_independent_set(const StaticGraph& g,
                                         const CertifiedInstance& instance,
                                         const DeltaMatching& m);

// Appends an edgeless slot 4 and a complete snapshot at slot 5.
CertifiedInstance complete_underlying_augment(const CertifiedInstance& instance);

TemporalGraph random_temporal_graph(int n, double edge_prob, int lifetime,
                                    double label_prob, std::uint64_t seed);

// "k4", "k33", "prism", "petersen", "cube".
StaticGraph named_cubic_graph(std::string_view name);
std::vector<std::string> named_cubic_graph_names();

// Connected simple cubic graph on n vertices (n even, n >= 4).
StaticGraph random_cubic_graph(int n, std::uint64_t seed);

// `count` cells inducing a connected subgraph of the rows x cols diagonal grid.
std::vector<Cell> random_connected_cells(int rows, int cols, int count,
                                         std::uint64_t seed);

}  // namespace tmatch

#endif  // TMATCH_GENERATORS_HPP_
