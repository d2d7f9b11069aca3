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

#ifndef TMATCH_STATIC_GRAPH_HPP_
#define TMATCH_STATIC_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace tmatch {

// An undirected edge {u, v} of a static graph, stored with u < v.
struct StaticEdge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const StaticEdge&, const StaticEdge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
//
// Graphs derived from a TemporalGraph (snapshot, underlying) use vertex
// i - 1 for temporal vertex i.
class StaticGraph {
 public:
  StaticGraph() = default;
  explicit StaticGraph(int n);
  StaticGraph(int n, const std::vector<StaticEdge>& edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  // Adds {u, v}. Self-loops and out-of-range ids throw PreconditionError;
  // an already present edge is ignored.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // All edges with u < v in lexicographic order.
  std::vector<StaticEdge> edges() const;

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

// A set of vertex-disjoint edges, sorted lexicographically.
struct Matching {
  std::vector<StaticEdge> pairs;

  std::size_t size() const { return pairs.size(); }
};

// Maximum-cardinality matching of a general graph (Edmonds' blossom
// algorithm).
Matching maximum_matching(const StaticGraph& g);

// Grows a matching by at most `k` augmentations and stops as soon as it has
// `k` edges. The result has min(k, nu(g)) edges.
Matching matching_of_size_at_most(const StaticGraph& g, int k);

// True iff nu(g) >= k. Runs at most k augmentations.
bool max_matching_size_at_least(const StaticGraph& g, int k);

// Exact maximum independent set by branch and bound. Meant for oracle use
// on graphs with a few dozen vertices. Returned vertex ids are sorted.
std::vector<int> maximum_independent_set_bruteforce(const StaticGraph& g);

// Proper edge coloring with colors 1..4 of a cubic graph (Misra-Gries fan
// rotation). Keys are the edges of `g`.
std::map<StaticEdge, int> four_edge_coloring_cubic(const StaticGraph& g);

// King's-move grid on n x m cells. Cell (i, j), 1-based, is vertex
// (i - 1) * m + (j - 1).
StaticGraph diagonal_grid(int n, int m);

// Replaces edge {u, v} by the path u - x - y - v through two fresh vertices
// x = n and y = n + 1.
StaticGraph subdivide_twice(const StaticGraph& g, StaticEdge e);

bool is_independent_set(const StaticGraph& g, const std::vector<int>& vertices);
bool is_matching(const StaticGraph& g, const Matching& m);

}  // namespace tmatch

#endif  // TMATCH_STATIC_GRAPH_HPP_
