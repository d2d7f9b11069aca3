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

#include "tmatch/static_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tmatch/errors.hpp"
#include "tmatch/generators.hpp"

namespace tmatch {
namespace {

StaticGraph complete(int n) {
  StaticGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

StaticGraph path(int n) {
  StaticGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

StaticGraph cycle(int n) {
  StaticGraph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

StaticGraph random_graph(std::mt19937_64& rng, int n, double p) {
  StaticGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

int brute_force_matching(const StaticGraph& g) {
  const auto edges = g.edges();
  int best = 0;
  std::vector<char> used(g.vertex_count(), 0);
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const auto [u, v] = edges[j];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      self(self, j + 1, size + 1);
      used[u] = used[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

bool proper_coloring(const StaticGraph& g, const std::map<StaticEdge, int>& colors) {
  if (colors.size() != g.edge_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> seen;
    for (int w : g.neighbors(v)) {
      const int c = colors.at(StaticEdge{std::min(v, w), std::max(v, w)});
      if (c < 1 || c > 4 || !seen.insert(c).second) return false;
    }
  }
  return true;
}

TEST(StaticGraphTest, AddEdgeValidates) {
  StaticGraph g(3);
  g.add_edge(2, 0);
  g.add_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
}

TEST(MaximumMatchingTest, Examples) {
  EXPECT_EQ(maximum_matching(complete(4)).size(), 2u);
  EXPECT_EQ(maximum_matching(path(5)).size(), 2u);
  EXPECT_EQ(maximum_matching(named_cubic_graph("petersen")).size(), 5u);
  EXPECT_EQ(maximum_matching(StaticGraph(3)).size(), 0u);
}

TEST(MaximumMatchingTest, OutputIsMatching) {
  const StaticGraph g = named_cubic_graph("petersen");
  EXPECT_TRUE(is_matching(g, maximum_matching(g)));
}

TEST(MaximumMatchingTest, AtLeastK) {
  EXPECT_TRUE(max_matching_size_at_least(path(5), 0));
  EXPECT_FALSE(max_matching_size_at_least(path(5), 3));
  EXPECT_TRUE(max_matching_size_at_least(complete(4), 2));
  const Matching m = matching_of_size_at_most(complete(6), 2);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(is_matching(complete(6), m));
}

TEST(MaximumMatchingProperty, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const StaticGraph g = random_graph(rng, n, 0.1 + 0.05 * (iter % 10));
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(is_matching(g, m));
    EXPECT_EQ(static_cast<int>(m.size()), brute_force_matching(g)) << "iteration " << iter;
  }
}

TEST(IndependentSetTest, Examples) {
  EXPECT_EQ(maximum_independent_set_bruteforce(complete(4)).size(), 1u);
  EXPECT_EQ(maximum_independent_set_bruteforce(cycle(5)).size(), 2u);
  const StaticGraph grid = diagonal_grid(5, 5);
  const auto s = maximum_independent_set_bruteforce(grid);
  EXPECT_EQ(s.size(), 9u);
  EXPECT_TRUE(is_independent_set(grid, s));
}

TEST(IndependentSetProperty, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const StaticGraph g = random_graph(rng, n, 0.3);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) s.push_back(v);
      }
      if (is_independent_set(g, s)) best = std::max(best, static_cast<int>(s.size()));
    }
    const auto mis = maximum_independent_set_bruteforce(g);
    EXPECT_TRUE(is_independent_set(g, mis));
    EXPECT_EQ(static_cast<int>(mis.size()), best) << "iteration " << iter;
  }
}

TEST(EdgeColoringTest, NamedCubicGraphsAreProper) {
  for (const auto& name : named_cubic_graph_names()) {
    const StaticGraph g = named_cubic_graph(name);
    EXPECT_TRUE(proper_coloring(g, four_edge_coloring_cubic(g))) << name;
  }
}

TEST(EdgeColoringTest, RandomCubicGraphsAreProper) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 9);
    const StaticGraph g = random_cubic_graph(n, seed);
    EXPECT_TRUE(proper_coloring(g, four_edge_coloring_cubic(g))) << "seed " << seed;
  }
}

TEST(EdgeColoringTest, RejectsNonCubic) {
  EXPECT_THROW(four_edge_coloring_cubic(path(4)), PreconditionError);
}

TEST(DiagonalGridTest, Examples) {
  EXPECT_EQ(diagonal_grid(2, 2), complete(4));
  EXPECT_EQ(diagonal_grid(1, 6), path(6));
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      const std::size_t expected = (n - 1) * m + n * (m - 1) + 2 * (n - 1) * (m - 1);
      EXPECT_EQ(diagonal_grid(n, m).edge_count(), expected);
    }
  }
}

TEST(SubdivideTwiceTest, TriangleBecomesPentagon) {
  const StaticGraph g = subdivide_twice(complete(3), {0, 1});
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.edge_count(), 5u);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_THROW(subdivide_twice(path(3), {0, 2}), ConsistencyError);
}

TEST(SubdivideTwiceProperty, IndependenceNumberGrowsByOne) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const StaticGraph g = random_graph(rng, n, 0.4);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const StaticEdge e = edges[rng() % edges.size()];
    const StaticGraph h = subdivide_twice(g, e);
    EXPECT_EQ(h.vertex_count(), g.vertex_count() + 2);
    EXPECT_EQ(maximum_independent_set_bruteforce(h).size(),
              maximum_independent_set_bruteforce(g).size() + 1);
  }
}

}  // namespace
}  // namespace tmatch
