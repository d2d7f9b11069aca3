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

#include <gtest/gtest.h>

#include <random>

#include "tmatch/errors.hpp"
#include "tmatch/io.hpp"
#include "tmatch/oracle.hpp"

namespace tmatch {
namespace {

int alpha_of(const StaticGraph& g) {
  return static_cast<int>(maximum_independent_set_bruteforce(g).size());
}

TEST(CubicReductionTest, K4Structure) {
  const StaticGraph k4 = named_cubic_graph("k4");
  const CertifiedInstance inst = cubic_reduction(k4, 1);
  EXPECT_EQ(inst.graph.vertex_count(), 14);
  EXPECT_EQ(inst.graph.edges().size(), 16u);
  EXPECT_EQ(inst.graph.lifetime(), 3);
  EXPECT_EQ(inst.delta, 2);
  for (const auto& e : inst.graph.edges()) EXPECT_EQ(e.labels.size(), 1u);
  ASSERT_TRUE(inst.certified_mu);
  EXPECT_EQ(*inst.certified_mu, 7);
  EXPECT_EQ(solve_exact(inst.graph, 2).size(), 7u);
}

TEST(CubicReductionTest, GadgetSlotsFollowColors) {
  const StaticGraph g = named_cubic_graph("prism");
  const CertifiedInstance inst = cubic_reduction(g);
  EXPECT_FALSE(inst.certified_mu);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int color = inst.coloring.at(edges[i]);
    const Vertex w = reduction_edge_vertex(g, static_cast<int>(i));
    const int copy = color % 2;
    const TimeSlot t = color <= 2 ? 1 : 3;
    EXPECT_TRUE(inst.graph.has_time_edge({w, reduction_vertex_copy(edges[i].u, copy), t}));
    EXPECT_TRUE(inst.graph.has_time_edge({w, reduction_vertex_copy(edges[i].v, copy), t}));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    EXPECT_TRUE(inst.graph.has_time_edge(
        {reduction_vertex_copy(v, 0), reduction_vertex_copy(v, 1), 2}));
  }
}

TEST(CubicReductionTest, RejectsNonCubic) {
  EXPECT_THROW(cubic_reduction(StaticGraph(4, {{0, 1}, {1, 2}, {2, 3}})), PreconditionError);
}

TEST(CubicReductionProperty, CertificateMatchesOracle) {
  for (const auto& name : named_cubic_graph_names()) {
    const StaticGraph g = named_cubic_graph(name);
    const CertifiedInstance inst = cubic_reduction(g, alpha_of(g));
    EXPECT_EQ(static_cast<int>(solve_exact(inst.graph, 2).size()), *inst.certified_mu) << name;
  }
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const StaticGraph g = random_cubic_graph(4 + 2 * static_cast<int>(seed % 4), seed);
    const CertifiedInstance inst = cubic_reduction(g, alpha_of(g));
    EXPECT_EQ(static_cast<int>(solve_exact(inst.graph, 2).size()), *inst.certified_mu)
        << "seed " << seed;
  }
}

TEST(ExtractIndependentSetTest, Examples) {
  const StaticGraph k4 = named_cubic_graph("k4");
  const CertifiedInstance inst = cubic_reduction(k4, 1);
  const DeltaMatching best = solve_exact(inst.graph, 2);
  const auto s = extract_independent_set(k4, inst, best);
  EXPECT_GE(s.size(), 1u);
  EXPECT_TRUE(is_independent_set(k4, s));
  EXPECT_TRUE(extract_independent_set(k4, inst, DeltaMatching{2, {}}).empty());
  const DeltaMatching one{2, {{reduction_vertex_copy(2, 0), reduction_vertex_copy(2, 1), 2}}};
  EXPECT_EQ(extract_independent_set(k4, inst, one), (std::vector<int>{2}));
}

TEST(ExtractIndependentSetTest, ConflictingGadgetsAreCanonicalized) {
  const StaticGraph k4 = named_cubic_graph("k4");
  const CertifiedInstance inst = cubic_reduction(k4, 1);
  // Vertex gadgets of adjacent vertices 0 and 1 do not conflict in time.
  const DeltaMatching m{2, {{reduction_vertex_copy(0, 0), reduction_vertex_copy(0, 1), 2},
                            {reduction_vertex_copy(1, 0), reduction_vertex_copy(1, 1), 2}}};
  const auto s = extract_independent_set(k4, inst, m);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(is_independent_set(k4, s));
}

TEST(ExtractIndependentSetTest, InvalidMatchingThrows) {
  const StaticGraph k4 = named_cubic_graph("k4");
  const CertifiedInstance inst = cubic_reduction(k4, 1);
  const DeltaMatching bad{2, {{1, 3, 2}}};
  EXPECT_THROW(extract_independent_set(k4, inst, bad), ConsistencyError);
}

TEST(ExtractIndependentSetProperty, RoundTripBound) {
  std::mt19937_64 rng(4);
  for (const auto& name : named_cubic_graph_names()) {
    const StaticGraph g = named_cubic_graph(name);
    const CertifiedInstance inst = cubic_reduction(g);
    const auto edges = inst.graph.time_edges();
    for (int iter = 0; iter < 50; ++iter) {
      std::vector<TimeEdge> order = edges;
      std::shuffle(order.begin(), order.end(), rng);
      DeltaMatching m{2, {}};
      for (const auto& e : order) {
        auto candidate = m.members;
        candidate.push_back(e);
        if (!validate(inst.graph, candidate, 2)) m.members = candidate;
      }
      m.normalize();
      const auto s = extract_independent_set(g, inst, m);
      EXPECT_TRUE(is_independent_set(g, s));
      EXPECT_GE(static_cast<int>(s.size()), static_cast<int>(m.size()) - 3 * g.vertex_count() / 2);
    }
  }
}

TEST(CompleteAugmentTest, K4) {
  const StaticGraph k4 = named_cubic_graph("k4");
  const CertifiedInstance inst = complete_underlying_augment(cubic_reduction(k4, 1));
  EXPECT_EQ(inst.graph.lifetime(), 5);
  EXPECT_EQ(*inst.certified_mu, 14);
  EXPECT_EQ(snapshot(inst.graph, 4).edge_count(), 0u);
  const int n = inst.graph.vertex_count();
  EXPECT_EQ(underlying(inst.graph).edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
  EXPECT_EQ(snapshot(inst.graph, 5).edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
  EXPECT_EQ(solve_exact(inst.graph, 2, OracleConfig{200}).size(), 14u);
}

TEST(RandomTemporalGraphTest, Extremes) {
  const TemporalGraph full = random_temporal_graph(4, 1.0, 3, 1.0, 1);
  EXPECT_EQ(full.edges().size(), 6u);
  EXPECT_EQ(full.time_edge_count(), 18u);
  EXPECT_EQ(random_temporal_graph(5, 0.0, 3, 0.5, 1).time_edge_count(), 0u);
  const TemporalGraph sparse = random_temporal_graph(4, 1.0, 5, 0.0, 2);
  for (const auto& e : sparse.edges()) EXPECT_EQ(e.labels.size(), 1u);
  EXPECT_THROW(random_temporal_graph(3, 1.5, 3, 0.5, 1), PreconditionError);
  EXPECT_THROW(random_temporal_graph(0, 0.5, 3, 0.5, 1), PreconditionError);
}

TEST(RandomTemporalGraphTest, SeedIsReproducible) {
  const TemporalGraph a = random_temporal_graph(6, 0.5, 5, 0.3, 42);
  const TemporalGraph b = random_temporal_graph(6, 0.5, 5, 0.3, 42);
  EXPECT_EQ(serialize_instance(a), serialize_instance(b));
  EXPECT_NE(serialize_instance(a), serialize_instance(random_temporal_graph(6, 0.5, 5, 0.3, 43)));
}

TEST(NamedGraphTest, AllCubicAndConnected) {
  for (const auto& name : named_cubic_graph_names()) {
    const StaticGraph g = named_cubic_graph(name);
    for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 3) << name;
  }
  EXPECT_EQ(alpha_of(named_cubic_graph("petersen")), 4);
  EXPECT_THROW(named_cubic_graph("k5"), PreconditionError);
}

TEST(RandomCellsTest, ConnectedAndInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto cells = random_connected_cells(6, 6, 1 + static_cast<int>(seed % 36), seed);
    EXPECT_EQ(cells.size(), 1 + seed % 36);
    EXPECT_NO_THROW(grid_to_temporal_path(cells));
  }
}

}  // namespace
}  // namespace tmatch
