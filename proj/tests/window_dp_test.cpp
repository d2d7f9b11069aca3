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

#include "tmatch/window_dp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "tmatch/errors.hpp"
#include "tmatch/oracle.hpp"

namespace tmatch {
namespace {

using testing::fig7;
using testing::random_small;

int nu_of(const TemporalGraph& g) {
  return static_cast<int>(maximum_matching(underlying(g)).size());
}

// Random instance with at most 5 vertices, so nu <= 2.
TemporalGraph random_nu2(std::uint64_t seed, int max_t = 8) {
  return random_small(seed + 1000, 5, max_t, 25);
}

TEST(WindowInstanceTest, SingleEdge) {
  const TemporalGraph g(2, 2, {{1, 2, {1}}});
  const WindowMatroidInstance inst = build_window_instance(g, 2, 1, 1);
  EXPECT_EQ(inst.ground_size(), 10);
  EXPECT_EQ(inst.rank, 10);
  EXPECT_EQ(inst.edge_elements, (std::vector<TimeEdge>{{1, 2, 1}}));
  EXPECT_EQ(inst.vertex_appearances,
            (std::vector<std::pair<Vertex, TimeSlot>>{{1, 1}, {2, 1}}));
  ASSERT_EQ(inst.edge_blocks.size(), 1u);
  EXPECT_EQ(inst.edge_blocks[0], (std::vector<int>{0, 1, 2, 3, 4}));
  ASSERT_EQ(inst.dummy_blocks.size(), 1u);
  EXPECT_EQ(inst.dummy_blocks[0], (std::vector<int>{5, 6, 7, 8, 9}));
  EXPECT_EQ(inst.representation.rows(), 10);
  EXPECT_EQ(inst.representation.cols(), 10);
  EXPECT_EQ(inst.weight({2, 0, 7}), 1u);
}

TEST(WindowInstanceTest, EdgelessWindow) {
  const TemporalGraph g(3, 4, {{1, 2, {4}}});
  const WindowMatroidInstance inst = build_window_instance(g, 2, 1, 1);
  EXPECT_TRUE(inst.edge_blocks.empty());
  EXPECT_EQ(inst.dummy_blocks.size(), 1u);
  EXPECT_THROW(build_window_instance(g, 2, 1, 3), PreconditionError);
}

TEST(WindowFamilyTest, SingleEdge) {
  const TemporalGraph g(2, 2, {{1, 2, {1}}});
  const WindowFamily f = l_complete_family(g, 2, 1, 1);
  std::set<std::vector<TimeEdge>> members;
  for (const auto& m : f.matchings) members.insert(m.members);
  EXPECT_TRUE(members.contains({{1, 2, 1}}));
  EXPECT_TRUE(members.contains({}));
}

TEST(WindowFamilyTest, EdgelessWindowAndZeroNu) {
  const TemporalGraph g(3, 4, {{1, 2, {4}}});
  const WindowFamily f = l_complete_family(g, 2, 0, 1);
  ASSERT_EQ(f.matchings.size(), 1u);
  EXPECT_TRUE(f.matchings[0].empty());
  const WindowFamily f1 = l_complete_family(g, 2, 1, 1);
  ASSERT_EQ(f1.matchings.size(), 1u);
  EXPECT_TRUE(f1.matchings[0].empty());
}

TEST(WindowFamilyTest, Fig7FirstWindow) {
  const WindowFamily f = l_complete_family(fig7(), 2, 2, 1);
  std::size_t best = 0;
  for (const auto& m : f.matchings) {
    EXPECT_FALSE(validate(fig7(), m));
    for (const auto& e : m.members) EXPECT_LE(e.t, 2);
    best = std::max(best, m.size());
  }
  EXPECT_EQ(best, solve_full_window(restrict(fig7(), Interval(1, 2)), 2).size());
  EXPECT_EQ(best, 2u);
}

TEST(SolveWindowDpTest, Fig7) {
  const DeltaMatching m = solve_window_dp(fig7(), 2);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_FALSE(validate(fig7(), m));
  EXPECT_EQ(solve_window_dp(fig7(), 3).size(), 2u);
  EXPECT_EQ(solve_window_dp(fig7(), 7).size(), 2u);
  EXPECT_THROW(solve_window_dp(fig7(), 0), PreconditionError);
}

TEST(SolveWindowDpTest, CapIsReported) {
  // nu = 3 needs C(30, 15) coordinates in its last round.
  const TemporalGraph g(6, 4, {{1, 2, {1, 3}}, {3, 4, {1, 2}}, {5, 6, {2, 4}}});
  EXPECT_THROW(solve_window_dp(g, 2), ResourceLimitError);
}

TEST(WindowDpProperty, DisjointBlocksIffMatching) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TemporalGraph g = random_nu2(seed, 6);
    const int delta = 2 + static_cast<int>(seed % 2);
    const int windows = (g.lifetime() + delta - 1) / delta;
    for (int w = 1; w <= windows; ++w) {
      const WindowMatroidInstance inst = build_window_instance(g, delta, nu_of(g), w);
      const std::size_t count = inst.edge_elements.size();
      if (count > 12) continue;
      for (unsigned mask = 0; mask < (1u << count); ++mask) {
        std::vector<TimeEdge> m;
        std::vector<int> elements;
        for (std::size_t i = 0; i < count; ++i) {
          if (!(mask >> i & 1)) continue;
          m.push_back(inst.edge_elements[i]);
          elements.insert(elements.end(), inst.edge_blocks[i].begin(), inst.edge_blocks[i].end());
        }
        std::sort(elements.begin(), elements.end());
        const bool disjoint = std::adjacent_find(elements.begin(), elements.end()) == elements.end();
        EXPECT_EQ(disjoint, !validate(g, m, delta)) << "seed " << seed;
      }
    }
  }
}

TEST(WindowDpProperty, FamiliesAreComplete) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const TemporalGraph g = random_nu2(seed, 6);
    const int delta = 2;
    const int nu = nu_of(g);
    const std::size_t opt = solve_exact(g, delta).size();
    const int windows = (g.lifetime() + delta - 1) / delta;
    const DeltaMatching best = solve_exact(g, delta);
    for (int w = 1; w <= windows; ++w) {
      const WindowFamily f = l_complete_family(g, delta, nu, w);
      EXPECT_LE(f.matchings.size(), binomial(5 * nu * delta, 5 * nu));
      const Interval slots(delta * (w - 1) + 1, std::min(delta * w, g.lifetime()));
      std::vector<TimeEdge> outside;
      for (const auto& e : best.members) {
        if (!slots.contains(e.t)) outside.push_back(e);
      }
      bool found = false;
      for (const auto& member : f.matchings) {
        for (const auto& e : member.members) EXPECT_TRUE(slots.contains(e.t));
        std::vector<TimeEdge> combined = outside;
        combined.insert(combined.end(), member.members.begin(), member.members.end());
        if (combined.size() >= opt && !validate(g, combined, delta)) found = true;
      }
      EXPECT_TRUE(found) << "seed " << seed << " window " << w;
    }
  }
}

TEST(WindowDpProperty, DistantWindowsNeverConflict) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TemporalGraph g = random_nu2(seed);
    const int delta = 2;
    const int windows = (g.lifetime() + delta - 1) / delta;
    std::vector<WindowFamily> families;
    for (int w = 1; w <= windows; ++w) families.push_back(l_complete_family(g, delta, nu_of(g), w));
    for (int i = 0; i < windows; ++i) {
      for (int j = i + 2; j < windows; ++j) {
        for (const auto& a : families[i].matchings) {
          for (const auto& b : families[j].matchings) {
            for (const auto& x : a.members) {
              for (const auto& y : b.members) EXPECT_TRUE(delta_independent(x, y, delta));
            }
          }
        }
      }
    }
  }
}

TEST(WindowDpProperty, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TemporalGraph g = random_nu2(seed);
    for (int delta = 1; delta <= 2; ++delta) {
      const DeltaMatching m = solve_window_dp(g, delta);
      EXPECT_FALSE(validate(g, m));
      EXPECT_EQ(m.size(), solve_exact(g, delta).size()) << "seed " << seed << " delta " << delta;
    }
  }
}

TEST(WindowDpProperty, ParallelFamiliesAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TemporalGraph g = random_nu2(seed);
    EXPECT_EQ(solve_window_dp(g, 2, WindowDpConfig{kDefaultMinorCap, 1}),
              solve_window_dp(g, 2, WindowDpConfig{kDefaultMinorCap, 4}));
  }
}

}  // namespace
}  // namespace tmatch
