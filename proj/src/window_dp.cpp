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

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "tmatch/errors.hpp"
#include "tmatch/oracle.hpp"

namespace tmatch {

int WindowMatroidInstance::ground_size() const {
  return vertex_count + static_cast<int>(edge_elements.size()) +
         static_cast<int>(vertex_appearances.size()) + dummy_count;
}

int WindowMatroidInstance::edge_element(std::size_t i) const {
  return vertex_count + static_cast<int>(i);
}

bool WindowMatroidInstance::is_edge_element(int element) const {
  return element >= vertex_count &&
         element < vertex_count + static_cast<int>(edge_elements.size());
}

const TimeEdge& WindowMatroidInstance::edge_of(int element) const {
  if (!is_edge_element(element)) throw PreconditionError("not a time-edge element");
  return edge_elements[element - vertex_count];
}

std::uint64_t WindowMatroidInstance::weight(const std::vector<int>& x) const {
  return static_cast<std::uint64_t>(
      std::count_if(x.begin(), x.end(), [&](int e) { return is_edge_element(e); }));
}

WindowMatroidInstance build_window_instance(const TemporalGraph& g, int delta, int nu,
                                            int window) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  if (nu < 0) throw PreconditionError("nu must be non-negative");
  if (window < 1) throw PreconditionError("window index must be positive");
  const int lo = delta * (window - 1) + 1;
  if (lo > g.lifetime()) throw PreconditionError("window outside the lifetime");

  WindowMatroidInstance inst;
  inst.delta = delta;
  inst.nu = nu;
  inst.window = window;
  inst.slots = Interval(lo, std::min(delta * window, g.lifetime()));
  inst.vertex_count = g.vertex_count();
  for (const auto& e : g.time_edges()) {
    if (inst.slots.contains(e.t)) inst.edge_elements.push_back(e);
  }
  std::set<std::pair<Vertex, TimeSlot>> appearances;
  for (const auto& e : inst.edge_elements) {
    appearances.emplace(e.u, e.t);
    appearances.emplace(e.v, e.t);
  }
  inst.vertex_appearances.assign(appearances.begin(), appearances.end());
  inst.dummy_count = 5 * nu;

  const int appearance_base = inst.vertex_count + static_cast<int>(inst.edge_elements.size());
  auto appearance_id = [&](Vertex v, TimeSlot t) {
    const auto it = std::lower_bound(inst.vertex_appearances.begin(),
                                     inst.vertex_appearances.end(), std::make_pair(v, t));
    return appearance_base + static_cast<int>(it - inst.vertex_appearances.begin());
  };
  for (std::size_t i = 0; i < inst.edge_elements.size(); ++i) {
    const TimeEdge& e = inst.edge_elements[i];
    std::vector<int> block = {e.u - 1, e.v - 1, appearance_id(e.u, e.t),
                              appearance_id(e.v, e.t), inst.edge_element(i)};
    std::sort(block.begin(), block.end());
    inst.edge_blocks.push_back(std::move(block));
  }
  const int dummy_base = appearance_base + static_cast<int>(inst.vertex_appearances.size());
  for (int b = 0; b < nu; ++b) {
    std::vector<int> block;
    for (int j = 0; j < 5; ++j) block.push_back(dummy_base + 5 * b + j);
    inst.dummy_blocks.push_back(std::move(block));
  }
  inst.rank = 5 * nu * delta;
  if (inst.rank > 0) {
    const PrimeField field(find_prime_in_range(std::max(inst.ground_size(), 1)));
    inst.representation = vandermonde_representation(inst.rank, inst.ground_size(), field);
  }
  return inst;
}

namespace {

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace

WindowFamily l_complete_family(const TemporalGraph& g, int delta, int nu, int window,
                               std::uint64_t cap) {
  WindowFamily out;
  out.window = window;
  if (nu == 0) {
    build_window_instance(g, delta, nu, window);
    out.matchings.push_back(DeltaMatching{delta, {}});
    return out;
  }
  const WindowMatroidInstance inst = build_window_instance(g, delta, nu, window);
  std::vector<std::vector<int>> blocks = inst.edge_blocks;
  blocks.insert(blocks.end(), inst.dummy_blocks.begin(), inst.dummy_blocks.end());

  std::vector<std::vector<int>> current = {{}};
  for (int round = 1; round <= nu; ++round) {
    RepFamilyRequest request;
    request.alpha = round;
    request.beta = nu * delta - round;
    request.gamma = 5;
    request.representation = inst.representation;
    std::set<std::vector<int>> seen;
    for (const auto& base : current) {
      for (const auto& block : blocks) {
        if (!disjoint_sorted(base, block)) continue;
        std::vector<int> merged;
        std::merge(base.begin(), base.end(), block.begin(), block.end(),
                   std::back_inserter(merged));
        if (!seen.insert(merged).second) continue;
        const std::uint64_t w = inst.weight(merged);
        request.family.push_back({std::move(merged), w});
      }
    }
    const WeightedSetFamily kept = representative_family(request, cap);
    current.clear();
    for (const auto& s : kept.sets) current.push_back(s.elements);
  }

  std::set<std::vector<TimeEdge>> seen;
  for (const auto& x : current) {
    DeltaMatching m{delta, {}};
    for (int element : x) {
      if (inst.is_edge_element(element)) m.members.push_back(inst.edge_of(element));
    }
    m.normalize();
    if (seen.insert(m.members).second) out.matchings.push_back(std::move(m));
  }
  return out;
}

namespace {

bool compatible(const DeltaMatching& left, const DeltaMatching& right, int delta) {
  for (const auto& a : left.members) {
    for (const auto& b : right.members) {
      if (!delta_independent(a, b, delta)) return false;
    }
  }
  return true;
}

struct DpEntry {
  long long value = -1;  // -1: unreachable
  int parent = -1;
};

}  // namespace

DeltaMatching solve_window_dp(const TemporalGraph& g, int delta,
                              const WindowDpConfig& config, WindowDpStats* stats) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  if (delta >= g.lifetime()) {
    if (stats) *stats = WindowDpStats{1, 1};
    return solve_full_window(g, delta);
  }
  const CompressedGraph compressed = compress_idle_gaps_mapped(g, delta);
  const int lifetime = compressed.graph.lifetime();
  const int windows = (lifetime + delta - 1) / delta;
  const TemporalGraph h = with_lifetime(compressed.graph, windows * delta);
  const int nu = static_cast<int>(maximum_matching(underlying(h)).size());

  std::vector<WindowFamily> families(windows);
  const int jobs = std::max(config.jobs, 1);
  for (int start = 0; start < windows; start += jobs) {
    std::vector<std::future<WindowFamily>> batch;
    for (int w = start; w < std::min(windows, start + jobs); ++w) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, w] { return l_complete_family(h, delta, nu, w + 1, config.cap); }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) families[start + i] = batch[i].get();
  }

  std::vector<std::vector<DpEntry>> table(windows);
  for (int w = 0; w < windows; ++w) {
    const auto& members = families[w].matchings;
    table[w].resize(members.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
      const long long own = static_cast<long long>(members[j].size());
      DpEntry& entry = table[w][j];
      if (w == 0) {
        entry.value = own;
        continue;
      }
      const auto& prev = families[w - 1].matchings;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        const long long base = table[w - 1][i].value;
        if (base < 0 || base + own <= entry.value) continue;
        if (!compatible(prev[i], members[j], delta)) continue;
        entry.value = base + own;
        entry.parent = static_cast<int>(i);
      }
    }
  }

  if (stats) {
    stats->windows = static_cast<std::size_t>(windows);
    stats->max_family_size = 0;
    for (const auto& f : families) {
      stats->max_family_size = std::max(stats->max_family_size, f.matchings.size());
    }
  }

  DeltaMatching result{delta, {}};
  int best = -1;
  for (std::size_t j = 0; j < table.back().size(); ++j) {
    if (table.back()[j].value > (best < 0 ? -1 : table.back()[best].value)) {
      best = static_cast<int>(j);
    }
  }
  if (best < 0) throw ConsistencyError("window families admit no combined matching");
  for (int w = windows - 1; w >= 0; --w) {
    for (const auto& e : families[w].matchings[best].members) {
      result.members.emplace_back(e.u, e.v, compressed.original_slot[e.t]);
    }
    best = table[w][best].parent;
  }
  result.normalize();
  return result;
}

}  // namespace tmatch
