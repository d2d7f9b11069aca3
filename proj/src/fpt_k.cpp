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

#include "tmatch/fpt_k.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

#include "tmatch/errors.hpp"

namespace tmatch {

WindowKernel first_window_kernel(const TemporalGraph& g, int delta) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  WindowKernel out;
  out.nu_bound = static_cast<int>(maximum_matching(underlying(g)).size());
  const Interval first(1, std::min(delta, g.lifetime()));
  const TemporalGraph window = restrict(g, first);
  const StaticGraph window_graph = underlying(window);
  const Matching a = maximum_matching(window_graph);
  const std::size_t cutoff = 4 * static_cast<std::size_t>(out.nu_bound);

  std::vector<int> matched;
  for (const auto& e : a.pairs) {
    matched.push_back(e.u);
    matched.push_back(e.v);
  }
  std::sort(matched.begin(), matched.end());

  for (int v : matched) {
    std::vector<TimeEdge> reach;
    for (int w : window_graph.neighbors(v)) {
      reach.emplace_back(v + 1, w + 1, window.earliest_label(v + 1, w + 1));
    }
    std::sort(reach.begin(), reach.end());
    if (reach.size() > cutoff) reach.resize(cutoff + 1);
    out.kernel.insert(out.kernel.end(), reach.begin(), reach.end());
  }
  std::sort(out.kernel.begin(), out.kernel.end());
  out.kernel.erase(std::unique(out.kernel.begin(), out.kernel.end()),
                   out.kernel.end());
  return out;
}

DeltaMatching exchange_to_earliest(const TemporalGraph& g, DeltaMatching m) {
  for (auto& e : m.members) {
    if (e.t <= m.delta) e.t = g.earliest_label(e.u, e.v);
  }
  m.normalize();
  return m;
}

namespace {

class FptSearch {
 public:
  FptSearch(int delta, FptStats* stats) : delta_(delta), stats_(stats) {}

  // On success, appends the chosen time edges (in g's own labels) to `out`.
  bool decide(const TemporalGraph& g, int k, int depth,
              std::vector<TimeEdge>& out) {
    if (stats_) {
      ++stats_->nodes;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    if (k <= 0) return true;
    const StaticGraph base = underlying(g);
    if (max_matching_size_at_least(base, k)) {
      for (const auto& e : matching_of_size_at_most(base, k).pairs) {
        out.emplace_back(e.u + 1, e.v + 1, g.earliest_label(e.u + 1, e.v + 1));
      }
      return true;
    }
    if (g.time_edge_count() == 0) return false;

    const ShiftedGraph shifted = shift_to_first_activity(g);
    const TemporalGraph& h = shifted.graph;
    const WindowKernel kernel = first_window_kernel(h, delta_);
    const std::vector<TimeEdge> all = h.time_edges();
    for (const auto& pick : kernel.kernel) {
      std::vector<TimeEdge> conflicting;
      for (const auto& e : all) {
        if (!delta_independent(pick, e, delta_)) conflicting.push_back(e);
      }
      const TemporalGraph rest = remove_time_edges(h, conflicting);
      std::vector<TimeEdge> sub;
      if (decide(rest, k - 1, depth + 1, sub)) {
        sub.push_back(pick);
        for (auto& e : sub) {
          e.t += shifted.offset;
          out.push_back(e);
        }
        return true;
      }
    }
    return false;
  }

 private:
  int delta_;
  FptStats* stats_;
};

}  // namespace

FptDecision solve_fpt_k(const TemporalGraph& g, int delta, int k,
                        FptStats* stats) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  if (k < 0) throw PreconditionError("k must be non-negative");
  FptSearch search(delta, stats);
  FptDecision d;
  d.witness.delta = delta;
  d.yes = search.decide(g, k, 0, d.witness.members);
  if (!d.yes) d.witness.members.clear();
  d.witness.normalize();
  assert(!stats || stats->max_depth <= std::max(k, 0));
  return d;
}

}  // namespace tmatch
