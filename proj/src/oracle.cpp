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

#include "tmatch/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tmatch/errors.hpp"

namespace tmatch {

namespace {

using Bits = boost::dynamic_bitset<>;

// Branch and bound over the conflict relation of the time edges.
//
// Upper bound: every vertex v can host at most cap(v) chosen time edges,
// where cap(v) is the largest number of its incident labels that are
// pairwise at least delta apart; each time edge consumes two such slots.
class ExactSearch {
 public:
  ExactSearch(std::vector<TimeEdge> edges, int delta, int vertex_count)
      : edges_(std::move(edges)),
        delta_(delta),
        n_(static_cast<int>(edges_.size())),
        conflicts_(n_, Bits(n_)),
        incident_(vertex_count + 1) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (!delta_independent(edges_[i], edges_[j], delta_)) {
          conflicts_[i].set(j);
          conflicts_[j].set(i);
        }
      }
      // edges_ is in canonical order, so each incident list is sorted by t.
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
  }

  std::vector<TimeEdge> solve() {
    std::vector<int> chosen;
    Bits unassigned(n_);
    unassigned.set();
    // Components of the conflict graph are solved independently.
    while (unassigned.any()) {
      Bits component = component_of(unassigned.find_first(), unassigned);
      unassigned -= component;
      best_.clear();
      seed_with_greedy(component);
      std::vector<int> current;
      search(component, current);
      chosen.insert(chosen.end(), best_.begin(), best_.end());
    }
    std::vector<TimeEdge> out;
    for (int i : chosen) out.push_back(edges_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Bits component_of(std::size_t start, const Bits& within) const {
    Bits comp(n_);
    comp.set(start);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      Bits fresh = (conflicts_[i] & within) - comp;
      for (auto j = fresh.find_first(); j != Bits::npos; j = fresh.find_next(j)) {
        comp.set(j);
        stack.push_back(j);
      }
    }
    return comp;
  }

  void seed_with_greedy(const Bits& p) {
    Bits left = p;
    while (left.any()) {
      auto i = left.find_first();
      best_.push_back(static_cast<int>(i));
      left -= conflicts_[i];
      left.reset(i);
    }
  }

  std::size_t capacity_bound(const Bits& p) const {
    std::size_t slots = 0;
    for (const auto& list : incident_) {
      int last = 0;
      bool any = false;
      for (int i : list) {
        if (!p.test(i)) continue;
        if (!any || edges_[i].t - last >= delta_) {
          ++slots;
          last = edges_[i].t;
          any = true;
        }
      }
    }
    return slots / 2;
  }

  void search(const Bits& p, std::vector<int>& current) {
    const std::size_t remaining = p.count();
    if (remaining == 0) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + remaining <= best_.size()) return;
    if (current.size() + capacity_bound(p) <= best_.size()) return;

    int pivot = -1;
    std::size_t pivot_deg = 0;
    for (auto i = p.find_first(); i != Bits::npos; i = p.find_next(i)) {
      std::size_t d = (conflicts_[i] & p).count();
      if (pivot == -1 || d > pivot_deg) {
        pivot = static_cast<int>(i);
        pivot_deg = d;
      }
    }
    if (pivot_deg == 0) {
      best_ = current;
      for (auto i = p.find_first(); i != Bits::npos; i = p.find_next(i)) {
        best_.push_back(static_cast<int>(i));
      }
      return;
    }

    Bits with = p - conflicts_[pivot];
    with.reset(pivot);
    current.push_back(pivot);
    search(with, current);
    current.pop_back();

    Bits without = p;
    without.reset(pivot);
    search(without, current);
  }

  std::vector<TimeEdge> edges_;
  int delta_;
  int n_;
  std::vector<Bits> conflicts_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> best_;
};

}  // namespace

DeltaMatching solve_exact(const TemporalGraph& g, int delta,
                          const OracleConfig& config) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  if (g.time_edge_count() > config.budget) {
    throw ResourceLimitError("oracle budget exceeded: " +
                             std::to_string(g.time_edge_count()) +
                             " time edges, budget " +
                             std::to_string(config.budget));
  }
  ExactSearch search(g.time_edges(), delta, g.vertex_count());
  return DeltaMatching{delta, search.solve()};
}

DeltaMatching solve_full_window(const TemporalGraph& g, int delta) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  DeltaMatching m{delta, {}};
  if (g.time_edge_count() == 0) return m;
  if (g.max_label() - g.min_label() + 1 > delta) {
    throw PreconditionError("labels span [" + std::to_string(g.min_label()) +
                            "," + std::to_string(g.max_label()) +
                            "], longer than delta = " + std::to_string(delta));
  }
  for (const auto& e : maximum_matching(underlying(g)).pairs) {
    const Vertex u = e.u + 1;
    const Vertex v = e.v + 1;
    m.members.emplace_back(u, v, g.earliest_label(u, v));
  }
  m.normalize();
  return m;
}

}  // namespace tmatch
