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

#include "tmatch/approx.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "tmatch/errors.hpp"
#include "tmatch/oracle.hpp"

namespace tmatch {

bool DeltaTemplate::covers(TimeSlot t) const {
  return std::any_of(windows.begin(), windows.end(),
                     [t](const Interval& w) { return w.contains(t); });
}

std::vector<DeltaTemplate> enumerate_templates(int delta, int lifetime) {
  if (delta < 1 || delta > lifetime) {
    throw PreconditionError("templates need 1 <= delta <= T (delta = " +
                            std::to_string(delta) +
                            ", T = " + std::to_string(lifetime) + ")");
  }
  const int period = 2 * delta - 1;
  std::vector<DeltaTemplate> out;
  // `start` is where the first full window would begin; starts below 1 clip
  // the first window to a partial window beginning at slot 1.
  for (int start = 2 - delta; start <= delta; ++start) {
    DeltaTemplate tmpl;
    for (int lo = start; lo <= lifetime; lo += period) {
      const int hi = std::min(lo + delta - 1, lifetime);
      tmpl.windows.emplace_back(std::max(lo, 1), hi);
    }
    out.push_back(std::move(tmpl));
  }
  return out;
}

int coverage_count(const std::vector<DeltaTemplate>& templates, TimeSlot t) {
  return static_cast<int>(std::count_if(
      templates.begin(), templates.end(),
      [t](const DeltaTemplate& s) { return s.covers(t); }));
}

namespace {

DeltaMatching solve_template(const TemporalGraph& g, int delta,
                             const DeltaTemplate& tmpl) {
  DeltaMatching m{delta, {}};
  for (const auto& w : tmpl.windows) {
    DeltaMatching part = solve_full_window(restrict(g, w), delta);
    m.members.insert(m.members.end(), part.members.begin(), part.members.end());
  }
  m.normalize();
  return greedy_complete(g, std::move(m));
}

}  // namespace

DeltaMatching approx_template(const TemporalGraph& g, int delta, int jobs) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  // A delta beyond the lifetime behaves like delta == T on one full window.
  if (delta > g.lifetime()) {
    DeltaMatching m = solve_full_window(g, delta);
    return greedy_complete(g, std::move(m));
  }
  const auto templates = enumerate_templates(delta, g.lifetime());
  std::vector<DeltaMatching> results(templates.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < templates.size(); ++i) {
      results[i] = solve_template(g, delta, templates[i]);
    }
  } else {
    std::vector<std::future<DeltaMatching>> pending;
    for (std::size_t i = 0; i < templates.size(); ++i) {
      pending.push_back(std::async(std::launch::async, solve_template,
                                   std::cref(g), delta, std::cref(templates[i])));
      if (pending.size() == static_cast<std::size_t>(jobs) ||
          i + 1 == templates.size()) {
        const std::size_t first = i + 1 - pending.size();
        for (std::size_t j = 0; j < pending.size(); ++j) {
          results[first + j] = pending[j].get();
        }
        pending.clear();
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].size() > results[best].size()) best = i;
  }
  return results[best];
}

DeltaMatching approx_greedy(const TemporalGraph& g, int delta) {
  if (delta < 1) throw PreconditionError("delta must be positive");
  DeltaMatching m{delta, {}};
  // last_use[v] is the latest slot at which v is matched so far.
  std::vector<TimeSlot> last_use(g.vertex_count() + 1, 0);
  std::vector<char> used(g.vertex_count() + 1, 0);
  for (TimeSlot t = 1; t <= g.lifetime(); ++t) {
    for (const auto& e : g.edges()) {
      if (!std::binary_search(e.labels.begin(), e.labels.end(), t)) continue;
      auto free_at = [&](Vertex x) {
        return !used[x] || t - last_use[x] >= delta;
      };
      if (free_at(e.u) && free_at(e.v)) {
        m.members.emplace_back(e.u, e.v, t);
        used[e.u] = used[e.v] = 1;
        last_use[e.u] = last_use[e.v] = t;
      }
    }
  }
  return m;
}

}  // namespace tmatch
