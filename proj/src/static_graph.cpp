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

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "tmatch/errors.hpp"

namespace tmatch {

StaticGraph::StaticGraph(int n) : adjacency_(std::max(n, 0)) {}

StaticGraph::StaticGraph(int n, const std::vector<StaticEdge>& edges)
    : StaticGraph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void StaticGraph::add_edge(int u, int v) {
  if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw PreconditionError("vertex out of range in edge {" +
                            std::to_string(u) + "," + std::to_string(v) + "}");
  }
  auto& au = adjacency_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;
  au.insert(it, v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

bool StaticGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<StaticEdge> StaticGraph::edges() const {
  std::vector<StaticEdge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

// Edmonds' blossom algorithm with BFS-based augmenting path search.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const StaticGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  // Augments from free roots in ascending id order until `limit` edges are
  // matched or no augmenting path is left. A root without an augmenting
  // path never gains one later, so every root is tried once.
  void run(int limit) {
    for (int root = 0; root < n_ && size_ < limit; ++root) {
      if (match_[root] != -1) continue;
      int end = find_augmenting_path(root);
      if (end == -1) continue;
      augment(end);
      ++size_;
    }
  }

  Matching result() const {
    Matching m;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) m.pairs.push_back({v, match_[v]});
    }
    return m;
  }

  int size() const { return size_; }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur_base = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent_[v];
      int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const StaticGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  int size_ = 0;
};

}  // namespace

Matching maximum_matching(const StaticGraph& g) {
  BlossomMatcher matcher(g);
  matcher.run(g.vertex_count());
  return matcher.result();
}

Matching matching_of_size_at_most(const StaticGraph& g, int k) {
  BlossomMatcher matcher(g);
  matcher.run(std::max(k, 0));
  return matcher.result();
}

bool max_matching_size_at_least(const StaticGraph& g, int k) {
  if (k <= 0) return true;
  BlossomMatcher matcher(g);
  matcher.run(k);
  return matcher.size() >= k;
}

namespace {

using Bits = boost::dynamic_bitset<>;

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const StaticGraph& g)
      : n_(g.vertex_count()), adj_(n_, Bits(n_)) {
    for (int v = 0; v < n_; ++v) {
      for (int w : g.neighbors(v)) adj_[v].set(w);
    }
  }

  std::vector<int> solve() {
    best_ = greedy();
    Bits all(n_);
    all.set();
    std::vector<int> current;
    search(all, current);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Minimum-degree greedy, used as the initial lower bound.
  std::vector<int> greedy() const {
    Bits left(n_);
    left.set();
    std::vector<int> chosen;
    while (left.any()) {
      int pick = -1;
      std::size_t pick_deg = 0;
      for (auto v = left.find_first(); v != Bits::npos; v = left.find_next(v)) {
        std::size_t d = (adj_[v] & left).count();
        if (pick == -1 || d < pick_deg) {
          pick = static_cast<int>(v);
          pick_deg = d;
        }
      }
      chosen.push_back(pick);
      left -= adj_[pick];
      left.reset(pick);
    }
    return chosen;
  }

  // Size of a greedy partition of `p` into cliques; bounds any independent
  // subset of `p`.
  std::size_t clique_cover_bound(Bits p) const {
    std::size_t cliques = 0;
    while (p.any()) {
      auto v = p.find_first();
      Bits candidates = p & adj_[v];
      p.reset(v);
      while (candidates.any()) {
        auto w = candidates.find_first();
        p.reset(w);
        candidates &= adj_[w];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(const Bits& p, std::vector<int>& current) {
    if (p.none()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + p.count() <= best_.size()) return;
    if (current.size() + clique_cover_bound(p) <= best_.size()) return;

    int pivot = -1;
    std::size_t pivot_deg = 0;
    for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
      std::size_t d = (adj_[v] & p).count();
      if (pivot == -1 || d > pivot_deg) {
        pivot = static_cast<int>(v);
        pivot_deg = d;
      }
    }
    if (pivot_deg == 0) {
      if (current.size() + p.count() > best_.size()) {
        best_ = current;
        for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
          best_.push_back(static_cast<int>(v));
        }
      }
      return;
    }

    Bits with = p - adj_[pivot];
    with.reset(pivot);
    current.push_back(pivot);
    search(with, current);
    current.pop_back();

    Bits without = p;
    without.reset(pivot);
    search(without, current);
  }

  int n_;
  std::vector<Bits> adj_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> maximum_independent_set_bruteforce(const StaticGraph& g) {
  if (g.vertex_count() == 0) return {};
  return IndependentSetSearch(g).solve();
}

namespace {

// Edge colors stored per endpoint, indexed like the sorted adjacency lists.
class EdgeColoring {
 public:
  EdgeColoring(const StaticGraph& g, int colors)
      : g_(g), colors_(colors), color_(g.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      color_[v].assign(g.degree(v), 0);
    }
  }

  int get(int u, int v) const { return color_[u][slot(u, v)]; }

  void set(int u, int v, int c) {
    color_[u][slot(u, v)] = c;
    color_[v][slot(v, u)] = c;
  }

  bool is_free(int v, int c) const {
    return std::find(color_[v].begin(), color_[v].end(), c) == color_[v].end();
  }

  int any_free(int v) const {
    for (int c = 1; c <= colors_; ++c) {
      if (is_free(v, c)) return c;
    }
    return 0;
  }

  // Neighbor of v across the edge colored c, or -1.
  int across(int v, int c) const {
    const auto& nb = g_.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (color_[v][i] == c) return nb[i];
    }
    return -1;
  }

 private:
  std::size_t slot(int u, int v) const {
    const auto& nb = g_.neighbors(u);
    return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) -
                                    nb.begin());
  }

  const StaticGraph& g_;
  int colors_;
  std::vector<std::vector<int>> color_;
};

}  // namespace

std::map<StaticEdge, int> four_edge_coloring_cubic(const StaticGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw PreconditionError("four_edge_coloring_cubic: vertex " +
                              std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)));
    }
  }
  EdgeColoring col(g, 4);
  for (const auto& edge : g.edges()) {
    const int u = edge.u;
    // Maximal fan of u starting at edge.v.
    std::vector<int> fan{edge.v};
    for (bool grown = true; grown;) {
      grown = false;
      for (int w : g.neighbors(u)) {
        if (std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
        int c = col.get(u, w);
        if (c != 0 && col.is_free(fan.back(), c)) {
          fan.push_back(w);
          grown = true;
          break;
        }
      }
    }
    const int c = col.any_free(u);
    const int d = col.any_free(fan.back());

    // Swap c and d along the maximal cd-path starting at u (its first edge
    // has color d because c is free on u).
    if (c != d) {
      std::vector<std::pair<int, int>> path;
      int cur = u;
      int want = d;
      int prev = -1;
      for (;;) {
        int next = col.across(cur, want);
        if (next == -1 || next == prev) break;
        path.emplace_back(cur, next);
        prev = cur;
        cur = next;
        want = (want == d) ? c : d;
        if (cur == u) break;
      }
      for (auto [a, b] : path) col.set(a, b, col.get(a, b) == c ? d : c);
    }

    // Longest valid fan prefix ending at a vertex where d is free.
    std::size_t stop = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !col.is_free(fan[i - 1], col.get(u, fan[i]))) break;
      if (col.is_free(fan[i], d)) {
        stop = i;
        break;
      }
    }
    if (stop == fan.size()) {
      throw std::logic_error("fan rotation failed to find a free color");
    }
    for (std::size_t i = 0; i < stop; ++i) {
      col.set(u, fan[i], col.get(u, fan[i + 1]));
    }
    col.set(u, fan[stop], d);
  }

  std::map<StaticEdge, int> out;
  for (const auto& e : g.edges()) out[e] = col.get(e.u, e.v);
  return out;
}

StaticGraph diagonal_grid(int n, int m) {
  if (n < 1 || m < 1) throw PreconditionError("grid dimensions must be positive");
  StaticGraph g(n * m);
  auto id = [m](int i, int j) { return i * m + j; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j + 1 < m) g.add_edge(id(i, j), id(i, j + 1));
      if (i + 1 < n) g.add_edge(id(i, j), id(i + 1, j));
      if (i + 1 < n && j + 1 < m) g.add_edge(id(i, j), id(i + 1, j + 1));
      if (i + 1 < n && j > 0) g.add_edge(id(i, j), id(i + 1, j - 1));
    }
  }
  return g;
}

StaticGraph subdivide_twice(const StaticGraph& g, StaticEdge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw ConsistencyError("edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "} not in graph");
  }
  const int n = g.vertex_count();
  StaticGraph out(n + 2);
  for (const auto& f : g.edges()) {
    if (f != e) out.add_edge(f.u, f.v);
  }
  out.add_edge(e.u, n);
  out.add_edge(n, n + 1);
  out.add_edge(n + 1, e.v);
  return out;
}

bool is_independent_set(const StaticGraph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.has_edge(vertices[i], vertices[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_matching(const StaticGraph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& e : m.pairs) {
    if (!g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace tmatch
