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

#ifndef TMATCH_FPT_K_HPP_
#define TMATCH_FPT_K_HPP_

#include <cstddef>
#include <vector>

#include "tmatch/matching.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// Time edges of the first delta-window [1, delta] that contain the
// first-window part of some maximum delta-temporal matching.
struct WindowKernel {
  std::vector<TimeEdge> kernel;  // canonical order
  int nu_bound = 0;              // matching number used in the 4*nu cutoff
};

// Kernel for the first delta-window. A maximum matching A of the underlying
// graph of g|[1, delta] selects the vertices; for each matched vertex v the
// earliest first-window appearance towards every neighbor is collected and,
// when there are more than 4*nu of them, only the 4*nu + 1 earliest are kept
// (ties by edge). nu is the matching number of the whole underlying graph.
WindowKernel first_window_kernel(const TemporalGraph& g, int delta);

// Replaces every member with t <= delta by the earliest appearance of its
// edge. Size and validity are preserved.
DeltaMatching exchange_to_earliest(const TemporalGraph& g, DeltaMatching m);

struct FptStats {
  std::size_t nodes = 0;      // recursive calls
  int max_depth = 0;          // deepest recursion level reached (root = 0)
};

struct FptDecision {
  bool yes = false;
  DeltaMatching witness;      // |witness| >= k when yes
};

// Search-tree decision for "is there a delta-temporal matching of size k?".
// Every kernel branch is explored until one succeeds.
FptDecision solve_fpt_k(const TemporalGraph& g, int delta, int k,
                        FptStats* stats = nullptr);

}  // namespace tmatch

#endif  // TMATCH_FPT_K_HPP_
