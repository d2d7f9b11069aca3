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

#ifndef TMATCH_ORACLE_HPP_
#define TMATCH_ORACLE_HPP_

#include <cstddef>

#include "tmatch/matching.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

struct OracleConfig {
  // Largest number of time edges solve_exact accepts.
  std::size_t budget = 40;
};

// Maximum delta-temporal matching by exhaustive branch and bound over the
// time edges. The witness is deterministic. Throws ResourceLimitError above
// the configured budget.
DeltaMatching solve_exact(const TemporalGraph& g, int delta,
                          const OracleConfig& config = {});

// Maximum delta-temporal matching of a graph whose labels all fit in one
// interval of length at most delta: a maximum matching of the underlying
// graph with every edge taken at its earliest label. Throws
// PreconditionError when the labels span more than delta slots.
DeltaMatching solve_full_window(const TemporalGraph& g, int delta);

}  // namespace tmatch

#endif  // TMATCH_ORACLE_HPP_
