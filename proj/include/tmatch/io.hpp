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

#ifndef TMATCH_IO_HPP_
#define TMATCH_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tmatch/errors.hpp"
#include "tmatch/line_graph.hpp"
#include "tmatch/matching.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

class ParseError : public PreconditionError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Instance files: '#' comments, one header "p tg <n> <T>", then lines
// "e <u> <v> <t1> <t2> ..." with 1 <= u < v <= n and ascending labels.
TemporalGraph parse_instance(std::istream& in);
TemporalGraph parse_instance(std::string_view text);
std::string serialize_instance(const TemporalGraph& g);

// Matching files: '#' comments and lines "m <u> <v> <t>".
DeltaMatching parse_matching(std::istream& in, int delta);
DeltaMatching parse_matching(std::string_view text, int delta);
// "# size N" followed by the members sorted by (t, u, v).
std::string serialize_matching(const DeltaMatching& m);

// Cell files: '#' comments and lines "<row> <col>" (1-based).
std::vector<Cell> parse_cells(std::istream& in);
std::vector<Cell> parse_cells(std::string_view text);
std::string serialize_cells(const std::vector<Cell>& cells);

}  // namespace tmatch

#endif  // TMATCH_IO_HPP_
