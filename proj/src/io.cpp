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

#include "tmatch/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace tmatch {

ParseError::ParseError(std::size_t line, const std::string& message)
    : PreconditionError("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    Line line{number, {}};
    std::istringstream words(text);
    for (std::string w; words >> w;) line.tokens.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

long long to_int(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, std::string("missing ") + what);
  }
  const std::string& token = line.tokens[index];
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < -(1LL << 31) ||
      value >= (1LL << 31)) {
    throw ParseError(line.number, std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, "expected " + std::to_string(n) + " fields, found " +
                                      std::to_string(line.tokens.size()));
  }
}

}  // namespace

TemporalGraph parse_instance(std::istream& in) {
  const std::vector<Line> lines = read_lines(in);
  if (lines.empty()) throw ParseError(0, "missing header 'p tg <n> <T>'");
  const Line& header = lines.front();
  if (header.tokens.size() < 2 || header.tokens[0] != "p" || header.tokens[1] != "tg") {
    throw ParseError(header.number, "expected header 'p tg <n> <T>'");
  }
  expect_arity(header, 4);
  const long long n = to_int(header, 2, "vertex count");
  const long long lifetime = to_int(header, 3, "lifetime");
  if (n < 1) throw ParseError(header.number, "vertex count must be positive");
  if (lifetime < 1) throw ParseError(header.number, "lifetime must be positive");

  std::vector<LabeledEdge> edges;
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "p") throw ParseError(line.number, "duplicate header");
    if (line.tokens[0] != "e") {
      throw ParseError(line.number, "unknown record '" + line.tokens[0] + "'");
    }
    const long long u = to_int(line, 1, "endpoint");
    const long long v = to_int(line, 2, "endpoint");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || v > n || u > n || v < 1) {
      throw ParseError(line.number, "endpoint outside [1, " + std::to_string(n) + "]");
    }
    if (u > v) throw ParseError(line.number, "endpoints must satisfy u < v");
    if (!seen.emplace(u, v).second) {
      throw ParseError(line.number, "duplicate edge {" + std::to_string(u) + ", " +
                                        std::to_string(v) + "}");
    }
    if (line.tokens.size() < 4) throw ParseError(line.number, "edge without labels");
    LabeledEdge edge{static_cast<Vertex>(u), static_cast<Vertex>(v), {}};
    for (std::size_t k = 3; k < line.tokens.size(); ++k) {
      const long long t = to_int(line, k, "label");
      if (t < 1 || t > lifetime) {
        throw ParseError(line.number, "label " + std::to_string(t) + " outside [1, " +
                                          std::to_string(lifetime) + "]");
      }
      if (!edge.labels.empty() && t <= edge.labels.back()) {
        throw ParseError(line.number, "labels must be strictly ascending");
      }
      edge.labels.push_back(static_cast<TimeSlot>(t));
    }
    edges.push_back(std::move(edge));
  }
  return TemporalGraph(static_cast<int>(n), static_cast<int>(lifetime), std::move(edges));
}

TemporalGraph parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const TemporalGraph& g) {
  std::ostringstream out;
  out << "p tg " << g.vertex_count() << ' ' << g.lifetime() << '\n';
  for (const auto& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    for (TimeSlot t : e.labels) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

DeltaMatching parse_matching(std::istream& in, int delta) {
  DeltaMatching m{delta, {}};
  for (const Line& line : read_lines(in)) {
    if (line.tokens[0] != "m") {
      throw ParseError(line.number, "unknown record '" + line.tokens[0] + "'");
    }
    expect_arity(line, 4);
    const long long u = to_int(line, 1, "endpoint");
    const long long v = to_int(line, 2, "endpoint");
    const long long t = to_int(line, 3, "label");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || t < 1) throw ParseError(line.number, "values must be positive");
    m.members.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v),
                           static_cast<TimeSlot>(t));
  }
  m.normalize();
  return m;
}

DeltaMatching parse_matching(std::string_view text, int delta) {
  std::istringstream in{std::string(text)};
  return parse_matching(in, delta);
}

std::string serialize_matching(const DeltaMatching& m) {
  DeltaMatching sorted = m;
  sorted.normalize();
  std::ostringstream out;
  out << "# size " << sorted.size() << '\n';
  for (const auto& e : sorted.members) {
    out << "m " << e.u << ' ' << e.v << ' ' << e.t << '\n';
  }
  return out.str();
}

std::vector<Cell> parse_cells(std::istream& in) {
  std::vector<Cell> cells;
  std::set<Cell> seen;
  for (const Line& line : read_lines(in)) {
    expect_arity(line, 2);
    const long long r = to_int(line, 0, "row");
    const long long c = to_int(line, 1, "column");
    if (r < 1 || c < 1) throw ParseError(line.number, "cell coordinates must be positive");
    const Cell cell{static_cast<int>(r), static_cast<int>(c)};
    if (!seen.insert(cell).second) throw ParseError(line.number, "duplicate cell");
    cells.push_back(cell);
  }
  return cells;
}

std::vector<Cell> parse_cells(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cells(in);
}

std::string serialize_cells(const std::vector<Cell>& cells) {
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  for (const auto& c : sorted) out << c.row << ' ' << c.col << '\n';
  return out.str();
}

}  // namespace tmatch
