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

#ifndef TMATCH_ERRORS_HPP_
#define TMATCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tmatch {

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input refers to objects that are not present (an edge missing from a
// graph, a time edge missing from a temporal graph, ...).
class ConsistencyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size budget (oracle time edges, representative-family
// dimension, ...) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tmatch

#endif  // TMATCH_ERRORS_HPP_
