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

#ifndef TMATCH_MATROID_HPP_
#define TMATCH_MATROID_HPP_

#include <cstdint>
#include <vector>

namespace tmatch {

class PrimeField {
 public:
  PrimeField() = default;
  // Throws PreconditionError unless p is prime and below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Multiplicative inverse; throws PreconditionError for zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix() = default;
  PrimeFieldMatrix(PrimeField field, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint32_t at(int r, int c) const { return data_[index(r, c)]; }
  // Stores x reduced into [0, p).
  void set(int r, int c, std::int64_t x) { data_[index(r, c)] = field_.reduce(x); }

  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

 private:
  std::size_t index(int r, int c) const;

  PrimeField field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> data_;
};

bool is_prime(std::uint64_t n);

// Smallest prime p with s <= p (and hence p <= 2s).
std::uint32_t find_prime_in_range(std::uint32_t s);

// r x s matrix whose column j is (1, x_j, ..., x_j^(r-1)) with x_j = j mod p
// for j = 1..s. Any r of its columns are linearly independent.
PrimeFieldMatrix vandermonde_representation(int r, int s, const PrimeField& field);

// Rank over F_p of the given columns.
int gaussian_rank(const PrimeFieldMatrix& m, const std::vector<int>& columns);

// Binomial coefficient saturated at UINT64_MAX.
std::uint64_t binomial(int n, int k);

struct WeightedSet {
  std::vector<int> elements;  // column indices
  std::uint64_t weight = 0;

  friend bool operator==(const WeightedSet&, const WeightedSet&) = default;
};

struct WeightedSetFamily {
  std::vector<WeightedSet> sets;
};

struct RepFamilyRequest {
  int alpha = 0;
  int beta = 0;
  int gamma = 1;
  PrimeFieldMatrix representation;  // rank() x |U|
  std::vector<WeightedSet> family;  // sets of size alpha * gamma

  int rank() const { return (alpha + beta) * gamma; }
  int set_size() const { return alpha * gamma; }
  int slack() const { return beta * gamma; }
};

inline constexpr std::uint64_t kDefaultMinorCap = 1'000'000;

// Maximal minors of the representation restricted to columns x, indexed by
// the row subsets of size |x| in lexicographic order. Throws
// ResourceLimitError when the vector would be longer than cap.
std::vector<std::uint32_t> minor_vector(const RepFamilyRequest& request,
                                        const std::vector<int>& x,
                                        std::uint64_t cap = kDefaultMinorCap);

// Max (beta*gamma)-representative subfamily of the request's family. Sets are
// ordered by weight (descending, ties in input order) and a set is kept when
// its minor vector is not in the span of the minor vectors kept before it.
// Throws ConsistencyError for a malformed or dependent input set and
// ResourceLimitError when C(r, alpha*gamma) exceeds cap.
WeightedSetFamily representative_family(const RepFamilyRequest& request,
                                        std::uint64_t cap = kDefaultMinorCap);

}  // namespace tmatch

#endif  // TMATCH_MATROID_HPP_
