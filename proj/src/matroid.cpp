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

#include "tmatch/matroid.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "tmatch/errors.hpp"

namespace tmatch {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("field modulus " + std::to_string(p) + " is not a usable prime");
  }
}

std::uint32_t PrimeField::reduce(std::int64_t x) const {
  const std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw PreconditionError("zero has no inverse");
  return pow(a, p_ - 2);
}

PrimeFieldMatrix::PrimeFieldMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

std::size_t PrimeFieldMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return static_cast<std::size_t>(r) * cols_ + c;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t find_prime_in_range(std::uint32_t s) {
  if (s < 1) throw PreconditionError("s must be positive");
  std::uint32_t p = std::max<std::uint32_t>(s, 2);
  while (!is_prime(p)) ++p;
  return p;
}

PrimeFieldMatrix vandermonde_representation(int r, int s, const PrimeField& field) {
  if (r < 1) throw PreconditionError("rank must be positive");
  if (s < 0 || static_cast<std::uint64_t>(s) > field.modulus()) {
    throw PreconditionError("ground set larger than the field");
  }
  PrimeFieldMatrix m(field, r, s);
  for (int j = 0; j < s; ++j) {
    const std::uint32_t x = static_cast<std::uint32_t>((j + 1) % field.modulus());
    std::uint32_t power = 1;
    for (int i = 0; i < r; ++i) {
      m.set(i, j, power);
      power = field.mul(power, x);
    }
  }
  return m;
}

int gaussian_rank(const PrimeFieldMatrix& m, const std::vector<int>& columns) {
  const PrimeField& f = m.field();
  const int rows = m.rows();
  const int cols = static_cast<int>(columns.size());
  std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols));
  for (int c = 0; c < cols; ++c) {
    if (columns[c] < 0 || columns[c] >= m.cols()) {
      throw PreconditionError("column index out of range");
    }
    for (int r = 0; r < rows; ++r) a[r][c] = m.at(r, columns[c]);
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint32_t scale = f.inv(a[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint32_t factor = f.mul(a[r][c], scale);
      for (int cc = c; cc < cols; ++cc) {
        a[r][cc] = f.sub(a[r][cc], f.mul(factor, a[rank][cc]));
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t reduced = result / g;
    const std::uint64_t den = static_cast<std::uint64_t>(i) / g;
    if (reduced > kMax / num) return kMax;
    result = reduced * num / den;
  }
  return result;
}

namespace {

// Enumerates, for several column sets at once, the determinants of all
// square row-subset submatrices in lexicographic row-subset order. Each set
// keeps a reduced row echelon form of the rows chosen so far, so a leaf
// determinant costs O(k) and subtrees in which every set is already singular
// are skipped.
class MinorEnumerator {
 public:
  // visit(leaf_index, values) returns false to stop the enumeration.
  using Visitor =
      std::function<bool(std::uint64_t, const std::vector<std::uint32_t>&)>;

  MinorEnumerator(const PrimeFieldMatrix& a, std::vector<std::vector<int>> sets)
      : a_(a), f_(a.field()), sets_(std::move(sets)), r_(a.rows()) {
    k_ = sets_.empty() ? 0 : static_cast<int>(sets_.front().size());
    const std::size_t m = sets_.size();
    levels_.assign(std::max(k_, 1), Level{});
    for (auto& level : levels_) {
      level.rows.assign(m * k_ * k_, 0);
      level.pivots.assign(m * k_, 0);
      level.prod.assign(m, 1);
      level.alive.assign(m, 1);
    }
    values_.assign(m, 0);
    row_.assign(k_, 0);
  }

  void run(const Visitor& visit) {
    if (k_ == 0) {
      std::fill(values_.begin(), values_.end(), 1);
      visit(0, values_);
      return;
    }
    leaf_ = 0;
    stopped_ = false;
    descend(0, 0, visit);
  }

 private:
  struct Level {
    std::vector<std::uint32_t> rows;    // per set: k x k, first `depth` rows used
    std::vector<int> pivots;            // per set: k
    std::vector<std::uint32_t> prod;    // per set: product of pivot values
    std::vector<std::uint8_t> alive;    // per set: chosen rows independent
  };

  // `depth` rows are chosen; the next row index is at least `start`.
  void descend(int depth, int start, const Visitor& visit) {
    const std::size_t m = sets_.size();
    const Level& cur = levels_[depth];
    if (depth == k_ - 1) {
      leaf_level(depth, start, visit);
      return;
    }
    Level& next = levels_[depth + 1];
    for (int row = start; row <= r_ - (k_ - depth) && !stopped_; ++row) {
      bool any = false;
      for (std::size_t s = 0; s < m; ++s) {
        next.alive[s] = 0;
        if (!cur.alive[s]) continue;
        if (extend(cur, next, s, depth, row)) {
          next.alive[s] = 1;
          any = true;
        }
      }
      if (any) {
        descend(depth + 1, row + 1, visit);
      } else {
        leaf_ += binomial(r_ - 1 - row, k_ - depth - 1);
      }
    }
  }

  void load_row(std::size_t s, int row) {
    for (int c = 0; c < k_; ++c) row_[c] = a_.at(row, sets_[s][c]);
  }

  // Adds `row` to the echelon form of set s at `depth`, writing depth + 1.
  bool extend(const Level& cur, Level& next, std::size_t s, int depth, int row) {
    load_row(s, row);
    const std::size_t kk = static_cast<std::size_t>(k_) * k_;
    const std::uint32_t* src = &cur.rows[s * kk];
    const int* src_piv = &cur.pivots[s * k_];
    for (int j = 0; j < depth; ++j) {
      const std::uint32_t factor = row_[src_piv[j]];
      if (factor == 0) continue;
      for (int c = 0; c < k_; ++c) {
        row_[c] = f_.sub(row_[c], f_.mul(factor, src[j * k_ + c]));
      }
    }
    int pivot = -1;
    for (int c = 0; c < k_; ++c) {
      if (row_[c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) return false;
    const std::uint32_t lead = row_[pivot];
    const std::uint32_t scale = f_.inv(lead);
    for (int c = 0; c < k_; ++c) row_[c] = f_.mul(row_[c], scale);
    std::uint32_t* dst = &next.rows[s * kk];
    int* dst_piv = &next.pivots[s * k_];
    for (int j = 0; j < depth; ++j) {
      const std::uint32_t factor = src[j * k_ + pivot];
      for (int c = 0; c < k_; ++c) {
        dst[j * k_ + c] = factor == 0
                              ? src[j * k_ + c]
                              : f_.sub(src[j * k_ + c], f_.mul(factor, row_[c]));
      }
      dst_piv[j] = src_piv[j];
    }
    std::copy(row_.begin(), row_.end(), dst + depth * k_);
    dst_piv[depth] = pivot;
    next.prod[s] = f_.mul(cur.prod[s], lead);
    return true;
  }

  void leaf_level(int depth, int start, const Visitor& visit) {
    const std::size_t m = sets_.size();
    const Level& cur = levels_[depth];
    const std::size_t kk = static_cast<std::size_t>(k_) * k_;
    // Per set: the free column and the signed pivot product.
    std::vector<int> free_col(m, -1);
    std::vector<std::uint32_t> factor(m, 0);
    std::vector<int> order(k_);
    for (std::size_t s = 0; s < m; ++s) {
      if (!cur.alive[s]) continue;
      const int* piv = &cur.pivots[s * k_];
      std::vector<char> used(k_, 0);
      for (int j = 0; j < depth; ++j) used[piv[j]] = 1;
      int fc = 0;
      while (used[fc]) ++fc;
      free_col[s] = fc;
      for (int j = 0; j < depth; ++j) order[j] = piv[j];
      order[depth] = fc;
      int inversions = 0;
      for (int i = 0; i < k_; ++i) {
        for (int j = i + 1; j < k_; ++j) inversions += order[i] > order[j];
      }
      factor[s] = inversions % 2 ? f_.neg(cur.prod[s]) : cur.prod[s];
    }
    for (int row = start; row < r_ && !stopped_; ++row) {
      for (std::size_t s = 0; s < m; ++s) {
        values_[s] = 0;
        if (free_col[s] < 0) continue;
        const std::uint32_t* rows = &cur.rows[s * kk];
        const int* piv = &cur.pivots[s * k_];
        const int fc = free_col[s];
        std::uint32_t v = a_.at(row, sets_[s][fc]);
        for (int j = 0; j < depth; ++j) {
          const std::uint32_t b = a_.at(row, sets_[s][piv[j]]);
          if (b != 0) v = f_.sub(v, f_.mul(b, rows[j * k_ + fc]));
        }
        values_[s] = f_.mul(v, factor[s]);
      }
      if (!visit(leaf_, values_)) stopped_ = true;
      ++leaf_;
    }
  }

  const PrimeFieldMatrix& a_;
  PrimeField f_;
  std::vector<std::vector<int>> sets_;
  int r_ = 0;
  int k_ = 0;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> row_;
  std::uint64_t leaf_ = 0;
  bool stopped_ = false;
};

void check_cap(int r, int k, std::uint64_t cap) {
  const std::uint64_t width = binomial(r, k);
  if (width > cap) {
    throw ResourceLimitError("representative family needs C(" + std::to_string(r) + ", " +
                             std::to_string(k) + ") = " + std::to_string(width) +
                             " minor coordinates, above the cap of " + std::to_string(cap));
  }
}

std::vector<int> checked_set(const RepFamilyRequest& request, std::vector<int> x) {
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end()) {
    throw ConsistencyError("set has repeated elements");
  }
  for (int c : x) {
    if (c < 0 || c >= request.representation.cols()) {
      throw ConsistencyError("set element outside the ground set");
    }
  }
  return x;
}

void check_request(const RepFamilyRequest& request) {
  if (request.alpha < 0 || request.beta < 0 || request.gamma < 1) {
    throw PreconditionError("alpha, beta must be non-negative and gamma positive");
  }
  if (request.rank() < 1) throw PreconditionError("rank must be positive");
  if (request.representation.rows() != request.rank()) {
    throw PreconditionError("representation has " +
                            std::to_string(request.representation.rows()) +
                            " rows, expected " + std::to_string(request.rank()));
  }
}

}  // namespace

std::vector<std::uint32_t> minor_vector(const RepFamilyRequest& request,
                                        const std::vector<int>& x, std::uint64_t cap) {
  check_request(request);
  if (static_cast<int>(x.size()) != request.set_size()) {
    throw PreconditionError("set size differs from alpha * gamma");
  }
  const int r = request.rank();
  const int k = request.set_size();
  check_cap(r, k, cap);
  std::vector<std::uint32_t> out(binomial(r, k), 0);
  MinorEnumerator enumerator(request.representation, {checked_set(request, x)});
  enumerator.run([&](std::uint64_t leaf, const std::vector<std::uint32_t>& v) {
    out[leaf] = v[0];
    return true;
  });
  return out;
}

WeightedSetFamily representative_family(const RepFamilyRequest& request,
                                        std::uint64_t cap) {
  check_request(request);
  const int r = request.rank();
  const int k = request.set_size();
  check_cap(r, k, cap);
  WeightedSetFamily out;
  if (request.family.empty()) return out;

  std::vector<std::size_t> order(request.family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return request.family[a].weight > request.family[b].weight;
  });
  std::vector<std::vector<int>> sets;
  for (std::size_t idx : order) {
    const auto& x = request.family[idx].elements;
    if (static_cast<int>(x.size()) != k) {
      throw ConsistencyError("set size differs from alpha * gamma");
    }
    sets.push_back(checked_set(request, x));
    if (gaussian_rank(request.representation, sets.back()) != k) {
      throw ConsistencyError("family contains a dependent set");
    }
  }

  // Streams minor coordinates and maintains which sets (in weight order) are
  // linearly independent of the sets before them. For every set not yet
  // independent, coeff expresses its coordinates seen so far as a
  // combination of independent earlier sets.
  const PrimeField& f = request.representation.field();
  const std::size_t m = sets.size();
  std::vector<char> independent(m, 0);
  std::vector<std::vector<std::uint32_t>> coeff(m, std::vector<std::uint32_t>(m, 0));
  std::vector<std::size_t> kept;  // independent sets, ascending
  std::size_t pending = m;
  std::vector<std::uint32_t> residual(m, 0);

  MinorEnumerator enumerator(request.representation, sets);
  enumerator.run([&](std::uint64_t, const std::vector<std::uint32_t>& col) {
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (independent[i]) continue;
      std::uint32_t v = col[i];
      for (std::size_t j : kept) {
        if (j >= i) break;
        if (coeff[i][j] != 0 && col[j] != 0) v = f.sub(v, f.mul(coeff[i][j], col[j]));
      }
      residual[i] = v;
      if (v != 0 && first == m) first = i;
    }
    if (first == m) return true;
    const std::uint32_t inv_lead = f.inv(residual[first]);
    for (std::size_t i = first + 1; i < m; ++i) {
      if (independent[i] || residual[i] == 0) continue;
      const std::uint32_t factor = f.mul(residual[i], inv_lead);
      for (std::size_t j : kept) {
        if (j >= first) break;
        coeff[i][j] = f.sub(coeff[i][j], f.mul(factor, coeff[first][j]));
      }
      coeff[i][first] = f.add(coeff[i][first], factor);
    }
    independent[first] = 1;
    kept.insert(std::upper_bound(kept.begin(), kept.end(), first), first);
    return --pending > 0;
  });

  for (std::size_t i : kept) {
    out.sets.push_back({sets[i], request.family[order[i]].weight});
  }
  return out;
}

}  // namespace tmatch
