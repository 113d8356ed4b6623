// Copyright qrmcube contributors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qrmcube {

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-length vector over F2, bit-packed into 64-bit words.
///
/// Bit i is column i. For cube-indexed vectors the vertex (x_1,...,x_m)
/// sits at column sum_i x_i * 2^(i-1), so x_1 is the least significant
/// coordinate and the printed form reads x_1...x_m left to right.
class BitVec {
 public:
  static constexpr std::size_t npos = ~std::size_t(0);

  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  // One character per bit, '0'/'1', leftmost character is column 0.
  static BitVec from_string(std::string_view s);

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  std::size_t weight() const;
  bool is_zero() const;

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVec&) const = default;

  /// Index of the lowest set bit, npos if zero.
  std::size_t lowest_set() const;

  /// Copy with bit `pos` removed and higher bits shifted down.
  BitVec without_bit(std::size_t pos) const;

  std::string str() const;
  std::span<const std::uint64_t> words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Parity of |supp(u) ∩ supp(v)|.
int inner(const BitVec& u, const BitVec& v);

/// Row list over F2; rows may be linearly dependent.
struct F2Matrix {
  std::size_t ncols = 0;
  std::vector<BitVec> rows;

  F2Matrix() = default;
  explicit F2Matrix(std::size_t ncols) : ncols(ncols) {}
  F2Matrix(std::size_t ncols, std::vector<BitVec> rows);

  std::size_t nrows() const { return rows.size(); }
  void push_row(BitVec v);
};

/// Reduced row echelon form of a row space, with deterministic pivoting:
/// the pivot of a row is its lowest set column, and rows are kept sorted
/// by pivot, so equal row spaces always produce identical forms.
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t ncols) : ncols_(ncols) {}
  explicit EchelonForm(const F2Matrix& m);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after eliminating all pivots.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(BitVec v);

 private:
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const F2Matrix& m);

/// True iff rowspace(a) == rowspace(b); checked as
/// rank(a) == rank(b) == rank(a stacked on b).
bool row_space_equal(const F2Matrix& a, const F2Matrix& b);

bool in_row_space(const BitVec& v, const F2Matrix& m);

/// Basis of {x : m.row * x = 0 for every row}, i.e. of the dual space.
/// rank(kernel) == ncols - rank(m).
F2Matrix kernel_basis(const F2Matrix& m);

F2Matrix stack(const F2Matrix& a, const F2Matrix& b);

/// Drops one column from every row; optionally keeps only rows with a 0
/// in that column (classical shortening keeps, puncturing drops nothing).
F2Matrix drop_column(const F2Matrix& m, std::size_t pos);

// Text format: one row per line, characters '0'/'1', no separators.
F2Matrix parse_matrix(std::string_view text);
std::string format_matrix(const F2Matrix& m);

}  // namespace qrmcube
