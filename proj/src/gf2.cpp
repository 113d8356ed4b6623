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

#include "qrmcube/gf2.hpp"

#include <algorithm>
#include <bit>

namespace qrmcube {

BitVec BitVec::from_string(std::string_view s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw std::invalid_argument("BitVec::from_string: expected '0'/'1'");
  }
  return v;
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (std::uint64_t x : w_) w += std::popcount(x);
  return w;
}

bool BitVec::is_zero() const {
  for (std::uint64_t x : w_)
    if (x) return false;
  return true;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw dimension_error("BitVec xor: length mismatch");
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

std::size_t BitVec::lowest_set() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
  return npos;
}

BitVec BitVec::without_bit(std::size_t pos) const {
  if (pos >= n_) throw dimension_error("BitVec::without_bit: out of range");
  BitVec out(n_ - 1);
  for (std::size_t i = 0, j = 0; i < n_; ++i) {
    if (i == pos) continue;
    if (get(i)) out.set(j);
    ++j;
  }
  return out;
}

std::string BitVec::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

int inner(const BitVec& u, const BitVec& v) {
  if (u.size() != v.size()) throw dimension_error("inner: length mismatch");
  std::uint64_t acc = 0;
  auto uw = u.words(), vw = v.words();
  for (std::size_t k = 0; k < uw.size(); ++k)
    acc ^= std::uint64_t(std::popcount(uw[k] & vw[k]));
  return int(acc & 1);
}

F2Matrix::F2Matrix(std::size_t ncols, std::vector<BitVec> rows)
    : ncols(ncols), rows(std::move(rows)) {
  for (const BitVec& r : this->rows)
    if (r.size() != ncols)
      throw dimension_error("F2Matrix: row length mismatch");
}

void F2Matrix::push_row(BitVec v) {
  if (v.size() != ncols) throw dimension_error("F2Matrix: row length mismatch");
  rows.push_back(std::move(v));
}

EchelonForm::EchelonForm(const F2Matrix& m) : ncols_(m.ncols) {
  for (const BitVec& r : m.rows) insert(r);
}

BitVec EchelonForm::reduce(BitVec v) const {
  if (v.size() != ncols_) throw dimension_error("EchelonForm: length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (v.get(pivots_[k])) v ^= rows_[k];
  return v;
}

bool EchelonForm::insert(BitVec v) {
  v = reduce(std::move(v));
  std::size_t p = v.lowest_set();
  if (p == BitVec::npos) return false;
  // Clear the new pivot from earlier rows so the form stays reduced.
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k].get(p)) rows_[k] ^= v;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = std::size_t(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::size_t rank(const F2Matrix& m) { return EchelonForm(m).rank(); }

bool row_space_equal(const F2Matrix& a, const F2Matrix& b) {
  if (a.ncols != b.ncols)
    throw dimension_error("row_space_equal: column count mismatch");
  std::size_t ra = rank(a);
  std::size_t rb = rank(b);
  if (ra != rb) return false;
  return rank(stack(a, b)) == ra;
}

bool in_row_space(const BitVec& v, const F2Matrix& m) {
  if (v.size() != m.ncols)
    throw dimension_error("in_row_space: length mismatch");
  return EchelonForm(m).contains(v);
}

F2Matrix kernel_basis(const F2Matrix& m) {
  EchelonForm e(m);
  const auto& pivots = e.pivots();
  F2Matrix out(m.ncols);
  std::vector<bool> is_pivot(m.ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec x(m.ncols);
    x.set(f);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (e.rows()[k].get(f)) x.set(pivots[k]);
    out.push_row(std::move(x));
  }
  return out;
}

F2Matrix stack(const F2Matrix& a, const F2Matrix& b) {
  if (a.ncols != b.ncols) throw dimension_error("stack: column count mismatch");
  F2Matrix out(a.ncols);
  out.rows = a.rows;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  return out;
}

F2Matrix drop_column(const F2Matrix& m, std::size_t pos) {
  if (pos >= m.ncols) throw dimension_error("drop_column: out of range");
  F2Matrix out(m.ncols - 1);
  for (const BitVec& r : m.rows) out.push_row(r.without_bit(pos));
  return out;
}

F2Matrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) return F2Matrix(0);
  F2Matrix out(lines[0].size());
  for (auto line : lines) {
    if (line.size() != out.ncols)
      throw std::invalid_argument("parse_matrix: ragged rows");
    out.push_row(BitVec::from_string(line));
  }
  return out;
}

std::string format_matrix(const F2Matrix& m) {
  std::string s;
  for (const BitVec& r : m.rows) {
    s += r.str();
    s += '\n';
  }
  return s;
}

}  // namespace qrmcube
