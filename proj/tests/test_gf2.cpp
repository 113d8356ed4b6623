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

#include <random>
#include <set>

#include "doctest.h"
#include "qrmcube/cube.hpp"
#include "qrmcube/gf2.hpp"
#include "qrmcube/qrm.hpp"

using namespace qrmcube;

namespace {

F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  F2Matrix m(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    BitVec v(cols);
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1) v.set(c);
    m.push_row(std::move(v));
  }
  return m;
}

// Independent rank oracle: the span of the rows has 2^rank elements.
std::size_t span_size_log2(const F2Matrix& m) {
  std::set<std::string> words;
  std::size_t n = m.nrows();
  REQUIRE(n <= 16);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    BitVec acc(m.ncols);
    for (std::size_t r = 0; r < n; ++r)
      if ((mask >> r) & 1) acc ^= m.rows[r];
    words.insert(acc.str());
  }
  std::size_t lg = 0;
  while ((std::size_t(1) << lg) < words.size()) ++lg;
  REQUIRE((std::size_t(1) << lg) == words.size());
  return lg;
}

}  // namespace

TEST_CASE("bitvec basics") {
  BitVec v = BitVec::from_string("01011");
  CHECK(v.size() == 5);
  CHECK(v.weight() == 3);
  CHECK(v.str() == "01011");
  CHECK(v.get(1));
  CHECK_FALSE(v.get(0));
  CHECK(v.lowest_set() == 1);
  CHECK(v.without_bit(1).str() == "0011");
  CHECK_THROWS_AS(v ^= BitVec(4), dimension_error);
}

TEST_CASE("inner product") {
  BitVec a(4), b(4);
  a.set(0);
  b.set(0);
  CHECK(inner(a, b) == 1);
  b.set(0, false);
  b.set(2);
  CHECK(inner(a, b) == 0);
  CHECK_THROWS_AS(inner(a, BitVec(5)), dimension_error);
  // 5-subcube and 3-subcube of the 6-cube meeting in 4 vertices commute
  Subcube s5 = make_subcube(6, 0, 0b011111);
  Subcube s3 = make_subcube(6, 0, 0b100011);
  BitVec i5 = subcube_indicator(s5), i3 = subcube_indicator(s3);
  BitVec both(64);
  for (std::size_t i = 0; i < 64; ++i)
    if (i5.get(i) && i3.get(i)) both.set(i);
  CHECK(both.weight() == 4);
  CHECK(inner(i5, i3) == 0);
}

TEST_CASE("rank basics and paper matrices") {
  F2Matrix id3(3);
  for (int i = 0; i < 3; ++i) {
    BitVec v(3);
    v.set(std::size_t(i));
    id3.push_row(v);
  }
  CHECK(rank(id3) == 3);
  CHECK(rank(F2Matrix(5)) == 0);
  CHECK(rank(monomial_generators({4, 2})) == 11);  // 11 rows, rank 11
  F2Matrix fixed = rm_generators({4, 2});          // 24 rows, rank 11
  CHECK(fixed.nrows() == 24);
  CHECK(rank(fixed) == 11);
}

TEST_CASE("rank invariances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    F2Matrix m = random_matrix(rng, 12, 20);
    std::size_t r = rank(m);
    F2Matrix shuffled = m;
    std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
    CHECK(rank(shuffled) == r);
    // appending combinations of existing rows changes nothing
    F2Matrix extended = m;
    BitVec combo(20);
    for (const BitVec& row : m.rows)
      if (rng() & 1) combo ^= row;
    extended.push_row(combo);
    CHECK(rank(extended) == r);
    // adding one row into another changes nothing
    F2Matrix added = m;
    added.rows[0] ^= added.rows[5];
    CHECK(rank(added) == r);
  }
}

TEST_CASE("rank against span-size oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    F2Matrix m = random_matrix(rng, 3 + trial % 8, 10);
    CHECK(rank(m) == span_size_log2(m));
  }
}

TEST_CASE("row space equality") {
  F2Matrix a = monomial_generators({4, 2});
  F2Matrix b = a;
  std::reverse(b.rows.begin(), b.rows.end());
  CHECK(row_space_equal(a, b));
  CHECK(row_space_equal(monomial_generators({4, 2}), rm_generators({4, 2})));
  CHECK_FALSE(row_space_equal(rm_generators({4, 1}), rm_generators({4, 2})));
  CHECK_THROWS_AS(row_space_equal(a, F2Matrix(5)), dimension_error);
}

TEST_CASE("row space equality is an equivalence relation") {
  std::mt19937 rng(19);
  // three presentations of one space plus an unrelated one
  F2Matrix a = random_matrix(rng, 8, 14);
  F2Matrix b = a;
  std::shuffle(b.rows.begin(), b.rows.end(), rng);
  b.rows[0] ^= b.rows[3];
  F2Matrix c = b;
  BitVec combo(14);
  for (const BitVec& row : a.rows)
    if (rng() & 1) combo ^= row;
  c.push_row(combo);
  F2Matrix d = random_matrix(rng, 8, 14);

  CHECK(row_space_equal(a, a));                      // reflexive
  CHECK(row_space_equal(a, b) == row_space_equal(b, a));  // symmetric
  if (row_space_equal(a, b) && row_space_equal(b, c))     // transitive
    CHECK(row_space_equal(a, c));
  if (row_space_equal(a, b) && !row_space_equal(a, d))
    CHECK_FALSE(row_space_equal(b, d));
}

TEST_CASE("row space membership") {
  F2Matrix m = rm_generators({4, 2});
  CHECK(in_row_space(BitVec(16), m));
  CHECK(in_row_space(m.rows[0] ^ m.rows[5], m));
  CHECK_THROWS_AS(in_row_space(BitVec(15), m), dimension_error);
  CssCode big = big_unfolded();
  CHECK(in_row_space(subcube_indicator(make_subcube(6, 0, 0b000111)), big.hz));
}

TEST_CASE("membership matches the rank-append oracle") {
  std::mt19937 rng(13);
  F2Matrix m = random_matrix(rng, 9, 18);
  for (int trial = 0; trial < 40; ++trial) {
    BitVec v(18);
    for (std::size_t c = 0; c < 18; ++c)
      if (rng() & 1) v.set(c);
    F2Matrix appended = m;
    appended.push_row(v);
    bool oracle = rank(appended) == rank(m);
    CHECK(in_row_space(v, m) == oracle);
  }
}

TEST_CASE("kernel basis") {
  F2Matrix id4(4);
  for (int i = 0; i < 4; ++i) {
    BitVec v(4);
    v.set(std::size_t(i));
    id4.push_row(v);
  }
  CHECK(kernel_basis(id4).nrows() == 0);

  F2Matrix ones(4);
  BitVec all(4);
  for (int i = 0; i < 4; ++i) all.set(std::size_t(i));
  ones.push_row(all);
  F2Matrix k = kernel_basis(ones);
  CHECK(k.nrows() == 3);
  CHECK(rank(k) == 3);
  for (const BitVec& row : k.rows) CHECK(row.weight() % 2 == 0);

  CssCode q612 = qrm_code({6, 1, 2});
  CHECK(kernel_basis(q612.hx).nrows() == 57);
}

TEST_CASE("rank nullity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    F2Matrix m = random_matrix(rng, 5 + trial, 24);
    F2Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.nrows() == 24);
    for (const BitVec& x : k.rows)
      for (const BitVec& row : m.rows) CHECK(inner(row, x) == 0);
  }
}

TEST_CASE("matrix text round trip") {
  F2Matrix m = monomial_generators({3, 1});
  F2Matrix back = parse_matrix(format_matrix(m));
  CHECK(back.ncols == m.ncols);
  REQUIRE(back.nrows() == m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i) CHECK(back.rows[i] == m.rows[i]);
  CHECK_THROWS(parse_matrix("010\n01"));
}
