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
#include "qrmcube/qrm.hpp"

using namespace qrmcube;

TEST_CASE("subcube indicator") {
  BitVec single = subcube_indicator(make_subcube(2, 0, 0));
  CHECK(single.weight() == 1);
  CHECK(single.get(0));

  // the edge with x2 = x3 = 1, x4 = 0 and x1 free
  Subcube edge = make_subcube(4, 0b0110, 0b0001);
  CHECK(subcube_indicator(edge) == poly_indicator(4, Poly::parse("X2X3(X4+1)")));

  BitVec full = subcube_indicator(make_subcube(6, 0, 0b111111));
  CHECK(full.weight() == 64);

  CHECK_THROWS_AS(make_subcube(4, 0b0001, 0b0001), std::invalid_argument);
}

TEST_CASE("poly indicator") {
  CHECK(poly_indicator(3, Poly{}).weight() == 8);

  BitVec v = poly_indicator(3, Poly::parse("X1(X3+1)"));
  CHECK(v.weight() == 2);
  CHECK(v.get(0b001));  // vertex 100
  CHECK(v.get(0b011));  // vertex 110

  BitVec sq = poly_indicator(4, Poly::parse("(X1+1)X2"));
  CHECK(sq.weight() == 4);
  for (std::uint32_t x : {0b0010u, 0b0110u, 0b1010u, 0b1110u}) CHECK(sq.get(x));

  CHECK_THROWS_AS(Poly::parse("X1X1"), std::invalid_argument);
  CHECK_THROWS_AS(poly_indicator(2, Poly::parse("X3")), std::invalid_argument);
}

TEST_CASE("poly and subcube routes agree") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 2 + int(rng() % 5);
    Poly p;
    for (int c = 1; c <= m; ++c)
      if (rng() & 1) p.factors.push_back({c, bool(rng() & 1)});
    CHECK(poly_indicator(m, p) == subcube_indicator(poly_subcube(m, p)));
  }
}

TEST_CASE("subcube enumeration") {
  CHECK(enumerate_subcubes(3, 1).size() == 12);
  CHECK(enumerate_subcubes(6, 2).size() == 240);
  CHECK(enumerate_subcubes(2, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_subcubes(3, 4), std::invalid_argument);

  for (int m = 0; m <= 5; ++m)
    for (int d = 0; d <= m; ++d) {
      auto subs = enumerate_subcubes(m, d);
      std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (const Subcube& s : subs) {
        seen.insert({s.base, s.typeset});
        CHECK(subcube_indicator(s).weight() == (std::size_t(1) << d));
      }
      CHECK(seen.size() == subs.size());
    }
}

TEST_CASE("translate") {
  Subcube sq = make_subcube(3, 0, 0b110);  // standard square of type {2,3}
  Subcube t = translate(sq, 1);
  CHECK(subcube_indicator(t) == poly_indicator(3, Poly::parse("X1")));
  CHECK(translate(t, 1) == sq);
  CHECK(translate(sq, 2) == sq);  // free coordinate
  CHECK_THROWS_AS(translate(sq, 4), std::invalid_argument);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 3 + int(rng() % 4);
    auto subs = enumerate_subcubes(m, int(rng() % (m + 1)));
    const Subcube& s = subs[rng() % subs.size()];
    int c = 1 + int(rng() % m);
    CHECK(translate(translate(s, c), c) == s);
    // translating permutes the indicator by flipping the coordinate bit
    BitVec before = subcube_indicator(s);
    BitVec after = subcube_indicator(translate(s, c));
    BitVec flipped(before.size());
    for (std::uint32_t v = 0; v < before.size(); ++v)
      if (before.get(v)) flipped.set(v ^ (std::uint32_t(1) << (c - 1)));
    CHECK(after == flipped);
  }
}

TEST_CASE("intersection matches indicator AND") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 3 + int(rng() % 3);
    auto d1 = int(rng() % (m + 1)), d2 = int(rng() % (m + 1));
    auto s1 = enumerate_subcubes(m, d1);
    auto s2 = enumerate_subcubes(m, d2);
    const Subcube& a = s1[rng() % s1.size()];
    const Subcube& b = s2[rng() % s2.size()];
    BitVec ia = subcube_indicator(a), ib = subcube_indicator(b);
    BitVec both(ia.size());
    for (std::size_t i = 0; i < ia.size(); ++i)
      if (ia.get(i) && ib.get(i)) both.set(i);
    auto isec = intersect(a, b);
    if (isec)
      CHECK(subcube_indicator(*isec) == both);
    else
      CHECK(both.is_zero());
  }
}

TEST_CASE("gray orders") {
  CHECK(gray_order(1) == std::vector<std::uint32_t>{0, 1});
  // tuples encoded little-endian: 00, 10, 11, 01
  CHECK(gray_order(2) == std::vector<std::uint32_t>{0, 1, 3, 2});
  // 000, 100, 110, 010, 011, 111, 101, 001
  CHECK(gray_order(3) == std::vector<std::uint32_t>{0, 1, 3, 2, 6, 7, 5, 4});
  CHECK_THROWS_AS(gray_order(4), std::invalid_argument);

  for (int k : {1, 2, 3}) {
    const auto& g = gray_order(k);
    CHECK(g.size() == (std::size_t(1) << k));
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      CHECK(std::popcount(g[i] ^ g[i + 1]) == 1);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(gray_position(k, g[i]) == int(i));
  }
}

TEST_CASE("edge families along the gray paths are free") {
  // The seven edges walked by the k=3 order, as polynomials.
  std::vector<const char*> fam{"(X2+1)(X3+1)", "X1(X3+1)", "X2(X3+1)",
                               "(X1+1)X2",     "X2X3",     "X1X3",
                               "(X2+1)X3"};
  F2Matrix m(8);
  for (const char* t : fam) m.push_row(poly_indicator(3, Poly::parse(t)));
  CHECK(rank(m) == 7);
  // and they are exactly the consecutive pairs of the order
  const auto& g = gray_order(3);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    BitVec edge(8);
    edge.set(g[i]);
    edge.set(g[i + 1]);
    CHECK(edge == m.rows[i]);
  }
}

TEST_CASE("subcube spaces have the classical dimensions") {
  for (int m = 0; m <= 7; ++m)
    for (int d = 0; d <= m; ++d) {
      F2Matrix all(std::size_t(1) << m);
      for (const Subcube& s : enumerate_subcubes(m, d))
        all.push_row(subcube_indicator(s));
      CHECK(rank(all) == rm_dimension({m, m - d}));
    }
}

TEST_CASE("subcube text form") {
  Subcube s = make_subcube(4, 0, 0b0101);
  CHECK(subcube_text(s) == "0000+<1,3>");
  CHECK(subcube_parse(4, "0000+<1,3>") == s);
  Subcube t = make_subcube(4, 0b0110, 0b0001);
  CHECK(subcube_text(t) == "0110+<1>");
  CHECK(subcube_parse(4, subcube_text(t)) == t);
}
