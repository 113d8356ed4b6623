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

#include <set>

#include "doctest.h"
#include "qrmcube/distance.hpp"
#include "qrmcube/registry.hpp"

using namespace qrmcube;

TEST_CASE("affine counts") {
  CHECK(affine_count(2, 2) == 1);
  CHECK(affine_count(6, 2) == 10416);
  CHECK(affine_count(7, 3) == 188976);
  CHECK(closed_form_count(4, 2) == 140);
  CHECK(closed_form_count(6, 4) == 10416);
  CHECK(closed_form_count(5, 0) == 1);
  for (int m = 0; m <= 7; ++m)
    for (int r = 1; r <= m; ++r)
      CHECK(affine_count(m, m - r) == closed_form_count(m, r));
}

TEST_CASE("enumeration visits each subspace once") {
  for (int m = 0; m <= 6; ++m)
    for (int k = 0; k <= m; ++k) {
      std::set<std::string> seen;
      std::uint64_t visits = 0;
      for_each_affine(m, k, [&](const AffineSubspace& s) {
        ++visits;
        seen.insert(s.indicator().str());
        CHECK(s.indicator().weight() == (std::size_t(1) << k));
      });
      CHECK(visits == affine_count(m, k));
      CHECK(seen.size() == visits);
    }
}

TEST_CASE("census counts match the closed form everywhere") {
  // also exercises the per-subspace codeword assertion inside
  for (int m = 1; m <= 7; ++m)
    for (int r = 1; r <= m; ++r) {
      WeightCensus c = min_weight_words({m, r});
      CHECK(*c.d == (1 << (m - r)));
      CHECK(c.count == closed_form_count(m, r));
    }
}

TEST_CASE("minimum weight censuses") {
  WeightCensus c42 = min_weight_words({4, 2});
  CHECK(*c42.d == 4);
  CHECK(c42.count == 140);

  WeightCensus c74 = min_weight_words({7, 4});
  CHECK(*c74.d == 8);
  CHECK(c74.count == 188976);

  WeightCensus c31 = min_weight_words({3, 1});
  CHECK(*c31.d == 4);
  CHECK(c31.count == 14);
  WeightCensus b31 = brute_force_census(rm_generators({3, 1}));
  CHECK(b31.d == c31.d);
  CHECK(b31.count == c31.count);
}

TEST_CASE("brute force censuses") {
  WeightCensus b42 = brute_force_census(rm_generators({4, 2}));
  CHECK(*b42.d == 4);
  CHECK(b42.count == 140);

  WeightCensus b41 = brute_force_census(rm_generators({4, 1}));
  CHECK(*b41.d == 8);
  CHECK(b41.count == 30);

  WeightCensus z = brute_force_census(F2Matrix(10));
  CHECK_FALSE(z.d.has_value());
  CHECK(z.count == 0);

  F2Matrix big(30);
  for (int i = 0; i < 27; ++i) {
    BitVec v(30);
    v.set(std::size_t(i));
    big.push_row(v);
  }
  CHECK_THROWS_AS(brute_force_census(big), budget_error);
}

TEST_CASE("punctured censuses") {
  WeightCensus small = punctured_min_logicals(code_by_label("small-unfolded"));
  CHECK(*small.d == 3);
  CHECK(small.count == 35);

  // the whole punctured normalizer agrees at small size
  WeightCensus brute = nontrivial_logical_census(code_by_label("small-unfolded"));
  CHECK(brute.d == small.d);
  CHECK(brute.count == small.count);

  WeightCensus p722 = punctured_min_logicals(code_by_label("qrm722-punctured"));
  CHECK(*p722.d == 7);
  CHECK(p722.count == 11811);

  CHECK_THROWS_AS(punctured_min_logicals(code_by_label("qrm411")),
                  std::invalid_argument);
}

TEST_CASE("weight-two logicals of the eight-qubit code") {
  WeightCensus c = nontrivial_logical_census(code_by_label("qrm301"));
  CHECK(*c.d == 2);
  CHECK(c.count == 28);
}

TEST_CASE("weight-four split of the big unfolded code") {
  auto [trivial, nontrivial] = classify_big_unfolded_w4();
  CHECK(trivial == 2160);
  CHECK(nontrivial == 8256);
}

TEST_CASE("no lighter logicals in the big unfolded code") {
  // exhaustive over all supports of weight <= 3
  const CssCode& big = code_by_label("big-unfolded");
  EchelonForm hx(big.hx);
  EchelonForm hz(big.hz);
  std::uint64_t found = 0;
  auto consider = [&](const BitVec& v) {
    for (const BitVec& row : hx.rows())
      if (inner(v, row)) return;
    if (!hz.contains(v)) ++found;
  };
  for (int a = 0; a < 64; ++a) {
    BitVec va(64);
    va.set(std::size_t(a));
    consider(va);
    for (int b = a + 1; b < 64; ++b) {
      BitVec vb = va;
      vb.set(std::size_t(b));
      consider(vb);
      for (int c = b + 1; c < 64; ++c) {
        BitVec vc = vb;
        vc.set(std::size_t(c));
        consider(vc);
      }
    }
  }
  CHECK(found == 0);
}

TEST_CASE("distance kernels match their serial references") {
  WeightCensus s = min_weight_words({6, 4}, serial_policy);
  WeightCensus p = min_weight_words({6, 4}, parallel_policy);
  CHECK(s.d == p.d);
  CHECK(s.count == p.count);
  CHECK(s.count == 10416);

  F2Matrix g = rm_generators({5, 2});
  WeightCensus bs = brute_force_census(g, serial_policy);
  WeightCensus bp = brute_force_census(g, parallel_policy);
  CHECK(bs.d == bp.d);
  CHECK(bs.count == bp.count);

  CHECK(classify_big_unfolded_w4(serial_policy) ==
        classify_big_unfolded_w4(parallel_policy));

  WeightCensus qs =
      punctured_min_logicals(code_by_label("qrm722-punctured"), serial_policy);
  WeightCensus qp = punctured_min_logicals(code_by_label("qrm722-punctured"),
                                           parallel_policy);
  CHECK(qs.count == qp.count);
}

TEST_CASE("census json") {
  WeightCensus c = min_weight_words({4, 2});
  std::string j = census_to_json(c);
  CHECK(j.find("\"count\": 140") != std::string::npos);
  CHECK(j.find("affine-enumeration") != std::string::npos);
}
