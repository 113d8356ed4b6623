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

#include "qrmcube/bases.hpp"

#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace qrmcube {

namespace {

std::vector<Poly> parse_all(const std::vector<const char*>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(Poly::parse(t));
  return out;
}

std::vector<Subcube> to_subcubes(int m, const std::vector<Poly>& polys) {
  std::vector<Subcube> out;
  out.reserve(polys.size());
  for (const Poly& p : polys) out.push_back(poly_subcube(m, p));
  return out;
}

// Edge families along the two planar axes, listed in the order their
// grid positions appear (leftmost edge first). The first-axis family is
// in X1..X3, the second-axis family in X4..X6 with the roles reversed,
// which is what makes the 7x7 product blocks tile the grid.
const std::vector<const char*> kEdges123{
    "(X2+1)(X3+1)", "X1(X3+1)", "X2(X3+1)", "(X1+1)X2",
    "X2X3",         "X1X3",     "(X2+1)X3",
};
const std::vector<const char*> kEdges456{
    "(X4+1)(X5+1)", "(X4+1)X6", "(X4+1)X5", "X5(X6+1)",
    "X4X5",         "X4X6",     "X4(X5+1)",
};

// Same construction one dimension down, for the 4-cube layout.
const std::vector<const char*> kEdges12{"(X2+1)", "X1", "X2"};
const std::vector<const char*> kEdges34{"(X3+1)", "X4", "X3"};

// Square families inside the two 3-coordinate groups.
const std::vector<const char*> kSquares123{"X2", "(X2+1)", "X3", "X1"};
const std::vector<const char*> kSquares456{"X5", "(X5+1)", "X4", "X6"};

const std::vector<const char*> kAppended611{
    // three upper-left squares
    "X2X4(X5+1)(X6+1)",
    "X1X4(X5+1)(X6+1)",
    "(X2+1)X4(X5+1)(X6+1)",
    // lower-left square
    "X3(X4+1)(X5+1)(X6+1)",
    // three upper-right squares
    "(X1+1)(X2+1)X3X5",
    "(X1+1)(X2+1)X3X6",
    "(X1+1)(X2+1)X3(X5+1)",
    // lower-right square
    "(X1+1)(X2+1)(X3+1)X4",
};

const std::vector<const char*> kRemoved611{
    "X3(X4+1)(X5+1)(X6+1)",
    "(X1+1)X2X5(X6+1)",
    "(X1+1)(X2+1)(X3+1)X4",
};

}  // namespace

F2Matrix basis_matrix(const NamedBasis& b) {
  F2Matrix m(std::size_t(1) << b.m);
  for (const Subcube& s : b.generators) m.push_row(subcube_indicator(s));
  return m;
}

BasisCheck verify_basis(const NamedBasis& b, const F2Matrix& target_hz) {
  BasisCheck c;
  F2Matrix gm = basis_matrix(b);
  c.generators = gm.nrows();
  c.rank = rank(gm);
  c.target_rank = rank(target_hz);
  c.independent = c.rank == c.generators;
  c.spans = c.rank == c.target_rank && row_space_equal(gm, target_hz);
  return c;
}

F2Matrix span_of_types(int m, int dim,
                       const std::vector<std::uint32_t>& types) {
  F2Matrix out(std::size_t(1) << m);
  for (std::uint32_t t : types) {
    if (std::popcount(t) != dim)
      throw std::invalid_argument("span_of_types: typeset size mismatch");
    std::uint32_t fixed = ((std::uint32_t(1) << m) - 1) & ~t;
    std::uint32_t b = 0;
    while (true) {
      out.push_row(subcube_indicator(Subcube{m, b, t}));
      if (b == fixed) break;
      b = (b - fixed) & fixed;
    }
  }
  return out;
}

F2Matrix v_space(int m, int k1, int i1, int i2, int k2,
                 std::uint32_t offsets) {
  if (!(1 <= k1 && k1 <= i1 && i1 < i2 && i2 <= k2 && k2 <= m))
    throw std::invalid_argument("v_space: need 1 <= k1 <= i1 < i2 <= k2 <= m");
  std::uint32_t all = (std::uint32_t(1) << m) - 1;
  std::uint32_t window = 0;
  for (int k = k1; k <= k2; ++k) window |= std::uint32_t(1) << (k - 1);
  std::uint32_t type = (std::uint32_t(1) << (i1 - 1)) |
                       (std::uint32_t(1) << (i2 - 1));
  std::uint32_t outside = all & ~window;
  // v_k = a_k + 1 outside the window.
  std::uint32_t fixed_out = ~offsets & outside;
  std::uint32_t inside_fixed = window & ~type;
  F2Matrix out(std::size_t(1) << m);
  std::uint32_t w = 0;
  while (true) {
    out.push_row(subcube_indicator(Subcube{m, fixed_out | w, type}));
    if (w == inside_fixed) break;
    w = (w - inside_fixed) & inside_fixed;
  }
  return out;
}

F2Matrix diagonal_space(const DiagonalParams& p) {
  if (p.f_max < 1 || p.f_max > p.m)
    throw std::invalid_argument("diagonal_space: f_max out of range");
  F2Matrix out(std::size_t(1) << p.m);
  for (int f = 1; f <= p.f_max; ++f) {
    for (int i1 = 1; i1 + p.m - f <= p.m; ++i1) {
      int i2 = i1 + p.m - f;
      if (i2 <= i1) continue;
      std::uint32_t off = 0;
      auto it = p.offsets.find({i1, i2});
      if (it != p.offsets.end()) off = it->second;
      F2Matrix part = v_space(p.m, i1, i1, i2, i2, off);
      for (auto& r : part.rows) out.push_row(std::move(r));
    }
  }
  return out;
}

std::vector<Poly> product_basis(const std::vector<Poly>& a,
                                const std::vector<Poly>& b) {
  std::uint32_t coords_a = 0, coords_b = 0;
  for (const Poly& p : a)
    for (const auto& f : p.factors) coords_a |= std::uint32_t(1) << f.coord;
  for (const Poly& p : b)
    for (const auto& f : p.factors) coords_b |= std::uint32_t(1) << f.coord;
  if (coords_a & coords_b)
    throw std::invalid_argument("product_basis: overlapping coordinate sets");
  std::vector<Poly> out;
  out.reserve(a.size() * b.size());
  for (const Poly& pa : a)
    for (const Poly& pb : b) {
      Poly p = pa;
      p.factors.insert(p.factors.end(), pb.factors.begin(), pb.factors.end());
      out.push_back(std::move(p));
    }
  return out;
}

NamedBasis basis_small_unfolded() {
  std::vector<Poly> gens =
      product_basis(parse_all(kEdges12), parse_all(kEdges34));
  gens.push_back(Poly::parse("X3(X4+1)"));    // square of type {1,2}
  gens.push_back(Poly::parse("(X1+1)X2"));    // square of type {3,4}
  return NamedBasis{"small-unfolded", "qrm411", 4, to_subcubes(4, gens)};
}

NamedBasis basis_qrm611() {
  std::vector<Poly> gens =
      product_basis(parse_all(kEdges123), parse_all(kEdges456));
  for (const char* t : kAppended611) gens.push_back(Poly::parse(t));
  return NamedBasis{"qrm611", "qrm611", 6, to_subcubes(6, gens)};
}

NamedBasis basis_big_unfolded() {
  NamedBasis full = basis_qrm611();
  std::vector<Subcube> removed = to_subcubes(6, parse_all(kRemoved611));
  NamedBasis out{"big-unfolded", "big-unfolded", 6, {}};
  for (const Subcube& s : full.generators) {
    bool drop = false;
    for (const Subcube& r : removed) drop = drop || s == r;
    if (!drop) out.generators.push_back(s);
  }
  return out;
}

std::vector<Poly> big_unfolded_removed_squares() {
  return parse_all(kRemoved611);
}

NamedBasis basis_rubik() {
  // 27 bulk cubes: one edge per spatial pair of coordinates.
  std::vector<Poly> e12 = parse_all({"X2", "(X2+1)", "X1"});
  std::vector<Poly> e34 = parse_all({"X4", "(X4+1)", "X3"});
  std::vector<Poly> e56 = parse_all({"X6", "(X6+1)", "X5"});
  std::vector<Poly> gens = product_basis(product_basis(e12, e34), e56);
  // Boundary slabs; the free pair of coordinates says which face the
  // slab spans, the fixed pair places it on that face.
  for (const char* t : {
           // bottom (z = 0): whole square {1,2} x edges of {3,4}
           "X4(X5+1)(X6+1)", "(X4+1)(X5+1)(X6+1)", "X3(X5+1)(X6+1)",
           // top (z = 3): whole square {3,4} x edges X2, X1
           "X2(X5+1)X6", "X1(X5+1)X6",
           // left (x = 0): whole square {3,4} x edges of {5,6}
           "(X1+1)(X2+1)X6", "(X1+1)(X2+1)(X6+1)", "(X1+1)(X2+1)X5",
           // right (x = 3): whole square {5,6} x edges X4, X3
           "(X1+1)X2X4", "(X1+1)X2X3",
           // back (y = 3): whole square {5,6} x edges of {1,2}
           "X2(X3+1)X4", "(X2+1)(X3+1)X4", "X1(X3+1)X4",
           // front (y = 0): whole square {1,2} x edges X6, X5
           "(X3+1)(X4+1)X6", "(X3+1)(X4+1)X5",
       })
    gens.push_back(Poly::parse(t));
  return NamedBasis{"rubik", "qrm612", 6, to_subcubes(6, gens)};
}

NamedBasis basis_qrm722() {
  std::vector<Poly> e123 = parse_all(kEdges123);
  std::vector<Poly> e456 = parse_all(kEdges456);
  std::vector<Poly> sq123 = parse_all(kSquares123);
  std::vector<Poly> sq456 = parse_all(kSquares456);

  // Main layer: spans both z cells (coordinate 7 free).
  std::vector<Poly> gens = product_basis(e123, e456);  // 49 center cubes
  for (const Poly& sq : sq123) {                       // 4 NE-SW squares
    Poly p = sq;
    for (const auto& f : Poly::parse("(X4+1)(X5+1)(X6+1)").factors)
      p.factors.push_back(f);
    gens.push_back(std::move(p));
  }
  for (const Poly& sq : sq456) {                       // 4 NW-SE squares
    Poly p = Poly::parse("(X1+1)(X2+1)(X3+1)");
    for (const auto& f : sq.factors) p.factors.push_back(f);
    gens.push_back(std::move(p));
  }
  // Bottom layer (x7 = 0): squares of {1,2,3} x edges of {4,5,6}.
  for (Poly p : product_basis(sq123, e456)) {
    p.factors.push_back({7, false});
    gens.push_back(std::move(p));
  }
  // Top layer (x7 = 1): one edge per type of {1,2,3} x squares of {4,5,6}.
  std::vector<Poly> one_edge_each = parse_all({"X2X3", "X1X3", "X1X2"});
  for (Poly p : product_basis(one_edge_each, sq456)) {
    p.factors.push_back({7, true});
    gens.push_back(std::move(p));
  }
  gens.push_back(Poly::parse("X4(X5+1)(X6+1)X7"));      // type {1,2,3}
  gens.push_back(Poly::parse("(X1+1)(X2+1)X3X7"));      // type {4,5,6}
  return NamedBasis{"qrm722", "qrm722", 7, to_subcubes(7, gens)};
}

std::map<std::uint32_t, int> type_census(const std::vector<Subcube>& gens) {
  std::map<std::uint32_t, int> c;
  for (const Subcube& s : gens) ++c[s.typeset];
  return c;
}

std::string basis_to_json(const NamedBasis& b) {
  nlohmann::json j;
  j["label"] = b.label;
  j["target"] = b.target;
  j["generators"] = nlohmann::json::array();
  for (const Subcube& s : b.generators) j["generators"].push_back(subcube_text(s));
  return j.dump(2);
}

}  // namespace qrmcube
