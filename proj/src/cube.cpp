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

#include "qrmcube/cube.hpp"

#include <bit>
#include <stdexcept>

namespace qrmcube {

namespace {
std::uint32_t coord_mask(int m) {
  return m == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << m) - 1;
}
}  // namespace

int Subcube::dim() const { return std::popcount(typeset); }

Subcube make_subcube(int m, std::uint32_t base, std::uint32_t typeset) {
  if (m < 0 || m > 16) throw std::invalid_argument("subcube: m out of range");
  std::uint32_t mask = coord_mask(m);
  if (base & ~mask) throw std::invalid_argument("subcube: base out of range");
  if (typeset & ~mask)
    throw std::invalid_argument("subcube: typeset out of range");
  if (base & typeset)
    throw std::invalid_argument(
        "subcube: base must be 0 on free coordinates (non-canonical form)");
  return Subcube{m, base, typeset};
}

BitVec subcube_indicator(const Subcube& s) {
  make_subcube(s.m, s.base, s.typeset);
  BitVec v(std::size_t(1) << s.m);
  std::uint32_t sub = s.typeset;
  while (true) {
    v.set(s.base | sub);
    if (sub == 0) break;
    sub = (sub - 1) & s.typeset;
  }
  return v;
}

std::vector<Subcube> enumerate_subcubes(int m, int dim) {
  if (m < 0 || m > 16) throw std::invalid_argument("enumerate_subcubes: m");
  if (dim < 0 || dim > m)
    throw std::invalid_argument("enumerate_subcubes: dim out of range");
  std::vector<Subcube> out;
  std::uint32_t mask = coord_mask(m);
  for (std::uint32_t t = 0; t <= mask; ++t) {
    if (std::popcount(t) != dim) continue;
    std::uint32_t fixed = mask & ~t;
    // Bases in increasing order over the fixed coordinates.
    std::uint32_t b = 0;
    while (true) {
      out.push_back(Subcube{m, b, t});
      if (b == fixed) break;
      b = (b - fixed) & fixed;
    }
  }
  return out;
}

Subcube translate(const Subcube& s, int coord) {
  if (coord < 1 || coord > s.m)
    throw std::invalid_argument("translate: coordinate out of range");
  std::uint32_t bit = std::uint32_t(1) << (coord - 1);
  if (s.typeset & bit) return s;
  return Subcube{s.m, s.base ^ bit, s.typeset};
}

std::optional<Subcube> intersect(const Subcube& a, const Subcube& b) {
  if (a.m != b.m) throw dimension_error("intersect: different cubes");
  std::uint32_t both_fixed = ~a.typeset & ~b.typeset & coord_mask(a.m);
  if ((a.base ^ b.base) & both_fixed) return std::nullopt;
  return Subcube{a.m, a.base | b.base, a.typeset & b.typeset};
}

Poly Poly::parse(std::string_view text) {
  Poly p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '*')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    bool paren = text[i] == '(';
    if (paren) ++i;
    if (i >= text.size() || text[i] != 'X')
      throw std::invalid_argument("Poly::parse: expected X<k>");
    ++i;
    int coord = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
      coord = coord * 10 + (text[i++] - '0');
    if (coord < 1) throw std::invalid_argument("Poly::parse: bad coordinate");
    bool value = true;
    if (paren) {
      if (i + 1 < text.size() && text[i] == '+' && text[i + 1] == '1') {
        value = false;
        i += 2;
      }
      if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("Poly::parse: missing ')'");
      ++i;
    }
    for (const auto& f : p.factors)
      if (f.coord == coord)
        throw std::invalid_argument("Poly: repeated coordinate");
    p.factors.push_back({coord, value});
    skip_ws();
  }
  return p;
}

std::string Poly::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) {
    if (f.value) {
      s += "X" + std::to_string(f.coord);
    } else {
      s += "(X" + std::to_string(f.coord) + "+1)";
    }
  }
  return s;
}

BitVec poly_indicator(int m, const Poly& p) {
  if (m < 0 || m > 16) throw std::invalid_argument("poly_indicator: m");
  for (const auto& f : p.factors)
    if (f.coord > m)
      throw std::invalid_argument("poly_indicator: coordinate beyond cube");
  BitVec v(std::size_t(1) << m);
  for (std::uint32_t x = 0; x < (std::uint32_t(1) << m); ++x) {
    bool one = true;
    for (const auto& f : p.factors) {
      bool bit = (x >> (f.coord - 1)) & 1;
      if (bit != f.value) {
        one = false;
        break;
      }
    }
    if (one) v.set(x);
  }
  return v;
}

Subcube poly_subcube(int m, const Poly& p) {
  std::uint32_t fixed = 0, base = 0;
  for (const auto& f : p.factors) {
    if (f.coord > m)
      throw std::invalid_argument("poly_subcube: coordinate beyond cube");
    std::uint32_t bit = std::uint32_t(1) << (f.coord - 1);
    if (fixed & bit) throw std::invalid_argument("Poly: repeated coordinate");
    fixed |= bit;
    if (f.value) base |= bit;
  }
  return make_subcube(m, base, coord_mask(m) & ~fixed);
}

const std::vector<std::uint32_t>& gray_order(int k) {
  // Tuples (b_1..b_k) encoded little-endian: 0b(b_k..b_1).
  static const std::vector<std::uint32_t> g1{0b0, 0b1};
  static const std::vector<std::uint32_t> g2{0b00, 0b01, 0b11, 0b10};
  static const std::vector<std::uint32_t> g3{0b000, 0b001, 0b011, 0b010,
                                             0b110, 0b111, 0b101, 0b100};
  switch (k) {
    case 1:
      return g1;
    case 2:
      return g2;
    case 3:
      return g3;
    default:
      throw std::invalid_argument("gray_order: only k in {1,2,3} supported");
  }
}

int gray_position(int k, std::uint32_t tuple) {
  const auto& g = gray_order(k);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == tuple) return int(i);
  throw std::invalid_argument("gray_position: tuple out of range");
}

std::string subcube_text(const Subcube& s) {
  std::string out;
  for (int i = 1; i <= s.m; ++i)
    out += ((s.base >> (i - 1)) & 1) ? '1' : '0';
  out += "+<";
  bool first = true;
  for (int i = 1; i <= s.m; ++i) {
    if ((s.typeset >> (i - 1)) & 1) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  out += ">";
  return out;
}

Subcube subcube_parse(int m, std::string_view text) {
  std::size_t plus = text.find("+<");
  if (plus == std::string_view::npos || text.back() != '>')
    throw std::invalid_argument("subcube_parse: expected v+<J>");
  std::string_view bits = text.substr(0, plus);
  if (int(bits.size()) != m)
    throw std::invalid_argument("subcube_parse: base length mismatch");
  std::uint32_t base = 0;
  for (int i = 0; i < m; ++i) {
    if (bits[i] == '1')
      base |= std::uint32_t(1) << i;
    else if (bits[i] != '0')
      throw std::invalid_argument("subcube_parse: bad base bit");
  }
  std::uint32_t typeset = 0;
  std::size_t i = plus + 2;
  while (i < text.size() - 1) {
    int coord = 0;
    while (i < text.size() - 1 && text[i] >= '0' && text[i] <= '9')
      coord = coord * 10 + (text[i++] - '0');
    if (coord < 1 || coord > m)
      throw std::invalid_argument("subcube_parse: bad coordinate");
    typeset |= std::uint32_t(1) << (coord - 1);
    if (i < text.size() - 1 && text[i] == ',') ++i;
  }
  return make_subcube(m, base, typeset);
}

}  // namespace qrmcube
