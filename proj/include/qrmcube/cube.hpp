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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrmcube/gf2.hpp"

namespace qrmcube {

// Coordinates are 1-based. A vertex of the m-cube is stored as a bitmask
// whose bit i-1 holds x_i; that mask is also the vertex's column index.

/// Subcube of the m-cube: the vertices agreeing with `base` outside the
/// free-coordinate set `typeset`. Canonical form: base has 0 on every
/// free coordinate, so each subcube has exactly one representation.
struct Subcube {
  int m = 0;
  std::uint32_t base = 0;
  std::uint32_t typeset = 0;

  int dim() const;
  bool operator==(const Subcube&) const = default;
};

/// Validates ranges and the canonical-form invariant.
Subcube make_subcube(int m, std::uint32_t base, std::uint32_t typeset);

/// Indicator vector of length 2^m, 1 exactly on the subcube's vertices.
BitVec subcube_indicator(const Subcube& s);

/// All canonical subcubes of the given dimension:
/// C(m,dim) * 2^(m-dim) of them, each exactly once.
std::vector<Subcube> enumerate_subcubes(int m, int dim);

/// Flips the base bit at `coord` unless the coordinate is free. Involution.
Subcube translate(const Subcube& s, int coord);

/// Intersection as a subcube, or nullopt when the fixed parts disagree.
std::optional<Subcube> intersect(const Subcube& a, const Subcube& b);

/// Product of affine literals X_i or X_i+1, one coordinate at most once.
/// Considered through its evaluation over F2^m; the empty product is 1.
struct Poly {
  struct Literal {
    int coord = 0;
    bool value = false;  // vertex bit that makes the literal 1
  };
  std::vector<Literal> factors;

  /// Accepts e.g. "X1 (X3+1)" or "(X1+1)(X2+1)X3 X7".
  static Poly parse(std::string_view text);
  std::string str() const;
};

/// Evaluation vector of p over F2^m (direct evaluation at every vertex).
BitVec poly_indicator(int m, const Poly& p);

/// The subcube on which p evaluates to 1; its typeset is the complement
/// of the factored coordinates.
Subcube poly_subcube(int m, const Poly& p);

/// The two hard-wired Gray vertex orders the layouts depend on, as bit
/// tuples (b_1..b_k) encoded little-endian. k=1: 0,1. k=2: 00,10,11,01.
/// k=3: 000,100,110,010,011,111,101,001. Other k are rejected rather
/// than improvised.
const std::vector<std::uint32_t>& gray_order(int k);

/// Position of a bit tuple in gray_order(k).
int gray_position(int k, std::uint32_t tuple);

// Text form "v+<J>" with v as an x_1..x_m bitstring and J a comma list,
// e.g. "0000+<1,3>".
std::string subcube_text(const Subcube& s);
Subcube subcube_parse(int m, std::string_view text);

}  // namespace qrmcube
