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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrmcube/cube.hpp"
#include "qrmcube/gf2.hpp"

namespace qrmcube {

/// Named ordered generator list for a Z-stabilizer row space. The target
/// is referenced by code label; verification happens against its hz.
struct NamedBasis {
  std::string label;
  std::string target;
  int m = 0;
  std::vector<Subcube> generators;
};

F2Matrix basis_matrix(const NamedBasis& b);

struct BasisCheck {
  std::size_t generators = 0;
  std::size_t rank = 0;
  std::size_t target_rank = 0;
  bool independent = false;
  bool spans = false;
  bool ok() const { return independent && spans; }
};

BasisCheck verify_basis(const NamedBasis& b, const F2Matrix& target_hz);

/// Matrix of every subcube indicator whose type is in `types`; all
/// typesets must have the given dimension.
F2Matrix span_of_types(int m, int dim, const std::vector<std::uint32_t>& types);

/// Generators of the space spanned by the squares of type {i1,i2} whose
/// vertices satisfy v_k = a_k + 1 for every k outside the window
/// [k1,k2], together with all translations inside the window. `offsets`
/// carries the a_k bits (bit k-1); only bits outside the window are read.
F2Matrix v_space(int m, int k1, int i1, int i2, int k2, std::uint32_t offsets);

struct DiagonalParams {
  int m = 0;
  int f_max = 0;  // 1..m
  // Per-type offsets a_k^{(i1,i2)}, keyed by (i1,i2); bit k-1 holds a_k.
  std::map<std::pair<int, int>, std::uint32_t> offsets;
};

/// Direct sum over the first f_max diagonals (i2 = i1 + m - f, f <= f_max)
/// of the translated-square generator spaces. Its row space is
/// independent of the offsets and equals the span of all squares of type
/// {i1,i2} with i2 >= i1 + m - f_max.
F2Matrix diagonal_space(const DiagonalParams& p);

/// Cartesian product of generator families over disjoint coordinate
/// sets: all pairwise unions of fixed-coordinate assignments.
/// Independence is preserved.
std::vector<Poly> product_basis(const std::vector<Poly>& a,
                                const std::vector<Poly>& b);

// The explicit layout bases. Generators are transcribed literally into
// constant tables; nothing is re-derived at runtime, so transcription
// slips surface as span-check failures.
NamedBasis basis_small_unfolded();  // 11 squares of the 4-cube
NamedBasis basis_qrm611();          // 57 squares of the 6-cube
NamedBasis basis_big_unfolded();    // 54 of the 57, three dropped
NamedBasis basis_rubik();           // 42 cubes of the 6-cube
NamedBasis basis_qrm722();          // 99 cubes of the 7-cube

/// The three squares dropped from the 57-square basis to free the three
/// logical qubits {1,2}, {3,4}, {5,6}.
std::vector<Poly> big_unfolded_removed_squares();

/// Count of generators per typeset.
std::map<std::uint32_t, int> type_census(const std::vector<Subcube>& gens);

std::string basis_to_json(const NamedBasis& b);

}  // namespace qrmcube
