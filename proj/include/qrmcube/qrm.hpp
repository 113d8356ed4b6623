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

#include <optional>
#include <string>

#include "qrmcube/cube.hpp"
#include "qrmcube/gf2.hpp"

namespace qrmcube {

struct RmParams {
  int m = 0;  // cube dimension, 0..16 (paper codes use m <= 7)
  int r = 0;  // degree bound, 0 <= r <= m
};

struct QrmParams {
  int m = 0;
  int q = 0;
  int r = 0;  // 0 <= q <= r <= m
};

struct PunctureInfo {
  QrmParams parent;
  int pos = 0;
};

/// CSS code: X- and Z-stabilizer generator row sets over n qubits.
/// Construction checks the commutation invariant and computes
/// k = n - rank(hx) - rank(hz); k is never trusted from parameters.
struct CssCode {
  std::string label;
  int n = 0;
  F2Matrix hx;
  F2Matrix hz;
  int k = 0;
  std::optional<QrmParams> qrm_origin;
  std::optional<PunctureInfo> punctured_from;
};

CssCode make_css(std::string label, F2Matrix hx, F2Matrix hz);

/// Generators of RM_m(r): indicators of all (m-r)-subcubes.
/// rank = sum_{i<=r} C(m,i).
F2Matrix rm_generators(RmParams p);

/// Generators of RM_m(r) as monomial evaluations prod_{i in S} X_i over
/// all S with |S| <= r; one row per monomial, all rows independent.
F2Matrix monomial_generators(RmParams p);

/// Generators built by the (u, u+v) recursion; the first half of each
/// codeword is the x_m = 0 face. Same row space as rm_generators.
F2Matrix plotkin_generators(RmParams p);

/// dim RM_m(r) = sum_{i<=r} C(m,i).
std::size_t rm_dimension(RmParams p);

CssCode qrm_code(QrmParams p);

/// Classical shortening: keeps rows with 0 at pos, drops column pos.
F2Matrix shorten(const F2Matrix& m, std::size_t pos);

/// Quantum puncture of a k=0 code: shortens both stabilizer sets at pos.
/// Requires both ranks to drop by exactly one, which creates one logical
/// qubit; otherwise throws.
CssCode puncture_code(const CssCode& c, int pos);

/// The 64-qubit code between QRM_6(1,1) and QRM_6(1,2): X stabilizers
/// RM_6(1), Z stabilizers the 54 retained squares (rank 54, k = 3). hz
/// stores exactly the 54 named generators so layout export and
/// verification share one object.
CssCode big_unfolded();

/// Basis of the Z normalizer {v : v ⊥ every hx row}. Nontrivial Z
/// logicals are the members outside rowspace(hz).
F2Matrix z_logical_space(const CssCode& c);

std::string css_to_json(const CssCode& c);

}  // namespace qrmcube
