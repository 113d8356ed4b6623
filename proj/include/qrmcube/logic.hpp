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

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qrmcube/cube.hpp"
#include "qrmcube/qrm.hpp"

namespace qrmcube {

/// Raised when a plain (non-alternating) S/T conjugation would pick up
/// a phase the combinatorics here cannot track.
struct unverified_phase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ZKind { Stabilizer, NontrivialLogical, NotInNormalizer };

struct ZClass {
  ZKind kind = ZKind::NotInNormalizer;
  /// For codes whose logical qubits are indexed by 2-subsets: the
  /// typeset whose standard square is equivalent to this operator, when
  /// there is a single such qubit.
  std::optional<std::uint32_t> logical_type;
};

enum class GateLevel { Z = 1, S = 2, T = 3 };

/// Diagonal-gate factor left over after conjugating past an X operator.
/// `balanced` marks the alternating form (U on even-Hamming-weight
/// vertices, U† on odd ones), whose phases cancel whenever the support
/// has dimension >= 1.
struct DiagonalGateSpec {
  GateLevel level = GateLevel::Z;
  std::optional<Subcube> support;  // empty = identity factor
  bool balanced = true;
};

enum class GateEffect { NotPreserving, TrivialAction, NontrivialAction };

/// A CSS code together with the subcube geometry the conjugation engine
/// needs: X-stabilizer generators as subcubes, one X-logical
/// representative per logical qubit, and the 2-subset labels of the
/// logical qubits.
struct SubcubeCode {
  const CssCode* code = nullptr;
  int m = 0;
  std::vector<Subcube> x_stab_gens;
  std::vector<Subcube> x_logical_reps;
  std::vector<std::uint32_t> logical_types;  // typeset per logical qubit

  const EchelonForm& hx_ech() const;
  const EchelonForm& hz_ech() const;

 private:
  mutable std::optional<EchelonForm> hx_ech_;
  mutable std::optional<EchelonForm> hz_ech_;
};

/// View for the 6-cube codes: X stabilizers are the 5-subcubes, logical
/// qubit I has Z representative the standard 2-subcube of type I and X
/// representative the standard 4-subcube of the complementary type.
SubcubeCode subcube_view_qrm612(const CssCode& c);
SubcubeCode subcube_view_big_unfolded(const CssCode& c);
SubcubeCode subcube_view_qrm611(const CssCode& c);

ZClass classify_z(const SubcubeCode& sc, const BitVec& v);

/// One conjugation step: the residual diagonal factor of pushing a
/// balanced S/T gate on A past X on B. S leaves Z on A∩B, T leaves a
/// balanced S on A∩B; an empty intersection leaves the identity.
DiagonalGateSpec conjugate_once(GateLevel level, const Subcube& a,
                                const Subcube& b);

/// Classifies the action of a (balanced) S- or T-type gate supported on
/// subcube A: whether it preserves the codespace and whether the
/// preserved action is logically trivial. With balanced=false the same
/// combinatorics apply only while every conjugation used is phase-free
/// (intersection dimension >= 2 for S, >= 3 for T); otherwise
/// unverified_phase is raised.
GateEffect preserves_codespace(const SubcubeCode& sc, GateLevel level,
                               const Subcube& a, bool balanced = true);

using CzPair = std::array<std::uint32_t, 2>;    // typesets, sorted
using CczTriple = std::array<std::uint32_t, 3>;  // typesets, sorted

/// Logical action of a balanced S gate on a 4-dimensional subcube, read
/// off from its conjugation with every X-logical representative: the CZ
/// pairs {I,J} picked up. Representative-independent.
std::set<CzPair> logical_action_s(const SubcubeCode& sc, const Subcube& a);

/// Logical action of the balanced T gate on the whole cube: the CCZ
/// triples, derived from the S action of each X-logical conjugation.
std::set<CczTriple> logical_action_t_full(const SubcubeCode& sc);

/// True iff the subcube has as many even- as odd-Hamming-weight
/// vertices (counted directly); holds exactly when dim >= 1.
bool balanced_ok(const Subcube& a);

std::string typeset_str(std::uint32_t typeset);
std::string circuit_to_json(const std::string& code,
                            const std::set<CczTriple>& triples);
std::string circuit_to_json_cz(const std::string& code,
                               const std::set<CzPair>& pairs);

}  // namespace qrmcube
