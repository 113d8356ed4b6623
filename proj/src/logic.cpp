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

#include "qrmcube/logic.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "json.hpp"

namespace qrmcube {

const EchelonForm& SubcubeCode::hx_ech() const {
  if (!hx_ech_) hx_ech_.emplace(code->hx);
  return *hx_ech_;
}

const EchelonForm& SubcubeCode::hz_ech() const {
  if (!hz_ech_) hz_ech_.emplace(code->hz);
  return *hz_ech_;
}

namespace {

SubcubeCode six_cube_view(const CssCode& c,
                          std::vector<std::uint32_t> logical_types) {
  SubcubeCode sc;
  sc.code = &c;
  sc.m = 6;
  sc.x_stab_gens = enumerate_subcubes(6, 5);
  for (std::uint32_t t : logical_types) {
    std::uint32_t comp = 0b111111u & ~t;
    sc.x_logical_reps.push_back(make_subcube(6, 0, comp));
  }
  sc.logical_types = std::move(logical_types);
  return sc;
}

std::vector<std::uint32_t> all_2subsets_of_6() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < 64; ++t)
    if (std::popcount(t) == 2) out.push_back(t);
  return out;
}

}  // namespace

SubcubeCode subcube_view_qrm612(const CssCode& c) {
  return six_cube_view(c, all_2subsets_of_6());
}

SubcubeCode subcube_view_big_unfolded(const CssCode& c) {
  return six_cube_view(c, {0b000011u, 0b001100u, 0b110000u});
}

SubcubeCode subcube_view_qrm611(const CssCode& c) {
  return six_cube_view(c, {});
}

ZClass classify_z(const SubcubeCode& sc, const BitVec& v) {
  if (v.size() != std::size_t(sc.code->n))
    throw dimension_error("classify_z: length mismatch");
  for (const BitVec& row : sc.hx_ech().rows())
    if (inner(v, row)) return ZClass{ZKind::NotInNormalizer, {}};
  if (sc.hz_ech().contains(v)) return ZClass{ZKind::Stabilizer, {}};
  ZClass out{ZKind::NontrivialLogical, {}};
  for (std::uint32_t t : sc.logical_types) {
    BitVec rep = subcube_indicator(make_subcube(sc.m, 0, t));
    if (sc.hz_ech().contains(v ^ rep)) {
      out.logical_type = t;
      break;
    }
  }
  return out;
}

DiagonalGateSpec conjugate_once(GateLevel level, const Subcube& a,
                                const Subcube& b) {
  if (level != GateLevel::S && level != GateLevel::T)
    throw std::invalid_argument("conjugate_once: level must be S or T");
  DiagonalGateSpec out;
  out.level = level == GateLevel::T ? GateLevel::S : GateLevel::Z;
  out.support = intersect(a, b);
  out.balanced = true;
  return out;
}

namespace {

// Classification of a balanced S gate on subcube `a`. When plain=true
// the verdict is only returned if every conjugation it rests on is
// phase-free (intersection dimension >= 2), else unverified_phase.
GateEffect s_effect(const SubcubeCode& sc, const Subcube& a, bool plain) {
  bool bad_stab = false, bad_stab_clean = false, dirty = false;
  for (const Subcube& b : sc.x_stab_gens) {
    auto r = intersect(a, b);
    if (!r) continue;
    bool clean = r->dim() >= 2;
    dirty = dirty || !clean;
    BitVec ind = subcube_indicator(*r);
    if (classify_z(sc, ind).kind != ZKind::Stabilizer) {
      bad_stab = true;
      bad_stab_clean = bad_stab_clean || clean;
    }
  }
  if (bad_stab) {
    if (plain && !bad_stab_clean)
      throw unverified_phase(
          "plain S conjugation with intersection dimension < 2");
    return GateEffect::NotPreserving;
  }
  bool bad_log = false;
  for (const Subcube& b : sc.x_logical_reps) {
    auto r = intersect(a, b);
    if (!r) continue;
    dirty = dirty || r->dim() < 2;
    BitVec ind = subcube_indicator(*r);
    ZClass zc = classify_z(sc, ind);
    if (zc.kind == ZKind::NotInNormalizer)
      throw std::logic_error(
          "s_effect: preserved gate conjugates a logical out of the "
          "normalizer");
    bad_log = bad_log || zc.kind == ZKind::NontrivialLogical;
  }
  if (plain && dirty)
    throw unverified_phase(
        "plain S conjugation with intersection dimension < 2");
  return bad_log ? GateEffect::NontrivialAction : GateEffect::TrivialAction;
}

GateEffect t_effect(const SubcubeCode& sc, const Subcube& a, bool plain) {
  bool bad_stab = false, bad_stab_clean = false, dirty = false;
  for (const Subcube& b : sc.x_stab_gens) {
    auto r = intersect(a, b);
    if (!r) continue;
    bool clean = r->dim() >= 3;
    dirty = dirty || !clean;
    if (s_effect(sc, *r, plain) != GateEffect::TrivialAction) {
      bad_stab = true;
      bad_stab_clean = bad_stab_clean || clean;
    }
  }
  if (bad_stab) {
    if (plain && !bad_stab_clean)
      throw unverified_phase(
          "plain T conjugation with intersection dimension < 3");
    return GateEffect::NotPreserving;
  }
  bool bad_log = false;
  for (const Subcube& b : sc.x_logical_reps) {
    auto r = intersect(a, b);
    if (!r) continue;
    dirty = dirty || r->dim() < 3;
    GateEffect eff = s_effect(sc, *r, plain);
    if (eff == GateEffect::NotPreserving)
      throw std::logic_error(
          "t_effect: preserved gate acts badly on a logical representative");
    bad_log = bad_log || eff == GateEffect::NontrivialAction;
  }
  if (plain && dirty)
    throw unverified_phase(
        "plain T conjugation with intersection dimension < 3");
  return bad_log ? GateEffect::NontrivialAction : GateEffect::TrivialAction;
}

}  // namespace

GateEffect preserves_codespace(const SubcubeCode& sc, GateLevel level,
                               const Subcube& a, bool balanced) {
  if (a.m != sc.m) throw dimension_error("preserves_codespace: wrong cube");
  if (a.dim() < 1)
    throw unverified_phase(
        "phase cancellation needs a support of dimension >= 1");
  switch (level) {
    case GateLevel::S:
      return s_effect(sc, a, !balanced);
    case GateLevel::T:
      return t_effect(sc, a, !balanced);
    default:
      throw std::invalid_argument("preserves_codespace: level must be S or T");
  }
}

std::set<CzPair> logical_action_s(const SubcubeCode& sc, const Subcube& a) {
  if (a.dim() != 4)
    throw std::invalid_argument("logical_action_s: support must have dim 4");
  if (preserves_codespace(sc, GateLevel::S, a) == GateEffect::NotPreserving)
    throw std::invalid_argument("logical_action_s: gate does not preserve "
                                "the codespace");
  std::map<std::uint32_t, std::set<std::uint32_t>> partners;
  for (std::size_t q = 0; q < sc.logical_types.size(); ++q) {
    auto r = intersect(a, sc.x_logical_reps[q]);
    if (!r) continue;
    ZClass zc = classify_z(sc, subcube_indicator(*r));
    if (zc.kind != ZKind::NontrivialLogical) continue;
    if (!zc.logical_type)
      throw std::logic_error(
          "logical_action_s: residual is not a single-qubit Z logical");
    partners[sc.logical_types[q]].insert(*zc.logical_type);
  }
  std::set<CzPair> out;
  for (const auto& [i, js] : partners)
    for (std::uint32_t j : js) {
      if (!partners.count(j) || !partners.at(j).count(i))
        throw std::logic_error("logical_action_s: asymmetric CZ pair");
      out.insert(CzPair{std::min(i, j), std::max(i, j)});
    }
  return out;
}

std::set<CczTriple> logical_action_t_full(const SubcubeCode& sc) {
  std::uint32_t full = (std::uint32_t(1) << sc.m) - 1;
  Subcube whole = make_subcube(sc.m, 0, full);
  if (preserves_codespace(sc, GateLevel::T, whole) ==
      GateEffect::NotPreserving)
    throw std::logic_error("logical_action_t_full: gate does not preserve "
                           "the codespace");
  std::map<CczTriple, int> seen;
  for (std::size_t q = 0; q < sc.logical_types.size(); ++q) {
    std::uint32_t i = sc.logical_types[q];
    for (const CzPair& p : logical_action_s(sc, sc.x_logical_reps[q])) {
      CczTriple t{i, p[0], p[1]};
      std::sort(t.begin(), t.end());
      seen[t] += 1;
    }
  }
  std::set<CczTriple> out;
  for (const auto& [t, n] : seen) {
    if (n != 3)
      throw std::logic_error(
          "logical_action_t_full: triple not seen from all three qubits");
    out.insert(t);
  }
  return out;
}

bool balanced_ok(const Subcube& a) {
  int even = 0, odd = 0;
  std::uint32_t sub = a.typeset;
  while (true) {
    (std::popcount(a.base | sub) % 2 == 0 ? even : odd) += 1;
    if (sub == 0) break;
    sub = (sub - 1) & a.typeset;
  }
  return even == odd;
}

std::string typeset_str(std::uint32_t typeset) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if ((typeset >> i) & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

namespace {
nlohmann::json typeset_json(std::uint32_t t) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < 32; ++i)
    if ((t >> i) & 1) a.push_back(i + 1);
  return a;
}
}  // namespace

std::string circuit_to_json(const std::string& code,
                            const std::set<CczTriple>& triples) {
  nlohmann::json j;
  j["code"] = code;
  j["gates"] = nlohmann::json::array();
  for (const CczTriple& t : triples) {
    nlohmann::json g;
    g["gate"] = "CCZ";
    g["qubits"] = {typeset_json(t[0]), typeset_json(t[1]), typeset_json(t[2])};
    j["gates"].push_back(g);
  }
  return j.dump(2);
}

std::string circuit_to_json_cz(const std::string& code,
                               const std::set<CzPair>& pairs) {
  nlohmann::json j;
  j["code"] = code;
  j["gates"] = nlohmann::json::array();
  for (const CzPair& p : pairs) {
    nlohmann::json g;
    g["gate"] = "CZ";
    g["qubits"] = {typeset_json(p[0]), typeset_json(p[1])};
    j["gates"].push_back(g);
  }
  return j.dump(2);
}

}  // namespace qrmcube
