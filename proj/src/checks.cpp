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

#include "qrmcube/checks.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qrmcube/distance.hpp"
#include "qrmcube/factory.hpp"
#include "qrmcube/layout.hpp"
#include "qrmcube/logic.hpp"
#include "qrmcube/registry.hpp"

#ifndef QRMCUBE_SOURCE_DIR
#define QRMCUBE_SOURCE_DIR "."
#endif

namespace qrmcube {

namespace {

using nlohmann::json;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- criterion 1: the five bases are free and spanning ----
Outcome check_bases(const json& man) {
  Outcome o;
  for (const char* name :
       {"small-unfolded", "qrm611", "big-unfolded", "rubik", "qrm722"}) {
    std::string label = name;
    auto t0 = std::chrono::steady_clock::now();
    const NamedBasis& b = basis_by_label(label);
    const CssCode& target = code_by_label(b.target);
    BasisCheck c = verify_basis(b, target.hz);
    double dt = seconds_since(t0);
    std::size_t want = man.at("bases").at(label).get<std::size_t>();
    o.require(c.generators == want,
              label + ": " + std::to_string(c.generators) +
                  " generators, expected " + std::to_string(want));
    o.require(c.ok(), label + ": not a basis of the target row space");
    o.require(dt < 5.0, label + ": took " + std::to_string(dt) + " s (>5)");
  }
  return o;
}

// ---- criterion 2: exact counting suite ----
Outcome check_counting(const json& man) {
  Outcome o;
  const json& c = man.at("counting");
  auto expect = [&](const WeightCensus& w, const char* key) {
    o.require(w.d && *w.d == c.at(key).at("d").get<int>() &&
                  w.count == c.at(key).at("count").get<std::uint64_t>(),
              std::string(key) + ": got d=" +
                  (w.d ? std::to_string(*w.d) : "-") +
                  " count=" + std::to_string(w.count));
  };
  expect(min_weight_words({4, 2}), "rm42");
  auto t0 = std::chrono::steady_clock::now();
  expect(min_weight_words({7, 4}), "rm74");
  double dt = seconds_since(t0);
  o.require(dt < 120.0, "m=7 enumeration took " + std::to_string(dt) + " s");
  expect(punctured_min_logicals(code_by_label("small-unfolded")),
         "small-unfolded");
  expect(punctured_min_logicals(code_by_label("qrm722-punctured")),
         "qrm722-punctured");
  expect(nontrivial_logical_census(code_by_label("qrm301")), "qrm301");
  auto [trivial, nontrivial] = classify_big_unfolded_w4();
  o.require(trivial == c.at("big-unfolded-w4").at("trivial") &&
                nontrivial == c.at("big-unfolded-w4").at("nontrivial"),
            "big-unfolded split: got " + std::to_string(trivial) + "/" +
                std::to_string(nontrivial));
  WeightCensus rubik = min_weight_words({6, 4});
  o.require(rubik.count == c.at("rubik-prefactor").get<std::uint64_t>(),
            "rubik prefactor: got " + std::to_string(rubik.count));
  return o;
}

// ---- criterion 3: brute force vs affine enumeration ----
bool support_is_affine(const BitVec& w, int m) {
  std::vector<std::uint32_t> supp;
  for (std::uint32_t v = 0; v < (std::uint32_t(1) << m); ++v)
    if (w.get(v)) supp.push_back(v);
  if (supp.empty()) return false;
  if ((supp.size() & (supp.size() - 1)) != 0) return false;
  std::vector<bool> member(std::size_t(1) << m, false);
  for (std::uint32_t v : supp) member[v ^ supp[0]] = true;
  for (std::uint32_t a : supp)
    for (std::uint32_t b : supp)
      if (!member[(a ^ supp[0]) ^ (b ^ supp[0])]) return false;
  return true;
}

Outcome check_oracle_equivalence(const json&) {
  Outcome o;
  int cases = 0;
  for (int m = 0; m <= 7; ++m) {
    for (int r = 0; r <= m; ++r) {
      if (rm_dimension({m, r}) > 16) continue;
      ++cases;
      F2Matrix gens = rm_generators({m, r});
      WeightCensus brute = brute_force_census(gens);
      WeightCensus affine = min_weight_words({m, r});
      std::string tag = "rm(" + std::to_string(m) + "," + std::to_string(r) + ")";
      o.require(brute.d && *brute.d == (1 << (m - r)),
                tag + ": brute d != 2^(m-r)");
      o.require(brute.d == affine.d && brute.count == affine.count,
                tag + ": censuses disagree");
      // Every minimum-weight codeword must be an affine-subspace
      // indicator: enumerate the whole code and test supports directly.
      EchelonForm e(gens);
      std::uint64_t total = std::uint64_t(1) << e.rank();
      std::uint64_t seen = 0;
      for (std::uint64_t i = 1; i < total; ++i) {
        BitVec w(gens.ncols);
        for (std::size_t b = 0; b < e.rank(); ++b)
          if ((i >> b) & 1) w ^= e.rows()[b];
        if (int(w.weight()) == *brute.d) {
          ++seen;
          if (!support_is_affine(w, m)) {
            o.require(false, tag + ": minimum-weight word with non-affine "
                                   "support");
            break;
          }
        }
      }
      o.require(seen == brute.count, tag + ": word recount mismatch");
    }
  }
  o.note(std::to_string(cases) + " codes checked");
  return o;
}

// ---- criterion 4: Plotkin recursion spans the same codes ----
Outcome check_plotkin(const json&) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  for (int m = 0; m <= 7; ++m)
    for (int r = 0; r <= m; ++r) {
      ++cases;
      if (!row_space_equal(plotkin_generators({m, r}), rm_generators({m, r})))
        o.require(false, "mismatch at m=" + std::to_string(m) +
                             " r=" + std::to_string(r));
    }
  double dt = seconds_since(t0);
  o.require(cases == 36, "expected 36 cases");
  o.require(dt < 10.0, "took " + std::to_string(dt) + " s (>10)");
  o.note("36 cases");
  return o;
}

// ---- criterion 5: diagonal spaces are offset independent ----
Outcome check_diagonal(const json&) {
  Outcome o;
  std::mt19937 rng(20250810);
  for (int m : {4, 6}) {
    for (int f = 1; f <= m; ++f) {
      std::vector<std::uint32_t> types;
      for (int i1 = 1; i1 <= m; ++i1)
        for (int i2 = i1 + 1; i2 <= m; ++i2)
          if (i2 >= i1 + m - f)
            types.push_back((1u << (i1 - 1)) | (1u << (i2 - 1)));
      F2Matrix target = span_of_types(m, 2, types);
      for (int trial = 0; trial < 10; ++trial) {
        DiagonalParams p;
        p.m = m;
        p.f_max = f;
        for (int i1 = 1; i1 <= m; ++i1)
          for (int i2 = i1 + 1; i2 <= m; ++i2)
            p.offsets[{i1, i2}] = rng() & ((1u << m) - 1);
        if (!row_space_equal(diagonal_space(p), target))
          o.require(false, "m=" + std::to_string(m) + " f_max=" +
                               std::to_string(f) + " trial " +
                               std::to_string(trial));
      }
    }
  }
  o.note("10 random offset draws per (m, f_max)");
  return o;
}

// ---- criterion 6: gate classification and logical circuits ----
Outcome check_logic(const json& man) {
  Outcome o;
  const SubcubeCode& sc = logic_view_by_label("rubik");
  for (int d = 1; d <= 6; ++d) {
    GateEffect want_s = d <= 3   ? GateEffect::NotPreserving
                        : d == 4 ? GateEffect::NontrivialAction
                                 : GateEffect::TrivialAction;
    GateEffect want_t =
        d <= 5 ? GateEffect::NotPreserving : GateEffect::NontrivialAction;
    for (const Subcube& a : enumerate_subcubes(6, d)) {
      if (preserves_codespace(sc, GateLevel::S, a) != want_s) {
        o.require(false, "S misclassified at " + subcube_text(a));
        break;
      }
      if (preserves_codespace(sc, GateLevel::T, a) != want_t) {
        o.require(false, "T misclassified at " + subcube_text(a));
        break;
      }
    }
  }
  std::set<CczTriple> triples = logical_action_t_full(sc);
  // The full T action must touch every partition of the six coordinates
  // into three pairs.
  std::set<CczTriple> matchings;
  for (std::uint32_t a = 0; a < 64; ++a) {
    if (std::popcount(a) != 2 || !(a & 1u)) continue;
    std::uint32_t rest = 63u & ~a;
    std::uint32_t low = rest & (~rest + 1);  // lowest remaining coordinate
    for (std::uint32_t b = 0; b < 64; ++b) {
      if (std::popcount(b) != 2 || (b & ~rest) || !(b & low)) continue;
      CczTriple t{a, b, rest & ~b};
      std::sort(t.begin(), t.end());
      matchings.insert(t);
    }
  }
  o.require(triples == matchings, "CCZ triples differ from the 15 pairings");
  o.require(triples.size() ==
                man.at("logical_action").at("rubik_ccz_triples").get<std::size_t>(),
            "CCZ triple count");
  std::set<CczTriple> big = logical_action_t_full(logic_view_by_label("big-unfolded"));
  std::set<CczTriple> want_big;
  for (const auto& t : man.at("logical_action").at("big_unfolded_ccz_triples")) {
    CczTriple w{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (const auto& coord : t.at(std::size_t(i)))
        w[std::size_t(i)] |= 1u << (coord.get<int>() - 1);
    std::sort(w.begin(), w.end());
    want_big.insert(w);
  }
  o.require(big == want_big, "big-unfolded CCZ triple set");
  o.note("665 subcubes x {S,T} classified");
  return o;
}

// ---- criterion 7: factory rates ----
Outcome check_factory(const json& man) {
  Outcome o;
  const json& lead = man.at("leading_order_at_p_1e-3");
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  o.require(rel(leading_order(8256, 4, 1e-3),
                lead.at("big-unfolded").get<double>()) < 1e-9,
            "leading order big-unfolded");
  o.require(rel(leading_order(10416, 4, 1e-3), lead.at("rubik").get<double>()) <
                1e-9,
            "leading order rubik");
  o.require(rel(leading_order(11811, 7, 1e-3),
                lead.at("qrm722-punctured").get<double>()) < 1e-9,
            "leading order qrm722-punctured");

  auto check_rate = [&](const std::string& label, double p, int w_max,
                        double target, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    RateReport r = truncated_rates(code_by_label(label), p, w_max);
    double dt = seconds_since(t0);
    o.require(rel(r.conditional_infidelity, target) < tol,
              label + ": conditional " +
                  std::to_string(r.conditional_infidelity) + " vs " +
                  std::to_string(target));
    if (code_by_label(label).n == 64 && w_max == 5)
      o.require(dt < 60.0, label + ": took " + std::to_string(dt) + " s");
  };
  check_rate("small-unfolded", 1e-3, 4, 35 * std::pow(1e-3, 3), 0.02);
  check_rate("big-unfolded", 1e-3, 5, 8256 * std::pow(1e-3, 4), 0.02);
  check_rate("rubik", 1e-3, 5, 10416 * std::pow(1e-3, 4), 0.02);
  check_rate("qrm301", 1e-2, 4, 28 * std::pow(1e-2, 2), 0.05);
  return o;
}

// ---- criterion 8: shortened/punctured rank tables ----
Outcome check_appendix(const json& man) {
  Outcome o;
  F2Matrix hx_std = monomial_generators({4, 1});
  F2Matrix hz_std = monomial_generators({4, 2});
  F2Matrix hx_fix = rm_generators({4, 1});
  F2Matrix hz_fix = rm_generators({4, 2});
  o.require(row_space_equal(hx_std, hx_fix) && row_space_equal(hz_std, hz_fix),
            "presentations span different spaces");

  auto pair_of = [](const F2Matrix& m) {
    return std::pair<std::size_t, std::size_t>{m.nrows(), rank(m)};
  };
  auto expect = [&](const json& table, const char* key, const F2Matrix& m) {
    auto [rows, rk] = pair_of(m);
    const json& e = table.at(key);
    o.require(rows == e.at(0).get<std::size_t>() &&
                  rk == e.at(1).get<std::size_t>(),
              std::string(key) + ": got (" + std::to_string(rows) + "," +
                  std::to_string(rk) + ")");
  };
  const json& before = man.at("appendix").at("before");
  // Before puncturing the logical sets coincide with the stabilizer sets.
  expect(before, "hx_standard", hx_std);
  expect(before, "lx_standard", hx_std);
  expect(before, "hz_standard", hz_std);
  expect(before, "lz_standard", hz_std);
  expect(before, "hx_fixed", hx_fix);
  expect(before, "lx_fixed", hx_fix);
  expect(before, "hz_fixed", hz_fix);
  expect(before, "lz_fixed", hz_fix);
  const json& after = man.at("appendix").at("after");
  // Stabilizers are shortened, logical operator sets only lose the column.
  expect(after, "hx_standard", shorten(hx_std, 0));
  expect(after, "lx_standard", drop_column(hx_std, 0));
  expect(after, "hz_standard", shorten(hz_std, 0));
  expect(after, "lz_standard", drop_column(hz_std, 0));
  expect(after, "hx_fixed", shorten(hx_fix, 0));
  expect(after, "lx_fixed", drop_column(hx_fix, 0));
  expect(after, "hz_fixed", shorten(hz_fix, 0));
  expect(after, "lz_fixed", drop_column(hz_fix, 0));
  o.require(row_space_equal(shorten(hz_std, 0), shorten(hz_fix, 0)),
            "shortened presentations span different spaces");
  o.note("16 (rows, rank) pairs");
  return o;
}

// ---- criterion 9: layout geometry and golden files ----
Outcome check_layout(const json& man) {
  Outcome o;
  LayoutSpec p6 = layout_spec(LayoutKind::planar6);
  const NamedBasis& b611 = basis_by_label("qrm611");
  std::set<std::pair<int, int>> box_positions;
  int product_boxes = 0;
  int appended = 0, appended_contiguous = 0;
  std::string split_list;
  for (std::size_t i = 0; i < b611.generators.size(); ++i) {
    Footprint f = footprint(p6, b611.generators[i]);
    if (i < 49) {
      bool two_by_two = f.contiguous_box && f.hi[0] - f.lo[0] == 1 &&
                        f.hi[1] - f.lo[1] == 1;
      if (two_by_two) {
        ++product_boxes;
        box_positions.insert({f.lo[0], f.lo[1]});
      }
    } else {
      ++appended;
      if (f.contiguous_box) {
        ++appended_contiguous;
      } else {
        if (!split_list.empty()) split_list += " ";
        split_list += f.id;
      }
    }
  }
  o.require(product_boxes ==
                man.at("layout").at("planar6_product_boxes").get<int>(),
            "product 2x2 boxes: " + std::to_string(product_boxes));
  o.require(box_positions.size() == 49, "box positions do not tile 0..6 x 0..6");
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y)
      if (!box_positions.count({x, y}))
        o.require(false, "missing box at " + std::to_string(x) + "," +
                             std::to_string(y));
  o.require(appended == man.at("layout").at("planar6_appended").get<int>(),
            "appended generator count");
  o.require(appended_contiguous == appended,
            "appended footprints not all contiguous runs/boxes; split: " +
                split_list);

  LayoutSpec r6 = layout_spec(LayoutKind::rubik6);
  const NamedBasis& brk = basis_by_label("rubik");
  int bulk_boxes = 0;
  for (const Subcube& g : brk.generators) {
    Footprint f = footprint(r6, g);
    if (f.contiguous_box && f.hi[0] - f.lo[0] == 1 && f.hi[1] - f.lo[1] == 1 &&
        f.hi[2] - f.lo[2] == 1)
      ++bulk_boxes;
  }
  o.require(bulk_boxes == man.at("layout").at("rubik_bulk_boxes").get<int>(),
            "rubik 2x2x2 boxes: " + std::to_string(bulk_boxes));

  // Footprint cell counts across every shipped layout/basis pairing.
  auto count_cells = [&](const LayoutSpec& spec, const NamedBasis& basis) {
    for (const Subcube& g : basis.generators) {
      Footprint f = footprint(spec, g);
      if (f.cells.size() != (std::size_t(1) << g.dim()))
        o.require(false, spec.label + "/" + basis.label +
                             ": cell count != 2^dim at " + f.id);
    }
  };
  count_cells(layout_spec(LayoutKind::planar4), basis_by_label("small-unfolded"));
  count_cells(p6, b611);
  count_cells(p6, basis_by_label("big-unfolded"));
  count_cells(r6, brk);
  count_cells(layout_spec(LayoutKind::cube7), basis_by_label("qrm722"));

  // Golden SVG bytes.
  for (const auto& [layout, basis, file] :
       {std::tuple{std::string("planar-4"), std::string("small-unfolded"),
                   std::string("planar-4.svg")},
        std::tuple{std::string("planar-6"), std::string("qrm611"),
                   std::string("planar-6.svg")}}) {
    std::string got = export_layout(layout_by_label(layout),
                                    basis_by_label(basis), "svg");
    std::string want = read_file(golden_file_path(file));
    o.require(got == want, file + ": bytes differ from golden file");
  }
  return o;
}

// ---- criterion 10: Monte Carlo reproducibility and convergence ----
Outcome check_monte_carlo(const json&) {
  Outcome o;
  const CssCode& q301 = code_by_label("qrm301");
  McReport a = monte_carlo(q301, 0.05, 1000000, 424242);
  McReport b = monte_carlo(q301, 0.05, 1000000, 424242);
  McReport c = monte_carlo(q301, 0.05, 1000000, 424242, serial_policy);
  McReport d = monte_carlo(q301, 0.05, 1000000, 424242, {Exec::parallel, 3});
  auto same = [](const McReport& x, const McReport& y) {
    return x.accepted == y.accepted && x.logical == y.logical &&
           x.p_accept == y.p_accept &&
           x.conditional_infidelity == y.conditional_infidelity;
  };
  o.require(same(a, b) && same(a, c) && same(a, d),
            "reports differ across runs/shard counts");
  RateReport exact = truncated_rates(q301, 0.05, 8);
  double x = exact.conditional_infidelity;
  double sigma = std::sqrt(x * (1 - x) / double(a.accepted));
  o.require(std::abs(a.conditional_infidelity - x) <= 3 * sigma,
            "estimate " + std::to_string(a.conditional_infidelity) +
                " beyond 3 sigma of " + std::to_string(x));
  double sa = std::sqrt(exact.p_accept * (1 - exact.p_accept) /
                        double(a.samples));
  o.require(std::abs(a.p_accept - exact.p_accept) <= 3 * sa,
            "acceptance rate beyond 3 sigma");
  return o;
}

}  // namespace

std::string default_manifest_path() {
  return std::string(QRMCUBE_SOURCE_DIR) + "/data/expected_values.json";
}

std::string golden_file_path(const std::string& name) {
  return std::string(QRMCUBE_SOURCE_DIR) + "/tests/golden/" + name;
}

std::vector<CriterionResult> run_acceptance(const std::string& manifest_path,
                                            std::vector<int> which) {
  json man = json::parse(read_file(manifest_path));
  struct Entry {
    const char* name;
    std::function<Outcome(const json&)> fn;
  };
  const std::vector<Entry> entries{
      {"basis verification (11/57/54/42/99)", check_bases},
      {"counting suite (exact integers)", check_counting},
      {"oracle equivalence (brute vs affine)", check_oracle_equivalence},
      {"Plotkin recursion equivalence", check_plotkin},
      {"diagonal-space offset independence", check_diagonal},
      {"gate classification and CCZ circuits", check_logic},
      {"factory rates", check_factory},
      {"shortening/puncturing rank tables", check_appendix},
      {"layout footprints and golden files", check_layout},
      {"Monte Carlo reproducibility", check_monte_carlo},
  };
  if (which.empty())
    for (int i = 1; i <= int(entries.size()); ++i) which.push_back(i);
  std::vector<CriterionResult> out;
  for (int idx : which) {
    if (idx < 1 || idx > int(entries.size()))
      throw std::invalid_argument("criterion index out of range");
    const Entry& e = entries[std::size_t(idx - 1)];
    CriterionResult r;
    r.index = idx;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    Outcome oc = e.fn(man);
    r.seconds = seconds_since(t0);
    r.pass = oc.pass;
    r.detail = oc.detail;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qrmcube
