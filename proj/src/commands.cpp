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

#include "qrmcube/commands.hpp"

#include <cstdio>
#include <fstream>

#include "qrmcube/checks.hpp"
#include "qrmcube/distance.hpp"
#include "qrmcube/factory.hpp"
#include "qrmcube/layout.hpp"
#include "qrmcube/logic.hpp"
#include "qrmcube/registry.hpp"

namespace qrmcube {

namespace {

using nlohmann::json;

CommandResult fail(const std::string& why) {
  CommandResult r;
  r.ok = false;
  r.payload = json{{"error", why}};
  r.human = "error: " + why;
  return r;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

json census_json(const WeightCensus& c) {
  return json{{"code", c.code},
              {"d", c.d ? json(*c.d) : json(nullptr)},
              {"count", c.count},
              {"method", c.method},
              {"runtime_ms", c.runtime_ms}};
}

}  // namespace

CommandResult cmd_verify_basis(const std::string& name) {
  try {
    const NamedBasis& b = basis_by_label(name);
    const CssCode& target = code_by_label(b.target);
    BasisCheck c = verify_basis(b, target.hz);
    CommandResult r;
    r.ok = c.ok();
    r.payload = json{{"basis", b.label},
                     {"target", b.target},
                     {"generators", c.generators},
                     {"rank", c.rank},
                     {"target_rank", c.target_rank},
                     {"independent", c.independent},
                     {"spans", c.spans}};
    r.human = b.label + ": " + std::to_string(c.generators) +
              " generators, rank " + std::to_string(c.rank) + ", " +
              (c.ok() ? "basis of the target Z stabilizer group"
                      : "NOT a basis of the target");
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_census(const std::string& code) {
  try {
    CommandResult r;
    if (code == "big-unfolded") {
      auto [trivial, nontrivial] = classify_big_unfolded_w4();
      r.ok = true;
      r.payload = json{{"code", "big-unfolded"},
                       {"d", 4},
                       {"counts", {{"trivial", trivial}, {"nontrivial", nontrivial}}},
                       {"method", "affine-enumeration"}};
      r.human = "big-unfolded: weight-4 split " + std::to_string(trivial) +
                " trivial / " + std::to_string(nontrivial) +
                " nontrivial Z logicals";
      return r;
    }
    WeightCensus c;
    if (code == "small-unfolded" || code == "qrm722-punctured") {
      c = punctured_min_logicals(code_by_label(code));
    } else if (code == "qrm301") {
      c = nontrivial_logical_census(code_by_label(code));
    } else if (code == "rubik" || code == "qrm612") {
      c = min_weight_words({6, 4});
      c.code = "rubik";
    } else if (code == "qrm611") {
      c = min_weight_words({6, 4});
      c.code = "qrm611 (Z stabilizer row space)";
    } else if (code == "qrm722") {
      c = min_weight_words({7, 4});
      c.code = "qrm722 (Z stabilizer row space)";
    } else if (code == "qrm411") {
      c = min_weight_words({4, 2});
      c.code = "qrm411 (Z stabilizer row space)";
    } else {
      return fail("no census rule for code '" + code + "'");
    }
    r.ok = true;
    r.payload = census_json(c);
    r.human = c.code + ": d=" + (c.d ? std::to_string(*c.d) : "-") +
              ", count=" + std::to_string(c.count) + " (" + c.method + ")";
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_logical_action(const std::string& code) {
  try {
    const SubcubeCode& sc = logic_view_by_label(code);
    std::set<CczTriple> triples = logical_action_t_full(sc);
    CommandResult r;
    r.ok = true;
    r.payload = json::parse(circuit_to_json(sc.code->label, triples));
    r.human = sc.code->label + ": transversal T acts as " +
              std::to_string(triples.size()) + " CCZ gate(s)";
    for (const CczTriple& t : triples)
      r.human += "\n  CCZ " + typeset_str(t[0]) + " " + typeset_str(t[1]) +
                 " " + typeset_str(t[2]);
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_appendix_tables(const std::string& manifest_path) {
  try {
    std::vector<CriterionResult> res = run_acceptance(manifest_path, {8});
    CommandResult r;
    r.ok = res[0].pass;
    F2Matrix hx_std = monomial_generators({4, 1});
    F2Matrix hz_std = monomial_generators({4, 2});
    F2Matrix hx_fix = rm_generators({4, 1});
    F2Matrix hz_fix = rm_generators({4, 2});
    auto pr = [](const F2Matrix& m) {
      return json{m.nrows(), rank(m)};
    };
    r.payload = json{
        {"before",
         {{"hx_standard", pr(hx_std)},
          {"lx_standard", pr(hx_std)},
          {"hz_standard", pr(hz_std)},
          {"lz_standard", pr(hz_std)},
          {"hx_fixed", pr(hx_fix)},
          {"lx_fixed", pr(hx_fix)},
          {"hz_fixed", pr(hz_fix)},
          {"lz_fixed", pr(hz_fix)}}},
        {"after",
         {{"hx_standard", pr(shorten(hx_std, 0))},
          {"lx_standard", pr(drop_column(hx_std, 0))},
          {"hz_standard", pr(shorten(hz_std, 0))},
          {"lz_standard", pr(drop_column(hz_std, 0))},
          {"hx_fixed", pr(shorten(hx_fix, 0))},
          {"lx_fixed", pr(drop_column(hx_fix, 0))},
          {"hz_fixed", pr(shorten(hz_fix, 0))},
          {"lz_fixed", pr(drop_column(hz_fix, 0))}}},
        {"matches_expected", res[0].pass}};
    r.human = std::string("16 (rows, rank) pairs recomputed; ") +
              (res[0].pass ? "all match the expected table"
                           : "MISMATCH: " + res[0].detail);
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_export(const std::string& basis, const std::string& layout,
                         const std::string& format, const std::string& out) {
  try {
    const NamedBasis& b = basis_by_label(basis);
    LayoutSpec spec = layout_by_label(layout);
    std::string bytes = export_layout(spec, b, format);
    std::ofstream f(out, std::ios::binary);
    if (!f) return fail("cannot write " + out);
    f << bytes;
    CommandResult r;
    r.ok = true;
    r.payload = json{{"path", out},
                     {"bytes", bytes.size()},
                     {"stabilizer_count", b.generators.size()}};
    r.human = "wrote " + std::to_string(bytes.size()) + " bytes (" +
              std::to_string(b.generators.size()) + " stabilizers) to " + out;
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_factory_analyze(const std::string& code, double p,
                                  int w_max) {
  try {
    RateReport rep = truncated_rates(code_by_label(code), p, w_max);
    CommandResult r;
    r.ok = true;
    r.payload = json::parse(rate_report_to_json(rep));
    r.human = code + " at p=" + num(p) + ", w_max=" + std::to_string(w_max) +
              ": p_accept=" + num(rep.p_accept) +
              ", conditional infidelity=" + num(rep.conditional_infidelity);
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_factory_mc(const std::string& code, double p,
                             std::uint64_t samples, std::uint64_t seed) {
  try {
    McReport rep = monte_carlo(code_by_label(code), p, samples, seed);
    CommandResult r;
    r.ok = true;
    r.payload = json::parse(mc_report_to_json(rep));
    r.human = code + ": " + std::to_string(rep.accepted) + "/" +
              std::to_string(rep.samples) + " accepted, " +
              std::to_string(rep.logical) + " logical faults";
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_qrm(int m, int q, int r, std::optional<int> puncture) {
  try {
    CssCode c = qrm_code({m, q, r});
    if (puncture) c = puncture_code(c, *puncture);
    CommandResult res;
    res.ok = true;
    res.payload = json::parse(css_to_json(c));
    res.human = c.label + ": [[" + std::to_string(c.n) + "," +
                std::to_string(c.k) + "]], rank(hx)=" +
                std::to_string(rank(c.hx)) + ", rank(hz)=" +
                std::to_string(rank(c.hz));
    return res;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

CommandResult cmd_reproduce(const std::string& manifest_path) {
  try {
    std::vector<CriterionResult> res = run_acceptance(manifest_path);
    CommandResult r;
    r.ok = true;
    r.payload = json::array();
    for (const CriterionResult& c : res) {
      r.ok = r.ok && c.pass;
      r.payload.push_back(json{{"criterion", c.index},
                               {"name", c.name},
                               {"pass", c.pass},
                               {"seconds", c.seconds},
                               {"detail", c.detail}});
      r.human += std::string(c.pass ? "PASS" : "FAIL") + " criterion " +
                 std::to_string(c.index) + ": " + c.name + " (" +
                 std::to_string(c.seconds) + " s)" +
                 (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
    }
    return r;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace qrmcube
