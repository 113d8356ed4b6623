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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qrmcube/checks.hpp"
#include "qrmcube/commands.hpp"

namespace {

int emit(const qrmcube::CommandResult& r, bool as_json) {
  if (as_json) {
    nlohmann::json j;
    j["status"] = r.ok ? "ok" : "fail";
    j["payload"] = r.payload;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.human << "\n";
  }
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qrmcube: quantum Reed-Muller cube codes, layout bases, and "
      "distillation-factory analysis"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::string name, code, layout, format, out;
  std::string manifest = qrmcube::default_manifest_path();
  double p = 1e-3;
  int w_max = 4;
  std::uint64_t samples = 100000, seed = 1;
  int m = 4, q = 1, r = 1;
  std::optional<int> puncture;

  auto* vb = app.add_subcommand("verify-basis",
                                "check a named basis against its code");
  vb->add_option("name", name,
                 "small-unfolded | qrm611 | big-unfolded | rubik | qrm722")
      ->required();

  auto* cs = app.add_subcommand("census", "minimum-weight operator census");
  cs->add_option("code", code, "code label")->required();

  auto* la = app.add_subcommand("logical-action",
                                "CCZ circuit of the transversal T gate");
  la->add_option("code", code, "code label")->required();

  auto* at =
      app.add_subcommand("appendix-tables", "recompute the rank tables of "
                                            "the 16-qubit code before/after "
                                            "puncturing");
  at->add_option("--manifest", manifest, "expected-values manifest");

  auto* ex = app.add_subcommand("export", "write a layout geometry file");
  ex->add_option("basis", name, "basis label")->required();
  ex->add_option("layout", layout, "planar-4 | planar-6 | rubik-6 | cube-7")
      ->required();
  ex->add_option("format", format, "json | svg")->required();
  ex->add_option("outfile", out, "output path");
  ex->add_option("--out", out, "output path (flag spelling)");

  auto* fa = app.add_subcommand("factory", "distillation factory analysis");
  fa->require_subcommand(1);
  auto* an = fa->add_subcommand("analyze", "exact truncated-weight rates");
  an->add_option("--code", code)->required();
  an->add_option("--p", p, "error probability per input state");
  an->add_option("--wmax", w_max, "truncation weight");
  auto* mc = fa->add_subcommand("mc", "Monte Carlo rates");
  mc->add_option("--code", code)->required();
  mc->add_option("--p", p, "error probability per input state");
  mc->add_option("--samples", samples);
  mc->add_option("--seed", seed);

  auto* qr = app.add_subcommand("qrm", "construct a code from parameters");
  qr->add_option("--m", m)->required();
  qr->add_option("--q", q)->required();
  qr->add_option("--r", r)->required();
  qr->add_option("--puncture", puncture, "puncture position");

  auto* rp = app.add_subcommand(
      "reproduce-paper", "recompute every published reference value");
  rp->add_option("--manifest", manifest, "expected-values manifest");

  CLI11_PARSE(app, argc, argv);

  using namespace qrmcube;
  if (*vb) return emit(cmd_verify_basis(name), as_json);
  if (*cs) return emit(cmd_census(code), as_json);
  if (*la) return emit(cmd_logical_action(code), as_json);
  if (*at) return emit(cmd_appendix_tables(manifest), as_json);
  if (*ex) {
    if (out.empty()) return emit({false, {}, "error: missing output path"},
                                 as_json);
    return emit(cmd_export(name, layout, format, out), as_json);
  }
  if (*fa) {
    if (*an) return emit(cmd_factory_analyze(code, p, w_max), as_json);
    if (*mc) return emit(cmd_factory_mc(code, p, samples, seed), as_json);
  }
  if (*qr) return emit(cmd_qrm(m, q, r, puncture), as_json);
  if (*rp) return emit(cmd_reproduce(manifest), as_json);
  return 1;
}
