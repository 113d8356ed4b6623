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

#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qrmcube/checks.hpp"
#include "qrmcube/layout.hpp"
#include "qrmcube/registry.hpp"

using namespace qrmcube;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "missing file " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("coordinate assignment is a bijection") {
  for (LayoutKind k : {LayoutKind::planar4, LayoutKind::planar6,
                       LayoutKind::rubik6, LayoutKind::cube7}) {
    LayoutSpec s = layout_spec(k);
    std::set<std::array<int, 3>> seen;
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << s.m); ++v) {
      auto cell = assign_coordinates(s, v);
      auto grid = s.grid();
      for (int a = 0; a < 3; ++a) {
        CHECK(cell[std::size_t(a)] >= 0);
        CHECK(cell[std::size_t(a)] < grid[std::size_t(a)]);
      }
      seen.insert(cell);
    }
    CHECK(seen.size() == (std::size_t(1) << s.m));
    CHECK(assign_coordinates(s, 0) == std::array<int, 3>{0, 0, 0});
  }
}

TEST_CASE("planar-6 coordinates") {
  LayoutSpec p6 = layout_spec(LayoutKind::planar6);
  // vertex with x1x2x3 = 110 and x4x5x6 = 010
  std::uint32_t v = 0b010011;
  CHECK(assign_coordinates(p6, v) == std::array<int, 3>{2, 3, 0});
}

TEST_CASE("planar-6 footprints") {
  LayoutSpec p6 = layout_spec(LayoutKind::planar6);
  const NamedBasis& b = basis_by_label("qrm611");
  std::set<std::pair<int, int>> positions;
  for (int i = 0; i < 49; ++i) {
    Footprint f = footprint(p6, b.generators[std::size_t(i)]);
    CHECK(f.contiguous_box);
    CHECK(f.hi[0] - f.lo[0] == 1);
    CHECK(f.hi[1] - f.lo[1] == 1);
    positions.insert({f.lo[0], f.lo[1]});
  }
  CHECK(positions.size() == 49);
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y) CHECK(positions.count({x, y}) == 1);

  // the lower boundary square flattens to a 4x1 run
  Footprint low = footprint(p6, poly_subcube(6, Poly::parse("X3(X4+1)(X5+1)(X6+1)")));
  CHECK(low.contiguous_box);
  CHECK(low.lo == std::array<int, 3>{4, 0, 0});
  CHECK(low.hi == std::array<int, 3>{7, 0, 0});
}

TEST_CASE("split appended footprints are pinned") {
  // Four of the eight appended squares flatten onto two separated
  // 2-cell runs; their images are fixed here so any layout change is
  // caught.
  LayoutSpec p6 = layout_spec(LayoutKind::planar6);
  auto cells = [&](const char* poly) {
    Footprint f = footprint(p6, poly_subcube(6, Poly::parse(poly)));
    CHECK_FALSE(f.contiguous_box);
    return f.cells;
  };
  using C = std::vector<std::array<int, 3>>;
  CHECK(cells("X1X4(X5+1)(X6+1)") ==
        C{{1, 7, 0}, {2, 7, 0}, {5, 7, 0}, {6, 7, 0}});
  CHECK(cells("(X2+1)X4(X5+1)(X6+1)") ==
        C{{0, 7, 0}, {1, 7, 0}, {6, 7, 0}, {7, 7, 0}});
  CHECK(cells("(X1+1)(X2+1)X3X6") ==
        C{{7, 1, 0}, {7, 2, 0}, {7, 5, 0}, {7, 6, 0}});
  CHECK(cells("(X1+1)(X2+1)X3(X5+1)") ==
        C{{7, 0, 0}, {7, 1, 0}, {7, 6, 0}, {7, 7, 0}});
}

TEST_CASE("rubik footprints") {
  LayoutSpec r6 = layout_spec(LayoutKind::rubik6);
  const NamedBasis& b = basis_by_label("rubik");
  for (int i = 0; i < 27; ++i) {
    Footprint f = footprint(r6, b.generators[std::size_t(i)]);
    CHECK(f.contiguous_box);
    CHECK(f.hi[0] - f.lo[0] == 1);
    CHECK(f.hi[1] - f.lo[1] == 1);
    CHECK(f.hi[2] - f.lo[2] == 1);
  }
  // boundary slabs are contiguous boxes too
  for (std::size_t i = 27; i < b.generators.size(); ++i)
    CHECK(footprint(r6, b.generators[i]).contiguous_box);
}

TEST_CASE("footprint cell counts") {
  auto check_pair = [](const LayoutSpec& spec, const NamedBasis& b) {
    for (const Subcube& g : b.generators) {
      Footprint f = footprint(spec, g);
      CHECK(f.cells.size() == (std::size_t(1) << g.dim()));
    }
  };
  check_pair(layout_spec(LayoutKind::planar4), basis_by_label("small-unfolded"));
  check_pair(layout_spec(LayoutKind::planar6), basis_by_label("qrm611"));
  check_pair(layout_spec(LayoutKind::planar6), basis_by_label("big-unfolded"));
  check_pair(layout_spec(LayoutKind::rubik6), basis_by_label("rubik"));
  check_pair(layout_spec(LayoutKind::cube7), basis_by_label("qrm722"));
}

TEST_CASE("json export") {
  LayoutSpec p6 = layout_spec(LayoutKind::planar6);
  std::string bytes = export_layout(p6, basis_by_label("qrm611"), "json");
  auto j = nlohmann::json::parse(bytes);
  CHECK(j["layout"] == "planar-6");
  CHECK(j["qubits"].size() == 64);
  REQUIRE(j["stabilizers"].size() == 57);
  int boxes = 0;
  for (const auto& s : j["stabilizers"])
    if (s["contiguous_box"].get<bool>() && s["cells"].size() == 4) ++boxes;
  CHECK(boxes >= 49);

  LayoutSpec r6 = layout_spec(LayoutKind::rubik6);
  auto jr = nlohmann::json::parse(
      export_layout(r6, basis_by_label("rubik"), "json"));
  CHECK(jr["stabilizers"].size() == 42);
  CHECK(jr["qubits"][0].contains("z"));

  NamedBasis empty{"empty", "qrm611", 6, {}};
  auto je = nlohmann::json::parse(export_layout(p6, empty, "json"));
  CHECK(je["stabilizers"].empty());
  CHECK(je["qubits"].size() == 64);
}

TEST_CASE("svg export") {
  LayoutSpec r6 = layout_spec(LayoutKind::rubik6);
  CHECK_THROWS_AS(export_layout(r6, basis_by_label("rubik"), "svg"),
                  std::invalid_argument);
  CHECK_THROWS_AS(export_layout(layout_spec(LayoutKind::planar4),
                                basis_by_label("small-unfolded"), "png"),
                  std::invalid_argument);
}

TEST_CASE("golden svg bytes") {
  std::string p4 = export_layout(layout_spec(LayoutKind::planar4),
                                 basis_by_label("small-unfolded"), "svg");
  CHECK(p4 == slurp(golden_file_path("planar-4.svg")));
  std::string p6 = export_layout(layout_spec(LayoutKind::planar6),
                                 basis_by_label("qrm611"), "svg");
  CHECK(p6 == slurp(golden_file_path("planar-6.svg")));
}
