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

#include "qrmcube/layout.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace qrmcube {

std::array<int, 3> LayoutSpec::grid() const {
  std::array<int, 3> g{1, 1, 1};
  for (int a = 0; a < dims(); ++a) g[std::size_t(a)] = 1 << axes[std::size_t(a)].size();
  return g;
}

LayoutSpec layout_spec(LayoutKind kind) {
  // Second groups are listed high-coordinate-first; that role reversal
  // is what lines the product generators up into grid blocks.
  switch (kind) {
    case LayoutKind::planar4:
      return {kind, "planar-4", 4, {{1, 2}, {4, 3}}};
    case LayoutKind::planar6:
      return {kind, "planar-6", 6, {{1, 2, 3}, {6, 5, 4}}};
    case LayoutKind::rubik6:
      return {kind, "rubik-6", 6, {{1, 2}, {3, 4}, {5, 6}}};
    case LayoutKind::cube7:
      return {kind, "cube-7", 7, {{1, 2, 3}, {6, 5, 4}, {7}}};
  }
  throw std::invalid_argument("layout_spec: unknown kind");
}

LayoutSpec layout_by_label(const std::string& label) {
  for (LayoutKind k : {LayoutKind::planar4, LayoutKind::planar6,
                       LayoutKind::rubik6, LayoutKind::cube7}) {
    LayoutSpec s = layout_spec(k);
    if (s.label == label) return s;
  }
  throw std::invalid_argument("unknown layout '" + label + "'");
}

std::array<int, 3> assign_coordinates(const LayoutSpec& spec,
                                      std::uint32_t vertex) {
  std::array<int, 3> out{0, 0, 0};
  for (int a = 0; a < spec.dims(); ++a) {
    const auto& group = spec.axes[std::size_t(a)];
    std::uint32_t tuple = 0;
    for (std::size_t i = 0; i < group.size(); ++i)
      if ((vertex >> (group[i] - 1)) & 1) tuple |= std::uint32_t(1) << i;
    out[std::size_t(a)] = gray_position(int(group.size()), tuple);
  }
  return out;
}

Footprint footprint(const LayoutSpec& spec, const Subcube& g) {
  if (g.m != spec.m) throw dimension_error("footprint: wrong cube");
  Footprint f;
  f.id = subcube_text(g);
  std::uint32_t sub = g.typeset;
  while (true) {
    f.cells.push_back(assign_coordinates(spec, g.base | sub));
    if (sub == 0) break;
    sub = (sub - 1) & g.typeset;
  }
  std::sort(f.cells.begin(), f.cells.end());
  f.lo = f.hi = f.cells.front();
  for (const auto& c : f.cells)
    for (int a = 0; a < 3; ++a) {
      f.lo[std::size_t(a)] = std::min(f.lo[std::size_t(a)], c[std::size_t(a)]);
      f.hi[std::size_t(a)] = std::max(f.hi[std::size_t(a)], c[std::size_t(a)]);
    }
  long box = 1;
  for (int a = 0; a < 3; ++a)
    box *= f.hi[std::size_t(a)] - f.lo[std::size_t(a)] + 1;
  f.contiguous_box = box == long(f.cells.size());
  f.excess_cells = int(box - long(f.cells.size()));
  return f;
}

namespace {

nlohmann::json layout_json(const LayoutSpec& spec, const NamedBasis& basis) {
  nlohmann::json j;
  j["layout"] = spec.label;
  j["qubits"] = nlohmann::json::array();
  for (std::uint32_t v = 0; v < (std::uint32_t(1) << spec.m); ++v) {
    auto cell = assign_coordinates(spec, v);
    nlohmann::json q;
    std::string bits;
    for (int i = 1; i <= spec.m; ++i) bits += ((v >> (i - 1)) & 1) ? '1' : '0';
    q["vertex"] = bits;
    q["x"] = cell[0];
    q["y"] = cell[1];
    if (spec.dims() == 3) q["z"] = cell[2];
    j["qubits"].push_back(q);
  }
  j["stabilizers"] = nlohmann::json::array();
  for (const Subcube& g : basis.generators) {
    Footprint f = footprint(spec, g);
    nlohmann::json s;
    s["id"] = f.id;
    s["cells"] = nlohmann::json::array();
    for (const auto& c : f.cells) {
      if (spec.dims() == 3)
        s["cells"].push_back({c[0], c[1], c[2]});
      else
        s["cells"].push_back({c[0], c[1]});
    }
    s["contiguous_box"] = f.contiguous_box;
    s["excess_cells"] = f.excess_cells;
    j["stabilizers"].push_back(s);
  }
  return j;
}

// Fixed SVG styling: 48px cell pitch, 24px margin, 4px box inset,
// 8-color palette cycled by generator index. Integer geometry only, so
// output bytes are stable.
constexpr int kPitch = 48;
constexpr int kMargin = 24;
constexpr int kInset = 4;
const char* kPalette[8] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                           "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

std::string layout_svg(const LayoutSpec& spec, const NamedBasis& basis) {
  if (spec.dims() != 2)
    throw std::invalid_argument(
        "export_layout: svg output supports 2D layouts only");
  auto grid = spec.grid();
  int w = grid[0], h = grid[1];
  int width = 2 * kMargin + w * kPitch;
  int height = 2 * kMargin + h * kPitch;
  auto cell_x = [&](int cx) { return kMargin + cx * kPitch; };
  auto cell_y = [&](int cy) { return kMargin + (h - 1 - cy) * kPitch; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<rect width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
  int idx = 0;
  for (const Subcube& g : basis.generators) {
    Footprint f = footprint(spec, g);
    const char* color = kPalette[idx % 8];
    if (f.contiguous_box) {
      int x = cell_x(f.lo[0]) + kInset;
      int y = cell_y(f.hi[1]) + kInset;
      int bw = (f.hi[0] - f.lo[0] + 1) * kPitch - 2 * kInset;
      int bh = (f.hi[1] - f.lo[1] + 1) * kPitch - 2 * kInset;
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(bw) + "\" height=\"" +
             std::to_string(bh) + "\" fill=\"" + color +
             "\" fill-opacity=\"0.35\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
    } else {
      // Split support: outline each cell instead of filling a box.
      for (const auto& c : f.cells) {
        int x = cell_x(c[0]) + kInset;
        int y = cell_y(c[1]) + kInset;
        int s = kPitch - 2 * kInset;
        out += "<rect x=\"" + std::to_string(x) + "\" y=\"" +
               std::to_string(y) + "\" width=\"" + std::to_string(s) +
               "\" height=\"" + std::to_string(s) + "\" fill=\"none\" stroke=\"" +
               color + "\" stroke-width=\"2\" stroke-dasharray=\"6,3\"/>\n";
      }
    }
    ++idx;
  }
  for (int cy = 0; cy < h; ++cy)
    for (int cx = 0; cx < w; ++cx) {
      int x = cell_x(cx) + kPitch / 2;
      int y = cell_y(cy) + kPitch / 2;
      out += "<circle cx=\"" + std::to_string(x) + "\" cy=\"" +
             std::to_string(y) + "\" r=\"4\" fill=\"#333333\"/>\n";
    }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string export_layout(const LayoutSpec& spec, const NamedBasis& basis,
                          const std::string& format) {
  for (const Subcube& g : basis.generators)
    if (g.m != spec.m)
      throw dimension_error("export_layout: basis lives on a different cube");
  if (format == "json") return layout_json(spec, basis).dump(2) + "\n";
  if (format == "svg") return layout_svg(spec, basis);
  throw std::invalid_argument("export_layout: format must be json or svg");
}

}  // namespace qrmcube
