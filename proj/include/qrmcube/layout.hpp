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
#include <string>
#include <vector>

#include "qrmcube/bases.hpp"
#include "qrmcube/cube.hpp"

namespace qrmcube {

enum class LayoutKind { planar4, planar6, rubik6, cube7 };

/// Gray-code flattening of the m-cube onto a 2D/3D grid. Each spatial
/// axis owns an ordered group of cube coordinates; a vertex's position
/// on that axis is the Gray-order index of its group bits (read in the
/// listed coordinate order, so a reversed listing reverses the roles).
struct LayoutSpec {
  LayoutKind kind = LayoutKind::planar4;
  std::string label;
  int m = 0;
  std::vector<std::vector<int>> axes;  // ordered coordinate groups

  int dims() const { return int(axes.size()); }
  std::array<int, 3> grid() const;  // cells per axis (1 for unused)
};

LayoutSpec layout_spec(LayoutKind kind);
LayoutSpec layout_by_label(const std::string& label);

/// Grid cell of one vertex; unused axes are 0. Bijective onto the grid.
std::array<int, 3> assign_coordinates(const LayoutSpec& spec,
                                      std::uint32_t vertex);

struct Footprint {
  std::string id;  // subcube text form
  std::vector<std::array<int, 3>> cells;  // sorted
  std::array<int, 3> lo{0, 0, 0};
  std::array<int, 3> hi{0, 0, 0};
  bool contiguous_box = false;  // cells exactly fill the bounding box
  /// Cells a bounding box would add on top of the actual support; a
  /// rough gauge of the helper qubits needed to square off non-box
  /// generators (heuristic only).
  int excess_cells = 0;
};

Footprint footprint(const LayoutSpec& spec, const Subcube& g);

/// Serialized layout: JSON for any spec, SVG for 2D specs only. Byte
/// stable for fixed inputs (fixed pitch, palette, ordering).
std::string export_layout(const LayoutSpec& spec, const NamedBasis& basis,
                          const std::string& format);

}  // namespace qrmcube
