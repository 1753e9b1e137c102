// Copyright 2026 The severi-census Authors. All Rights Reserved.
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
#include <vector>

#include "severi/numerics.hpp"
#include "severi/triangulation.hpp"
#include "severi/tropical.hpp"

namespace severi {

/// What to draw. A triangulation goes in the left panel with its M-points,
/// the dual curve (if any) in a panel to its right; an amoeba cloud is drawn
/// on its own with axes.
struct Figure {
  std::optional<Triangulation> triangulation;
  std::optional<TropicalCurve> curve;
  std::optional<std::vector<AmoebaPoint>> amoeba;
};

/// Lattice coordinates are multiplied by this many pixels.
inline constexpr int kSvgScale = 40;

std::string render_svg(const Figure& figure);

/// Writes render_svg(figure). Errors: IoError.
void emit_svg(const Figure& figure, const std::string& path);

}  // namespace severi
