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

#include <cstdint>
#include <utility>
#include <vector>

#include "severi/lattice.hpp"
#include "severi/rational.hpp"
#include "severi/triangulation.hpp"

namespace severi {

struct RationalPoint {
  Rational x, y;

  bool operator==(const RationalPoint&) const = default;
};

/// Bounded edge dual to an interior edge a -> b of the triangulation.
/// `slope` is the edge vector b - a turned clockwise by a quarter, pointing
/// out of `from` into `to`. It equals weight * (primitive direction).
struct DualEdge {
  std::size_t from, to;  // triangle (= curve vertex) indices
  IntPoint slope;
  std::int64_t weight;    // lattice length of the primal edge in Z^2
  std::int64_t m_weight;  // lattice length in M
  Rational length;        // position(to) - position(from) = length * slope
  std::size_t primal_a, primal_b;
};

/// Unbounded leg dual to a boundary edge, leaving `from` outwards.
struct DualLeg {
  std::size_t from;
  IntPoint slope;
  std::int64_t weight;
  std::int64_t m_weight;
  std::size_t primal_a, primal_b;
};

struct TropicalCurve {
  std::vector<RationalPoint> vertices;  // gradient of each lifted triangle
  std::vector<DualEdge> edges;
  std::vector<DualLeg> legs;
  std::int64_t genus = 0;  // first Betti number 1 - V + E
};

/// Legendre dual of a lifted triangulation. Errors: MissingHeights,
/// InvalidTriangulation (heights not strictly convex).
TropicalCurve dual_tropical_curve(const Triangulation& tri);

bool is_trivalent(const TropicalCurve& curve);

/// Sum of outgoing slopes at each vertex is zero.
bool is_balanced(const TropicalCurve& curve);

struct CurveLattices {
  Sublattice n_gamma;  // generated by all slopes
  Sublattice m_gamma;  // generated by the subdivision vertices
};

/// Errors: DualityViolation when M(Γ) is not the quarter turn of N(Γ).
CurveLattices curve_lattices(const TropicalCurve& curve, const Triangulation& tri);

}  // namespace severi
