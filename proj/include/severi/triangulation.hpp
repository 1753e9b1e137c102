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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "severi/lattice.hpp"
#include "severi/rational.hpp"

namespace severi {

using Triangle = std::array<std::size_t, 3>;  // counterclockwise vertex indices

/// M-integral triangulation of a polygon. `heights`, when present, is a
/// lifting certificate: the piecewise-linear function it induces is strictly
/// convex across every interior edge.
struct Triangulation {
  LatticePolygon polygon;
  Sublattice lattice;
  std::vector<IntPoint> vertices;
  std::vector<Triangle> triangles;
  std::optional<std::vector<Rational>> heights;
  /// Translation from the stored coordinates to the coordinates a
  /// construction was stated in (kites: (0, -k), the y-axis segment becomes
  /// [-k, k']). Zero when unused.
  IntPoint shift;

  bool operator==(const Triangulation&) const = default;
};

struct InteriorEdge {
  std::size_t a, b;            // oriented a -> b in triangle `left`
  std::size_t left, right;     // triangle indices; right contains b -> a
  std::size_t left_opposite;   // third vertex of `left`
  std::size_t right_opposite;  // third vertex of `right`
};

struct BoundaryEdge {
  std::size_t a, b;  // oriented a -> b (counterclockwise along the boundary)
  std::size_t triangle;
};

struct EdgeStructure {
  std::vector<InteriorEdge> interior;
  std::vector<BoundaryEdge> boundary;
};

/// Edge adjacency. Throws InvalidTriangulation if an edge is shared by more
/// than two triangles or by two triangles on the same side.
EdgeStructure edge_structure(const Triangulation& tri);

/// Checks the tiling: positive orientations, exact area sum, manifold edges,
/// no vertex inside another edge, boundary edges on ∂Δ, vertices in M. With
/// `require_boundary_points`, additionally every point of ∂Δ ∩ M must be a
/// vertex. Throws InvalidTriangulation.
void validate(const Triangulation& tri, bool require_boundary_points = true);

std::size_t interior_vertex_count(const Triangulation& tri);

/// Fan over a generating interior point followed by point insertions until
/// `genus` interior vertices are used. Attaches a height certificate.
/// Errors: InvalidLattice (boundary condition fails), GenusOutOfRange,
/// NoGeneratingPoint.
Triangulation incremental_triangulation(const LatticePolygon& poly, const Sublattice& lat,
                                        std::int64_t genus);

/// The explicit odd-index kite triangulation: interior vertices on the
/// y-axis at (shifted) heights k'-2r, ..., k'-2κr, then k'-2κr-r, ...,
/// k'-(κ+g)r, every axis segment coned to both side vertices. Stored in kite
/// coordinates with shift (0, -k). Errors: NotAdmissible,
/// EvenIndexUnsupported, GenusOutOfRange.
Triangulation kite_triangulation(const KiteSpec& kite, std::int64_t genus, std::int64_t index,
                                 std::int64_t kappa);

/// Lattice lengths of the y-axis segments of a kite triangulation, top to
/// bottom, measured in the triangulation's lattice.
std::vector<std::int64_t> kite_axis_lengths(const Triangulation& tri);

/// One row per interior edge: coefficients c with sum_v c[v] h[v] > 0 iff
/// the lift is strictly convex across that edge.
std::vector<std::vector<std::int64_t>> convexity_constraints(const Triangulation& tri);

/// Exact check of a height vector against every interior edge.
bool verify_heights(const Triangulation& tri, const std::vector<Rational>& heights);

/// Decides regularity. Returns a certificate (heights) or nullopt when the
/// triangulation is not regular. A floating-point phase-1 simplex proposes
/// heights that are verified exactly; when that fails the same simplex runs
/// in exact rational arithmetic with Bland's rule, which decides the system.
std::optional<std::vector<Rational>> is_regular(const Triangulation& tri);

/// Same decision by Fourier-Motzkin elimination (heights of one triangle
/// fixed to 0). Exponential in the worst case; meant for small
/// triangulations and as an independent cross-check. Throws NonConvergence
/// when the inequality count exceeds `max_rows`.
std::optional<std::vector<Rational>> is_regular_fourier_motzkin(const Triangulation& tri,
                                                                std::size_t max_rows = 20000);

}  // namespace severi
