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
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace severi {

/// A point of Z^2.
struct IntPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const IntPoint&) const = default;
};

IntPoint operator+(IntPoint a, IntPoint b);
IntPoint operator-(IntPoint a, IntPoint b);
IntPoint operator-(IntPoint a);

std::int64_t cross(IntPoint a, IntPoint b);
/// Twice the signed area of (a, b, c); positive for a counterclockwise turn.
std::int64_t orient(IntPoint a, IntPoint b, IntPoint c);
/// Number of lattice steps along v, i.e. gcd(|x|, |y|).
std::int64_t lattice_length(IntPoint v);

/// Convex lattice polygon: strictly convex, counterclockwise, with the origin
/// on its boundary (a vertex after normalize_polygon). The vertex list starts
/// at the lexicographically smallest vertex.
class LatticePolygon {
 public:
  /// Validates a polygon whose boundary already passes through (0,0), without
  /// translating it. Used for kites, whose sublattices are stated in their own
  /// coordinates. Errors: NotConvex, Degenerate, InvalidArgument.
  static LatticePolygon in_place(std::span<const IntPoint> raw);

  const std::vector<IntPoint>& vertices() const { return vertices_; }
  /// Translation that was added to the raw input vertices.
  IntPoint offset() const { return offset_; }
  std::size_t size() const { return vertices_.size(); }
  std::int64_t twice_area() const { return twice_area_; }

  bool operator==(const LatticePolygon&) const = default;

 private:
  friend LatticePolygon normalize_polygon(std::span<const IntPoint> raw);

  std::vector<IntPoint> vertices_;
  IntPoint offset_;
  std::int64_t twice_area_ = 0;
};

/// Orients counterclockwise and translates the lexicographically smallest
/// vertex to the origin. Errors: NotConvex, Degenerate.
LatticePolygon normalize_polygon(std::span<const IntPoint> raw);

enum class Region { Interior, Boundary, All };
enum class Location { Inside, OnBoundary, Outside };

Location locate(const LatticePolygon& poly, IntPoint p);

/// Lattice points of the region in lexicographic order.
std::vector<IntPoint> lattice_points(const LatticePolygon& poly, Region region);

/// Boundary lattice points walked counterclockwise from vertex 0.
std::vector<IntPoint> boundary_points_ccw(const LatticePolygon& poly);

/// |boundary ∩ Z^2| via edge gcds.
std::int64_t boundary_point_count(const LatticePolygon& poly);

/// Dimension |∂Δ ∩ Z^2| + g - 1 of every component of the Severi variety.
std::int64_t severi_dimension(const LatticePolygon& poly, std::int64_t genus);

/// Finite-index sublattice of Z^2 in Hermite normal form. The basis columns
/// are (d1, c) and (0, d2) with d1, d2 > 0 and 0 <= c < d2, which is unique
/// for each sublattice, so equality of sublattices is equality of (d1, c, d2).
class Sublattice {
 public:
  Sublattice() = default;  // Z^2

  /// Validates the normal form; throws InvalidLattice.
  static Sublattice from_hnf(std::int64_t d1, std::int64_t c, std::int64_t d2);
  static Sublattice integer() { return {}; }

  std::int64_t d1() const { return d1_; }
  std::int64_t c() const { return c_; }
  std::int64_t d2() const { return d2_; }
  std::int64_t index() const { return d1_ * d2_; }
  std::array<IntPoint, 2> basis() const { return {IntPoint{d1_, c_}, IntPoint{0, d2_}}; }

  auto operator<=>(const Sublattice&) const = default;

 private:
  std::int64_t d1_ = 1;
  std::int64_t c_ = 0;
  std::int64_t d2_ = 1;
};

/// Errors: RankDeficient.
Sublattice hnf_sublattice(std::span<const IntPoint> generators);

bool contains(const Sublattice& lat, IntPoint p);
bool contains(const Sublattice& outer, const Sublattice& inner);

/// M = { m : <n, m> ∈ rZ for all n ∈ N }, r = [Z^2 : N]. This is the image of
/// N under the quarter turn (x, y) -> (-y, x).
Sublattice rotate_dual(const Sublattice& lat);

/// Number of steps of `lat` along v (v must lie in lat).
std::int64_t sublattice_length(const Sublattice& lat, IntPoint v);

/// |Δ° ∩ M| - g.
std::int64_t delta_M(const LatticePolygon& poly, const Sublattice& lat, std::int64_t genus);

/// Kite Δ_{k,k'} with vertices (0,0), (±1,k), (0,k+k').
struct KiteSpec {
  std::int64_t k = 0;
  std::int64_t k_prime = 1;

  /// Throws InvalidArgument unless 0 <= k <= k' and k' > 0.
  static KiteSpec make(std::int64_t k, std::int64_t k_prime);

  std::int64_t height() const { return k + k_prime; }
  /// The kite in its own coordinates (offset zero). Every sublattice that
  /// contains the boundary points contains all vertices, so keeping (0,0)
  /// as the origin does not change the census. For k = 0 the kite is the
  /// triangle (-1,0), (1,0), (0,k') and the origin is a boundary point.
  LatticePolygon polygon() const;

  auto operator<=>(const KiteSpec&) const = default;
};

}  // namespace severi
