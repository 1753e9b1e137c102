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

#include "severi/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "severi/errors.hpp"
#include "severi/int_math.hpp"

namespace severi {

IntPoint operator+(IntPoint a, IntPoint b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
IntPoint operator-(IntPoint a, IntPoint b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
IntPoint operator-(IntPoint a) { return {checked_sub(0, a.x), checked_sub(0, a.y)}; }

std::int64_t cross(IntPoint a, IntPoint b) {
  return narrow(static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x);
}

std::int64_t orient(IntPoint a, IntPoint b, IntPoint c) { return cross(b - a, c - a); }

std::int64_t lattice_length(IntPoint v) { return std::gcd(v.x, v.y); }

namespace {

// Checks strict convexity and returns the vertices counterclockwise together
// with twice the (positive) area.
std::pair<std::vector<IntPoint>, std::int64_t> validate_convex(std::span<const IntPoint> raw) {
  std::set<IntPoint> distinct(raw.begin(), raw.end());
  if (distinct.size() < 3)
    throw Error(ErrorCode::Degenerate, "polygon needs at least 3 distinct vertices");

  std::vector<IntPoint> pts(raw.begin(), raw.end());
  __int128 area2 = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const IntPoint& a = pts[i];
    const IntPoint& b = pts[(i + 1) % pts.size()];
    area2 += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
  }
  if (area2 == 0) throw Error(ErrorCode::Degenerate, "polygon has zero area");
  if (distinct.size() != pts.size())
    throw Error(ErrorCode::NotConvex, "polygon repeats a vertex");
  if (area2 < 0) {
    std::reverse(pts.begin(), pts.end());
    area2 = -area2;
  }

  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IntPoint& a = pts[i];
    const IntPoint& b = pts[(i + 1) % n];
    const IntPoint& c = pts[(i + 2) % n];
    if (orient(a, b, c) <= 0)
      throw Error(ErrorCode::NotConvex, "collinear or reflex turn in vertex list");
  }
  // All left turns still admits self-overlapping stars; every vertex must be
  // strictly left of every edge it is not on.
  for (std::size_t i = 0; i < n; ++i) {
    const IntPoint& a = pts[i];
    const IntPoint& b = pts[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient(a, b, pts[j]) <= 0)
        throw Error(ErrorCode::NotConvex, "vertex list is not a simple convex polygon");
    }
  }
  return {std::move(pts), narrow(area2)};
}

void rotate_to_lexmin(std::vector<IntPoint>& pts) {
  auto it = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), it, pts.end());
}

}  // namespace

LatticePolygon normalize_polygon(std::span<const IntPoint> raw) {
  auto [pts, area2] = validate_convex(raw);
  rotate_to_lexmin(pts);
  const IntPoint shift = -pts.front();
  for (auto& p : pts) p = p + shift;
  LatticePolygon poly;
  poly.vertices_ = std::move(pts);
  poly.offset_ = shift;
  poly.twice_area_ = area2;
  return poly;
}

LatticePolygon LatticePolygon::in_place(std::span<const IntPoint> raw) {
  auto [pts, area2] = validate_convex(raw);
  rotate_to_lexmin(pts);
  LatticePolygon poly;
  poly.vertices_ = std::move(pts);
  poly.twice_area_ = area2;
  if (locate(poly, IntPoint{0, 0}) != Location::OnBoundary)
    throw Error(ErrorCode::InvalidArgument, "the origin must lie on the polygon boundary");
  return poly;
}

Location locate(const LatticePolygon& poly, IntPoint p) {
  const auto& v = poly.vertices();
  bool on_edge = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t o = orient(v[i], v[(i + 1) % v.size()], p);
    if (o < 0) return Location::Outside;
    if (o == 0) on_edge = true;
  }
  return on_edge ? Location::OnBoundary : Location::Inside;
}

std::vector<IntPoint> lattice_points(const LatticePolygon& poly, Region region) {
  const auto& v = poly.vertices();
  std::int64_t ymin = v.front().y, ymax = v.front().y;
  for (const auto& p : v) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }

  std::vector<IntPoint> out;
  for (std::int64_t y = ymin; y <= ymax; ++y) {
    // Exact x-range of the horizontal chord: min of ceilings of the rational
    // edge crossings, max of their floors.
    bool any = false;
    std::int64_t lo = 0, hi = 0;
    auto take = [&](std::int64_t l, std::int64_t h) {
      if (!any) {
        lo = l;
        hi = h;
        any = true;
      } else {
        lo = std::min(lo, l);
        hi = std::max(hi, h);
      }
    };
    for (std::size_t i = 0; i < v.size(); ++i) {
      const IntPoint a = v[i];
      const IntPoint b = v[(i + 1) % v.size()];
      if (a.y == b.y) {
        if (a.y == y) take(std::min(a.x, b.x), std::max(a.x, b.x));
        continue;
      }
      if (y < std::min(a.y, b.y) || y > std::max(a.y, b.y)) continue;
      const std::int64_t den = b.y - a.y;
      const std::int64_t num = narrow(static_cast<__int128>(a.x) * den +
                                      static_cast<__int128>(y - a.y) * (b.x - a.x));
      take(ceil_div(num, den), floor_div(num, den));
    }
    if (!any) continue;
    for (std::int64_t x = lo; x <= hi; ++x) {
      const IntPoint p{x, y};
      const Location loc = locate(poly, p);
      if (loc == Location::Outside) continue;
      if (region == Region::All || (region == Region::Interior && loc == Location::Inside) ||
          (region == Region::Boundary && loc == Location::OnBoundary))
        out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntPoint> boundary_points_ccw(const LatticePolygon& poly) {
  const auto& v = poly.vertices();
  std::vector<IntPoint> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IntPoint a = v[i];
    const IntPoint d = v[(i + 1) % v.size()] - a;
    const std::int64_t g = lattice_length(d);
    const IntPoint step{d.x / g, d.y / g};
    for (std::int64_t j = 0; j < g; ++j)
      out.push_back({a.x + j * step.x, a.y + j * step.y});
  }
  return out;
}

std::int64_t boundary_point_count(const LatticePolygon& poly) {
  const auto& v = poly.vertices();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    total = checked_add(total, lattice_length(v[(i + 1) % v.size()] - v[i]));
  return total;
}

std::int64_t severi_dimension(const LatticePolygon& poly, std::int64_t genus) {
  return boundary_point_count(poly) + genus - 1;
}

Sublattice Sublattice::from_hnf(std::int64_t d1, std::int64_t c, std::int64_t d2) {
  if (d1 <= 0 || d2 <= 0 || c < 0 || c >= d2)
    throw Error(ErrorCode::InvalidLattice, "not a Hermite normal form (need d1, d2 > 0, 0 <= c < d2)");
  Sublattice lat;
  lat.d1_ = d1;
  lat.c_ = c;
  lat.d2_ = d2;
  checked_mul(d1, d2);
  return lat;
}

Sublattice hnf_sublattice(std::span<const IntPoint> generators) {
  // Column reduction on the first row keeps one pivot column; everything else
  // is pushed into the x = 0 kernel, whose y-gcd is d2.
  bool have_pivot = false;
  __int128 px = 0, py = 0;
  __int128 kernel = 0;
  auto reduce_pivot = [&] {
    if (kernel != 0) {
      py %= kernel;
      if (py < 0) py += kernel;
    }
  };
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (const IntPoint& q : generators) {
    if (q.x == 0) {
      kernel = gcd128(kernel, q.y);
    } else if (!have_pivot) {
      px = q.x;
      py = q.y;
      have_pivot = true;
    } else {
      const auto eg = extended_gcd(narrow(px), q.x);
      const __int128 g = eg.g;
      const __int128 new_py = eg.u * py + static_cast<__int128>(eg.v) * q.y;
      // (q.x/g) * pivot - (px/g) * q has zero x-component.
      const __int128 ky = (static_cast<__int128>(q.x) / g) * py - (px / g) * q.y;
      kernel = gcd128(kernel, ky);
      px = g;
      py = new_py;
    }
    reduce_pivot();
  }
  if (!have_pivot || kernel == 0)
    throw Error(ErrorCode::RankDeficient, "generators do not span a rank-2 lattice");
  if (px < 0) {
    px = -px;
    py = -py;
  }
  reduce_pivot();
  return Sublattice::from_hnf(narrow(px), narrow(py), narrow(kernel));
}

bool contains(const Sublattice& lat, IntPoint p) {
  if (p.x % lat.d1() != 0) return false;
  const __int128 a = p.x / lat.d1();
  const __int128 rest = static_cast<__int128>(p.y) - a * lat.c();
  return rest % lat.d2() == 0;
}

bool contains(const Sublattice& outer, const Sublattice& inner) {
  for (const auto& b : inner.basis())
    if (!contains(outer, b)) return false;
  return true;
}

Sublattice rotate_dual(const Sublattice& lat) {
  const auto basis = lat.basis();
  const std::array<IntPoint, 2> turned{IntPoint{-basis[0].y, basis[0].x},
                                       IntPoint{-basis[1].y, basis[1].x}};
  return hnf_sublattice(turned);
}

std::int64_t sublattice_length(const Sublattice& lat, IntPoint v) {
  const std::int64_t g = lattice_length(v);
  if (g == 0) return 0;
  const IntPoint p{v.x / g, v.y / g};
  for (std::int64_t s = 1; s <= g; ++s) {
    if (g % s != 0) continue;
    if (contains(lat, IntPoint{p.x * s, p.y * s})) return g / s;
  }
  throw Error(ErrorCode::InvalidLattice, "vector does not lie in the sublattice");
}

std::int64_t delta_M(const LatticePolygon& poly, const Sublattice& lat, std::int64_t genus) {
  std::int64_t count = 0;
  for (const auto& p : lattice_points(poly, Region::Interior))
    if (contains(lat, p)) ++count;
  return count - genus;
}

KiteSpec KiteSpec::make(std::int64_t k, std::int64_t k_prime) {
  if (k < 0 || k_prime <= 0 || k_prime < k)
    throw Error(ErrorCode::InvalidArgument, "kite needs 0 <= k <= k' and k' > 0");
  checked_add(k, k_prime);
  return KiteSpec{k, k_prime};
}

LatticePolygon KiteSpec::polygon() const {
  std::vector<IntPoint> v;
  if (k > 0) v.push_back({0, 0});
  v.push_back({1, k});
  v.push_back({0, k + k_prime});
  v.push_back({-1, k});
  return LatticePolygon::in_place(v);
}

}  // namespace severi
