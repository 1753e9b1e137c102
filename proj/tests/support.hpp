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

// Test-side geometry written from first principles. Nothing here calls into
// the library, so it can serve as an oracle for it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "severi/lattice.hpp"

namespace testing_support {

using severi::IntPoint;

inline std::int64_t cross3(IntPoint o, IntPoint a, IntPoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Strict convex hull, counterclockwise (monotone chain).
inline std::vector<IntPoint> convex_hull(std::vector<IntPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<IntPoint> h(2 * pts.size());
  std::size_t n = 0;
  for (const auto& p : pts) {
    while (n >= 2 && cross3(h[n - 2], h[n - 1], p) <= 0) --n;
    h[n++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = n + 1; i-- > 0;) {
    while (n >= lo && cross3(h[n - 2], h[n - 1], pts[i]) <= 0) --n;
    h[n++] = pts[i];
  }
  h.resize(n - 1);
  return h;
}

/// Random convex lattice polygon with coordinates in [-c, c] and positive area.
inline std::vector<IntPoint> random_convex(std::mt19937_64& rng, int c, int max_points = 8) {
  std::uniform_int_distribution<int> coord(-c, c);
  std::uniform_int_distribution<int> count(3, max_points);
  for (;;) {
    std::vector<IntPoint> pts;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) pts.push_back({coord(rng), coord(rng)});
    auto h = convex_hull(pts);
    if (h.size() >= 3) return h;
  }
}

inline std::int64_t twice_area(const std::vector<IntPoint>& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s < 0 ? -s : s;
}

inline std::int64_t boundary_count(const std::vector<IntPoint>& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
  }
  return s;
}

enum class Where { Inside, Boundary, Outside };

/// Point location against a counterclockwise convex polygon.
inline Where where(const std::vector<IntPoint>& ccw, IntPoint p) {
  bool on_edge = false;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const std::int64_t c = cross3(ccw[i], ccw[(i + 1) % ccw.size()], p);
    if (c < 0) return Where::Outside;
    if (c == 0) on_edge = true;
  }
  return on_edge ? Where::Boundary : Where::Inside;
}

/// Every lattice point of the bounding box, classified.
inline std::vector<IntPoint> scan(const std::vector<IntPoint>& ccw, Where want) {
  std::int64_t x0 = ccw[0].x, x1 = ccw[0].x, y0 = ccw[0].y, y1 = ccw[0].y;
  for (const auto& p : ccw) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  std::vector<IntPoint> out;
  for (std::int64_t x = x0; x <= x1; ++x)
    for (std::int64_t y = y0; y <= y1; ++y)
      if (where(ccw, {x, y}) == want) out.push_back({x, y});
  return out;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

/// Membership in <(d1, c), (0, d2)> by solving the triangular system.
inline bool in_hnf(std::int64_t d1, std::int64_t c, std::int64_t d2, IntPoint p) {
  if (mod(p.x, d1) != 0) return false;
  return mod(p.y - (p.x / d1) * c, d2) == 0;
}

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

/// Brute force over all normal-form triples (d1, c, d2) whose lattice holds
/// every boundary point. The gcd of the 2x2 minors of the boundary points is
/// the index of the lattice they span, which bounds the index of any such M.
inline std::set<Triple> hnf_triples(const std::vector<IntPoint>& ccw) {
  const auto bnd = scan(ccw, Where::Boundary);
  std::int64_t d = 0;
  for (std::size_t i = 0; i < bnd.size(); ++i)
    for (std::size_t j = i + 1; j < bnd.size(); ++j) d = std::gcd(d, bnd[i].x * bnd[j].y - bnd[i].y * bnd[j].x);
  std::set<Triple> out;
  for (std::int64_t d1 = 1; d1 <= d; ++d1)
    for (std::int64_t d2 = 1; d1 * d2 <= d; ++d2)
      for (std::int64_t c = 0; c < d2; ++c) {
        bool ok = true;
        for (const auto& p : bnd) ok = ok && in_hnf(d1, c, d2, p);
        if (ok) out.insert({d1, c, d2});
      }
  return out;
}

}  // namespace testing_support
