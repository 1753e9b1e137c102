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

#include "severi/tropical.hpp"

#include "severi/errors.hpp"
#include "severi/int_math.hpp"

namespace severi {

namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

RationalPoint gradient(const Triangulation& tri, const Triangle& t) {
  const auto& h = *tri.heights;
  const IntPoint p0 = tri.vertices[t[0]], p1 = tri.vertices[t[1]], p2 = tri.vertices[t[2]];
  const Rational dh1 = h[t[1]] - h[t[0]], dh2 = h[t[2]] - h[t[0]];
  const Rational det = q(orient(p0, p1, p2));
  RationalPoint g;
  g.x = (dh1 * q(p2.y - p0.y) - dh2 * q(p1.y - p0.y)) / det;
  g.y = (q(p1.x - p0.x) * dh2 - q(p2.x - p0.x) * dh1) / det;
  return g;
}

IntPoint quarter_cw(IntPoint v) { return {v.y, checked_sub(0, v.x)}; }

}  // namespace

TropicalCurve dual_tropical_curve(const Triangulation& tri) {
  if (!tri.heights) throw Error(ErrorCode::MissingHeights, "triangulation carries no heights");
  if (tri.heights->size() != tri.vertices.size())
    throw Error(ErrorCode::MissingHeights, "height vector has the wrong length");

  TropicalCurve curve;
  for (const auto& t : tri.triangles) curve.vertices.push_back(gradient(tri, t));

  const auto es = edge_structure(tri);
  for (const auto& e : es.interior) {
    const IntPoint v = tri.vertices[e.b] - tri.vertices[e.a];
    DualEdge d{e.left, e.right, quarter_cw(v), lattice_length(v),
               sublattice_length(tri.lattice, v), Rational(0), e.a, e.b};
    const auto& g0 = curve.vertices[e.left];
    const auto& g1 = curve.vertices[e.right];
    const Rational dx = g1.x - g0.x, dy = g1.y - g0.y;
    d.length = d.slope.x != 0 ? dx / q(d.slope.x) : dy / q(d.slope.y);
    if (dx != d.length * q(d.slope.x) || dy != d.length * q(d.slope.y) || d.length <= 0)
      throw Error(ErrorCode::InvalidTriangulation, "heights are not strictly convex across an edge");
    curve.edges.push_back(std::move(d));
  }
  for (const auto& b : es.boundary) {
    const IntPoint v = tri.vertices[b.b] - tri.vertices[b.a];
    curve.legs.push_back({b.triangle, quarter_cw(v), lattice_length(v),
                          sublattice_length(tri.lattice, v), b.a, b.b});
  }
  curve.genus = 1 - static_cast<std::int64_t>(curve.vertices.size()) +
                static_cast<std::int64_t>(curve.edges.size());
  return curve;
}

bool is_trivalent(const TropicalCurve& curve) {
  std::vector<int> degree(curve.vertices.size(), 0);
  for (const auto& e : curve.edges) {
    ++degree[e.from];
    ++degree[e.to];
  }
  for (const auto& l : curve.legs) ++degree[l.from];
  for (int d : degree)
    if (d != 3) return false;
  return true;
}

bool is_balanced(const TropicalCurve& curve) {
  std::vector<IntPoint> sum(curve.vertices.size());
  for (const auto& e : curve.edges) {
    sum[e.from] = sum[e.from] + e.slope;
    sum[e.to] = sum[e.to] - e.slope;
  }
  for (const auto& l : curve.legs) sum[l.from] = sum[l.from] + l.slope;
  for (const auto& s : sum)
    if (s != IntPoint{}) return false;
  return true;
}

CurveLattices curve_lattices(const TropicalCurve& curve, const Triangulation& tri) {
  std::vector<IntPoint> slopes;
  for (const auto& e : curve.edges) slopes.push_back(e.slope);
  for (const auto& l : curve.legs) slopes.push_back(l.slope);
  // Differences from vertex 0: the lattice is then independent of where the
  // polygon sits, and equals the span of the vertices once (0,0) is one.
  std::vector<IntPoint> points;
  for (const auto& v : tri.vertices) points.push_back(v - tri.vertices.front());
  CurveLattices out{hnf_sublattice(slopes), hnf_sublattice(points)};
  if (rotate_dual(out.n_gamma) != out.m_gamma)
    throw Error(ErrorCode::DualityViolation, "M(Gamma) is not the quarter turn of N(Gamma)");
  return out;
}

}  // namespace severi
