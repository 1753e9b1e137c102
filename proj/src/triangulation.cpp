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

#include "severi/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "severi/census.hpp"
#include "severi/errors.hpp"
#include "severi/int_math.hpp"

namespace severi {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::InvalidTriangulation, why);
}

bool strictly_inside_segment(IntPoint a, IntPoint b, IntPoint p) {
  if (orient(a, b, p) != 0 || p == a || p == b) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool on_polygon_edge(const LatticePolygon& poly, IntPoint a, IntPoint b) {
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IntPoint s = v[i], t = v[(i + 1) % v.size()];
    if (orient(s, t, a) == 0 && orient(s, t, b) == 0) return true;
  }
  return false;
}

}  // namespace

EdgeStructure edge_structure(const Triangulation& tri) {
  struct HalfEdge {
    std::size_t from, to, triangle, opposite;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<HalfEdge>> edges;
  for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
    const auto& tr = tri.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const std::size_t a = tr[i], b = tr[(i + 1) % 3], c = tr[(i + 2) % 3];
      edges[{std::min(a, b), std::max(a, b)}].push_back({a, b, t, c});
    }
  }
  EdgeStructure out;
  for (const auto& [key, halves] : edges) {
    if (halves.size() == 1) {
      out.boundary.push_back({halves[0].from, halves[0].to, halves[0].triangle});
    } else if (halves.size() == 2) {
      const auto& l = halves[0];
      const auto& r = halves[1];
      if (l.from != r.to || l.to != r.from) invalid("edge used twice with the same orientation");
      out.interior.push_back({l.from, l.to, l.triangle, r.triangle, l.opposite, r.opposite});
    } else {
      invalid("edge shared by more than two triangles");
    }
  }
  return out;
}

void validate(const Triangulation& tri, bool require_boundary_points) {
  const auto& vs = tri.vertices;
  if (std::set<IntPoint>(vs.begin(), vs.end()).size() != vs.size()) invalid("repeated vertex");
  for (const auto& v : vs) {
    if (locate(tri.polygon, v) == Location::Outside) invalid("vertex outside the polygon");
    if (!contains(tri.lattice, v)) invalid("vertex outside the lattice M");
  }
  std::int64_t area2 = 0;
  for (const auto& t : tri.triangles) {
    for (auto i : t)
      if (i >= vs.size()) invalid("triangle index out of range");
    const std::int64_t o = orient(vs[t[0]], vs[t[1]], vs[t[2]]);
    if (o <= 0) invalid("triangle not counterclockwise or degenerate");
    area2 = checked_add(area2, o);
  }
  if (area2 != tri.polygon.twice_area()) invalid("triangle areas do not sum to the polygon area");

  const EdgeStructure edges = edge_structure(tri);
  for (const auto& e : edges.boundary)
    if (!on_polygon_edge(tri.polygon, vs[e.a], vs[e.b])) invalid("unpaired edge off the boundary");
  auto check_edge = [&](std::size_t a, std::size_t b) {
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (v != a && v != b && strictly_inside_segment(vs[a], vs[b], vs[v]))
        invalid("vertex in the relative interior of an edge");
  };
  for (const auto& e : edges.boundary) check_edge(e.a, e.b);
  for (const auto& e : edges.interior) check_edge(e.a, e.b);

  if (require_boundary_points) {
    const std::set<IntPoint> have(vs.begin(), vs.end());
    for (const auto& p : lattice_points(tri.polygon, Region::Boundary))
      if (contains(tri.lattice, p) && !have.count(p)) invalid("boundary M-point is not a vertex");
  }
  if (tri.heights && tri.heights->size() != vs.size()) invalid("height vector has wrong length");
}

std::size_t interior_vertex_count(const Triangulation& tri) {
  return static_cast<std::size_t>(std::count_if(tri.vertices.begin(), tri.vertices.end(), [&](IntPoint v) {
    return locate(tri.polygon, v) == Location::Inside;
  }));
}

Triangulation incremental_triangulation(const LatticePolygon& poly, const Sublattice& lat,
                                        std::int64_t genus) {
  const auto boundary = boundary_points_ccw(poly);
  for (const auto& p : boundary)
    if (!contains(lat, p))
      throw Error(ErrorCode::InvalidLattice, "sublattice misses a boundary lattice point");

  std::vector<IntPoint> interior;
  for (const auto& p : lattice_points(poly, Region::Interior))
    if (contains(lat, p)) interior.push_back(p);
  if (genus < 1 || genus > static_cast<std::int64_t>(interior.size()))
    throw Error(ErrorCode::GenusOutOfRange,
                "genus must lie in [1, " + std::to_string(interior.size()) + "]");

  std::optional<IntPoint> center;
  for (const auto& p : interior) {
    std::vector<IntPoint> gens = boundary;
    gens.push_back(p);
    if (hnf_sublattice(gens) == lat) {
      center = p;
      break;
    }
  }
  if (!center)
    throw Error(ErrorCode::NoGeneratingPoint,
                "no interior M-point completes the boundary points to a generating set");

  Triangulation tri;
  tri.polygon = poly;
  tri.lattice = lat;
  tri.vertices = boundary;
  tri.vertices.push_back(*center);
  const std::size_t b = boundary.size();
  for (std::size_t i = 0; i < b; ++i) tri.triangles.push_back({b, i, (i + 1) % b});

  std::set<IntPoint> used(tri.vertices.begin(), tri.vertices.end());
  for (std::int64_t step = 1; step < genus; ++step) {
    const auto& vs = tri.vertices;
    std::optional<std::pair<IntPoint, std::size_t>> in_triangle;
    for (const auto& p : interior) {
      if (used.count(p)) continue;
      for (std::size_t t = 0; t < tri.triangles.size() && !in_triangle; ++t) {
        const auto& tr = tri.triangles[t];
        if (orient(vs[tr[0]], vs[tr[1]], p) > 0 && orient(vs[tr[1]], vs[tr[2]], p) > 0 &&
            orient(vs[tr[2]], vs[tr[0]], p) > 0)
          in_triangle = {p, t};
      }
      if (in_triangle) break;
    }

    const std::size_t np = tri.vertices.size();
    if (in_triangle) {
      const auto [p, t] = *in_triangle;
      const Triangle old = tri.triangles[t];
      tri.vertices.push_back(p);
      tri.triangles[t] = {old[0], old[1], np};
      tri.triangles.push_back({old[1], old[2], np});
      tri.triangles.push_back({old[2], old[0], np});
      used.insert(p);
      continue;
    }

    // Every unused interior M-point now sits inside an interior edge.
    const EdgeStructure edges = edge_structure(tri);
    bool inserted = false;
    for (const auto& p : interior) {
      if (used.count(p)) continue;
      for (const auto& e : edges.interior) {
        if (!strictly_inside_segment(vs[e.a], vs[e.b], p)) continue;
        tri.vertices.push_back(p);
        tri.triangles[e.left] = {e.a, np, e.left_opposite};
        tri.triangles.push_back({np, e.b, e.left_opposite});
        tri.triangles[e.right] = {e.b, np, e.right_opposite};
        tri.triangles.push_back({np, e.a, e.right_opposite});
        used.insert(p);
        inserted = true;
        break;
      }
      if (inserted) break;
    }
    if (!inserted) invalid("no insertable interior point (construction bug)");
  }

  validate(tri);
  auto heights = is_regular(tri);
  if (!heights) invalid("incremental construction produced a non-regular triangulation");
  tri.heights = std::move(heights);
  return tri;
}

Triangulation kite_triangulation(const KiteSpec& kite, std::int64_t genus, std::int64_t index,
                                 std::int64_t kappa) {
  const std::int64_t n = kite.height();
  if (genus < 0 || genus > n - 1)
    throw Error(ErrorCode::GenusOutOfRange, "genus must lie in [0, " + std::to_string(n - 1) + "]");

  const auto lattices = kite_sublattices(kite);
  auto it = std::find_if(lattices.begin(), lattices.end(),
                         [&](const KiteLattice& kl) { return kl.index == index; });
  if (it == lattices.end())
    throw Error(ErrorCode::NotAdmissible, "index " + std::to_string(index) +
                                              " is not a common divisor of k+k' and 2k");
  if (index % 2 == 0)
    throw Error(ErrorCode::EvenIndexUnsupported,
                "even index: use incremental_triangulation on the kite sublattice");
  const auto pairs = admissible_pairs(kite, genus);
  if (std::none_of(pairs.begin(), pairs.end(), [&](const AdmissiblePair& p) {
        return p.index == index && p.kappa == kappa;
      }))
    throw Error(ErrorCode::NotAdmissible, "(r, kappa) = (" + std::to_string(index) + ", " +
                                              std::to_string(kappa) + ") is not admissible");

  const std::int64_t r = index;
  // Interior axis points in kite coordinates (shifted height + k).
  std::vector<std::int64_t> axis;
  for (std::int64_t j = 1; j <= kappa; ++j) axis.push_back(n - 2 * j * r);
  for (std::int64_t j = 1; j <= genus - kappa; ++j) axis.push_back(n - 2 * kappa * r - j * r);

  Triangulation tri;
  tri.polygon = kite.polygon();
  tri.lattice = it->lattice;
  tri.shift = {0, -kite.k};
  tri.vertices = {{0, 0}, {1, kite.k}, {0, n}, {-1, kite.k}};
  for (auto y : axis) tri.vertices.push_back({0, y});

  // Axis vertex indices bottom to top.
  std::vector<std::pair<std::int64_t, std::size_t>> ys{{0, 0}, {n, 2}};
  for (std::size_t i = 0; i < axis.size(); ++i) ys.push_back({axis[i], 4 + i});
  std::sort(ys.begin(), ys.end());
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const std::size_t lo = ys[i].second, hi = ys[i + 1].second;
    tri.triangles.push_back({lo, 1, hi});
    tri.triangles.push_back({lo, hi, 3});
  }

  // Heights: y^2 on the axis, both side vertices at H with H above every
  // chord of y^2 evaluated at y = k.
  Rational top = 0;
  bool first = true;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const Rational y0 = ys[i].first, y1 = ys[i + 1].first;
    const Rational chord = (y0 + y1) * kite.k - y0 * y1;
    if (first || chord > top) top = chord;
    first = false;
  }
  std::vector<Rational> heights(tri.vertices.size());
  for (std::size_t i = 0; i < tri.vertices.size(); ++i) {
    const auto& v = tri.vertices[i];
    heights[i] = v.x == 0 ? Rational(Rational(v.y) * v.y) : Rational(top + 1);
  }
  validate(tri);
  if (!verify_heights(tri, heights)) invalid("kite height certificate failed (construction bug)");
  tri.heights = std::move(heights);

  const auto lengths = kite_axis_lengths(tri);
  const std::int64_t bottom = lengths.back();
  const std::int64_t delta = delta_M(tri.polygon, tri.lattice, genus);
  if (bottom != delta - kappa + 1 || bottom % 2 == 0)
    invalid("bottom axis segment length is not delta_M - kappa + 1 (odd)");
  return tri;
}

std::vector<std::int64_t> kite_axis_lengths(const Triangulation& tri) {
  std::vector<IntPoint> axis;
  for (const auto& v : tri.vertices)
    if (v.x == 0) axis.push_back(v);
  std::sort(axis.begin(), axis.end(), [](IntPoint a, IntPoint b) { return a.y > b.y; });
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i + 1 < axis.size(); ++i)
    out.push_back(sublattice_length(tri.lattice, axis[i] - axis[i + 1]));
  return out;
}

}  // namespace severi
