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

#include <doctest.h>

#include <map>
#include <random>

#include "severi/census.hpp"
#include "severi/errors.hpp"
#include "severi/triangulation.hpp"
#include "severi/tropical.hpp"
#include "support.hpp"

using namespace severi;
namespace ts = testing_support;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

struct Adjacent {
  std::size_t a, b, c, d;  // triangles (a, b, c) and (b, a, d)
};

std::vector<Adjacent> adjacent_pairs(const Triangulation& tri) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> opposite;
  for (const auto& t : tri.triangles)
    for (int i = 0; i < 3; ++i) opposite[{t[i], t[(i + 1) % 3]}] = t[(i + 2) % 3];
  std::vector<Adjacent> out;
  for (const auto& [e, c] : opposite) {
    auto it = opposite.find({e.second, e.first});
    if (it != opposite.end() && e.first < e.second) out.push_back({e.first, e.second, c, it->second});
  }
  return out;
}

// Independent convexity check: the lifted point over d lies strictly above
// the plane through the lifted triangle (a, b, c), plane solved by Cramer.
bool lift_is_convex(const Triangulation& tri, const std::vector<Rational>& h) {
  for (const auto& p : adjacent_pairs(tri)) {
    const IntPoint A = tri.vertices[p.a], B = tri.vertices[p.b], C = tri.vertices[p.c], D = tri.vertices[p.d];
    const Rational x1 = B.x - A.x, y1 = B.y - A.y, z1 = h[p.b] - h[p.a];
    const Rational x2 = C.x - A.x, y2 = C.y - A.y, z2 = h[p.c] - h[p.a];
    const Rational det = x1 * y2 - x2 * y1;
    const Rational gx = (z1 * y2 - z2 * y1) / det, gy = (x1 * z2 - x2 * z1) / det;
    const Rational plane = h[p.a] + gx * Rational(D.x - A.x) + gy * Rational(D.y - A.y);
    if (!(h[p.d] > plane)) return false;
  }
  return true;
}

Triangulation spiral() {
  // Outer A, B, C; inner a, b, c; each outer vertex joined to the next inner one.
  const std::vector<IntPoint> outer{{0, 0}, {4, 0}, {0, 4}};
  Triangulation t{normalize_polygon(outer), Sublattice{},
                  {{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}},
                  {{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}, {3, 4, 5}},
                  std::nullopt,
                  {}};
  return t;
}

// Flip a random flippable interior edge; returns false if none exists.
bool random_flip(Triangulation& tri, std::mt19937_64& rng) {
  auto pairs = adjacent_pairs(tri);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& p : pairs) {
    const auto& v = tri.vertices;
    const std::int64_t sa = ts::cross3(v[p.c], v[p.d], v[p.a]);
    const std::int64_t sb = ts::cross3(v[p.c], v[p.d], v[p.b]);
    if (sa == 0 || sb == 0 || (sa > 0) == (sb > 0)) continue;
    std::vector<Triangle> next;
    for (const auto& t : tri.triangles) {
      auto has = [&](std::size_t x, std::size_t y, std::size_t z) {
        for (int i = 0; i < 3; ++i)
          if (t[i] == x && t[(i + 1) % 3] == y && t[(i + 2) % 3] == z) return true;
        return false;
      };
      if (has(p.a, p.b, p.c) || has(p.b, p.a, p.d)) continue;
      next.push_back(t);
    }
    next.push_back({p.a, p.d, p.c});
    next.push_back({p.d, p.b, p.c});
    tri.triangles = std::move(next);
    return true;
  }
  return false;
}

std::vector<IntPoint> interior_vertices(const Triangulation& tri) {
  std::vector<IntPoint> out;
  for (const auto& v : tri.vertices)
    if (locate(tri.polygon, v) == Location::Inside) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("incremental_triangulation") {
  const auto kite = KiteSpec::make(1, 3).polygon();
  const auto t1 = incremental_triangulation(kite, Sublattice{}, 1);
  CHECK(interior_vertex_count(t1) == 1);
  CHECK(t1.triangles.size() == 4);
  REQUIRE(t1.heights);
  CHECK(lift_is_convex(t1, *t1.heights));
  CHECK(dual_tropical_curve(t1).genus == 1);
  CHECK(dual_tropical_curve(t1).legs.size() == 4);

  const auto t3 = incremental_triangulation(kite, Sublattice{}, 3);
  CHECK(interior_vertex_count(t3) == 3);
  CHECK(lift_is_convex(t3, *t3.heights));

  const std::vector<IntPoint> unit{{0, 0}, {1, 0}, {0, 1}};
  CHECK(code_of([&] { incremental_triangulation(normalize_polygon(unit), Sublattice{}, 1); }) ==
        ErrorCode::GenusOutOfRange);
  // Condition (a) fails: (1,0) is a boundary point outside <(2,0),(0,1)>.
  CHECK(code_of([&] { incremental_triangulation(kite, Sublattice::from_hnf(2, 0, 1), 1); }) ==
        ErrorCode::InvalidLattice);
}

TEST_CASE("property: incremental triangulations on random polygons") {
  std::mt19937_64 rng(2024);
  int built = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto p = normalize_polygon(ts::random_convex(rng, 5));
    const auto interior = lattice_points(p, Region::Interior);
    if (interior.empty()) continue;
    for (const auto& m : intermediate_lattices(p)) {
      std::int64_t avail = 0;
      for (const auto& q : interior) avail += contains(m, q) ? 1 : 0;
      for (std::int64_t g = 1; g <= avail; ++g) {
        Triangulation t;
        try {
          t = incremental_triangulation(p, m, g);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NoGeneratingPoint);
          continue;
        }
        ++built;
        validate(t);
        CHECK(static_cast<std::int64_t>(interior_vertex_count(t)) == g);
        for (const auto& v : t.vertices) CHECK(contains(m, v));
        REQUIRE(t.heights);
        CHECK(lift_is_convex(t, *t.heights));
        const auto curve = dual_tropical_curve(t);
        CHECK(is_trivalent(curve));
        CHECK(is_balanced(curve));
        CHECK(curve.genus == g);
        CHECK(curve_lattices(curve, t).m_gamma == m);
      }
    }
  }
  CHECK(built > 100);
}

TEST_CASE("kite_triangulation examples") {
  const auto t = kite_triangulation(KiteSpec::make(0, 3), 1, 1, 1);
  CHECK(interior_vertices(t) == std::vector<IntPoint>{{0, 1}});
  CHECK(t.shift == IntPoint{0, 0});
  CHECK(kite_axis_lengths(t).back() == 1);
  CHECK(curve_lattices(dual_tropical_curve(t), t).m_gamma == Sublattice{});

  const auto u = kite_triangulation(KiteSpec::make(1, 3), 1, 1, 0);
  CHECK(interior_vertices(u) == std::vector<IntPoint>{{0, 3}});
  CHECK(u.shift == IntPoint{0, -1});
  CHECK(u.triangles.size() == 4);
  CHECK(kite_axis_lengths(u) == std::vector<std::int64_t>{1, 3});

  CHECK(code_of([] { kite_triangulation(KiteSpec::make(1, 3), 1, 1, 1); }) == ErrorCode::NotAdmissible);
  CHECK(code_of([] { kite_triangulation(KiteSpec::make(1, 3), 1, 2, 2); }) == ErrorCode::EvenIndexUnsupported);
  CHECK(code_of([] { kite_triangulation(KiteSpec::make(1, 3), 1, 3, 0); }) == ErrorCode::NotAdmissible);
}

TEST_CASE("property: kite triangulation axis lengths") {
  for (std::int64_t n = 2; n <= 16; ++n)
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
      const auto kite = KiteSpec::make(k, n - k);
      for (std::int64_t g = 1; g < n; ++g)
        for (const auto& p : admissible_pairs(kite, g)) {
          if (p.index % 2 == 0) continue;
          const auto t = kite_triangulation(kite, g, p.index, p.kappa);
          const auto len = kite_axis_lengths(t);
          REQUIRE(static_cast<std::int64_t>(len.size()) == g + 1);
          for (std::int64_t i = 0; i < p.kappa; ++i) CHECK(len[i] == 2);
          for (std::int64_t i = p.kappa; i < g; ++i) CHECK(len[i] == 1);
          CHECK(len.back() == delta_M(t.polygon, p.lattice, g) - p.kappa + 1);
          CHECK(len.back() % 2 == 1);
          CHECK(lift_is_convex(t, *t.heights));
          std::int64_t area = 0;
          for (const auto& tr : t.triangles)
            area += orient(t.vertices[tr[0]], t.vertices[tr[1]], t.vertices[tr[2]]);
          CHECK(area == t.polygon.twice_area());
        }
    }
}

TEST_CASE("is_regular") {
  // Fan over one interior point, boundary at 0 and centre at -1.
  const auto fan = incremental_triangulation(KiteSpec::make(1, 3).polygon(), Sublattice{}, 1);
  std::vector<Rational> h(fan.vertices.size(), Rational(0));
  for (std::size_t i = 0; i < h.size(); ++i)
    if (locate(fan.polygon, fan.vertices[i]) == Location::Inside) h[i] = -1;
  CHECK(verify_heights(fan, h));
  CHECK(is_regular(fan).has_value());

  const auto s = spiral();
  validate(s, false);
  CHECK_FALSE(is_regular(s).has_value());
  CHECK_FALSE(is_regular_fourier_motzkin(s).has_value());

  const auto k = kite_triangulation(KiteSpec::make(2, 6), 3, 1, 2);
  const auto w = is_regular(k);
  REQUIRE(w);
  CHECK(lift_is_convex(k, *w));
}

TEST_CASE("property: simplex and Fourier-Motzkin agree under random flips") {
  std::mt19937_64 rng(77);
  int regular = 0, irregular = 0, compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = normalize_polygon(ts::random_convex(rng, 3, 6));
    const auto interior = lattice_points(p, Region::Interior);
    if (interior.size() < 2 || interior.size() > 6) continue;
    auto t = incremental_triangulation(p, Sublattice{}, static_cast<std::int64_t>(interior.size()));
    t.heights.reset();
    const int flips = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int f = 0; f < flips; ++f) random_flip(t, rng);
    validate(t, false);
    const auto a = is_regular(t);
    std::optional<std::vector<Rational>> b;
    try {
      b = is_regular_fourier_motzkin(t, 50000);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonConvergence);
      continue;
    }
    ++compared;
    CHECK(a.has_value() == b.has_value());
    if (a) {
      ++regular;
      CHECK(lift_is_convex(t, *a));
      CHECK(lift_is_convex(t, *b));
    } else {
      ++irregular;
    }
  }
  // Flips of the spiral reach both answers.
  for (int trial = 0; trial < 40; ++trial) {
    auto t = spiral();
    const int flips = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int f = 0; f < flips; ++f) random_flip(t, rng);
    const auto a = is_regular(t);
    const auto b = is_regular_fourier_motzkin(t);
    ++compared;
    CHECK(a.has_value() == b.has_value());
    if (a) {
      ++regular;
      CHECK(lift_is_convex(t, *a));
    } else {
      ++irregular;
    }
  }
  CHECK(compared > 50);
  CHECK(regular > 0);
  CHECK(irregular > 0);
  MESSAGE("regular ", regular, ", not regular ", irregular);
}

TEST_CASE("validate rejects broken tilings") {
  auto t = incremental_triangulation(KiteSpec::make(1, 3).polygon(), Sublattice{}, 1);
  auto dropped = t;
  dropped.triangles.pop_back();
  CHECK(code_of([&] { validate(dropped); }) == ErrorCode::InvalidTriangulation);
  auto flipped = t;
  std::swap(flipped.triangles[0][0], flipped.triangles[0][1]);
  CHECK(code_of([&] { validate(flipped); }) == ErrorCode::InvalidTriangulation);
  // The spiral misses boundary points, which the full check demands.
  CHECK(code_of([] { validate(spiral()); }) == ErrorCode::InvalidTriangulation);
}

TEST_CASE("dual_tropical_curve") {
  const auto t = kite_triangulation(KiteSpec::make(1, 3), 1, 1, 0);
  const auto c = dual_tropical_curve(t);
  CHECK(c.vertices.size() == 4);
  CHECK(c.edges.size() == 4);
  CHECK(c.legs.size() == 4);
  CHECK(c.genus == 1);
  CHECK(is_trivalent(c));
  CHECK(is_balanced(c));
  for (const auto& e : c.edges) CHECK(e.length > 0);

  // Single triangle: a tree with three legs.
  const std::vector<IntPoint> unit{{0, 0}, {1, 0}, {0, 1}};
  Triangulation single{normalize_polygon(unit), Sublattice{}, unit, {{0, 1, 2}}, std::nullopt, {}};
  CHECK(code_of([&] { dual_tropical_curve(single); }) == ErrorCode::MissingHeights);
  single.heights = is_regular(single);
  const auto tree = dual_tropical_curve(single);
  CHECK(tree.genus == 0);
  CHECK(tree.legs.size() == 3);
  CHECK(curve_lattices(tree, single).m_gamma == Sublattice{});
}

TEST_CASE("curve_lattices") {
  const auto kite = KiteSpec::make(2, 4);
  const auto m = Sublattice::from_hnf(1, 0, 2);
  const auto t = incremental_triangulation(kite.polygon(), m, 1);
  const auto l = curve_lattices(dual_tropical_curve(t), t);
  CHECK(l.m_gamma == m);
  CHECK(rotate_dual(l.n_gamma) == l.m_gamma);
  CHECK(l.n_gamma == Sublattice::from_hnf(2, 0, 1));
}
