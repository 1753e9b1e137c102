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

#include <numeric>
#include <random>
#include <set>

#include "severi/census.hpp"
#include "severi/errors.hpp"
#include "severi/int_math.hpp"
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

using ts::Triple;

std::set<Triple> as_set(const std::vector<Sublattice>& ls) {
  std::set<Triple> out;
  for (const auto& l : ls) out.insert({l.d1(), l.c(), l.d2()});
  return out;
}

std::vector<std::int64_t> indices(const std::vector<KiteLattice>& ls) {
  std::vector<std::int64_t> out;
  for (const auto& l : ls) out.push_back(l.index);
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const std::vector<AdmissiblePair>& ps) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& p : ps) out.emplace_back(p.index, p.kappa);
  return out;
}

const std::vector<IntPoint> kTriangle{{0, 0}, {4, 1}, {0, 3}};

}  // namespace

TEST_CASE("intermediate_lattices examples") {
  const auto t = normalize_polygon(kTriangle);
  CHECK(boundary_lattice(t) == Sublattice::from_hnf(2, 0, 1));
  CHECK(intermediate_lattices(t) == std::vector<Sublattice>{Sublattice{}, Sublattice::from_hnf(2, 0, 1)});

  const std::vector<IntPoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(intermediate_lattices(normalize_polygon(square)) == std::vector<Sublattice>{Sublattice{}});

  const auto kite = KiteSpec::make(2, 4);
  CHECK(intermediate_lattices(kite.polygon()) ==
        std::vector<Sublattice>{Sublattice{}, Sublattice::from_hnf(1, 0, 2)});
}

TEST_CASE("smith invariants") {
  CHECK(smith_invariants(Sublattice::from_hnf(2, 0, 2)) == std::array<std::int64_t, 2>{2, 2});
  CHECK(smith_invariants(Sublattice::from_hnf(2, 1, 3)) == std::array<std::int64_t, 2>{1, 6});
  CHECK(smith_invariants(Sublattice{}) == std::array<std::int64_t, 2>{1, 1});
}

TEST_CASE("property: intermediate lattices agree with the triple brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    auto raw = ts::random_convex(rng, 6);
    // Scale some polygons so that L_∂ has a non-trivial quotient.
    if (trial % 3 == 0)
      for (auto& p : raw) p = {2 * p.x, 3 * p.y};
    const auto p = normalize_polygon(raw);
    std::vector<IntPoint> shifted;
    for (const auto& v : raw) shifted.push_back({v.x + p.offset().x, v.y + p.offset().y});
    CHECK(as_set(intermediate_lattices(p)) == ts::hnf_triples(shifted));
  }
  // Boundary points along primitive steps: L_∂ = <(1,1),(0,3)>, index 3.
  const std::vector<IntPoint> thin{{0, 0}, {2, -1}, {1, 1}};
  CHECK(as_set(intermediate_lattices(normalize_polygon(thin))) == ts::hnf_triples(thin));
  CHECK(intermediate_lattices(normalize_polygon(thin)).size() == 2);
}

TEST_CASE("general_lower_bound") {
  const auto t = normalize_polygon(kTriangle);
  CHECK(general_lower_bound(t, 1).total == 2);
  const auto g2 = general_lower_bound(t, 2);
  CHECK(g2.total == 1);
  REQUIRE(g2.entries.size() == 1);
  CHECK(g2.entries[0].lattice == Sublattice{});
  CHECK(g2.entries[0].delta_M == 2);
  CHECK(general_lower_bound(KiteSpec::make(2, 4).polygon(), 3).total == 1);

  const auto g0 = general_lower_bound(t, 0);
  CHECK(g0.irreducible);
  CHECK(g0.total == 1);
  CHECK(g0.entries.empty());
  CHECK(code_of([&] { general_lower_bound(t, 5); }) == ErrorCode::GenusOutOfRange);
  CHECK(code_of([&] { general_lower_bound(t, -1); }) == ErrorCode::GenusOutOfRange);
}

TEST_CASE("kite_sublattices") {
  const auto k13 = kite_sublattices(KiteSpec::make(1, 3));
  CHECK(indices(k13) == std::vector<std::int64_t>{1, 2});
  CHECK(k13[1].lattice == Sublattice::from_hnf(1, 1, 2));
  CHECK(indices(kite_sublattices(KiteSpec::make(0, 4))) == std::vector<std::int64_t>{1, 2, 4});
  CHECK(indices(kite_sublattices(KiteSpec::make(1, 2))) == std::vector<std::int64_t>{1});
}

TEST_CASE("property: kite sublattices are exactly the intermediate lattices") {
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
      const auto kite = KiteSpec::make(k, n - k);
      std::vector<Sublattice> ls;
      for (const auto& kl : kite_sublattices(kite)) {
        ls.push_back(kl.lattice);
        CHECK(contains(kl.lattice, IntPoint{0, 2 * k}));
        const auto poly = kite.polygon();
        for (const auto& v : poly.vertices()) CHECK(contains(kl.lattice, v));
      }
      CHECK(as_set(ls) == as_set(intermediate_lattices(kite.polygon())));
    }
}

TEST_CASE("admissible_pairs") {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(pairs(admissible_pairs(KiteSpec::make(1, 3), 1)) == P{{1, 0}, {2, 2}});
  CHECK(pairs(admissible_pairs(KiteSpec::make(2, 4), 3)) == P{{1, 0}, {1, 2}});
  CHECK(pairs(admissible_pairs(KiteSpec::make(1, 1), 1)) == P{{1, 0}});
  CHECK(code_of([] { admissible_pairs(KiteSpec::make(1, 3), 4); }) == ErrorCode::GenusOutOfRange);
}

TEST_CASE("kite_count") {
  const auto c04 = kite_count(KiteSpec::make(0, 4), 1);
  CHECK(c04.total == 2);
  REQUIRE(c04.entries.size() == 2);
  CHECK(c04.entries[0].kappas == std::vector<std::int64_t>{0});
  CHECK(c04.entries[1].index == 2);
  CHECK(c04.entries[1].kappas == std::vector<std::int64_t>{2});
  CHECK(kite_count(KiteSpec::make(1, 1), 1).total == 1);

  const auto c24 = kite_count(KiteSpec::make(2, 4), 3);
  CHECK(c24.total == 2);
  REQUIRE(c24.entries.size() == 1);
  CHECK(c24.entries[0].multiplicity == 2);
  CHECK(c24.entries[0].kappas == std::vector<std::int64_t>{0, 2});
  CHECK(c24.warnings.empty());

  CHECK(kite_count(KiteSpec::make(1, 3), 0).irreducible);
}

TEST_CASE("genus1_closed_form") {
  CHECK(genus1_closed_form(KiteSpec::make(1, 3)) == 2);
  CHECK(genus1_closed_form(KiteSpec::make(1, 1)) == 1);
  CHECK(genus1_closed_form(KiteSpec::make(0, 4)) == 2);
}

TEST_CASE("property: census invariants on kites") {
  for (std::int64_t n = 2; n <= 24; ++n)
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
      const auto kite = KiteSpec::make(k, n - k);
      for (std::int64_t g = 1; g <= n - 1; ++g) {
        const auto c = kite_count(kite, g);
        std::int64_t sum = 0;
        for (const auto& e : c.entries) {
          sum += e.multiplicity;
          CHECK(e.delta_M >= 0);
          if (e.index % 2 == 1) {
            CHECK(e.multiplicity == static_cast<std::int64_t>(e.kappas.size()));
            for (auto kappa : e.kappas) {
              CHECK((kappa - e.delta_M) % 2 == 0);
              CHECK(kappa <= std::min(e.delta_M, g));
            }
          } else {
            CHECK(e.multiplicity == 1);
            CHECK(e.kappas == std::vector<std::int64_t>{g + 1});
          }
        }
        CHECK(sum == c.total);
        CHECK(c.warnings.empty());
        CHECK(c.total >= general_lower_bound(kite.polygon(), g).total);
        CHECK(std::is_sorted(c.entries.begin(), c.entries.end(), [](const auto& a, const auto& b) {
          return std::tie(a.index, a.lattice) < std::tie(b.index, b.lattice);
        }));
      }
    }
}
