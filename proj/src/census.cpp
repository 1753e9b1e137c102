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

#include "severi/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "severi/errors.hpp"
#include "severi/int_math.hpp"

namespace severi {

namespace {

std::int64_t interior_count(const LatticePolygon& poly) {
  return static_cast<std::int64_t>(lattice_points(poly, Region::Interior).size());
}

void sort_entries(std::vector<CensusEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.lattice < b.lattice;
  });
}

Census irreducible_census(const LatticePolygon& poly) {
  Census census;
  census.polygon = poly;
  census.genus = 0;
  census.total = 1;
  census.irreducible = true;
  return census;
}

}  // namespace

Sublattice boundary_lattice(const LatticePolygon& poly) {
  return hnf_sublattice(boundary_points_ccw(poly));
}

std::array<std::int64_t, 2> smith_invariants(const Sublattice& lat) {
  const std::int64_t a1 = std::gcd(std::gcd(lat.d1(), lat.c()), lat.d2());
  return {a1, lat.index() / a1};
}

std::vector<Sublattice> intermediate_lattices(const LatticePolygon& poly) {
  const Sublattice base = boundary_lattice(poly);
  const auto [a1, a2] = smith_invariants(base);

  // Coset representatives of Z^2 / L_∂ read off the HNF.
  std::vector<IntPoint> reps;
  reps.reserve(static_cast<std::size_t>(base.index()));
  for (std::int64_t x = 0; x < base.d1(); ++x)
    for (std::int64_t y = 0; y < base.d2(); ++y) reps.push_back({x, y});

  const auto b = base.basis();
  std::set<Sublattice> found;
  auto add = [&](std::initializer_list<IntPoint> extra) {
    std::vector<IntPoint> gens{b[0], b[1]};
    gens.insert(gens.end(), extra);
    found.insert(hnf_sublattice(gens));
  };
  if (a1 == 1) {
    // Cyclic quotient: every subgroup is generated by a single element.
    for (const auto& g : reps) add({g});
  } else {
    for (const auto& g : reps)
      for (const auto& h : reps) add({g, h});
  }
  (void)a2;
  return {found.begin(), found.end()};
}

Census general_lower_bound(const LatticePolygon& poly, std::int64_t genus) {
  const std::int64_t interior = interior_count(poly);
  if (genus < 0 || genus > interior)
    throw Error(ErrorCode::GenusOutOfRange,
                "genus must lie in [0, " + std::to_string(interior) + "]");
  if (genus == 0) return irreducible_census(poly);

  Census census;
  census.polygon = poly;
  census.genus = genus;
  for (const auto& lat : intermediate_lattices(poly)) {
    const std::int64_t d = delta_M(poly, lat, genus);
    if (d < 0) continue;
    census.entries.push_back(CensusEntry{lat, lat.index(), d, 1, {}});
  }
  sort_entries(census.entries);
  census.total = static_cast<std::int64_t>(census.entries.size());
  return census;
}

std::vector<KiteLattice> kite_sublattices(const KiteSpec& kite) {
  const std::int64_t d = std::gcd(kite.height(), 2 * kite.k);
  std::vector<KiteLattice> out;
  for (const std::int64_t r : divisors(d))
    out.push_back({r, Sublattice::from_hnf(1, mod_floor(kite.k, r), r)});
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const KiteSpec& kite, std::int64_t genus) {
  if (genus < 0 || genus > kite.height() - 1)
    throw Error(ErrorCode::GenusOutOfRange,
                "genus must lie in [0, " + std::to_string(kite.height() - 1) + "]");
  const LatticePolygon poly = kite.polygon();
  std::vector<AdmissiblePair> out;
  for (const auto& [r, lat] : kite_sublattices(kite)) {
    const std::int64_t d = delta_M(poly, lat, genus);
    if (d < 0) continue;
    if (r % 2 == 0) {
      out.push_back({r, genus + 1, lat});
      continue;
    }
    for (std::int64_t kappa = d % 2; kappa <= std::min(d, genus); kappa += 2)
      out.push_back({r, kappa, lat});
  }
  return out;
}

Census kite_count(const KiteSpec& kite, std::int64_t genus) {
  const LatticePolygon poly = kite.polygon();
  if (genus < 0 || genus > kite.height() - 1)
    throw Error(ErrorCode::GenusOutOfRange,
                "genus must lie in [0, " + std::to_string(kite.height() - 1) + "]");
  if (genus == 0) return irreducible_census(poly);

  Census census;
  census.polygon = poly;
  census.genus = genus;
  const auto pairs = admissible_pairs(kite, genus);
  for (const auto& [r, lat] : kite_sublattices(kite)) {
    const std::int64_t d = delta_M(poly, lat, genus);
    if (d < 0) continue;
    CensusEntry entry{lat, r, d, 0, {}};
    for (const auto& p : pairs)
      if (p.lattice == lat) entry.kappas.push_back(p.kappa);
    entry.multiplicity = static_cast<std::int64_t>(entry.kappas.size());
    if (r % 2 == 0) {
      // kappa = g + 1 must respect 0 <= kappa <= delta_{Z^2}(Δ, g).
      const std::int64_t full = delta_M(poly, Sublattice::integer(), genus);
      if (full < genus + 1)
        census.warnings.push_back("even index " + std::to_string(r) +
                                  ": delta_Z2 = " + std::to_string(full) + " < g + 1");
    }
    census.entries.push_back(std::move(entry));
  }
  sort_entries(census.entries);
  census.total = 0;
  for (const auto& e : census.entries) census.total += e.multiplicity;
  return census;
}

std::int64_t genus1_closed_form(const KiteSpec& kite) {
  const std::int64_t d = std::gcd(kite.height(), 2 * kite.k);
  const std::int64_t sigma = divisor_count(d);
  return (kite.k == kite.k_prime || kite.k == 0) ? sigma - 1 : sigma;
}

}  // namespace severi
