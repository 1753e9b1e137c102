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
#include <string>
#include <vector>

#include "severi/lattice.hpp"

namespace severi {

struct CensusEntry {
  Sublattice lattice;
  std::int64_t index = 1;
  std::int64_t delta_M = 0;
  std::int64_t multiplicity = 1;
  std::vector<std::int64_t> kappas;  // empty for non-kite censuses

  bool operator==(const CensusEntry&) const = default;
};

/// Lower bound on the number of components of the Severi variety of genus
/// `genus`. Entries are sorted by index, then by HNF basis.
struct Census {
  LatticePolygon polygon;
  std::int64_t genus = 0;
  std::vector<CensusEntry> entries;
  std::int64_t total = 0;
  /// Genus-zero requests: the variety is irreducible, total = 1, no entries.
  bool irreducible = false;
  /// Violated internal consistency checks (expected to stay empty).
  std::vector<std::string> warnings;

  bool operator==(const Census&) const = default;
};

/// Sublattice generated by the boundary lattice points.
Sublattice boundary_lattice(const LatticePolygon& poly);

/// Smith invariants (a1, a2), a1 | a2, of the quotient Z^2 / lat.
std::array<std::int64_t, 2> smith_invariants(const Sublattice& lat);

/// All M with L_∂ ⊆ M ⊆ Z^2, i.e. every sublattice with ∂Δ ∩ M = ∂Δ ∩ Z^2,
/// found by enumerating subgroups of Z^2 / L_∂. Sorted.
std::vector<Sublattice> intermediate_lattices(const LatticePolygon& poly);

/// Counts the sublattices with the boundary condition and |Δ° ∩ M| >= g.
/// Errors: GenusOutOfRange.
Census general_lower_bound(const LatticePolygon& poly, std::int64_t genus);

struct KiteLattice {
  std::int64_t index;
  Sublattice lattice;

  bool operator==(const KiteLattice&) const = default;
};

/// One lattice <(1,k), (0,r)> per positive common divisor r of k+k' and 2k.
std::vector<KiteLattice> kite_sublattices(const KiteSpec& kite);

struct AdmissiblePair {
  std::int64_t index;
  std::int64_t kappa;
  Sublattice lattice;

  bool operator==(const AdmissiblePair&) const = default;
};

/// Admissible (M, kappa): even index forces kappa = g + 1; odd index allows
/// 0 <= kappa <= min(delta_M, g) with kappa = delta_M mod 2.
/// Errors: GenusOutOfRange (needs 0 <= g <= k+k'-1).
std::vector<AdmissiblePair> admissible_pairs(const KiteSpec& kite, std::int64_t genus);

/// Multiplicity-weighted count #_{k,k',g}. Errors: GenusOutOfRange.
Census kite_count(const KiteSpec& kite, std::int64_t genus);

/// Number of positive divisors of d = gcd(k+k', 2k), minus 1 when k = k' or k = 0.
std::int64_t genus1_closed_form(const KiteSpec& kite);

}  // namespace severi
