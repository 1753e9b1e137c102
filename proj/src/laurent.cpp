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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "severi/errors.hpp"
#include "severi/numerics.hpp"

namespace severi {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// Number of critical points counted with multiplicity.
std::int64_t critical_count(std::int64_t k, std::int64_t k_prime) {
  return k >= 1 ? k + k_prime : k_prime - 1;
}

// Groups indices whose values lie within r of each other (single linkage).
std::vector<std::vector<std::size_t>> cluster_values(const std::vector<Complex>& v, double r) {
  std::vector<std::size_t> parent(v.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (std::abs(v[a] - v[b]) <= r) parent[find(a)] = find(b);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(v.size(), v.size());
  for (std::size_t a = 0; a < v.size(); ++a) {
    const std::size_t root = find(a);
    if (slot[root] == v.size()) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(a);
  }
  return groups;
}

Partition padded(std::vector<int> parts, std::int64_t degree) {
  std::int64_t sum = 0;
  for (int p : parts) sum += p;
  if (sum > degree) throw Error(ErrorCode::InvalidPartition, "ramification exceeds the degree");
  for (; sum < degree; ++sum) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

LaurentPoly LaurentPoly::make(std::int64_t k, std::int64_t k_prime, std::vector<Complex> coeffs) {
  if (k < 0 || k_prime < 1)
    throw Error(ErrorCode::InvalidPolynomial, "exponent window needs k >= 0 and k' >= 1");
  if (static_cast<std::int64_t>(coeffs.size()) != k + k_prime + 1)
    throw Error(ErrorCode::InvalidPolynomial, "expected k + k' + 1 coefficients");
  if (!std::all_of(coeffs.begin(), coeffs.end(), finite))
    throw Error(ErrorCode::InvalidPolynomial, "non-finite coefficient");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c == Complex(0); }))
    throw Error(ErrorCode::ZeroPolynomial, "all coefficients are zero");
  // For k = 0 the constant term may vanish; the window is still [0, k'].
  if ((k > 0 && coeffs.front() == Complex(0)) || coeffs.back() == Complex(0))
    throw Error(ErrorCode::InvalidPolynomial, "end coefficients of the exponent window must be nonzero");
  LaurentPoly p;
  p.k = k;
  p.k_prime = k_prime;
  p.coeffs = std::move(coeffs);
  return p;
}

Complex LaurentPoly::operator()(Complex w) const {
  return horner(coeffs, w) * std::pow(w, -static_cast<int>(k));
}

LaurentPoly LaurentPoly::affine(Complex alpha, Complex beta) const {
  std::vector<Complex> c = coeffs;
  for (auto& x : c) x *= alpha;
  c[static_cast<std::size_t>(k)] += beta;
  return make(k, k_prime, std::move(c));
}

LaurentPoly chebyshev(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Chebyshev degree must be >= 1");
  std::vector<double> prev{1.0}, cur{0.0, 1.0};
  for (std::int64_t d = 1; d < n; ++d) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return LaurentPoly::make(0, n, std::vector<Complex>(cur.begin(), cur.end()));
}

std::vector<CriticalDatum> critical_data(const LaurentPoly& p, const Tolerances& tol) {
  // w^(k+1) p'(w) = sum_i (i - k) c_i w^i for k >= 1; plain p' for k = 0.
  std::vector<Complex> num;
  if (p.k >= 1) {
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      num.push_back(p.coeffs[i] * static_cast<double>(static_cast<std::int64_t>(i) - p.k));
  } else {
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) num.push_back(p.coeffs[i] * static_cast<double>(i));
  }
  std::vector<CriticalDatum> out;
  if (num.size() < 2) return out;
  for (const auto& r : poly_roots(num, tol)) out.push_back({r.value, r.multiplicity, p(r.value)});
  return out;
}

Passport canonical_passport(std::vector<Partition> partitions, std::int64_t degree) {
  Passport out;
  for (auto& part : partitions) {
    std::sort(part.rbegin(), part.rend());
    const bool all_ones = std::all_of(part.begin(), part.end(), [](int x) { return x == 1; });
    if (part.empty() || all_ones) continue;
    if (std::accumulate(part.begin(), part.end(), std::int64_t{0}) != degree)
      throw Error(ErrorCode::InvalidPartition, "partition does not sum to the degree");
    out.partitions.push_back(std::move(part));
  }
  std::sort(out.partitions.rbegin(), out.partitions.rend());
  return out;
}

Passport passport(const LaurentPoly& p, const Tolerances& tol) {
  const auto data = critical_data(p, tol);
  std::vector<Complex> values;
  double scale = 1.0;
  for (const auto& d : data) {
    values.push_back(d.value);
    scale = std::max(scale, std::abs(d.value));
  }
  const auto groups = cluster_values(values, tol.val * scale);
  if (groups != cluster_values(values, 10.0 * tol.val * scale))
    throw Error(ErrorCode::ToleranceConflict, "critical value clusters change between val and 10*val");

  const std::int64_t n = p.degree();
  std::int64_t ramification = 0;
  std::vector<Partition> partitions;
  for (const auto& g : groups) {
    std::vector<int> parts;
    for (auto i : g) parts.push_back(data[i].multiplicity + 1);
    Partition part = padded(std::move(parts), n);
    ramification += n - static_cast<std::int64_t>(part.size());
    partitions.push_back(std::move(part));
  }
  if (ramification != critical_count(p.k, p.k_prime))
    throw Error(ErrorCode::InvalidPartition, "Riemann-Hurwitz count does not match");
  return canonical_passport(std::move(partitions), n);
}

Passport expected_passport(std::int64_t delta1, std::int64_t delta2, const KiteSpec& kite) {
  const std::int64_t n = kite.height();
  const std::int64_t c = critical_count(kite.k, kite.k_prime);
  if (delta1 < 0 || delta2 < 0 || 2 * delta1 > n || 2 * delta2 > n || delta1 + delta2 > c)
    throw Error(ErrorCode::InvalidPartition, "node blocks do not fit the kite");
  std::vector<Partition> parts;
  parts.push_back(padded(std::vector<int>(static_cast<std::size_t>(delta1), 2), n));
  parts.push_back(padded(std::vector<int>(static_cast<std::size_t>(delta2), 2), n));
  for (std::int64_t i = 0; i < c - delta1 - delta2; ++i) parts.push_back(padded({2}, n));
  return canonical_passport(std::move(parts), n);
}

NodalData nodal_partition(const LaurentPoly& p, Complex a, Complex b, const Tolerances& tol) {
  if (a == Complex(0) || b == Complex(0))
    throw Error(ErrorCode::InvalidArgument, "a and b must be nonzero");
  const Complex target = 2.0 * std::sqrt(a * b);
  const auto data = critical_data(p, tol);
  double scale = 1.0;
  for (const auto& d : data) scale = std::max(scale, std::abs(d.value));
  const double r = tol.val * scale;

  std::int64_t plus = 0, minus = 0;
  for (const auto& d : data) {
    const bool near_plus = std::abs(d.value - target) <= r;
    const bool near_minus = std::abs(d.value + target) <= r;
    if (near_plus && near_minus)
      throw Error(ErrorCode::AmbiguousMatch, "critical value matches both node targets");
    if (!near_plus && !near_minus) continue;
    if (d.multiplicity != 1)
      throw Error(ErrorCode::DegenerateNode, "non-simple critical point at a node target");
    (near_plus ? plus : minus) += 1;
  }
  NodalData out;
  out.delta1 = std::max(plus, minus);
  out.delta2 = std::min(plus, minus);
  out.kappa = out.delta1 - out.delta2;
  out.genus = p.degree() - 1 - out.delta1 - out.delta2;
  return out;
}

}  // namespace severi
