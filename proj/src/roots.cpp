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
#include <limits>
#include <numeric>

#include "severi/errors.hpp"
#include "severi/numerics.hpp"

namespace severi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 2000;
// Roots of a multiple zero scatter by about eps^(1/m); groups this loose are
// candidates for merging, subject to the Taylor test below.
constexpr double kLooseRadius = 5e-2;
constexpr double kTaylorTol = 1e-9;

struct Eval {
  Complex p, dp;
  double bound;  // rounding-error scale of p at this point
};

Eval eval_with_derivative(const std::vector<Complex>& c, Complex z) {
  Complex p = c.back(), dp = 0;
  double bound = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    bound = bound * az + std::abs(c[i]);
  }
  return {p, dp, bound};
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

// Aberth-Ehrlich on a polynomial with nonzero constant term.
std::vector<Complex> aberth(const std::vector<Complex>& c) {
  const std::size_t d = c.size() - 1;
  const double lead = std::abs(c.back());
  const double radius = std::pow(std::abs(c.front()) / lead, 1.0 / static_cast<double>(d));
  std::vector<Complex> z(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(d) + 0.4;
    z[j] = std::polar(radius, angle);
  }
  std::vector<bool> done(d, false);
  for (int it = 0; it < kMaxIterations; ++it) {
    bool all_done = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (done[j]) continue;
      const Eval e = eval_with_derivative(c, z[j]);
      if (std::abs(e.p) <= 4.0 * kEps * e.bound) {
        done[j] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = e.p / e.dp;
      Complex sum = 0;
      for (std::size_t l = 0; l < d; ++l)
        if (l != j) sum += 1.0 / (z[j] - z[l]);
      const Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[j] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(z[j])) done[j] = true;
    }
    if (all_done) return z;
  }
  // Roots that never met the stopping rule are judged by the residual
  // contract later, so a stalled iteration is not an error by itself.
  return z;
}

// Single-linkage groups: i and j join when |zi - zj| <= r * max(1, |zi|, |zj|).
std::vector<std::vector<std::size_t>> link(const std::vector<Complex>& z,
                                           const std::vector<std::size_t>& idx, double r) {
  std::vector<std::size_t> parent(idx.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const Complex za = z[idx[a]], zb = z[idx[b]];
      const double scale = std::max({1.0, std::abs(za), std::abs(zb)});
      if (std::abs(za - zb) <= r * scale) parent[find(a)] = find(b);
    }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::size_t root = find(a);
    if (slot[root] == idx.size()) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(idx[a]);
  }
  return groups;
}

// Taylor coefficients p^(j)(c)/j! together with their rounding scales.
void taylor(const std::vector<Complex>& coeffs, Complex c, std::size_t count,
            std::vector<Complex>& t, std::vector<double>& scale) {
  std::vector<Complex> work = coeffs;
  std::vector<double> mag(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) mag[i] = std::abs(coeffs[i]);
  const double ac = std::abs(c);
  t.clear();
  scale.clear();
  for (std::size_t j = 0; j < count && !work.empty(); ++j) {
    // Synthetic division by (w - c): remainder is the next Taylor coefficient.
    const std::size_t n = work.size();
    std::vector<Complex> q(n - 1);
    std::vector<double> qm(n - 1);
    Complex acc = work[n - 1];
    double accm = mag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
      q[i] = acc;
      qm[i] = accm;
      acc = acc * c + work[i];
      accm = accm * ac + mag[i];
    }
    t.push_back(acc);
    scale.push_back(accm);
    work = std::move(q);
    mag = std::move(qm);
  }
}

Complex newton_polish(const std::vector<Complex>& c, Complex z) {
  for (int it = 0; it < 8; ++it) {
    const Eval e = eval_with_derivative(c, z);
    if (e.dp == Complex(0) || std::abs(e.p) <= kEps * e.bound) break;
    const Complex next = z - e.p / e.dp;
    if (std::abs(eval_with_derivative(c, next).p) >= std::abs(e.p)) break;
    z = next;
  }
  return z;
}

}  // namespace

Complex horner(const std::vector<Complex>& coeffs, Complex w) {
  Complex acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * w + coeffs[i];
  return acc;
}

std::vector<Root> poly_roots(const std::vector<Complex>& coeffs, const Tolerances& tol) {
  for (const auto& c : coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidPolynomial, "non-finite coefficient");
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == Complex(0)) --top;
  if (top == 0) throw Error(ErrorCode::ZeroPolynomial, "all coefficients are zero");
  const std::vector<Complex> full(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(top));
  const std::size_t degree = full.size() - 1;

  std::vector<Root> out;
  std::size_t low = 0;
  while (full[low] == Complex(0)) ++low;
  if (low > 0) out.push_back({Complex(0), static_cast<int>(low)});
  const std::vector<Complex> reduced(full.begin() + static_cast<std::ptrdiff_t>(low), full.end());

  if (reduced.size() == 2) {
    out.push_back({-reduced[0] / reduced[1], 1});
  } else if (reduced.size() > 2) {
    const std::vector<Complex> z = aberth(reduced);
    std::vector<std::size_t> all(z.size());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& group : link(z, all, kLooseRadius)) {
      const std::size_t m = group.size();
      if (m == 1) {
        out.push_back({newton_polish(reduced, z[group[0]]), 1});
        continue;
      }
      Complex centroid = 0;
      for (auto i : group) centroid += z[i];
      centroid /= static_cast<double>(m);
      std::vector<Complex> dm = reduced;
      for (std::size_t j = 0; j + 1 < m; ++j) dm = derivative(dm);
      centroid = newton_polish(dm, centroid);
      std::vector<Complex> t;
      std::vector<double> scale;
      taylor(reduced, centroid, m, t, scale);
      bool multiple = t.size() == m;
      for (std::size_t j = 0; multiple && j < m; ++j)
        multiple = std::abs(t[j]) <= kTaylorTol * scale[j];
      if (multiple) {
        out.push_back({centroid, static_cast<int>(m)});
        continue;
      }
      for (const auto& tight : link(z, group, tol.cluster)) {
        Complex c = 0;
        for (auto i : tight) c += z[i];
        c /= static_cast<double>(tight.size());
        out.push_back({tight.size() == 1 ? newton_polish(reduced, c) : c,
                       static_cast<int>(tight.size())});
      }
    }
  }

  double cmax = 0;
  for (const auto& c : full) cmax = std::max(cmax, std::abs(c));
  for (const auto& r : out) {
    const double bound = tol.res * cmax * std::pow(std::max(1.0, std::abs(r.value)), static_cast<double>(degree));
    if (!(std::abs(horner(full, r.value)) <= bound))
      throw Error(ErrorCode::NonConvergence, "root residual exceeds the contract");
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace severi
