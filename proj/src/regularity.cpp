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
#include <map>
#include <numeric>

#include "severi/errors.hpp"
#include "severi/int_math.hpp"
#include "severi/triangulation.hpp"

namespace severi {

std::vector<std::vector<std::int64_t>> convexity_constraints(const Triangulation& tri) {
  const auto& vs = tri.vertices;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& e : edge_structure(tri).interior) {
    const IntPoint a = vs[e.a], b = vs[e.b], c = vs[e.left_opposite], d = vs[e.right_opposite];
    // d = la*a + lb*b + lc*c (barycentric, scaled by O = orient(a,b,c) > 0);
    // convexity across ab means h(d) exceeds the plane of abc at d.
    std::vector<std::int64_t> row(vs.size(), 0);
    row[e.right_opposite] = checked_add(row[e.right_opposite], orient(a, b, c));
    row[e.a] = checked_sub(row[e.a], orient(b, c, d));
    row[e.b] = checked_sub(row[e.b], orient(c, a, d));
    row[e.left_opposite] = checked_sub(row[e.left_opposite], orient(a, b, d));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool verify_heights(const Triangulation& tri, const std::vector<Rational>& heights) {
  if (heights.size() != tri.vertices.size()) return false;
  for (const auto& row : convexity_constraints(tri)) {
    Rational s = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) s += Rational(static_cast<long>(row[i])) * heights[i];
    if (s <= 0) return false;
  }
  return true;
}

namespace {

template <class T>
struct Arith;

template <>
struct Arith<double> {
  static constexpr bool exact = false;
  static bool negative(double v) { return v < -1e-9; }
  static bool positive(double v) { return v > 1e-9; }
  static bool zero(double v) { return std::abs(v) <= 1e-7; }
};

template <>
struct Arith<Rational> {
  static constexpr bool exact = true;
  static bool negative(const Rational& v) { return sgn(v) < 0; }
  static bool positive(const Rational& v) { return sgn(v) > 0; }
  static bool zero(const Rational& v) { return sgn(v) == 0; }
};

enum class LpStatus { Feasible, Infeasible, IterationLimit };

// Phase-1 simplex for A h >= 1, h >= 0 (any strictly convex lift can be
// shifted by a constant to make every height non-negative). Rows read
// A_i h - s_i + a_i = 1 with artificials a_i forming the starting basis.
template <class T>
LpStatus phase_one(const std::vector<std::vector<std::int64_t>>& a, std::size_t n,
                   std::vector<T>& solution) {
  using Ar = Arith<T>;
  const std::size_t m = a.size();
  const std::size_t cols = n + 2 * m;  // h, surplus, artificial
  const std::size_t rhs = cols;
  std::vector<std::vector<T>> tab(m, std::vector<T>(cols + 1, T(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = T(static_cast<long>(a[i][j]));
    tab[i][n + i] = T(-1);
    tab[i][n + m + i] = T(1);
    tab[i][rhs] = T(1);
    basis[i] = n + m + i;
  }
  // Reduced costs of "minimize sum of artificials".
  std::vector<T> z(cols + 1, T(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < n + m || j == rhs) z[j] -= tab[i][j];

  const std::size_t max_iter = Ar::exact ? std::size_t(-1) : 50 * (m + n) + 100;
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= max_iter) return LpStatus::IterationLimit;
    std::size_t enter = cols;
    if constexpr (Ar::exact) {
      // Bland: first improving column, guarantees termination.
      for (std::size_t j = 0; j < cols; ++j)
        if (Ar::negative(z[j])) {
          enter = j;
          break;
        }
    } else {
      T best = T(0);
      for (std::size_t j = 0; j < cols; ++j)
        if (Ar::negative(z[j]) && (enter == cols || z[j] < best)) {
          best = z[j];
          enter = j;
        }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    T best_ratio = T(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!Ar::positive(tab[i][enter])) continue;
      T ratio = tab[i][rhs] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return LpStatus::IterationLimit;  // unbounded cannot happen in phase 1

    const T pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || Ar::zero(tab[i][enter])) continue;
      const T f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!Ar::zero(tab[leave][j])) tab[i][j] -= f * tab[leave][j];
    }
    if (!Ar::zero(z[enter])) {
      const T f = z[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!Ar::zero(tab[leave][j])) z[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  // z[rhs] = -(sum of artificials).
  if (!Ar::zero(z[rhs])) return LpStatus::Infeasible;
  solution.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) solution[basis[i]] = tab[i][rhs];
  return LpStatus::Feasible;
}

std::vector<Rational> round_to_grid(const std::vector<double>& h, double scale) {
  std::vector<Rational> out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    Rational q(std::nearbyint(h[i] * scale));
    q /= Rational(scale);
    out[i] = q;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> is_regular(const Triangulation& tri) {
  const auto rows = convexity_constraints(tri);
  const std::size_t n = tri.vertices.size();
  if (rows.empty()) return std::vector<Rational>(n, Rational(0));

  std::vector<double> approx;
  if (phase_one<double>(rows, n, approx) == LpStatus::Feasible) {
    for (double scale : {1048576.0, 1099511627776.0}) {
      auto candidate = round_to_grid(approx, scale);
      if (verify_heights(tri, candidate)) return candidate;
    }
  }

  std::vector<Rational> exact;
  if (phase_one<Rational>(rows, n, exact) != LpStatus::Feasible) return std::nullopt;
  if (!verify_heights(tri, exact)) throw Error(ErrorCode::NonConvergence, "exact simplex returned an invalid certificate");
  return exact;
}

std::optional<std::vector<Rational>> is_regular_fourier_motzkin(const Triangulation& tri,
                                                                std::size_t max_rows) {
  const auto rows = convexity_constraints(tri);
  const std::size_t n = tri.vertices.size();
  if (rows.empty()) return std::vector<Rational>(n, Rational(0));

  // Adding an affine function changes no constraint, so the three vertices
  // of the first triangle are pinned to height 0.
  std::vector<bool> pinned(n, false);
  for (auto v : tri.triangles.front()) pinned[v] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n; ++v)
    if (!pinned[v]) free_vars.push_back(v);
  const std::size_t nv = free_vars.size();

  struct Row {
    std::vector<mpz_class> coef;  // over free_vars
    mpz_class rhs;                // coef . x >= rhs
  };
  using System = std::vector<Row>;

  auto normalize = [](Row& r) {
    mpz_class g = abs(r.rhs);
    for (const auto& c : r.coef) g = gcd(g, c);
    if (g > 1) {
      for (auto& c : r.coef) c /= g;
      r.rhs /= g;
    }
  };
  auto dedupe = [](System& sys) -> bool {
    std::map<std::vector<mpz_class>, mpz_class> best;
    for (auto& r : sys) {
      const bool all_zero = std::all_of(r.coef.begin(), r.coef.end(), [](const mpz_class& c) { return c == 0; });
      if (all_zero) {
        if (r.rhs > 0) return false;  // 0 >= positive
        continue;
      }
      auto it = best.find(r.coef);
      if (it == best.end() || r.rhs > it->second) best[r.coef] = r.rhs;
    }
    sys.clear();
    for (auto& [c, rhs] : best) sys.push_back({c, rhs});
    return true;
  };

  System sys;
  for (const auto& row : rows) {
    Row r{std::vector<mpz_class>(nv), 1};
    for (std::size_t j = 0; j < nv; ++j) r.coef[j] = static_cast<long>(row[free_vars[j]]);
    normalize(r);
    sys.push_back(std::move(r));
  }
  if (!dedupe(sys)) return std::nullopt;

  std::vector<bool> eliminated(nv, false);
  std::vector<std::pair<std::size_t, System>> history;
  for (std::size_t step = 0; step < nv; ++step) {
    // Greedy order: smallest growth pos*neg - pos - neg.
    std::size_t var = nv;
    long best = 0;
    for (std::size_t j = 0; j < nv; ++j) {
      if (eliminated[j]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : sys) {
        if (r.coef[j] > 0) ++pos;
        if (r.coef[j] < 0) ++neg;
      }
      const long growth = pos * neg - pos - neg;
      if (var == nv || growth < best) {
        var = j;
        best = growth;
      }
    }
    history.push_back({var, sys});
    eliminated[var] = true;

    System next, pos, neg;
    for (auto& r : sys) {
      if (r.coef[var] > 0)
        pos.push_back(r);
      else if (r.coef[var] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const mpz_class fp = -q.coef[var], fq = p.coef[var];
        Row r{std::vector<mpz_class>(nv), fp * p.rhs + fq * q.rhs};
        for (std::size_t j = 0; j < nv; ++j) r.coef[j] = fp * p.coef[j] + fq * q.coef[j];
        normalize(r);
        next.push_back(std::move(r));
        if (next.size() > max_rows)
          throw Error(ErrorCode::NonConvergence, "Fourier-Motzkin row limit exceeded");
      }
    if (!dedupe(next)) return std::nullopt;
    sys = std::move(next);
  }

  // Back-substitution in reverse elimination order.
  std::vector<Rational> x(nv, Rational(0));
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    const std::size_t var = it->first;
    std::optional<Rational> lo, hi;
    for (const auto& r : it->second) {
      if (r.coef[var] == 0) continue;
      Rational rest = 0;
      for (std::size_t j = 0; j < nv; ++j)
        if (j != var && r.coef[j] != 0) rest += Rational(r.coef[j]) * x[j];
      const Rational bound = (Rational(r.rhs) - rest) / Rational(r.coef[var]);
      if (r.coef[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      x[var] = (*lo + *hi) / 2;
    else if (lo)
      x[var] = *lo;
    else if (hi)
      x[var] = *hi;
  }

  std::vector<Rational> heights(n, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) heights[free_vars[j]] = x[j];
  if (!verify_heights(tri, heights))
    throw Error(ErrorCode::NonConvergence, "Fourier-Motzkin back-substitution failed");
  return heights;
}

}  // namespace severi
