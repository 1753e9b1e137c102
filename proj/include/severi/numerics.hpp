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

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "severi/lattice.hpp"

namespace severi {

using Complex = std::complex<double>;

/// Relative tolerances of the numerical layer.
struct Tolerances {
  double res = 1e-10;      // residual contract of poly_roots
  double cluster = 1e-7;   // root clustering, relative to max(1, |root|)
  double val = 1e-8;       // critical value matching, relative to max(1, max |value|)

  bool operator==(const Tolerances&) const = default;
};

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// Roots of sum_i coeffs[i] w^i (ascending order) with multiplicities. Zero
/// leading coefficients are dropped before solving. Every root satisfies
/// |p(z)| <= res * max|c_i| * max(1, |z|)^deg.
/// Errors: ZeroPolynomial, InvalidPolynomial (non-finite input),
/// NonConvergence.
std::vector<Root> poly_roots(const std::vector<Complex>& coeffs, const Tolerances& tol = {});

/// Evaluates sum_i coeffs[i] w^i.
Complex horner(const std::vector<Complex>& coeffs, Complex w);

/// p(w) = sum_{j=-k}^{k'} c_j w^j. coeffs[i] is the coefficient of w^(i-k).
struct LaurentPoly {
  std::int64_t k = 0;
  std::int64_t k_prime = 1;
  std::vector<Complex> coeffs;

  /// Errors: InvalidPolynomial (bad window, zero end coefficient, NaN),
  /// ZeroPolynomial.
  static LaurentPoly make(std::int64_t k, std::int64_t k_prime, std::vector<Complex> coeffs);

  std::int64_t degree() const { return k + k_prime; }
  Complex operator()(Complex w) const;
  /// alpha * p + beta.
  LaurentPoly affine(Complex alpha, Complex beta) const;

  bool operator==(const LaurentPoly&) const = default;
};

/// T_n by T_{n+1} = 2w T_n - T_{n-1}. Errors: InvalidArgument for n < 1.
LaurentPoly chebyshev(std::int64_t n);

struct CriticalDatum {
  Complex point;
  int multiplicity = 1;  // as a root of p'
  Complex value;
};

/// Zeros of p'. For k >= 1 these are the roots of w^(k+1) p'(w), a degree
/// k+k' polynomial with nonzero constant term, so k+k' points counted with
/// multiplicity. For k = 0, p is a polynomial and its k'-1 critical points
/// include w = 0 when p'(0) = 0.
std::vector<CriticalDatum> critical_data(const LaurentPoly& p, const Tolerances& tol = {});

using Partition = std::vector<int>;  // non-increasing

/// Ramification partitions over the finite critical values, all-ones
/// partitions omitted. Partitions are padded with ones to sum to k+k' and
/// kept in lexicographically decreasing order.
struct Passport {
  std::vector<Partition> partitions;

  bool operator==(const Passport&) const = default;
};

/// Errors: ToleranceConflict (value clusters change between val and
/// 10 * val), InvalidPartition (ramification bookkeeping fails), plus
/// poly_roots errors.
Passport passport(const LaurentPoly& p, const Tolerances& tol = {});

/// {2^δ1}, {2^δ2} and one {2} per remaining simple critical value. With C
/// critical points (k+k' for k >= 1, k+k'-1 for k = 0) there are C - δ1 - δ2
/// such values. Errors: InvalidPartition.
Passport expected_passport(std::int64_t delta1, std::int64_t delta2, const KiteSpec& kite);

/// Sorts parts and partitions into canonical order and drops all-ones.
Passport canonical_passport(std::vector<Partition> partitions, std::int64_t degree);

struct NodalData {
  std::int64_t delta1 = 0;  // >= delta2
  std::int64_t delta2 = 0;
  std::int64_t kappa = 0;
  std::int64_t genus = 0;   // k+k'-1-delta1-delta2
};

/// Nodes of a/z + p(w) + bz: critical points of p with value ±2 sqrt(ab)
/// (principal branch). Errors: InvalidArgument (a or b zero), AmbiguousMatch,
/// DegenerateNode.
NodalData nodal_partition(const LaurentPoly& p, Complex a, Complex b, const Tolerances& tol = {});

struct AmoebaPoint {
  double u, v;  // log|z|, log|w|
};

/// Log-radial grid of n_samples values of w with |w| in [e^-2, e^2]; both
/// roots z of b z^2 + p(w) z + a = 0 that pass the residual check are mapped
/// to (log|z|, log|w|).
std::vector<AmoebaPoint> amoeba_sample(const LaurentPoly& p, Complex a, Complex b,
                                       std::int64_t n_samples, const Tolerances& tol = {});

}  // namespace severi
