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

#include "severi/numerics.hpp"

namespace severi {

namespace {
constexpr double kLogRadius = 2.0;
}

std::vector<AmoebaPoint> amoeba_sample(const LaurentPoly& p, Complex a, Complex b,
                                       std::int64_t n_samples, const Tolerances& tol) {
  std::vector<AmoebaPoint> out;
  if (n_samples <= 0) return out;
  const auto n_r = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::sqrt(static_cast<double>(n_samples))));
  const std::int64_t n_theta = (n_samples + n_r - 1) / n_r;

  std::int64_t emitted = 0;
  for (std::int64_t i = 0; i < n_r && emitted < n_samples; ++i) {
    const double t = n_r == 1 ? 0.0 : -kLogRadius + 2.0 * kLogRadius * static_cast<double>(i) / static_cast<double>(n_r - 1);
    for (std::int64_t j = 0; j < n_theta && emitted < n_samples; ++j, ++emitted) {
      const double theta = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n_theta);
      const Complex w = std::polar(std::exp(t), theta);
      const Complex pw = p(w);
      // b z^2 + p z + a = 0, cancellation-free form.
      const Complex disc = std::sqrt(pw * pw - 4.0 * a * b);
      const Complex q = -0.5 * (std::abs(pw + disc) >= std::abs(pw - disc) ? pw + disc : pw - disc);
      if (q == Complex(0)) continue;
      for (const Complex z : {q / b, a / q}) {
        if (z == Complex(0) || !std::isfinite(std::abs(z))) continue;
        const Complex f = a / z + pw + b * z;
        const double scale = std::abs(a / z) + std::abs(pw) + std::abs(b * z);
        if (std::abs(f) <= tol.res * scale) out.push_back({std::log(std::abs(z)), t});
      }
    }
  }
  return out;
}

}  // namespace severi
