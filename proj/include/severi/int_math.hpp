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

#include <cstdint>
#include <vector>

namespace severi {

// Overflow-checked int64 arithmetic. Every lattice computation goes through
// these so a result is either exact or an Error(Overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Narrow a 128-bit intermediate, throwing on overflow.
std::int64_t narrow(__int128 v);

/// Floor and ceiling of num/den for den != 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

/// Non-negative remainder, m > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

struct ExtendedGcd {
  std::int64_t g;  // >= 0
  std::int64_t u;
  std::int64_t v;  // u*a + v*b == g
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// Positive divisors of n > 0 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Number of positive divisors (sigma_0).
std::int64_t divisor_count(std::int64_t n);

}  // namespace severi
