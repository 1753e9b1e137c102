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

#include "severi/rational.hpp"

#include "severi/errors.hpp"

namespace severi {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  std::string s = c.get_str();
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::ParseError, "not a fraction: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace severi
