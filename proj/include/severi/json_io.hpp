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

#include <json.hpp>

#include "severi/census.hpp"
#include "severi/lattice.hpp"
#include "severi/numerics.hpp"
#include "severi/triangulation.hpp"
#include "severi/tropical.hpp"

namespace severi {

using Json = nlohmann::json;

// Serialization used by the CLI and the Python module. Exact values go out as
// integers or "p/q" strings, floating values as numbers, complex numbers as
// [re, im]. Every parser throws ParseError on malformed input.

Json point_to_json(IntPoint p);
IntPoint point_from_json(const Json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
/// "RE,IM" or "RE" as given on the command line.
Complex parse_complex(const std::string& text);

/// {"vertices": [[x, y], ...], "offset": [x, y]}.
Json to_json(const LatticePolygon& poly);
/// Accepts the object above or a bare list of vertices (which is normalized).
LatticePolygon polygon_from_json(const Json& j);

/// {"basis": [[d1, c], [0, d2]], "index": d1*d2}.
Json to_json(const Sublattice& lat);
Sublattice sublattice_from_json(const Json& j);

Json to_json(const Census& census);
Census census_from_json(const Json& j);

Json to_json(const Triangulation& tri);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const TropicalCurve& curve);

Json to_json(const Passport& passport);

/// {"k": .., "k_prime": .., "coeffs": [[re, im], ...]} from exponent -k up.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// Reads a whole file as JSON. Errors: IoError, ParseError.
Json read_json_file(const std::string& path);

}  // namespace severi
