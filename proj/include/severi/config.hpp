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

#include <optional>
#include <string>

#include "severi/numerics.hpp"

namespace severi {

struct ToleranceOverrides {
  std::optional<double> res, val, cluster;
};

/// Layers, later ones winning: defaults, the JSON config file (keys tol_res,
/// tol_val, tol_cluster), the SEVERI_CENSUS_TOL_{RES,VAL,CLUSTER}
/// environment variables, then explicit flags. Errors: IoError, ParseError,
/// InvalidArgument (non-positive tolerance).
Tolerances resolve_tolerances(const std::optional<std::string>& config_path,
                              const ToleranceOverrides& flags);

}  // namespace severi
