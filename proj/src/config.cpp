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

#include "severi/config.hpp"

#include <cmath>
#include <cstdlib>

#include "severi/errors.hpp"
#include "severi/json_io.hpp"

namespace severi {

namespace {

void apply(double& slot, double value, const std::string& source) {
  if (!(value > 0) || !std::isfinite(value))
    throw Error(ErrorCode::InvalidArgument, source + ": tolerance must be positive");
  slot = value;
}

void apply_env(double& slot, const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0') throw Error(ErrorCode::ParseError, std::string(name) + " is not a number");
  apply(slot, v, name);
}

}  // namespace

Tolerances resolve_tolerances(const std::optional<std::string>& config_path,
                              const ToleranceOverrides& flags) {
  Tolerances tol;
  if (config_path) {
    const Json j = read_json_file(*config_path);
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "config file must hold a JSON object");
    for (const auto& [key, slot] : {std::pair{"tol_res", &tol.res}, std::pair{"tol_val", &tol.val},
                                    std::pair{"tol_cluster", &tol.cluster}}) {
      if (!j.contains(key)) continue;
      if (!j.at(key).is_number()) throw Error(ErrorCode::ParseError, std::string(key) + " must be a number");
      apply(*slot, j.at(key).get<double>(), *config_path);
    }
  }
  apply_env(tol.res, "SEVERI_CENSUS_TOL_RES");
  apply_env(tol.val, "SEVERI_CENSUS_TOL_VAL");
  apply_env(tol.cluster, "SEVERI_CENSUS_TOL_CLUSTER");
  if (flags.res) apply(tol.res, *flags.res, "--tol-res");
  if (flags.val) apply(tol.val, *flags.val, "--tol-val");
  if (flags.cluster) apply(tol.cluster, *flags.cluster, "--tol-cluster");
  return tol;
}

}  // namespace severi
