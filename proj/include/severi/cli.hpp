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

#include <string>
#include <vector>

#include "severi/json_io.hpp"

namespace severi {

struct CommandResult {
  bool ok = true;
  Json payload;
  std::vector<std::string> artifacts;
  int exit_code = 0;    // 0 ok, 1 domain or IO error, 2 usage error
  std::string output;   // what the tool prints on stdout

  /// {"status": "ok"|"error", "payload": ..., "artifacts": [...]}.
  Json document() const;
};

/// Runs one subcommand. `args` excludes the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace severi
