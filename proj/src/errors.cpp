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

#include "severi/errors.hpp"

namespace severi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::GenusOutOfRange: return "GenusOutOfRange";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::NoGeneratingPoint: return "NoGeneratingPoint";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::EvenIndexUnsupported: return "EvenIndexUnsupported";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::MissingHeights: return "MissingHeights";
    case ErrorCode::DualityViolation: return "DualityViolation";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DegenerateNode: return "DegenerateNode";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::ToleranceConflict: return "ToleranceConflict";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace severi
