/*
 * Copyright 2026 The wittkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "wittkit/error.hpp"

namespace wittkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadCertificate: return "BadCertificate";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadWitness: return "BadWitness";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_domain_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidRing:
    case ErrorCode::MixedRings:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotSquare:
    case ErrorCode::WrongLength:
    case ErrorCode::BadSpec:
      return false;
    default:
      return true;
  }
}

}  // namespace wittkit
