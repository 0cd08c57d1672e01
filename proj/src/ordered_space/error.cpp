/*
 Copyright 2026 The tvscone Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "tvscone/error.hpp"

namespace tvscone {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kNonFinite:
      return "NonFinite";
    case ErrorCode::kNotStronglyMinihedral:
      return "NotStronglyMinihedral";
    case ErrorCode::kPointednessUncertified:
      return "PointednessUncertified";
    case ErrorCode::kEmptyInterior:
      return "EmptyInterior";
    case ErrorCode::kNotInterior:
      return "NotInterior";
    case ErrorCode::kBracketNotFound:
      return "BracketNotFound";
    case ErrorCode::kMonotonicityRequired:
      return "MonotonicityRequired";
    case ErrorCode::kUnsupportedOrder:
      return "UnsupportedOrder";
    case ErrorCode::kUnknownPoint:
      return "UnknownPoint";
    case ErrorCode::kAxiomViolated:
      return "AxiomViolated";
    case ErrorCode::kConeMismatch:
      return "ConeMismatch";
    case ErrorCode::kHypothesisViolated:
      return "HypothesisViolated";
    case ErrorCode::kDivergence:
      return "Divergence";
    case ErrorCode::kUnknownSuite:
      return "UnknownSuite";
    case ErrorCode::kConfig:
      return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tvscone
