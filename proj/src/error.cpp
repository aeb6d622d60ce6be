// Copyright 2026 The rcfif Authors
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

#include "rcfif/error.hpp"

namespace rcfif
{
std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonIncreasingKnots: return "NonIncreasingKnots";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::PointOutsideSubinterval: return "PointOutsideSubinterval";
    case ErrorCode::MissingDerivatives: return "MissingDerivatives";
    case ErrorCode::NonPositiveShapeParams: return "NonPositiveShapeParams";
    case ErrorCode::CoincidentArguments: return "CoincidentArguments";
    case ErrorCode::NegativeDerivativeBound: return "NegativeDerivativeBound";
    case ErrorCode::ScalingOutOfRange: return "ScalingOutOfRange";
    case ErrorCode::NonPositiveTolerance: return "NonPositiveTolerance";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::AlphaSupOutOfRange: return "AlphaSupOutOfRange";
    case ErrorCode::BoundViolatedAtKnot: return "BoundViolatedAtKnot";
    case ErrorCode::WrongBoundKind: return "WrongBoundKind";
    case ErrorCode::NonPositiveBC: return "NonPositiveBC";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorCode::NonPositiveBump: return "NonPositiveBump";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyCurve: return "EmptyCurve";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_status(ErrorCode code)
{
  return 10 + static_cast<int>(code);
}

Error::Error(ErrorCode code, const std::string & message)
: std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

void fail(ErrorCode code, const std::string & message)
{
  throw Error(code, message);
}
}  // namespace rcfif
