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

#ifndef RCFIF__ERROR_HPP_
#define RCFIF__ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcfif
{
// Every failure the library reports carries one of these codes. The CLI maps
// each code to a distinct process exit status (see exit_status()).
enum class ErrorCode
{
  TooFewPoints,
  LengthMismatch,
  NonIncreasingKnots,
  NonFiniteInput,
  IndexOutOfRange,
  PointOutsideDomain,
  PointOutsideSubinterval,
  MissingDerivatives,
  NonPositiveShapeParams,
  CoincidentArguments,
  NegativeDerivativeBound,
  ScalingOutOfRange,
  NonPositiveTolerance,
  DepthTooLarge,
  AlphaSupOutOfRange,
  BoundViolatedAtKnot,
  WrongBoundKind,
  NonPositiveBC,
  Infeasible,
  NonPositiveAlpha,
  NonPositiveBump,
  UnknownGenerator,
  InvalidArgument,
  ParseError,
  EmptyCurve,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Process exit status for a code: 10 + the enumerator's position. 0 is
// success, 1 an unexpected internal failure, 2 a command-line usage error.
int exit_status(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string & message);

inline void require(bool condition, ErrorCode code, const std::string & message)
{
  if (!condition) {
    fail(code, message);
  }
}
}  // namespace rcfif

#endif  // RCFIF__ERROR_HPP_
