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

#ifndef RCFIF__IO__PROBLEM_FILE_HPP_
#define RCFIF__IO__PROBLEM_FILE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rcfif/classical_spline.hpp"
#include "rcfif/constraints.hpp"
#include "rcfif/fractal_spline.hpp"
#include "rcfif/mesh.hpp"

namespace rcfif::io
{
// JSON problem description:
//   knots, values            arrays of numbers (N entries, N+1 in values-only mode)
//   derivatives              optional, same length as knots
//   shape_r, shape_t, alpha  one entry per interval of the interpolated set
//   mode                     "hermite" (default) or "values-only"
//   bound                    optional {side, pieces: [{kind, p_left, p_right, slope_left?}]}
// Unknown fields are rejected; errors name the offending field path.
struct ProblemFile
{
  InterpolationData data;
  std::optional<ShapeParams> params;
  std::optional<ScalingVector> alpha;
  SplineMode mode = SplineMode::hermite;
  std::optional<BoundSpec> bound;

  std::size_t interval_count() const;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::filesystem::path & path);
std::string write_problem(const ProblemFile & problem);

// Interpolated set with the derivatives the spline uses: given ones, arithmetic
// mean estimates when absent (hermite), or chord slopes (values-only).
InterpolationData effective_data(const ProblemFile & problem);

const ShapeParams & require_params(const ProblemFile & problem);
const ScalingVector & require_alpha(const ProblemFile & problem);
const BoundSpec & require_bound(const ProblemFile & problem);

FractalSpline build_model(const ProblemFile & problem);

std::string read_text(const std::filesystem::path & path);
void write_text(const std::filesystem::path & path, std::string_view text);
}  // namespace rcfif::io

#endif  // RCFIF__IO__PROBLEM_FILE_HPP_
