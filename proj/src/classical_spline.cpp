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

#include "rcfif/classical_spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcfif/error.hpp"

namespace rcfif
{
void validate(const ShapeParams & params, std::size_t intervals)
{
  require(params.r.size() == intervals && params.t.size() == intervals,
          ErrorCode::LengthMismatch,
          "shape parameters need " + std::to_string(intervals) + " entries, got r:" +
            std::to_string(params.r.size()) + " t:" + std::to_string(params.t.size()));
  for (std::size_t i = 0; i < intervals; ++i) {
    require(std::isfinite(params.r[i]) && std::isfinite(params.t[i]), ErrorCode::NonFiniteInput,
            "shape parameters of interval " + std::to_string(i) + " are not finite");
    require(params.r[i] > 0.0 && params.t[i] > 0.0, ErrorCode::NonPositiveShapeParams,
            "r and t must be positive on interval " + std::to_string(i));
  }
}

ClassicalSpline::ClassicalSpline(const InterpolationData & data, const ShapeParams & params)
: data_(data), mesh_(data), params_(params)
{
  require(data.has_derivatives(), ErrorCode::MissingDerivatives,
          "the Hermite form needs derivatives at every knot");
  validate(params_, mesh_.interval_count());
  const auto & y = data_.values;
  const auto & d = *data_.derivatives;
  const auto h = mesh_.h();
  numerators_.resize(mesh_.interval_count());
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    const double r = params_.r[i];
    const double t = params_.t[i];
    numerators_[i] = {{r * y[i], (2.0 * r + t) * y[i] + r * h[i] * d[i],
                       (r + 2.0 * t) * y[i + 1] - t * h[i] * d[i + 1], t * y[i + 1]}};
    hull_bound_ = std::max(hull_bound_, rational_sup_bound(numerators_[i], r, t));
  }
}

ClassicalSpline ClassicalSpline::values_only(const InterpolationData & data,
                                             const ShapeParams & params)
{
  return ClassicalSpline(values_only_data(data), params);
}

double ClassicalSpline::eval_local(std::size_t i, double phi) const
{
  const double den = (1.0 - phi) * params_.r[i] + phi * params_.t[i];
  return numerators_[i](phi) / den;
}

double ClassicalSpline::operator()(double xhat) const
{
  if (auto k = mesh_.knot_index(xhat)) {
    return data_.values[*k];
  }
  const std::size_t i = mesh_.locate(xhat);
  return eval_local(i, mesh_.local(i, xhat));
}

InterpolationData values_only_data(const InterpolationData & data)
{
  require(data.knots.size() >= 4, ErrorCode::TooFewPoints,
          "values-only mode needs N+1 >= 4 points (one beyond the interpolated set)");
  const Mesh full(InterpolationData{data.knots, data.values, std::nullopt});
  const std::size_t n = data.knots.size() - 1;
  InterpolationData out;
  out.knots.assign(data.knots.begin(), data.knots.begin() + static_cast<std::ptrdiff_t>(n));
  out.values.assign(data.values.begin(), data.values.begin() + static_cast<std::ptrdiff_t>(n));
  const auto slopes = full.slopes();
  out.derivatives = std::vector<double>(slopes.begin(), slopes.end());
  return out;
}

double eval_classical(const InterpolationData & data, const ShapeParams & params, double xhat)
{
  return ClassicalSpline(data, params)(xhat);
}

double eval_classical_values_only(
  const InterpolationData & data, const ShapeParams & params, double xhat)
{
  return ClassicalSpline::values_only(data, params)(xhat);
}

double sup_bound_classical(const InterpolationData & data, const ShapeParams & params)
{
  const ClassicalSpline f(data, params);
  return sup_norm(f.data().values) + 0.25 * f.mesh().max_h() * sup_norm(*f.data().derivatives);
}
}  // namespace rcfif
