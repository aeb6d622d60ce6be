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

#ifndef RCFIF__CLASSICAL_SPLINE_HPP_
#define RCFIF__CLASSICAL_SPLINE_HPP_

#include <cstddef>
#include <vector>

#include "rcfif/bernstein.hpp"
#include "rcfif/mesh.hpp"

namespace rcfif
{
// Positive per-interval weights (r_i, t_i) of the linear denominator
// (1-phi) r_i + phi t_i.
struct ShapeParams
{
  std::vector<double> r;
  std::vector<double> t;

  static ShapeParams uniform(std::size_t intervals, double r = 1.0, double t = 1.0)
  {
    return {std::vector<double>(intervals, r), std::vector<double>(intervals, t)};
  }
};

void validate(const ShapeParams & params, std::size_t intervals);

// C1 rational cubic Hermite spline with linear denominator. On interval i with
// phi = (x - x_i)/h_i it is R_i(phi)/S_i(phi), where R_i has the cubic-basis
// coefficients
//   r_i y_i, (2r_i + t_i) y_i + r_i h_i d_i, (r_i + 2t_i) y_{i+1} - t_i h_i d_{i+1}, t_i y_{i+1}.
class ClassicalSpline
{
public:
  ClassicalSpline(const InterpolationData & data, const ShapeParams & params);

  // Function-values-only variant: `data` holds N+1 points, the spline
  // interpolates the first N with d_j replaced by the chord slope of the
  // interval to the right of knot j.
  static ClassicalSpline values_only(const InterpolationData & data, const ShapeParams & params);

  double operator()(double xhat) const;
  double eval_local(std::size_t i, double phi) const;

  const Mesh & mesh() const { return mesh_; }
  const InterpolationData & data() const { return data_; }
  const ShapeParams & params() const { return params_; }
  const CubicBernstein & numerator(std::size_t i) const { return numerators_[i]; }

  // Convex-hull bound on sup |f| over the whole domain.
  double hull_bound() const { return hull_bound_; }

private:
  InterpolationData data_;
  Mesh mesh_;
  ShapeParams params_;
  std::vector<CubicBernstein> numerators_;
  double hull_bound_ = 0.0;
};

// First N points of an (N+1)-point data set with derivatives set to the chord
// slopes Delta_1..Delta_N.
InterpolationData values_only_data(const InterpolationData & data);

double eval_classical(const InterpolationData & data, const ShapeParams & params, double xhat);
double eval_classical_values_only(
  const InterpolationData & data, const ShapeParams & params, double xhat);

// |y|_inf + (h/4) |d|_inf with h the largest interval length.
double sup_bound_classical(const InterpolationData & data, const ShapeParams & params);
}  // namespace rcfif

#endif  // RCFIF__CLASSICAL_SPLINE_HPP_
