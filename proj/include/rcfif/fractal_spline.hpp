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

#ifndef RCFIF__FRACTAL_SPLINE_HPP_
#define RCFIF__FRACTAL_SPLINE_HPP_

#include <cstddef>
#include <vector>

#include "rcfif/bernstein.hpp"
#include "rcfif/classical_spline.hpp"
#include "rcfif/mesh.hpp"

namespace rcfif
{
struct ScalingVector
{
  std::vector<double> alpha;

  double sup_norm() const;
};

enum class SplineMode
{
  hermite,
  values_only,
};

enum class BaseKind
{
  // b_i is the rational cubic through (x_1, y_1, d_1) and (x_N, y_N, d_N)
  // with the denominator of interval i.
  rational,
  // b_i = f - bump_i with a quartic bump vanishing to first order at both ends.
  classical_minus_bump,
};

struct CurvePoint
{
  double x;
  double value;
};

struct PointValue
{
  double value;
  // Certified bound on |f^alpha(x) - value|.
  double tail_bound;
};

// Rational cubic fractal spline: the unique continuous f^alpha with
//   f^alpha(L_i(x)) = alpha_i f^alpha(x) + f(L_i(x)) - alpha_i b_i(x),  x in I,
// where f is the classical spline. Immutable once built.
class FractalSpline
{
public:
  // `data` holds the interpolated set with derivatives in hermite mode, or
  // N+1 points in values-only mode.
  static FractalSpline build(const InterpolationData & data, const ShapeParams & params,
                             const ScalingVector & alpha, SplineMode mode = SplineMode::hermite);

  // Classical-minus-bump bases; requires 0 < alpha_i < a_i and bumps > 0.
  static FractalSpline with_bump_bases(const InterpolationData & data, const ShapeParams & params,
                                       const ScalingVector & alpha, std::vector<double> bumps);

  const Mesh & mesh() const { return classical_.mesh(); }
  // Interpolated set with the derivatives actually used (chord slopes in
  // values-only mode).
  const InterpolationData & data() const { return classical_.data(); }
  const ClassicalSpline & classical() const { return classical_; }
  const ShapeParams & params() const { return classical_.params(); }
  const ScalingVector & alpha() const { return alpha_; }
  SplineMode mode() const { return mode_; }
  BaseKind base_kind() const { return kind_; }
  const std::vector<double> & bumps() const { return bumps_; }

  // f(L_i(x)) - alpha_i b_i(x); for rational bases this is P_i*(theta)/Q_i*(theta)
  // with theta the global parameter of x.
  double affine_term(std::size_t i, double x) const;
  double base_function(std::size_t i, double x) const;
  double bump(std::size_t i, double x) const;

  // Cubic-basis numerator P_i* of the rational affine term (rational bases only).
  const CubicBernstein & term_numerator(std::size_t i) const { return term_numerators_[i]; }

  // A-priori bound on sup |f^alpha|: max_i sup |affine term| / (1 - |alpha|_inf).
  double sup_bound() const { return sup_bound_; }

private:
  FractalSpline(ClassicalSpline classical, ScalingVector alpha, SplineMode mode, BaseKind kind,
                std::vector<double> bumps);

  ClassicalSpline classical_;
  ScalingVector alpha_;
  SplineMode mode_;
  BaseKind kind_;
  std::vector<double> bumps_;
  std::vector<CubicBernstein> base_numerators_;
  std::vector<CubicBernstein> term_numerators_;
  double sup_bound_ = 0.0;
};

inline FractalSpline build_model(const InterpolationData & data, const ShapeParams & params,
                                 const ScalingVector & alpha,
                                 SplineMode mode = SplineMode::hermite)
{
  return FractalSpline::build(data, params, alpha, mode);
}

inline constexpr std::size_t kDefaultMaxOrbitPoints = 50'000'000;

// Forward images of the knot pairs under the IFS maps, `depth` levels deep.
// Every value is an exact graph point up to floating-point rounding. Sorted by
// x with repeated abscissae removed.
std::vector<CurvePoint> eval_orbit(const FractalSpline & model, int depth,
                                   std::size_t max_points = kDefaultMaxOrbitPoints);

// Address expansion with a certified truncation tail (tail_bound <= tol).
PointValue eval_point(const FractalSpline & model, double xhat, double tol);

double default_tolerance(const FractalSpline & model);

// |alpha|/(1-|alpha|) * (sup-norm bound of f + max_i sup-norm bound of b_i).
double perturbation_bound(const FractalSpline & model);

std::vector<CurvePoint> sample_uniform(const FractalSpline & model, std::size_t n_points,
                                       double tol);
}  // namespace rcfif

#endif  // RCFIF__FRACTAL_SPLINE_HPP_
