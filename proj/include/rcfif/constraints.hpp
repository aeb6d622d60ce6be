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

#ifndef RCFIF__CONSTRAINTS_HPP_
#define RCFIF__CONSTRAINTS_HPP_

#include <cstddef>
#include <limits>
#include <vector>

#include "rcfif/bernstein.hpp"
#include "rcfif/classical_spline.hpp"
#include "rcfif/fractal_spline.hpp"
#include "rcfif/mesh.hpp"

namespace rcfif
{
enum class BoundSide
{
  above,
  below,
};

enum class PieceKind
{
  linear,
  quadratic,
};

// One piece of the bound on [x_i, x_{i+1}]. With phi the local variable:
//   linear:    left (1-phi) + right phi
//   quadratic: left (1-phi)^2 + (2 left + slope_left h_i) phi (1-phi) + right phi^2
// Pieces carry their own endpoint values, so the bound may jump at a knot.
struct BoundPiece
{
  PieceKind kind = PieceKind::linear;
  double left = 0.0;
  double right = 0.0;
  double slope_left = 0.0;

  double eval(double phi, double h) const;
  // Same piece as a quadratic (a linear piece gets its chord slope).
  BoundPiece as_quadratic(double h) const;
};

struct BoundSpec
{
  // `above` asks for f^alpha >= bound, `below` for f^alpha <= bound.
  BoundSide side = BoundSide::above;
  std::vector<BoundPiece> pieces;

  bool all_linear() const;
  bool all_quadratic() const;
};

// Piece count matches the mesh and every knot lies on the requested side of
// both pieces touching it.
void validate_bound(const InterpolationData & data, const BoundSpec & bound);

// Value of the bound at x. At an interior knot the right-hand piece is used.
double eval_bound(const Mesh & mesh, const BoundSpec & bound, double x);

// K = M |alpha|/(|alpha| - 1) <= 0.
double compute_K(double M, double alpha_sup);

// min over knot gaps g of g / (g + M), gaps taken side-signed on both pieces
// meeting at each knot.
double alpha_cap(const InterpolationData & data, const BoundSpec & bound);

// Positive lambda with A + lambda B >= 0 and C + lambda D >= 0.
struct LambdaInterval
{
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  // lower == 0 is excluded because lambda = t/r is positive.
  bool lower_open = true;
  bool empty = false;

  bool bounded() const { return upper < std::numeric_limits<double>::infinity(); }
  bool contains(double lambda) const;
};

// Requires B > 0 and C > 0.
LambdaInterval feasibility_lambda(double A, double B, double C, double D);
// Any signs of B and C.
LambdaInterval lambda_interval(double A, double B, double C, double D);

struct IntervalCoefficients
{
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
};

struct ConstraintCertificate
{
  BoundSide side = BoundSide::above;
  PieceKind kind = PieceKind::linear;
  double M = 0.0;
  double K = 0.0;
  double alpha_sup = 0.0;
  double alpha_cap = 0.0;
  bool scaling_admissible = false;  // |alpha_i| < a_i for every i
  bool cap_satisfied = false;       // |alpha|_inf <= alpha_cap
  std::vector<double> residual_ii;
  std::vector<double> residual_iii;
  // Cubic-basis coefficients of R_i - (p - K) S_i on each interval (for the
  // mirrored problem when side == below).
  std::vector<CubicBernstein> cubic;
  std::vector<IntervalCoefficients> coefficients;
  std::vector<LambdaInterval> lambda;
  bool feasible = false;
};

// Sufficient conditions for f^alpha >= p with p piecewise linear.
ConstraintCertificate check_linear_conditions(const InterpolationData & data,
                                              const ShapeParams & params,
                                              const ScalingVector & alpha,
                                              const BoundSpec & bound);

// Sufficient conditions for f^alpha >= p with p piecewise quadratic.
ConstraintCertificate check_quadratic_conditions(const InterpolationData & data,
                                                 const ShapeParams & params,
                                                 const ScalingVector & alpha,
                                                 const BoundSpec & bound);

// Either side, any mix of piece kinds (mixed bounds are checked as quadratic).
ConstraintCertificate check_conditions(const InterpolationData & data, const ShapeParams & params,
                                       const ScalingVector & alpha, const BoundSpec & bound);

struct MirroredProblem
{
  InterpolationData data;
  BoundSpec bound;
};

// Negates values, derivatives and the bound and flips the side. An involution.
MirroredProblem mirror(const InterpolationData & data, const BoundSpec & bound);
// mirror() restricted to below-side bounds.
MirroredProblem mirror_below(const InterpolationData & data, const BoundSpec & bound);

struct Solution
{
  ScalingVector alpha;
  ShapeParams params;
  ConstraintCertificate certificate;
};

inline constexpr double kLambdaMin = 1e-3;
inline constexpr double kLambdaMax = 1e3;

// Picks |alpha|_inf = slack * min(cap, min_i a_i (1 - 1e-9)) uniformly over the
// intervals, then r_i = 1 and t_i from the lambda interval of each interval.
// Throws Infeasible naming the first interval whose lambda interval is empty.
Solution solve_params(const InterpolationData & data, const BoundSpec & bound, double slack);

// Deterministic representative of a nonempty lambda interval.
double select_lambda(const LambdaInterval & interval);

// Fractal spline whose bases are f minus a quartic bump; lies above f for
// 0 < alpha_i < a_i and positive bumps.
FractalSpline base_function_strategy(const InterpolationData & data, const ShapeParams & params,
                                     const ScalingVector & alpha, std::vector<double> bumps);

struct EmpiricalGap
{
  double min_gap = 0.0;
  double argmin_x = 0.0;
  std::size_t samples = 0;
};

// Minimum side-signed gap (f^alpha - p for above) over the depth-level orbit.
EmpiricalGap check_empirical(const FractalSpline & model, const BoundSpec & bound, int depth);
}  // namespace rcfif

#endif  // RCFIF__CONSTRAINTS_HPP_
