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

#include "rcfif/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rcfif/error.hpp"
#include "rcfif/error_analysis.hpp"

namespace rcfif
{
double BoundPiece::eval(double phi, double h) const
{
  const double u = 1.0 - phi;
  if (kind == PieceKind::linear) {
    return left * u + right * phi;
  }
  return left * u * u + (2.0 * left + slope_left * h) * phi * u + right * phi * phi;
}

BoundPiece BoundPiece::as_quadratic(double h) const
{
  if (kind == PieceKind::quadratic) {
    return *this;
  }
  return {PieceKind::quadratic, left, right, (right - left) / h};
}

bool BoundSpec::all_linear() const
{
  return std::all_of(pieces.begin(), pieces.end(),
                     [](const BoundPiece & p) { return p.kind == PieceKind::linear; });
}

bool BoundSpec::all_quadratic() const
{
  return std::all_of(pieces.begin(), pieces.end(),
                     [](const BoundPiece & p) { return p.kind == PieceKind::quadratic; });
}

namespace
{
double side_sign(BoundSide side) { return side == BoundSide::above ? 1.0 : -1.0; }

// Side-signed knot gaps: (y_i - p_i, y_{i+1} - p_{i+1}) per piece for above.
std::vector<std::pair<double, double>> knot_gaps(const InterpolationData & data,
                                                 const BoundSpec & bound)
{
  const double s = side_sign(bound.side);
  std::vector<std::pair<double, double>> gaps;
  for (std::size_t i = 0; i < bound.pieces.size(); ++i) {
    gaps.emplace_back(s * (data.values[i] - bound.pieces[i].left),
                      s * (data.values[i + 1] - bound.pieces[i].right));
  }
  return gaps;
}

void check_alpha_length(const ScalingVector & alpha, std::size_t intervals)
{
  require(alpha.alpha.size() == intervals, ErrorCode::LengthMismatch,
          "alpha needs " + std::to_string(intervals) + " entries");
}

ConstraintCertificate check_above(const InterpolationData & data, const ShapeParams & params,
                                  const ScalingVector & alpha, const BoundSpec & bound,
                                  PieceKind kind)
{
  const ClassicalSpline f(data, params);
  const Mesh & mesh = f.mesh();
  validate_bound(data, bound);
  check_alpha_length(alpha, mesh.interval_count());

  ConstraintCertificate cert;
  cert.side = BoundSide::above;
  cert.kind = kind;
  cert.M = compute_M(data);
  cert.alpha_sup = alpha.sup_norm();
  require(cert.alpha_sup < 1.0, ErrorCode::AlphaSupOutOfRange, "|alpha|_inf must be below 1");
  cert.K = compute_K(cert.M, cert.alpha_sup);
  cert.alpha_cap = alpha_cap(data, bound);
  cert.scaling_admissible = true;
  for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
    cert.scaling_admissible = cert.scaling_admissible && std::abs(alpha.alpha[i]) < mesh.a()[i];
  }
  cert.cap_satisfied = cert.alpha_sup <= cert.alpha_cap;

  const auto & y = data.values;
  const auto & d = *data.derivatives;
  const double K = cert.K;
  bool residuals_ok = true;
  for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
    const double h = mesh.h()[i];
    const double r = params.r[i];
    const double t = params.t[i];
    const BoundPiece & piece = bound.pieces[i];
    const double pl = piece.left;
    const double pr = piece.right;
    IntervalCoefficients c;
    c.B = y[i] - pl + K;
    c.C = y[i + 1] - pr + K;
    CubicBernstein p_times_s;
    if (kind == PieceKind::linear) {
      c.A = 2.0 * y[i] - pr - pl + h * d[i] + 2.0 * K;
      c.D = 2.0 * y[i + 1] - pr - pl - h * d[i + 1] + 2.0 * K;
      p_times_s = multiply_linear(pl, pr, r, t);
    } else {
      const double ps = piece.slope_left;
      c.A = 2.0 * y[i] - 2.0 * pl + h * d[i] - h * ps + 2.0 * K;
      c.D = 2.0 * y[i + 1] - 2.0 * pl - h * d[i + 1] - h * ps + 2.0 * K;
      p_times_s = multiply_quadratic_linear(pl, 2.0 * pl + ps * h, pr, r, t);
    }
    const double res_ii = r * c.A + t * c.B;
    const double res_iii = r * c.C + t * c.D;
    cert.coefficients.push_back(c);
    cert.residual_ii.push_back(res_ii);
    cert.residual_iii.push_back(res_iii);
    cert.cubic.push_back(f.numerator(i) - p_times_s + K * degree_elevate_linear(r, t));
    cert.lambda.push_back(lambda_interval(c.A, c.B, c.C, c.D));
    residuals_ok = residuals_ok && res_ii >= 0.0 && res_iii >= 0.0;
  }
  cert.feasible = cert.scaling_admissible && cert.cap_satisfied && residuals_ok;
  return cert;
}

BoundSpec as_quadratic(const Mesh & mesh, BoundSpec bound)
{
  for (std::size_t i = 0; i < bound.pieces.size(); ++i) {
    bound.pieces[i] = bound.pieces[i].as_quadratic(mesh.h()[i]);
  }
  return bound;
}
}  // namespace

void validate_bound(const InterpolationData & data, const BoundSpec & bound)
{
  const Mesh mesh(data);
  require(bound.pieces.size() == mesh.interval_count(), ErrorCode::LengthMismatch,
          "bound needs " + std::to_string(mesh.interval_count()) + " pieces, got " +
            std::to_string(bound.pieces.size()));
  const auto gaps = knot_gaps(data, bound);
  const char * rel = bound.side == BoundSide::above ? "below" : "above";
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const auto & p = bound.pieces[i];
    require(std::isfinite(p.left) && std::isfinite(p.right) && std::isfinite(p.slope_left),
            ErrorCode::NonFiniteInput, "bound piece " + std::to_string(i) + " is not finite");
    require(gaps[i].first >= 0.0, ErrorCode::BoundViolatedAtKnot,
            "data lies " + std::string(rel) + " the bound at knot " + std::to_string(i) +
              " (piece " + std::to_string(i) + ", x = " + std::to_string(data.knots[i]) +
              ", y = " + std::to_string(data.values[i]) + ", bound = " + std::to_string(p.left) +
              ")");
    require(gaps[i].second >= 0.0, ErrorCode::BoundViolatedAtKnot,
            "data lies " + std::string(rel) + " the bound at knot " + std::to_string(i + 1) +
              " (piece " + std::to_string(i) + ", x = " + std::to_string(data.knots[i + 1]) +
              ", y = " + std::to_string(data.values[i + 1]) +
              ", bound = " + std::to_string(p.right) + ")");
  }
}

double eval_bound(const Mesh & mesh, const BoundSpec & bound, double x)
{
  const std::size_t i = mesh.locate(x);
  return bound.pieces[i].eval(mesh.local(i, x), mesh.h()[i]);
}

double compute_K(double M, double alpha_sup)
{
  require(alpha_sup >= 0.0 && alpha_sup < 1.0, ErrorCode::AlphaSupOutOfRange,
          "|alpha|_inf = " + std::to_string(alpha_sup) + " outside [0, 1)");
  return M * alpha_sup / (alpha_sup - 1.0);
}

double alpha_cap(const InterpolationData & data, const BoundSpec & bound)
{
  validate_bound(data, bound);
  const double M = compute_M(data);
  double cap = 1.0;
  for (const auto & [gl, gr] : knot_gaps(data, bound)) {
    for (double g : {gl, gr}) {
      cap = std::min(cap, g + M > 0.0 ? g / (g + M) : 0.0);
    }
  }
  return cap;
}

bool LambdaInterval::contains(double lambda) const
{
  if (empty || lambda > upper) {
    return false;
  }
  return lower_open ? lambda > lower : lambda >= lower;
}

LambdaInterval lambda_interval(double A, double B, double C, double D)
{
  LambdaInterval out;
  // a + lambda b >= 0 for each pair.
  for (auto [a, b] : {std::pair{A, B}, std::pair{C, D}}) {
    if (b > 0.0) {
      const double lo = -a / b;
      if (lo > out.lower || (lo == out.lower && out.lower_open)) {
        out.lower = lo;
        out.lower_open = false;
      }
    } else if (b < 0.0) {
      out.upper = std::min(out.upper, -a / b);
    } else if (a < 0.0) {
      out.empty = true;
    }
  }
  if (out.lower <= 0.0) {
    out.lower = 0.0;
    out.lower_open = true;
  }
  if (out.upper < out.lower || (out.upper == out.lower && out.lower_open)) {
    out.empty = true;
  }
  return out;
}

LambdaInterval feasibility_lambda(double A, double B, double C, double D)
{
  require(B > 0.0 && C > 0.0, ErrorCode::NonPositiveBC,
          "B and C must be positive (strict cap on |alpha|_inf)");
  return lambda_interval(A, B, C, D);
}

double select_lambda(const LambdaInterval & interval)
{
  require(!interval.empty, ErrorCode::Infeasible, "empty lambda interval");
  if (interval.bounded()) {
    return 0.5 * (interval.lower + interval.upper);
  }
  // Geometric midpoint of the interval clamped to [kLambdaMin, kLambdaMax];
  // (0, inf) maps to lambda = 1.
  const double lo = std::max(interval.lower, kLambdaMin);
  const double hi = std::max(kLambdaMax, 2.0 * lo);
  return std::sqrt(lo * hi);
}

ConstraintCertificate check_linear_conditions(const InterpolationData & data,
                                              const ShapeParams & params,
                                              const ScalingVector & alpha,
                                              const BoundSpec & bound)
{
  require(bound.side == BoundSide::above, ErrorCode::WrongBoundKind,
          "linear conditions are stated for bounds below the data (side above)");
  require(bound.all_linear(), ErrorCode::WrongBoundKind, "every bound piece must be linear");
  return check_above(data, params, alpha, bound, PieceKind::linear);
}

ConstraintCertificate check_quadratic_conditions(const InterpolationData & data,
                                                 const ShapeParams & params,
                                                 const ScalingVector & alpha,
                                                 const BoundSpec & bound)
{
  require(bound.side == BoundSide::above, ErrorCode::WrongBoundKind,
          "quadratic conditions are stated for bounds below the data (side above)");
  require(bound.all_quadratic(), ErrorCode::WrongBoundKind,
          "every bound piece must be quadratic");
  return check_above(data, params, alpha, bound, PieceKind::quadratic);
}

ConstraintCertificate check_conditions(const InterpolationData & data, const ShapeParams & params,
                                       const ScalingVector & alpha, const BoundSpec & bound)
{
  if (bound.side == BoundSide::below) {
    const MirroredProblem m = mirror_below(data, bound);
    ConstraintCertificate cert = check_conditions(m.data, params, alpha, m.bound);
    cert.side = BoundSide::below;
    return cert;
  }
  if (bound.all_linear()) {
    return check_linear_conditions(data, params, alpha, bound);
  }
  return check_quadratic_conditions(data, params, alpha, as_quadratic(Mesh(data), bound));
}

MirroredProblem mirror(const InterpolationData & data, const BoundSpec & bound)
{
  MirroredProblem m{data, bound};
  for (double & v : m.data.values) {
    v = -v;
  }
  if (m.data.derivatives) {
    for (double & v : *m.data.derivatives) {
      v = -v;
    }
  }
  for (BoundPiece & p : m.bound.pieces) {
    p.left = -p.left;
    p.right = -p.right;
    p.slope_left = -p.slope_left;
  }
  m.bound.side = bound.side == BoundSide::above ? BoundSide::below : BoundSide::above;
  return m;
}

MirroredProblem mirror_below(const InterpolationData & data, const BoundSpec & bound)
{
  require(bound.side == BoundSide::below, ErrorCode::WrongBoundKind,
          "mirror_below expects a bound with side = below");
  validate_bound(data, bound);
  return mirror(data, bound);
}

Solution solve_params(const InterpolationData & data, const BoundSpec & bound, double slack)
{
  require(slack >= 0.0 && slack <= 1.0, ErrorCode::InvalidArgument,
          "slack must lie in [0, 1], got " + std::to_string(slack));
  require(data.has_derivatives(), ErrorCode::MissingDerivatives, "solver needs knot derivatives");
  if (bound.side == BoundSide::below) {
    const MirroredProblem m = mirror_below(data, bound);
    Solution s = solve_params(m.data, m.bound, slack);
    s.certificate.side = BoundSide::below;
    return s;
  }
  const Mesh mesh(data);
  const BoundSpec quad = as_quadratic(mesh, bound);
  const double M = compute_M(data);
  const double cap = alpha_cap(data, bound);
  const double a_min = *std::min_element(mesh.a().begin(), mesh.a().end());
  double level = slack * std::min(cap, a_min * (1.0 - 1e-9));

  // The cap makes the smallest knot gap plus K vanish exactly; step below it
  // when rounding in K leaves a tiny negative boundary coefficient.
  const auto boundary_ok = [&](double a) {
    const double K = compute_K(M, a);
    for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
      if (data.values[i] - bound.pieces[i].left + K < 0.0 ||
          data.values[i + 1] - bound.pieces[i].right + K < 0.0) {
        return false;
      }
    }
    return true;
  };
  for (int step = 0; step < 64 && level > 0.0 && !boundary_ok(level); ++step) {
    level = std::nextafter(level, 0.0);
  }
  if (!boundary_ok(level)) {
    level = 0.0;
  }

  Solution sol;
  sol.alpha.alpha.assign(mesh.interval_count(), level);
  sol.params = ShapeParams::uniform(mesh.interval_count());
  const double K = compute_K(M, level);
  const auto & y = data.values;
  const auto & d = *data.derivatives;
  for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
    const double h = mesh.h()[i];
    const BoundPiece & p = quad.pieces[i];
    const double A = 2.0 * y[i] - 2.0 * p.left + h * d[i] - h * p.slope_left + 2.0 * K;
    const double B = y[i] - p.left + K;
    const double C = y[i + 1] - p.right + K;
    const double D = 2.0 * y[i + 1] - 2.0 * p.left - h * d[i + 1] - h * p.slope_left + 2.0 * K;
    const LambdaInterval li = lambda_interval(A, B, C, D);
    require(!li.empty, ErrorCode::Infeasible,
            "no positive shape-parameter ratio satisfies the conditions on interval " +
              std::to_string(i) + " [" + std::to_string(data.knots[i]) + ", " +
              std::to_string(data.knots[i + 1]) + "]");
    sol.params.t[i] = select_lambda(li);
  }
  sol.certificate = check_conditions(data, sol.params, sol.alpha, bound);
  require(sol.certificate.feasible, ErrorCode::Infeasible,
          "selected parameters fail the sufficient conditions after rounding");
  return sol;
}

FractalSpline base_function_strategy(const InterpolationData & data, const ShapeParams & params,
                                     const ScalingVector & alpha, std::vector<double> bumps)
{
  return FractalSpline::with_bump_bases(data, params, alpha, std::move(bumps));
}

EmpiricalGap check_empirical(const FractalSpline & model, const BoundSpec & bound, int depth)
{
  const Mesh & mesh = model.mesh();
  require(bound.pieces.size() == mesh.interval_count(), ErrorCode::LengthMismatch,
          "bound and model must share the mesh");
  const double s = side_sign(bound.side);
  EmpiricalGap out;
  out.min_gap = std::numeric_limits<double>::infinity();
  const auto orbit = eval_orbit(model, depth);
  out.samples = orbit.size();
  for (const CurvePoint & p : orbit) {
    const std::size_t i = mesh.locate(p.x);
    double gap = s * (p.value - bound.pieces[i].eval(mesh.local(i, p.x), mesh.h()[i]));
    if (i > 0 && p.x == mesh.knots()[i]) {
      gap = std::min(gap, s * (p.value - bound.pieces[i - 1].right));
    }
    if (gap < out.min_gap) {
      out.min_gap = gap;
      out.argmin_x = p.x;
    }
  }
  return out;
}
}  // namespace rcfif
