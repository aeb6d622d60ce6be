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

#include "rcfif/fractal_spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rcfif/error.hpp"

namespace rcfif
{
namespace
{
void validate_alpha(const ScalingVector & alpha, const Mesh & mesh)
{
  require(alpha.alpha.size() == mesh.interval_count(), ErrorCode::LengthMismatch,
          "alpha needs " + std::to_string(mesh.interval_count()) + " entries, got " +
            std::to_string(alpha.alpha.size()));
  for (std::size_t i = 0; i < alpha.alpha.size(); ++i) {
    const double v = alpha.alpha[i];
    require(std::isfinite(v), ErrorCode::NonFiniteInput,
            "alpha[" + std::to_string(i) + "] is not finite");
    require(std::abs(v) < mesh.a()[i], ErrorCode::ScalingOutOfRange,
            "|alpha[" + std::to_string(i) + "]| = " + std::to_string(std::abs(v)) +
              " is not below a_i = " + std::to_string(mesh.a()[i]));
  }
}

ClassicalSpline make_classical(const InterpolationData & data, const ShapeParams & params,
                               SplineMode mode)
{
  if (mode == SplineMode::values_only) {
    return ClassicalSpline::values_only(data, params);
  }
  return ClassicalSpline(data, params);
}
}  // namespace

double ScalingVector::sup_norm() const { return rcfif::sup_norm(alpha); }

FractalSpline::FractalSpline(ClassicalSpline classical, ScalingVector alpha, SplineMode mode,
                             BaseKind kind, std::vector<double> bumps)
: classical_(std::move(classical)),
  alpha_(std::move(alpha)),
  mode_(mode),
  kind_(kind),
  bumps_(std::move(bumps))
{
  const Mesh & m = classical_.mesh();
  validate_alpha(alpha_, m);
  const std::size_t n_int = m.interval_count();
  const auto & y = data().values;
  const auto & d = *data().derivatives;
  const double y1 = y.front();
  const double yn = y.back();
  const double span = m.total_length();

  double term_bound = 0.0;
  if (kind_ == BaseKind::rational) {
    base_numerators_.resize(n_int);
    term_numerators_.resize(n_int);
    for (std::size_t i = 0; i < n_int; ++i) {
      const double r = params().r[i];
      const double t = params().t[i];
      base_numerators_[i] = {{r * y1, (2.0 * r + t) * y1 + r * d.front() * span,
                              (r + 2.0 * t) * yn - t * d.back() * span, t * yn}};
      term_numerators_[i] = classical_.numerator(i) - alpha_.alpha[i] * base_numerators_[i];
      term_bound = std::max(term_bound, rational_sup_bound(term_numerators_[i], r, t));
    }
  } else {
    const double f_bound = classical_.hull_bound();
    for (std::size_t i = 0; i < n_int; ++i) {
      const double ai = std::abs(alpha_.alpha[i]);
      term_bound = std::max(term_bound, (1.0 + ai) * f_bound + ai * bumps_[i]);
    }
  }
  sup_bound_ = term_bound / (1.0 - alpha_.sup_norm());
}

FractalSpline FractalSpline::build(const InterpolationData & data, const ShapeParams & params,
                                   const ScalingVector & alpha, SplineMode mode)
{
  return FractalSpline(make_classical(data, params, mode), alpha, mode, BaseKind::rational, {});
}

FractalSpline FractalSpline::with_bump_bases(const InterpolationData & data,
                                             const ShapeParams & params,
                                             const ScalingVector & alpha,
                                             std::vector<double> bumps)
{
  ClassicalSpline f(data, params);
  const Mesh & m = f.mesh();
  require(alpha.alpha.size() == m.interval_count() && bumps.size() == m.interval_count(),
          ErrorCode::LengthMismatch, "alpha and bumps need one entry per interval");
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    require(alpha.alpha[i] > 0.0, ErrorCode::NonPositiveAlpha,
            "alpha[" + std::to_string(i) + "] must be positive for bump bases");
    require(std::isfinite(bumps[i]) && bumps[i] > 0.0, ErrorCode::NonPositiveBump,
            "bump[" + std::to_string(i) + "] must be positive");
  }
  return FractalSpline(std::move(f), alpha, SplineMode::hermite, BaseKind::classical_minus_bump,
                       std::move(bumps));
}

double FractalSpline::bump(std::size_t i, double x) const
{
  if (kind_ != BaseKind::classical_minus_bump) {
    return 0.0;
  }
  const Mesh & m = mesh();
  const double half = 0.5 * m.total_length();
  const double w = (x - m.first()) * (m.last() - x) / (half * half);
  return bumps_[i] * w * w;
}

double FractalSpline::base_function(std::size_t i, double x) const
{
  if (kind_ == BaseKind::classical_minus_bump) {
    return classical_(x) - bump(i, x);
  }
  const double th = mesh().theta(x);
  return base_numerators_[i](th) / ((1.0 - th) * params().r[i] + th * params().t[i]);
}

double FractalSpline::affine_term(std::size_t i, double x) const
{
  const double th = mesh().theta(x);
  if (kind_ == BaseKind::rational) {
    return term_numerators_[i](th) / ((1.0 - th) * params().r[i] + th * params().t[i]);
  }
  const double ai = alpha_.alpha[i];
  return classical_.eval_local(i, th) - ai * classical_(x) + ai * bump(i, x);
}

std::vector<CurvePoint> eval_orbit(const FractalSpline & model, int depth, std::size_t max_points)
{
  require(depth >= 0, ErrorCode::InvalidArgument, "orbit depth must be nonnegative");
  const Mesh & m = model.mesh();
  const std::size_t maps = m.interval_count();
  double predicted = static_cast<double>(m.knot_count());
  for (int k = 0; k < depth; ++k) {
    predicted *= static_cast<double>(maps);
  }
  require(predicted <= static_cast<double>(max_points), ErrorCode::DepthTooLarge,
          "orbit depth " + std::to_string(depth) + " would produce about 10^" +
            std::to_string(static_cast<int>(std::log10(predicted))) + " points (cap " +
            std::to_string(max_points) + ")");

  std::vector<CurvePoint> level;
  level.reserve(m.knot_count());
  for (std::size_t j = 0; j < m.knot_count(); ++j) {
    level.push_back({m.knots()[j], m.values()[j]});
  }
  const auto & alpha = model.alpha().alpha;
  for (int k = 0; k < depth; ++k) {
    std::vector<CurvePoint> next;
    next.reserve(level.size() * maps);
    for (std::size_t i = 0; i < maps; ++i) {
      const double lo = m.knots()[i];
      const double hi = m.knots()[i + 1];
      for (const CurvePoint & p : level) {
        next.push_back({std::lerp(lo, hi, m.theta(p.x)),
                        alpha[i] * p.value + model.affine_term(i, p.x)});
      }
    }
    level = std::move(next);
  }
  std::stable_sort(level.begin(), level.end(),
                   [](const CurvePoint & l, const CurvePoint & r) { return l.x < r.x; });
  level.erase(std::unique(level.begin(), level.end(),
                          [](const CurvePoint & l, const CurvePoint & r) { return l.x == r.x; }),
              level.end());
  return level;
}

PointValue eval_point(const FractalSpline & model, double xhat, double tol)
{
  require(tol > 0.0, ErrorCode::NonPositiveTolerance, "tolerance must be positive");
  const Mesh & m = model.mesh();
  require(m.contains(xhat), ErrorCode::PointOutsideDomain,
          "x = " + std::to_string(xhat) + " outside [x_1, x_N]");
  const auto & alpha = model.alpha().alpha;
  const double bound = model.sup_bound();

  double value = 0.0;
  double coeff = 1.0;
  double x = xhat;
  // |alpha_i| < a_i < 1 makes coeff decay geometrically.
  for (;;) {
    if (auto k = m.knot_index(x)) {
      return {value + coeff * m.values()[*k], 0.0};
    }
    const double tail = std::abs(coeff) * bound;
    if (tail <= tol) {
      return {value, tail};
    }
    const std::size_t i = m.locate(x);
    const double pre = std::lerp(m.first(), m.last(), m.local(i, x));
    value += coeff * model.affine_term(i, pre);
    coeff *= alpha[i];
    x = pre;
  }
}

double default_tolerance(const FractalSpline & model)
{
  return 1e-10 * (1.0 + sup_norm(model.data().values));
}

double perturbation_bound(const FractalSpline & model)
{
  const double a = model.alpha().sup_norm();
  if (a == 0.0) {
    return 0.0;
  }
  const auto & data = model.data();
  const auto & y = data.values;
  const auto & d = *data.derivatives;
  const double f_bound = sup_bound_classical(data, model.params());
  double b_bound = std::max(std::abs(y.front()), std::abs(y.back())) +
                   0.25 * model.mesh().total_length() *
                     std::max(std::abs(d.front()), std::abs(d.back()));
  if (model.base_kind() == BaseKind::classical_minus_bump) {
    b_bound = f_bound + *std::max_element(model.bumps().begin(), model.bumps().end());
  }
  return a / (1.0 - a) * (f_bound + b_bound);
}

std::vector<CurvePoint> sample_uniform(const FractalSpline & model, std::size_t n_points,
                                       double tol)
{
  require(n_points >= 2, ErrorCode::InvalidArgument, "need at least 2 sample points");
  const Mesh & m = model.mesh();
  std::vector<CurvePoint> out;
  out.reserve(n_points);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double x = std::lerp(m.first(), m.last(), static_cast<double>(k) / last);
    out.push_back({x, eval_point(model, x, tol).value});
  }
  return out;
}
}  // namespace rcfif
