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

#include "rcfif/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rcfif/error.hpp"

namespace rcfif
{
double peano_kernel(const Mesh & mesh, std::size_t i, const ShapeParams & params, double tau,
                    double xhat)
{
  require(i < mesh.interval_count(), ErrorCode::IndexOutOfRange, "interval out of range");
  const double lo = mesh.knots()[i];
  const double hi = mesh.knots()[i + 1];
  require(tau >= lo && tau <= hi && xhat >= lo && xhat <= hi, ErrorCode::PointOutsideSubinterval,
          "tau and xhat must lie in interval " + std::to_string(i));
  require(tau != xhat, ErrorCode::CoincidentArguments, "kernel is undefined at tau == xhat");
  const double r = params.r[i];
  const double t = params.t[i];
  const double phi = mesh.local(i, xhat);
  const double u = 1.0 - phi;
  const double den = u * r + phi * t;
  if (tau < xhat) {
    return (r * u * (1.0 - phi * phi) + t * phi * u * u) / den;
  }
  return -(r * phi * phi * u + t * phi * phi * (2.0 - phi)) / den;
}

double error_ratio(double r, double t, double phi)
{
  const double u = 1.0 - phi;
  return (r * phi * u * u * (1.0 + 2.0 * phi) + t * phi * phi * u * (3.0 - 2.0 * phi)) /
         (r * u + t * phi);
}

double local_error_constant(double r, double t)
{
  require(r > 0.0 && t > 0.0, ErrorCode::NonPositiveShapeParams,
          "r and t must be positive");
  constexpr int kGrid = 10'000;
  int best = 0;
  double best_value = 0.0;
  for (int k = 0; k <= kGrid; ++k) {
    const double v = error_ratio(r, t, static_cast<double>(k) / kGrid);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  // Golden-section refinement on the bracketing grid cells.
  double lo = std::max(0.0, static_cast<double>(best - 1) / kGrid);
  double hi = std::min(1.0, static_cast<double>(best + 1) / kGrid);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - g * (hi - lo);
  double d = lo + g * (hi - lo);
  double fc = error_ratio(r, t, c);
  double fd = error_ratio(r, t, d);
  while (hi - lo > 1e-12) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = error_ratio(r, t, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = error_ratio(r, t, d);
    }
  }
  return std::max({best_value, fc, fd, error_ratio(r, t, 0.5 * (lo + hi))});
}

double local_error_constant(std::size_t i, const ShapeParams & params)
{
  require(i < params.r.size() && i < params.t.size(), ErrorCode::IndexOutOfRange,
          "interval out of range");
  return local_error_constant(params.r[i], params.t[i]);
}

double local_error_bound(const Mesh & mesh, std::size_t i, const ShapeParams & params,
                         double phi_prime_sup)
{
  require(phi_prime_sup >= 0.0, ErrorCode::NegativeDerivativeBound,
          "derivative bound must be nonnegative");
  require(i < mesh.interval_count(), ErrorCode::IndexOutOfRange, "interval out of range");
  return mesh.h()[i] * local_error_constant(i, params) * phi_prime_sup;
}

double compute_M(const InterpolationData & data)
{
  require(data.has_derivatives(), ErrorCode::MissingDerivatives, "M needs knot derivatives");
  const Mesh mesh(data);
  const auto & y = data.values;
  const auto & d = *data.derivatives;
  return sup_norm(y) + std::max(std::abs(y.front()), std::abs(y.back())) +
         0.25 * (mesh.max_h() * sup_norm(d) +
                 mesh.total_length() * std::max(std::abs(d.front()), std::abs(d.back())));
}

double total_error_bound(const InterpolationData & data, const ShapeParams & params,
                         const ScalingVector & alpha, double phi_prime_sup)
{
  require(phi_prime_sup >= 0.0, ErrorCode::NegativeDerivativeBound,
          "derivative bound must be nonnegative");
  const ClassicalSpline f(data, params);
  const Mesh & mesh = f.mesh();
  require(alpha.alpha.size() == mesh.interval_count(), ErrorCode::LengthMismatch,
          "alpha needs one entry per interval");
  const double h = mesh.max_h();
  const double m = compute_M(data);
  const double a = alpha.sup_norm();
  require(a < 1.0, ErrorCode::AlphaSupOutOfRange, "|alpha|_inf must be below 1");
  double c = 0.0;
  for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
    c = std::max(c, local_error_constant(i, params));
  }
  return a / (1.0 - a) * m + c * h * phi_prime_sup;
}

Generator named_generator(const std::string & name)
{
  using std::numbers::pi;
  if (name == "linear") {
    return {name, [](double x) { return 2.0 * x + 1.0; }, [](double) { return 2.0; }, 0.0, 1.0,
            2.0};
  }
  if (name == "sin") {
    return {name, [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }, 0.0,
            pi, 1.0};
  }
  if (name == "cos") {
    return {name, [](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); },
            0.0, pi, 1.0};
  }
  if (name == "exp") {
    return {name, [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }, 0.0,
            1.0, std::numbers::e};
  }
  fail(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
}

std::vector<std::string> generator_names() { return {"linear", "sin", "cos", "exp"}; }

namespace
{
int orbit_depth_for(std::size_t knots, std::size_t per_interval)
{
  const double maps = static_cast<double>(knots - 1);
  double per = static_cast<double>(knots) / maps;
  int depth = 0;
  while (per < static_cast<double>(per_interval)) {
    per *= maps;
    ++depth;
  }
  return depth;
}

double measured_sup_error(const FractalSpline & model, const Generator & g,
                          std::size_t per_interval, std::size_t * samples)
{
  const int depth = orbit_depth_for(model.mesh().knot_count(), per_interval);
  const auto orbit = eval_orbit(model, depth);
  double err = 0.0;
  for (const CurvePoint & p : orbit) {
    err = std::max(err, std::abs(g.value(p.x) - p.value));
  }
  if (samples != nullptr) {
    *samples = orbit.size();
  }
  return err;
}

InterpolationData sample_generator(const Generator & g, std::size_t n)
{
  InterpolationData data;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = std::lerp(g.lower, g.upper, static_cast<double>(k) / static_cast<double>(n - 1));
    data.knots.push_back(x);
    data.values.push_back(g.value(x));
  }
  data.derivatives = estimate_derivatives(data);
  return data;
}
}  // namespace

ConvergenceResult convergence_experiment(const Generator & generator,
                                         const std::vector<std::size_t> & sizes, double kappa,
                                         std::size_t min_samples_per_interval)
{
  require(sizes.size() >= 2, ErrorCode::InvalidArgument,
          "need at least 2 sizes to estimate an order");
  require(kappa >= 0.0 && kappa < 1.0, ErrorCode::InvalidArgument, "kappa must lie in [0, 1)");
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    require(sizes[k] >= 3, ErrorCode::TooFewPoints, "every size must be at least 3");
    require(k == 0 || sizes[k] > sizes[k - 1], ErrorCode::InvalidArgument,
            "sizes must be increasing");
  }

  ConvergenceResult result;
  for (std::size_t n : sizes) {
    const InterpolationData data = sample_generator(generator, n);
    const Mesh mesh(data);
    ScalingVector alpha;
    for (double a : mesh.a()) {
      alpha.alpha.push_back(kappa * a);
    }
    const ShapeParams params = ShapeParams::uniform(mesh.interval_count());
    const FractalSpline model = FractalSpline::build(data, params, alpha);
    ConvergenceRow row;
    row.knots = n;
    row.h = mesh.max_h();
    row.sup_error = measured_sup_error(model, generator, min_samples_per_interval, &row.samples);
    row.bound = total_error_bound(data, params, alpha, generator.derivative_sup);
    result.rows.push_back(row);
  }

  result.exact_reproduction =
    std::all_of(result.rows.begin(), result.rows.end(),
                [](const ConvergenceRow & r) { return r.sup_error <= kExactReproductionLevel; });
  if (!result.exact_reproduction) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(result.rows.size());
    for (const auto & r : result.rows) {
      const double lx = std::log(r.h);
      const double ly = std::log(std::max(r.sup_error, 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    result.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return result;
}

ErrorReport error_report(const FractalSpline & model, const Generator & generator,
                         std::size_t min_samples_per_interval)
{
  ErrorReport report;
  const Mesh & mesh = model.mesh();
  for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
    report.per_interval_constants.push_back(local_error_constant(i, model.params()));
  }
  report.global_constant = *std::max_element(report.per_interval_constants.begin(),
                                             report.per_interval_constants.end());
  report.total_bound =
    total_error_bound(model.data(), model.params(), model.alpha(), generator.derivative_sup);
  const double a = model.alpha().sup_norm();
  report.perturbation_term = a / (1.0 - a) * compute_M(model.data());
  report.empirical_sup_error =
    measured_sup_error(model, generator, min_samples_per_interval, nullptr);
  return report;
}
}  // namespace rcfif
