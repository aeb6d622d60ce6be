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

#ifndef RCFIF_TESTS__FIXTURES_HPP_
#define RCFIF_TESTS__FIXTURES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rcfif/constraints.hpp"
#include "rcfif/error.hpp"
#include "rcfif/fractal_spline.hpp"
#include "rcfif/mesh.hpp"

namespace fixtures
{
template <class F>
std::optional<rcfif::ErrorCode> error_code_of(F && f)
{
  try {
    f();
  } catch (const rcfif::Error & e) {
    return e.code();
  }
  return std::nullopt;
}

// Five-point benchmark set; derivatives as tabulated (two decimals).
inline rcfif::InterpolationData bench5()
{
  return {{0, 3, 7, 10, 15}, {18, 10, 12, 9, 20}, std::vector<double>{-4.02, -1.31, -0.36, 0.2, 4.2}};
}

inline rcfif::InterpolationData bench5_without_derivatives()
{
  return {{0, 3, 7, 10, 15}, {18, 10, 12, 9, 20}, std::nullopt};
}

inline rcfif::InterpolationData bench5_amm()
{
  return rcfif::with_estimated_derivatives(bench5_without_derivatives());
}

// Polygon through (0,12), (3,4), (7,10), (10,4), (15,11).
inline rcfif::BoundSpec bench5_polygon()
{
  using rcfif::PieceKind;
  return {rcfif::BoundSide::above,
          {{PieceKind::linear, 12, 4, 0},
           {PieceKind::linear, 4, 10, 0},
           {PieceKind::linear, 10, 4, 0},
           {PieceKind::linear, 4, 11, 0}}};
}

// Quadratic spline as tabulated; its third piece ends at 19 > y(10) = 9.
inline rcfif::BoundSpec bench5_quadratic_as_printed()
{
  using rcfif::PieceKind;
  return {rcfif::BoundSide::above,
          {{PieceKind::quadratic, 10, 4, -3.5},
           {PieceKind::quadratic, 4, 10, -0.5},
           {PieceKind::quadratic, 10, 19, 3.5},
           {PieceKind::quadratic, 4, 10, -7.5}}};
}

// Each piece lowered by its knot excess plus one wherever it rises above the data.
inline rcfif::BoundSpec lowered_to_pass(const rcfif::InterpolationData & data,
                                        rcfif::BoundSpec bound)
{
  for (std::size_t i = 0; i < bound.pieces.size(); ++i) {
    auto & p = bound.pieces[i];
    const double excess = std::max(p.left - data.values[i], p.right - data.values[i + 1]);
    if (excess > 0.0) {
      p.left -= excess + 1.0;
      p.right -= excess + 1.0;
    }
  }
  return bound;
}

struct TableRow
{
  const char * name;
  std::vector<double> alpha;
  std::vector<double> r;
  std::vector<double> t;
};

inline std::vector<TableRow> polygon_rows()
{
  return {{"polygon-a", {0.010, 0.020, 0.030, 0.333}, {1, 1, 1, 1}, {3.35, 1, 1, 1}},
          {"polygon-b", {0.027, 0.027, 0.027, 0.024}, {1, 1, 1, 1}, {3.35, 1, 1, 1}},
          {"polygon-c", {0, 0, 0, 0}, {1, 1, 1, 1}, {3.35, 1, 1, 1}}};
}

inline std::vector<TableRow> quadratic_rows()
{
  return {{"quadratic-a", {0.012, 0.013, 0.040, 0.005}, {9, 1, 0.01, 11}, {10, 200, 0.0001, 8}},
          {"quadratic-b", {0.040, 0.039, 0.025, 0.034}, {9, 1, 0.01, 11}, {10, 200, 0.0001, 8}},
          {"quadratic-c", {0.012, 0.013, 0.040, 0.005}, {19, 11, 0.001, 10}, {12, 210, 0.00001, 7}}};
}

// Random strictly increasing data with derivatives.
inline rcfif::InterpolationData random_data(std::mt19937_64 & rng, std::size_t n)
{
  std::uniform_real_distribution<double> step(0.2, 3.0);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  std::uniform_real_distribution<double> der(-5.0, 5.0);
  rcfif::InterpolationData d;
  double x = val(rng);
  for (std::size_t k = 0; k < n; ++k) {
    d.knots.push_back(x);
    d.values.push_back(val(rng));
    x += step(rng);
  }
  std::vector<double> dd;
  for (std::size_t k = 0; k < n; ++k) {
    dd.push_back(der(rng));
  }
  d.derivatives = dd;
  return d;
}

inline rcfif::ShapeParams random_params(std::mt19937_64 & rng, std::size_t intervals)
{
  std::uniform_real_distribution<double> logw(std::log(0.05), std::log(20.0));
  rcfif::ShapeParams p;
  for (std::size_t i = 0; i < intervals; ++i) {
    p.r.push_back(std::exp(logw(rng)));
    p.t.push_back(std::exp(logw(rng)));
  }
  return p;
}

// alpha_i uniform in (-frac a_i, frac a_i).
inline rcfif::ScalingVector random_alpha(std::mt19937_64 & rng, const rcfif::Mesh & mesh,
                                         double frac = 0.95)
{
  std::uniform_real_distribution<double> u(-frac, frac);
  rcfif::ScalingVector a;
  for (double ai : mesh.a()) {
    a.alpha.push_back(u(rng) * ai);
  }
  return a;
}
}  // namespace fixtures

// Independent oracles. None of these call into the evaluation paths they check.
namespace oracle
{
// Rational cubic evaluated from the global-parameter form
//   f(L_i(x)) = [...](theta)/((1-theta) r_i + theta t_i), theta = (x - x_1)/(x_N - x_1)
// by solving L_i(x) = xhat for x with the a_i x + c_i offset form.
inline double classical_global_form(const rcfif::InterpolationData & data,
                                    const rcfif::ShapeParams & p, double xhat)
{
  const auto & x = data.knots;
  const auto & y = data.values;
  const auto & d = *data.derivatives;
  const std::size_t n = x.size();
  std::size_t i = 0;
  while (i + 2 < n && xhat >= x[i + 1]) {
    ++i;
  }
  const double span = x[n - 1] - x[0];
  const double a = (x[i + 1] - x[i]) / span;
  const double c = (x[n - 1] * x[i] - x[0] * x[i + 1]) / span;
  const double pre = (xhat - c) / a;
  const double th = (pre - x[0]) / span;
  const double h = x[i + 1] - x[i];
  const double r = p.r[i];
  const double t = p.t[i];
  const double V = (2 * r + t) * y[i] + r * h * d[i];
  const double W = (r + 2 * t) * y[i + 1] - t * h * d[i + 1];
  const double num = std::pow(1 - th, 3) * r * y[i] + th * std::pow(1 - th, 2) * V +
                     th * th * (1 - th) * W + std::pow(th, 3) * t * y[i + 1];
  return num / ((1 - th) * r + th * t);
}

// Dense-grid maximum of g on [0,1].
inline double grid_max(const std::function<double(double)> & g, int points)
{
  double m = -INFINITY;
  for (int k = 0; k <= points; ++k) {
    m = std::max(m, g(static_cast<double>(k) / points));
  }
  return m;
}

// Composite Simpson rule on [a,b] with 2n panels.
inline double simpson(const std::function<double(double)> & g, double a, double b, int n)
{
  const double h = (b - a) / (2 * n);
  double s = g(a) + g(b);
  for (int k = 1; k < 2 * n; ++k) {
    s += (k % 2 == 1 ? 4.0 : 2.0) * g(a + k * h);
  }
  return s * h / 3.0;
}
}  // namespace oracle

#endif  // RCFIF_TESTS__FIXTURES_HPP_
