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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rcfif/fractal_spline.hpp"

using fixtures::error_code_of;
using rcfif::ErrorCode;
using rcfif::FractalSpline;
using rcfif::InterpolationData;
using rcfif::ScalingVector;
using rcfif::ShapeParams;

namespace
{
// P_i*(theta)/Q_i*(theta) straight from the coefficient list of the model.
double term_oracle(const InterpolationData & data, const ShapeParams & p, const ScalingVector & a,
                   std::size_t i, double x)
{
  const auto & xs = data.knots;
  const auto & y = data.values;
  const auto & d = *data.derivatives;
  const std::size_t n = xs.size();
  const double span = xs[n - 1] - xs[0];
  const double h = xs[i + 1] - xs[i];
  const double th = (x - xs[0]) / span;
  const double r = p.r[i], t = p.t[i], al = a.alpha[i];
  const double c1 = (y[i] - al * y[0]) * r;
  const double c2 = (2 * r + t) * y[i] + r * h * d[i] - al * ((2 * r + t) * y[0] + r * span * d[0]);
  const double c3 = (r + 2 * t) * y[i + 1] - t * h * d[i + 1] -
                    al * ((r + 2 * t) * y[n - 1] - t * span * d[n - 1]);
  const double c4 = (y[i + 1] - al * y[n - 1]) * t;
  const double u = 1 - th;
  return (c1 * u * u * u + c2 * th * u * u + c3 * th * th * u + c4 * th * th * th) /
         (u * r + th * t);
}

FractalSpline table_model(const fixtures::TableRow & row)
{
  return FractalSpline::build(fixtures::bench5(), ShapeParams{row.r, row.t},
                              ScalingVector{row.alpha});
}

FractalSpline random_model(std::mt19937_64 & rng, std::size_t n)
{
  const auto data = fixtures::random_data(rng, n);
  const rcfif::Mesh m(data);
  return FractalSpline::build(data, fixtures::random_params(rng, n - 1),
                              fixtures::random_alpha(rng, m));
}
}  // namespace

TEST_CASE("admissibility of scaling factors")
{
  const auto p = ShapeParams::uniform(4);
  for (const auto & row : fixtures::polygon_rows()) {
    CHECK_NOTHROW(table_model(row));
  }
  for (const auto & row : fixtures::quadratic_rows()) {
    const auto model = table_model(row);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(rcfif::eval_point(model, model.data().knots[k], 1e-12).value == model.data().values[k]);
    }
  }
  CHECK(error_code_of([&] {
          FractalSpline::build(fixtures::bench5(), p, ScalingVector{{0, 0.5, 0, 0}});
        }) == ErrorCode::ScalingOutOfRange);
  CHECK(error_code_of([&] {
          FractalSpline::build(fixtures::bench5(), p, ScalingVector{{0, 0, 0, -1.0 / 3.0}});
        }) == ErrorCode::ScalingOutOfRange);
  CHECK(error_code_of([&] {
          FractalSpline::build(fixtures::bench5_without_derivatives(), p, ScalingVector{{0, 0, 0, 0}});
        }) == ErrorCode::MissingDerivatives);
  CHECK(error_code_of([&] {
          FractalSpline::build(fixtures::bench5(), p, ScalingVector{{0, 0, 0}});
        }) == ErrorCode::LengthMismatch);
}

TEST_CASE("affine term matches the coefficient oracle")
{
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = random_model(rng, 3 + trial % 6);
    const auto & m = model.mesh();
    for (std::size_t i = 0; i < m.interval_count(); ++i) {
      for (int k = 0; k < 10; ++k) {
        const double x = std::lerp(m.first(), m.last(), u(rng));
        const double expect = term_oracle(model.data(), model.params(), model.alpha(), i, x);
        CHECK(std::abs(model.affine_term(i, x) - expect) <= 1e-10 * (1 + std::abs(expect)));
      }
    }
  }
}

TEST_CASE("rational base functions match f to first order at the domain ends")
{
  const auto model = table_model(fixtures::polygon_rows()[0]);
  const auto & data = model.data();
  const double lo = data.knots.front();
  const double hi = data.knots.back();
  const double step = 1e-6;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(model.base_function(i, lo) == doctest::Approx(data.values.front()).epsilon(1e-13));
    CHECK(model.base_function(i, hi) == doctest::Approx(data.values.back()).epsilon(1e-13));
    const double d_lo = (-3 * model.base_function(i, lo) + 4 * model.base_function(i, lo + step) -
                         model.base_function(i, lo + 2 * step)) / (2 * step);
    const double d_hi = (3 * model.base_function(i, hi) - 4 * model.base_function(i, hi - step) +
                         model.base_function(i, hi - 2 * step)) / (2 * step);
    CHECK(d_lo == doctest::Approx(data.derivatives->front()).epsilon(1e-5));
    CHECK(d_hi == doctest::Approx(data.derivatives->back()).epsilon(1e-5));
  }
}

TEST_CASE("zero scaling gives the classical spline")
{
  const auto row = fixtures::polygon_rows()[2];
  const auto model = table_model(row);
  const auto data = fixtures::bench5();
  const ShapeParams p{row.r, row.t};
  for (int k = 0; k <= 1000; ++k) {
    const double x = std::lerp(0.0, 15.0, k / 1000.0);
    const auto pv = rcfif::eval_point(model, x, 1e-12);
    CHECK(std::abs(pv.value - rcfif::eval_classical(data, p, x)) <= 1e-12);
  }
  for (const auto & pt : rcfif::eval_orbit(model, 3)) {
    CHECK(std::abs(pt.value - rcfif::eval_classical(data, p, pt.x)) <= 1e-12);
  }
  CHECK(rcfif::perturbation_bound(model) == 0.0);
}

TEST_CASE("constant data gives a constant fractal function")
{
  const InterpolationData data{{0, 1, 3, 4}, {2.5, 2.5, 2.5, 2.5}, std::vector<double>{0, 0, 0, 0}};
  std::mt19937_64 rng(53);
  const rcfif::Mesh m(data);
  const auto model =
    FractalSpline::build(data, fixtures::random_params(rng, 3), fixtures::random_alpha(rng, m));
  for (const auto & pt : rcfif::eval_orbit(model, 4)) {
    CHECK(pt.value == doctest::Approx(2.5).epsilon(1e-13));
  }
  for (const auto & pt : rcfif::sample_uniform(model, 101, 1e-12)) {
    CHECK(pt.value == doctest::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("orbit evaluation")
{
  const auto model = table_model(fixtures::polygon_rows()[0]);
  const auto data = fixtures::bench5();
  const auto seed = rcfif::eval_orbit(model, 0);
  REQUIRE(seed.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(seed[k].x == data.knots[k]);
    CHECK(seed[k].value == data.values[k]);
  }
  const auto one = rcfif::eval_orbit(model, 1);
  CHECK(one.size() == 5 + 4 * 3);
  for (std::size_t k = 0; k < 5; ++k) {
    const auto it = std::find_if(one.begin(), one.end(), [&](auto & p) { return p.x == data.knots[k]; });
    REQUIRE(it != one.end());
    CHECK(it->value == doctest::Approx(data.values[k]).epsilon(1e-13));
  }
  const auto deep = rcfif::eval_orbit(model, 4);
  for (std::size_t k = 1; k < deep.size(); ++k) {
    CHECK(deep[k - 1].x < deep[k].x);
  }
  CHECK(error_code_of([&] { rcfif::eval_orbit(model, 30); }) == ErrorCode::DepthTooLarge);
  CHECK(error_code_of([&] { rcfif::eval_orbit(model, 3, 100); }) == ErrorCode::DepthTooLarge);
}

TEST_CASE("address expansion basics")
{
  const auto model = table_model(fixtures::polygon_rows()[0]);
  for (double x : {0.0, 3.0, 7.0, 10.0, 15.0}) {
    const auto pv = rcfif::eval_point(model, x, 1e-12);
    CHECK(pv.tail_bound == 0.0);
  }
  CHECK(rcfif::eval_point(model, 7.0, 1e-12).value == 12.0);
  CHECK(error_code_of([&] { rcfif::eval_point(model, 15.1, 1e-9); }) ==
        ErrorCode::PointOutsideDomain);
  CHECK(error_code_of([&] { rcfif::eval_point(model, 1.0, 0.0); }) ==
        ErrorCode::NonPositiveTolerance);
  const auto two = rcfif::sample_uniform(model, 2, 1e-10);
  REQUIRE(two.size() == 2);
  CHECK(two[0].x == 0.0);
  CHECK(two[0].value == 18.0);
  CHECK(two[1].x == 15.0);
  CHECK(two[1].value == 20.0);
  CHECK(rcfif::default_tolerance(model) == doctest::Approx(1e-10 * 21));
}

TEST_CASE("both evaluators agree on random models")
{
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = random_model(rng, 3 + trial % 5);
    const double tol = 1e-9;
    for (const auto & pt : rcfif::eval_orbit(model, 3)) {
      const auto pv = rcfif::eval_point(model, pt.x, tol);
      CHECK(pv.tail_bound <= tol);
      CHECK(std::abs(pv.value - pt.value) <= tol + 1e-12 * (1 + std::abs(pt.value)));
    }
  }
}

TEST_CASE("self-referential identity and tolerance refinement")
{
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_model(rng, 4 + trial % 4);
    const auto & m = model.mesh();
    const double tol = 1e-10;
    for (int k = 0; k < 20; ++k) {
      const double x = std::lerp(m.first(), m.last(), u(rng));
      const double fx = rcfif::eval_point(model, x, tol).value;
      for (std::size_t i = 0; i < m.interval_count(); ++i) {
        const double lhs = rcfif::eval_point(model, m.forward_map(i, x), tol).value;
        const double rhs = model.alpha().alpha[i] * fx +
                           term_oracle(model.data(), model.params(), model.alpha(), i, x);
        CHECK(std::abs(lhs - rhs) <= 2 * tol + 1e-12 * (1 + std::abs(lhs)));
      }
      const double coarse = rcfif::eval_point(model, x, 1e-6).value;
      const double fine = rcfif::eval_point(model, x, 1e-7).value;
      CHECK(std::abs(coarse - fine) <= 1e-6);
    }
  }
}

TEST_CASE("a priori sup bound dominates samples")
{
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = random_model(rng, 5);
    for (const auto & pt : rcfif::eval_orbit(model, 4)) {
      CHECK(std::abs(pt.value) <= model.sup_bound() * (1 + 1e-12));
    }
  }
}

TEST_CASE("continuity at interior knots")
{
  const auto model = table_model(fixtures::polygon_rows()[1]);
  const auto & m = model.mesh();
  const auto f = [&](double x) { return rcfif::eval_point(model, x, 1e-13).value; };
  for (std::size_t k = 1; k + 1 < m.knot_count(); ++k) {
    const double x = m.knots()[k];
    const double hl = m.h()[k - 1];
    const double hr = m.h()[k];
    CHECK(std::abs(f(x - 1e-9 * hl) - f(x + 1e-9 * hr)) <= 1e-5);
    const double dl = (f(x) - f(x - 1e-3 * hl)) / (1e-3 * hl);
    const double dr = (f(x + 1e-3 * hr) - f(x)) / (1e-3 * hr);
    CHECK(std::abs(dl - dr) <= 0.05 * std::max({1.0, std::abs(dl), std::abs(dr)}));
  }
}

TEST_CASE("perturbation bound")
{
  const double cap = 2.0 / 63.0;
  const auto model = FractalSpline::build(fixtures::bench5(), ShapeParams::uniform(4),
                                          ScalingVector{{cap, cap, -cap, 0.0}});
  CHECK(std::abs(rcfif::perturbation_bound(model) - 2.0) <= 1e-12);

  std::mt19937_64 rng(67);
  const auto data = fixtures::bench5();
  const rcfif::Mesh m(data);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = fixtures::random_params(rng, 4);
    const auto fa = FractalSpline::build(data, p, fixtures::random_alpha(rng, m));
    const double bound = rcfif::perturbation_bound(fa);
    for (const auto & pt : rcfif::eval_orbit(fa, 4)) {
      CHECK(std::abs(pt.value - rcfif::eval_classical(data, p, pt.x)) <= bound);
    }
  }
}

TEST_CASE("values-only mode")
{
  auto ext = fixtures::bench5_without_derivatives();
  ext.knots.push_back(16);
  ext.values.push_back(22);
  const ScalingVector a{{0.05, -0.1, 0.1, 0.2}};
  const auto p = ShapeParams::uniform(4, 1, 2);
  const auto vo = FractalSpline::build(ext, p, a, rcfif::SplineMode::values_only);
  CHECK(vo.mode() == rcfif::SplineMode::values_only);
  CHECK(vo.data().size() == 5);
  auto hermite = fixtures::bench5_without_derivatives();
  hermite.derivatives = std::vector<double>{-8.0 / 3.0, 0.5, -1.0, 2.2, 2.0};
  const auto he = FractalSpline::build(hermite, p, a);
  for (const auto & pt : rcfif::eval_orbit(vo, 3)) {
    CHECK(std::abs(pt.value - rcfif::eval_point(he, pt.x, 1e-12).value) <= 1e-10);
  }
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(rcfif::eval_point(vo, ext.knots[k], 1e-10).value == ext.values[k]);
  }
  CHECK(error_code_of([&] {
          FractalSpline::build(InterpolationData{{0, 1, 2}, {0, 1, 0}, std::nullopt},
                               ShapeParams::uniform(1), ScalingVector{{0}},
                               rcfif::SplineMode::values_only);
        }) == ErrorCode::TooFewPoints);
}

TEST_CASE("bump bases")
{
  const auto data = fixtures::bench5();
  const rcfif::Mesh m(data);
  ScalingVector half;
  for (double ai : m.a()) {
    half.alpha.push_back(ai / 2);
  }
  const auto model =
    FractalSpline::with_bump_bases(data, ShapeParams::uniform(4), half, {1, 2, 0.5, 3});
  CHECK(model.base_kind() == rcfif::BaseKind::classical_minus_bump);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(model.bump(i, 0.0) == 0.0);
    CHECK(model.bump(i, 15.0) == 0.0);
    const double s = 1e-4;
    // vanishes quadratically: b(s) = beta (s (15 - s))^2 / 7.5^4
    const double expect = model.bumps()[i] * std::pow(s * (15.0 - s), 2) / std::pow(7.5, 4);
    CHECK(model.bump(i, s) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(model.bump(i, 15.0 - s) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(model.bump(i, 7.5) == doctest::Approx(model.bumps()[i]).epsilon(1e-15));
    for (int k = 0; k <= 100; ++k) {
      const double x = std::lerp(0.0, 15.0, k / 100.0);
      CHECK(model.bump(i, x) >= 0.0);
      CHECK(model.base_function(i, x) <= model.classical()(x) + 1e-12);
    }
  }
  for (const auto & pt : rcfif::eval_orbit(model, 4)) {
    const auto pv = rcfif::eval_point(model, pt.x, 1e-11);
    CHECK(std::abs(pv.value - pt.value) <= 1e-11 + 1e-12 * std::abs(pt.value));
  }

  auto bad = half;
  bad.alpha[1] = 0.0;
  CHECK(error_code_of([&] {
          FractalSpline::with_bump_bases(data, ShapeParams::uniform(4), bad, {1, 1, 1, 1});
        }) == ErrorCode::NonPositiveAlpha);
  CHECK(error_code_of([&] {
          FractalSpline::with_bump_bases(data, ShapeParams::uniform(4), half, {1, 0, 1, 1});
        }) == ErrorCode::NonPositiveBump);
}
