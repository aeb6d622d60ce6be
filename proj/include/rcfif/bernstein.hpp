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

#ifndef RCFIF__BERNSTEIN_HPP_
#define RCFIF__BERNSTEIN_HPP_

#include <array>

namespace rcfif
{
// Cubic in phi over [0,1] written as
//   b0 (1-phi)^3 + b1 phi (1-phi)^2 + b2 phi^2 (1-phi) + b3 phi^3.
// The basis carries no binomial weights, so b1/3 and b2/3 are the classical
// Bernstein control values. Nonnegative coefficients imply a nonnegative cubic.
struct CubicBernstein
{
  std::array<double, 4> b{};

  double operator()(double phi) const
  {
    const double u = 1.0 - phi;
    return ((b[0] * u + b[1] * phi) * u + b[2] * phi * phi) * u + b[3] * phi * phi * phi;
  }

  double min_coefficient() const;

  friend CubicBernstein operator+(const CubicBernstein & l, const CubicBernstein & r);
  friend CubicBernstein operator-(const CubicBernstein & l, const CubicBernstein & r);
  friend CubicBernstein operator*(double s, const CubicBernstein & c);
};

// u0 (1-phi) + u1 phi raised to the cubic basis.
CubicBernstein degree_elevate_linear(double u0, double u1);

// (u0 (1-phi) + u1 phi) * (v0 (1-phi) + v1 phi) in the cubic basis.
CubicBernstein multiply_linear(double u0, double u1, double v0, double v1);

// (q0 (1-phi)^2 + q1 phi (1-phi) + q2 phi^2) * (v0 (1-phi) + v1 phi).
CubicBernstein multiply_quadratic_linear(double q0, double q1, double q2, double v0, double v1);

// Upper bound of |num(phi) / (d0 (1-phi) + d1 phi)| on [0,1] for d0, d1 > 0,
// from the convex-hull property of the rational Bezier form.
double rational_sup_bound(const CubicBernstein & num, double d0, double d1);
}  // namespace rcfif

#endif  // RCFIF__BERNSTEIN_HPP_
