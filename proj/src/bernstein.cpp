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

#include "rcfif/bernstein.hpp"

#include <algorithm>
#include <cmath>

namespace rcfif
{
double CubicBernstein::min_coefficient() const { return *std::min_element(b.begin(), b.end()); }

CubicBernstein operator+(const CubicBernstein & l, const CubicBernstein & r)
{
  return {{l.b[0] + r.b[0], l.b[1] + r.b[1], l.b[2] + r.b[2], l.b[3] + r.b[3]}};
}

CubicBernstein operator-(const CubicBernstein & l, const CubicBernstein & r)
{
  return {{l.b[0] - r.b[0], l.b[1] - r.b[1], l.b[2] - r.b[2], l.b[3] - r.b[3]}};
}

CubicBernstein operator*(double s, const CubicBernstein & c)
{
  return {{s * c.b[0], s * c.b[1], s * c.b[2], s * c.b[3]}};
}

CubicBernstein degree_elevate_linear(double u0, double u1)
{
  return {{u0, 2.0 * u0 + u1, u0 + 2.0 * u1, u1}};
}

CubicBernstein multiply_linear(double u0, double u1, double v0, double v1)
{
  return {{u0 * v0, u0 * v0 + u0 * v1 + u1 * v0, u0 * v1 + u1 * v0 + u1 * v1, u1 * v1}};
}

CubicBernstein multiply_quadratic_linear(double q0, double q1, double q2, double v0, double v1)
{
  return {{q0 * v0, q0 * v1 + q1 * v0, q1 * v1 + q2 * v0, q2 * v1}};
}

double rational_sup_bound(const CubicBernstein & num, double d0, double d1)
{
  const CubicBernstein den = degree_elevate_linear(d0, d1);
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    m = std::max(m, std::abs(num.b[k] / den.b[k]));
  }
  return m;
}
}  // namespace rcfif
