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

#include "rcfif/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcfif/error.hpp"

namespace rcfif
{
namespace
{
void check_finite(std::span<const double> v, const char * what)
{
  for (std::size_t j = 0; j < v.size(); ++j) {
    require(std::isfinite(v[j]), ErrorCode::NonFiniteInput,
            std::string(what) + "[" + std::to_string(j) + "] is not finite");
  }
}
}  // namespace

Mesh::Mesh(const InterpolationData & data)
{
  const std::size_t n = data.knots.size();
  require(n >= 3, ErrorCode::TooFewPoints,
          "need at least 3 points, got " + std::to_string(n));
  require(data.values.size() == n, ErrorCode::LengthMismatch,
          "values has " + std::to_string(data.values.size()) + " entries, knots has " +
            std::to_string(n));
  if (data.derivatives) {
    require(data.derivatives->size() == n, ErrorCode::LengthMismatch,
            "derivatives has " + std::to_string(data.derivatives->size()) +
              " entries, knots has " + std::to_string(n));
    check_finite(*data.derivatives, "derivatives");
  }
  check_finite(data.knots, "knots");
  check_finite(data.values, "values");
  for (std::size_t j = 0; j + 1 < n; ++j) {
    require(data.knots[j] < data.knots[j + 1], ErrorCode::NonIncreasingKnots,
            "knots[" + std::to_string(j + 1) + "] does not exceed knots[" + std::to_string(j) +
              "]");
  }

  knots_ = data.knots;
  values_ = data.values;
  total_length_ = knots_.back() - knots_.front();
  const double x1 = knots_.front();
  const double xn = knots_.back();
  h_.resize(n - 1);
  a_.resize(n - 1);
  e_.resize(n - 1);
  slopes_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h_[i] = knots_[i + 1] - knots_[i];
    a_[i] = h_[i] / total_length_;
    e_[i] = (xn * knots_[i] - x1 * knots_[i + 1]) / total_length_;
    slopes_[i] = (values_[i + 1] - values_[i]) / h_[i];
  }
}

double Mesh::max_h() const { return *std::max_element(h_.begin(), h_.end()); }

void Mesh::check_interval(std::size_t i) const
{
  require(i < interval_count(), ErrorCode::IndexOutOfRange,
          "interval " + std::to_string(i) + " out of range [0, " +
            std::to_string(interval_count()) + ")");
}

double Mesh::forward_map(std::size_t i, double x) const
{
  check_interval(i);
  require(contains(x), ErrorCode::PointOutsideDomain,
          "x = " + std::to_string(x) + " outside [x_1, x_N]");
  return std::lerp(knots_[i], knots_[i + 1], theta(x));
}

double Mesh::inverse_map(std::size_t i, double xhat) const
{
  check_interval(i);
  require(xhat >= knots_[i] && xhat <= knots_[i + 1], ErrorCode::PointOutsideSubinterval,
          "xhat = " + std::to_string(xhat) + " outside interval " + std::to_string(i));
  return std::lerp(first(), last(), local(i, xhat));
}

std::size_t Mesh::locate(double xhat) const
{
  require(contains(xhat), ErrorCode::PointOutsideDomain,
          "xhat = " + std::to_string(xhat) + " outside [x_1, x_N]");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), xhat);
  const auto k = static_cast<std::size_t>(it - knots_.begin());
  return std::min(k, interval_count()) - 1;
}

std::optional<std::size_t> Mesh::knot_index(double x) const
{
  auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
  if (it != knots_.end() && *it == x) {
    return static_cast<std::size_t>(it - knots_.begin());
  }
  return std::nullopt;
}

std::vector<double> estimate_derivatives(const InterpolationData & data)
{
  InterpolationData plain{data.knots, data.values, std::nullopt};
  const Mesh mesh(plain);
  const auto h = mesh.h();
  const auto s = mesh.slopes();
  const std::size_t n = mesh.knot_count();
  std::vector<double> d(n);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    d[j] = (h[j] * s[j - 1] + h[j - 1] * s[j]) / (h[j - 1] + h[j]);
  }
  d[0] = s[0] + (s[0] - s[1]) * h[0] / (h[0] + h[1]);
  d[n - 1] = s[n - 2] + (s[n - 2] - s[n - 3]) * h[n - 2] / (h[n - 3] + h[n - 2]);
  return d;
}

InterpolationData with_estimated_derivatives(InterpolationData data)
{
  if (!data.derivatives) {
    data.derivatives = estimate_derivatives(data);
  }
  return data;
}

double sup_norm(std::span<const double> v)
{
  double m = 0.0;
  for (double x : v) {
    m = std::max(m, std::abs(x));
  }
  return m;
}
}  // namespace rcfif
