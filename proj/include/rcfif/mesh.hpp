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

#ifndef RCFIF__MESH_HPP_
#define RCFIF__MESH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rcfif
{
// Interpolation data {(x_i, y_i, d_i)}. Indices are zero-based throughout the
// library: knot j in [0, N), interval i in [0, N-1) spans [x_i, x_{i+1}].
struct InterpolationData
{
  std::vector<double> knots;
  std::vector<double> values;
  std::optional<std::vector<double>> derivatives;

  std::size_t size() const { return knots.size(); }
  bool has_derivatives() const { return derivatives.has_value(); }
};

// Mesh quantities derived from validated data, plus the affine maps
// L_i : [x_1, x_N] -> [x_i, x_{i+1}] of the iterated function system.
class Mesh
{
public:
  // Validates the data (N >= 3, strictly increasing finite knots, matching
  // lengths) and derives h, a, e, slopes and |I|.
  explicit Mesh(const InterpolationData & data);

  std::size_t knot_count() const { return knots_.size(); }
  std::size_t interval_count() const { return h_.size(); }

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }
  std::span<const double> h() const { return h_; }
  std::span<const double> a() const { return a_; }
  std::span<const double> e() const { return e_; }
  std::span<const double> slopes() const { return slopes_; }

  double first() const { return knots_.front(); }
  double last() const { return knots_.back(); }
  double total_length() const { return total_length_; }
  double max_h() const;

  bool contains(double x) const { return x >= first() && x <= last(); }

  // L_i(x) = a_i x + e_i, evaluated so that L_i(x_1) = x_i and
  // L_i(x_N) = x_{i+1} hold exactly.
  double forward_map(std::size_t i, double x) const;
  double inverse_map(std::size_t i, double xhat) const;

  // Left-closed intervals, the last one closed on both ends.
  std::size_t locate(double xhat) const;

  // Global parameter theta(x) = (x - x_1)/|I| and local phi_i(x) = (x - x_i)/h_i.
  double theta(double x) const { return (x - first()) / total_length_; }
  double local(std::size_t i, double xhat) const { return (xhat - knots_[i]) / h_[i]; }

  // Index of the knot equal to x, if any.
  std::optional<std::size_t> knot_index(double x) const;

private:
  void check_interval(std::size_t i) const;

  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> h_;
  std::vector<double> a_;
  std::vector<double> e_;
  std::vector<double> slopes_;
  double total_length_ = 0.0;
};

inline Mesh validate(const InterpolationData & data) { return Mesh(data); }

// Arithmetic mean method: length-weighted chord slopes in the interior and
// one-sided extrapolation at the two ends. Exact on affine data.
std::vector<double> estimate_derivatives(const InterpolationData & data);

// Copy of `data` with the derivative column filled by estimate_derivatives()
// when absent.
InterpolationData with_estimated_derivatives(InterpolationData data);

double sup_norm(std::span<const double> v);
}  // namespace rcfif

#endif  // RCFIF__MESH_HPP_
