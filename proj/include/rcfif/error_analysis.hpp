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

#ifndef RCFIF__ERROR_ANALYSIS_HPP_
#define RCFIF__ERROR_ANALYSIS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcfif/classical_spline.hpp"
#include "rcfif/fractal_spline.hpp"
#include "rcfif/mesh.hpp"

namespace rcfif
{
// Peano kernel of the local interpolation error functional on interval i,
// evaluated at (tau, xhat). The r-branch applies for x_i < tau < xhat, the
// s-branch for xhat < tau < x_{i+1}.
double peano_kernel(const Mesh & mesh, std::size_t i, const ShapeParams & params, double tau,
                    double xhat);

// Ratio whose maximum over phi in [0,1] is the local error constant c_i.
double error_ratio(double r, double t, double phi);

// c_i = max_phi error_ratio(r_i, t_i, phi), to 1e-10 absolute.
double local_error_constant(double r, double t);
double local_error_constant(std::size_t i, const ShapeParams & params);

// h_i c_i sup|Phi'|.
double local_error_bound(const Mesh & mesh, std::size_t i, const ShapeParams & params,
                         double phi_prime_sup);

// M = |y|_inf + max(|y_1|, |y_N|) + (h |d|_inf + |I| max(|d_1|, |d_N|)) / 4,
// the data-dependent factor of the fractal perturbation error.
double compute_M(const InterpolationData & data);

// [|alpha|/(1-|alpha|)] M + c h sup|Phi'|, c = max_i c_i.
double total_error_bound(const InterpolationData & data, const ShapeParams & params,
                         const ScalingVector & alpha, double phi_prime_sup);

struct ErrorReport
{
  std::vector<double> per_interval_constants;
  double global_constant = 0.0;
  double perturbation_term = 0.0;
  double total_bound = 0.0;
  double empirical_sup_error = 0.0;
};

// A closed-form test function with its derivative and a bound on |Phi'| over
// any interval inside its default domain.
struct Generator
{
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double lower = 0.0;
  double upper = 1.0;
  // sup |Phi'| on [lower, upper].
  double derivative_sup = 0.0;
};

// Known names: linear, sin, cos, exp.
Generator named_generator(const std::string & name);
std::vector<std::string> generator_names();

struct ConvergenceRow
{
  std::size_t knots = 0;
  double h = 0.0;
  double sup_error = 0.0;
  double bound = 0.0;
  std::size_t samples = 0;
};

struct ConvergenceResult
{
  std::vector<ConvergenceRow> rows;
  // Least-squares slope of log(error) against log(h); empty when every error
  // is at rounding level (exact reproduction).
  std::optional<double> order;
  bool exact_reproduction = false;
};

inline constexpr double kExactReproductionLevel = 1e-10;

// Uniform partitions with `sizes` knots, arithmetic-mean derivatives,
// r = t = 1, alpha_i = kappa a_i. The sup error is measured over orbit points,
// at least `min_samples_per_interval` per interval.
ConvergenceResult convergence_experiment(const Generator & generator,
                                         const std::vector<std::size_t> & sizes, double kappa,
                                         std::size_t min_samples_per_interval = 1000);

ErrorReport error_report(const FractalSpline & model, const Generator & generator,
                         std::size_t min_samples_per_interval = 1000);
}  // namespace rcfif

#endif  // RCFIF__ERROR_ANALYSIS_HPP_
