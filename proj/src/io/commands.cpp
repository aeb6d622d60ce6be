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

#include "rcfif/io/commands.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcfif/constraints.hpp"
#include "rcfif/error.hpp"
#include "rcfif/error_analysis.hpp"
#include "rcfif/fractal_spline.hpp"
#include "rcfif/io/curve_file.hpp"
#include "rcfif/io/problem_file.hpp"
#include "rcfif/io/svg_plot.hpp"

namespace rcfif::io
{
namespace
{
using nlohmann::json;

std::string tuple(std::span<const double> v, const char * spec = "{:.4g}")
{
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += (k == 0 ? "" : ", ") + fmt::format(fmt::runtime(spec), v[k]);
  }
  return s + ")";
}

json lambda_json(const LambdaInterval & li)
{
  json j = {{"empty", li.empty}, {"lower", li.lower}, {"lower_open", li.lower_open}};
  j["upper"] = li.bounded() ? json(li.upper) : json(nullptr);
  return j;
}

json certificate_json(const ConstraintCertificate & c)
{
  json intervals = json::array();
  for (std::size_t i = 0; i < c.residual_ii.size(); ++i) {
    const auto & k = c.coefficients[i];
    intervals.push_back({{"interval", i},
                         {"residual_ii", c.residual_ii[i]},
                         {"residual_iii", c.residual_iii[i]},
                         {"cubic", c.cubic[i].b},
                         {"A", k.A},
                         {"B", k.B},
                         {"C", k.C},
                         {"D", k.D},
                         {"lambda", lambda_json(c.lambda[i])}});
  }
  return {{"side", c.side == BoundSide::above ? "above" : "below"},
          {"theorem", c.kind == PieceKind::linear ? "piecewise-linear" : "piecewise-quadratic"},
          {"M", c.M},
          {"K", c.K},
          {"alpha_sup", c.alpha_sup},
          {"alpha_cap", c.alpha_cap},
          {"scaling_admissible", c.scaling_admissible},
          {"cap_satisfied", c.cap_satisfied},
          {"feasible", c.feasible},
          {"intervals", intervals}};
}
}  // namespace

void cmd_fit(const std::filesystem::path & input,
             const std::optional<std::filesystem::path> & model_out, std::ostream & out)
{
  ProblemFile pf = read_problem(input);
  const InterpolationData data = effective_data(pf);
  const Mesh mesh(data);
  out << "mode: " << (pf.mode == SplineMode::hermite ? "hermite" : "values-only") << "\n";
  out << "knots: " << mesh.knot_count() << "\n";
  out << "x = " << tuple(mesh.knots()) << "\n";
  out << "h = " << tuple(mesh.h()) << "\n";
  out << "a = " << tuple(mesh.a()) << "\n";
  out << "|I| = " << fmt::format("{:.6g}", mesh.total_length()) << "\n";
  if (!pf.data.derivatives && pf.mode == SplineMode::hermite) {
    out << "derivatives (arithmetic mean estimate) = " << tuple(*data.derivatives) << "\n";
  } else {
    out << "d = " << tuple(*data.derivatives) << "\n";
  }
  const ScalingVector & alpha = require_alpha(pf);
  require(alpha.alpha.size() == mesh.interval_count(), ErrorCode::LengthMismatch,
          "alpha needs one entry per interval");
  out << "alpha = " << tuple(alpha.alpha) << "\n";
  std::string violation;
  for (std::size_t i = 0; i < alpha.alpha.size() && violation.empty(); ++i) {
    if (!(std::abs(alpha.alpha[i]) < mesh.a()[i])) {
      violation = fmt::format("interval {}: |alpha| = {:.6g} >= a = {:.6g}", i,
                              std::abs(alpha.alpha[i]), mesh.a()[i]);
    }
  }
  out << "alpha admissible: " << (violation.empty() ? "yes" : "no (" + violation + ")") << "\n";
  const FractalSpline model = build_model(pf);
  out << "|alpha|_inf = " << fmt::format("{:.6g}", alpha.sup_norm()) << "\n";
  out << "perturbation_bound = " << fmt::format("{:.10g}", perturbation_bound(model)) << "\n";
  out << "sup_bound = " << fmt::format("{:.10g}", model.sup_bound()) << "\n";
  if (model_out) {
    if (pf.mode == SplineMode::hermite) {
      pf.data = data;
    }
    write_text(*model_out, write_problem(pf));
  }
}

void cmd_eval(const std::filesystem::path & input, const EvalOptions & options,
              std::ostream & out)
{
  require(options.grid.has_value() != options.orbit.has_value(), ErrorCode::InvalidArgument,
          "give exactly one of --grid or --orbit");
  const FractalSpline model = build_model(read_problem(input));
  if (options.orbit) {
    require(*options.orbit >= 0, ErrorCode::InvalidArgument, "--orbit depth must be >= 0");
    write_curve(out, eval_orbit(model, *options.orbit));
    return;
  }
  const double tol = options.tol.value_or(default_tolerance(model));
  write_curve(out, sample_uniform(model, *options.grid, tol));
}

void cmd_check(const std::filesystem::path & input, int depth, std::ostream & out)
{
  const ProblemFile pf = read_problem(input);
  const BoundSpec & bound = require_bound(pf);
  const InterpolationData data = effective_data(pf);
  validate_bound(data, bound);
  const ConstraintCertificate cert =
    check_conditions(data, require_params(pf), require_alpha(pf), bound);
  const FractalSpline model = build_model(pf);
  const EmpiricalGap gap = check_empirical(model, bound, depth);
  json report = certificate_json(cert);
  report["empirical"] = {{"depth", depth},
                         {"min_gap", gap.min_gap},
                         {"argmin_x", gap.argmin_x},
                         {"samples", gap.samples}};
  out << report.dump(2) << "\n";
}

void cmd_solve(const std::filesystem::path & input, double slack,
               const std::optional<std::filesystem::path> & problem_out, std::ostream & out)
{
  ProblemFile pf = read_problem(input);
  const BoundSpec & bound = require_bound(pf);
  const InterpolationData data = effective_data(pf);
  const Solution sol = solve_params(data, bound, slack);
  pf.alpha = sol.alpha;
  pf.params = sol.params;
  if (pf.mode == SplineMode::hermite) {
    pf.data = data;
  }
  json report = {{"slack", slack},
                 {"alpha", sol.alpha.alpha},
                 {"shape_r", sol.params.r},
                 {"shape_t", sol.params.t},
                 {"certificate", certificate_json(sol.certificate)}};
  const std::string problem = write_problem(pf);
  if (problem_out) {
    write_text(*problem_out, problem);
  } else {
    report["problem"] = json::parse(problem);
  }
  out << report.dump(2) << "\n";
}

void cmd_converge(const std::string & generator, const std::vector<std::size_t> & sizes,
                  double kappa, std::ostream & out)
{
  const Generator g = named_generator(generator);
  const ConvergenceResult res = convergence_experiment(g, sizes, kappa);
  out << fmt::format("generator: {} on [{:.6g}, {:.6g}], kappa = {:.6g}\n", g.name, g.lower,
                     g.upper, kappa);
  out << fmt::format("{:>6} {:>14} {:>14} {:>14} {:>10}\n", "N", "h", "sup_error", "bound",
                     "samples");
  for (const ConvergenceRow & r : res.rows) {
    out << fmt::format("{:>6} {:>14.6e} {:>14.6e} {:>14.6e} {:>10}\n", r.knots, r.h, r.sup_error,
                       r.bound, r.samples);
  }
  if (res.exact_reproduction) {
    out << fmt::format("order: exact (all errors <= {:.0e})\n", kExactReproductionLevel);
  } else {
    out << fmt::format("order: {:.4f}\n", *res.order);
  }
}

void cmd_plot(const std::vector<std::filesystem::path> & curves,
              const std::optional<std::filesystem::path> & bound_problem,
              const std::filesystem::path & svg_out)
{
  require(!curves.empty(), ErrorCode::EmptyCurve, "no curve files given");
  std::vector<PlotSeries> series;
  for (const auto & path : curves) {
    series.push_back({path.filename().string(), read_curve(path)});
  }
  std::optional<PlotSeries> bound;
  if (bound_problem) {
    const ProblemFile pf = read_problem(*bound_problem);
    const Mesh mesh(effective_data(pf));
    bound = PlotSeries{"bound (" + bound_problem->filename().string() + ")",
                       sample_bound(mesh, require_bound(pf))};
  }
  write_text(svg_out, render_svg(series, bound));
}

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Rational cubic fractal interpolation splines with shape constraints", "rcfif"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  EvalOptions eval_opts;
  std::size_t grid = 0;
  int orbit = 0;
  double tol = 0.0;
  int depth = 6;
  double slack = 1.0;
  std::string generator = "sin";
  std::vector<std::size_t> sizes;
  double kappa = 0.5;
  std::vector<std::string> curve_paths;
  std::string bound_path;

  auto * fit = app.add_subcommand("fit", "validate a problem file and summarise the model");
  fit->add_option("input", input, "problem file (JSON)")->required();
  fit->add_option("--out", out_path, "write the normalised problem file here");

  auto * eval = app.add_subcommand("eval", "sample the fractal spline to a CSV curve");
  eval->add_option("input", input, "problem file (JSON)")->required();
  auto * grid_opt = eval->add_option("--grid", grid, "uniform grid with n points");
  auto * orbit_opt = eval->add_option("--orbit", orbit, "exact orbit points of the given depth");
  grid_opt->excludes(orbit_opt);
  auto * tol_opt = eval->add_option("--tol", tol, "truncation tolerance for --grid");
  eval->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto * check = app.add_subcommand("check", "certificate and empirical gap against the bound");
  check->add_option("input", input, "problem file with bound")->required();
  check->add_option("--depth", depth, "orbit depth for the empirical gap")->capture_default_str();

  auto * solve = app.add_subcommand("solve", "select alpha, r and t for the bound");
  solve->add_option("input", input, "problem file with bound")->required();
  solve->add_option("--slack", slack, "fraction of the admissible |alpha| in [0, 1]")
    ->capture_default_str();
  solve->add_option("--out", out_path, "write the solved problem file here");

  auto * converge = app.add_subcommand("converge", "empirical convergence order");
  converge->add_option("--generator", generator, "linear, sin, cos or exp")->capture_default_str();
  converge->add_option("--sizes", sizes, "comma-separated knot counts")->delimiter(',')->required();
  converge->add_option("--kappa", kappa, "alpha_i = kappa a_i")->capture_default_str();

  auto * plot = app.add_subcommand("plot", "render CSV curves to SVG");
  plot->add_option("curves", curve_paths, "curve files (CSV)")->required();
  plot->add_option("--bound", bound_path, "problem file whose bound is drawn");
  plot->add_option("--out", out_path, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp & e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError & e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto opt_path = [&]() -> std::optional<std::filesystem::path> {
    if (out_path.empty()) {
      return std::nullopt;
    }
    return std::filesystem::path(out_path);
  };

  try {
    if (fit->parsed()) {
      cmd_fit(input, opt_path(), out);
    } else if (eval->parsed()) {
      if (grid_opt->count() > 0) {
        eval_opts.grid = grid;
      }
      if (orbit_opt->count() > 0) {
        eval_opts.orbit = orbit;
      }
      if (tol_opt->count() > 0) {
        eval_opts.tol = tol;
      }
      if (out_path.empty()) {
        cmd_eval(input, eval_opts, out);
      } else {
        std::ostringstream ss;
        cmd_eval(input, eval_opts, ss);
        write_text(out_path, ss.str());
      }
    } else if (check->parsed()) {
      cmd_check(input, depth, out);
    } else if (solve->parsed()) {
      cmd_solve(input, slack, opt_path(), out);
    } else if (converge->parsed()) {
      cmd_converge(generator, sizes, kappa, out);
    } else if (plot->parsed()) {
      std::vector<std::filesystem::path> paths(curve_paths.begin(), curve_paths.end());
      std::optional<std::filesystem::path> bound;
      if (!bound_path.empty()) {
        bound = bound_path;
      }
      cmd_plot(paths, bound, out_path);
    }
  } catch (const Error & e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception & e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
}  // namespace rcfif::io
