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

#ifndef RCFIF__IO__COMMANDS_HPP_
#define RCFIF__IO__COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rcfif::io
{
struct EvalOptions
{
  std::optional<std::size_t> grid;
  std::optional<int> orbit;
  std::optional<double> tol;
};

// Each command throws rcfif::Error on failure.
void cmd_fit(const std::filesystem::path & input,
             const std::optional<std::filesystem::path> & model_out, std::ostream & out);
void cmd_eval(const std::filesystem::path & input, const EvalOptions & options,
              std::ostream & out);
void cmd_check(const std::filesystem::path & input, int depth, std::ostream & out);
void cmd_solve(const std::filesystem::path & input, double slack,
               const std::optional<std::filesystem::path> & problem_out, std::ostream & out);
void cmd_converge(const std::string & generator, const std::vector<std::size_t> & sizes,
                  double kappa, std::ostream & out);
void cmd_plot(const std::vector<std::filesystem::path> & curves,
              const std::optional<std::filesystem::path> & bound_problem,
              const std::filesystem::path & svg_out);

// Parses argv, runs the subcommand and returns the process exit status.
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);
}  // namespace rcfif::io

#endif  // RCFIF__IO__COMMANDS_HPP_
