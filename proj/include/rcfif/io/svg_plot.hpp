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

#ifndef RCFIF__IO__SVG_PLOT_HPP_
#define RCFIF__IO__SVG_PLOT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcfif/constraints.hpp"
#include "rcfif/fractal_spline.hpp"
#include "rcfif/mesh.hpp"

namespace rcfif::io
{
struct PlotSeries
{
  std::string label;
  std::vector<CurvePoint> points;
};

struct PlotOptions
{
  int width = 800;
  int height = 500;
};

// Standalone SVG: one <polyline> per curve, an optional dashed bound
// polyline, axes with ticks, and a legend. Output depends only on the inputs.
std::string render_svg(std::span<const PlotSeries> curves, const std::optional<PlotSeries> & bound,
                       const PlotOptions & options = {});

inline constexpr std::size_t kBoundSamples = 512;

std::vector<CurvePoint> sample_bound(const Mesh & mesh, const BoundSpec & bound,
                                     std::size_t n = kBoundSamples);
}  // namespace rcfif::io

#endif  // RCFIF__IO__SVG_PLOT_HPP_
