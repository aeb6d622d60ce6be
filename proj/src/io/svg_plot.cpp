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

#include "rcfif/io/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rcfif/error.hpp"

namespace rcfif::io
{
namespace
{
constexpr std::array<const char *, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                  "#9467bd", "#ff7f0e", "#17becf"};
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 50.0;
constexpr int kTicks = 5;

std::string escape_xml(const std::string & s)
{
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Extent
{
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(const CurvePoint & p)
  {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.value);
    y1 = std::max(y1, p.value);
  }

  void pad()
  {
    if (x1 <= x0) {
      x0 -= 0.5;
      x1 += 0.5;
    }
    if (y1 <= y0) {
      y0 -= 0.5;
      y1 += 0.5;
    }
    const double dy = 0.05 * (y1 - y0);
    y0 -= dy;
    y1 += dy;
  }
};

std::string polyline(const std::vector<CurvePoint> & pts, const Extent & e, double w, double h,
                     const std::string & style)
{
  const double pw = w - kMarginLeft - kMarginRight;
  const double ph = h - kMarginTop - kMarginBottom;
  std::string coords;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double sx = kMarginLeft + (pts[k].x - e.x0) / (e.x1 - e.x0) * pw;
    const double sy = kMarginTop + (e.y1 - pts[k].value) / (e.y1 - e.y0) * ph;
    coords += fmt::format("{}{:.3f},{:.3f}", k == 0 ? "" : " ", sx, sy);
  }
  return fmt::format("  <polyline fill=\"none\" {} points=\"{}\"/>\n", style, coords);
}
}  // namespace

std::string render_svg(std::span<const PlotSeries> curves, const std::optional<PlotSeries> & bound,
                       const PlotOptions & options)
{
  require(!curves.empty(), ErrorCode::EmptyCurve, "nothing to plot");
  Extent e;
  for (const PlotSeries & c : curves) {
    require(!c.points.empty(), ErrorCode::EmptyCurve, "curve '" + c.label + "' has no points");
    for (const CurvePoint & p : c.points) {
      e.add(p);
    }
  }
  if (bound) {
    for (const CurvePoint & p : bound->points) {
      e.add(p);
    }
  }
  e.pad();

  const double w = options.width;
  const double h = options.height;
  const double pw = w - kMarginLeft - kMarginRight;
  const double ph = h - kMarginTop - kMarginBottom;
  std::string svg;
  svg += fmt::format(
    "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
    "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
    options.width, options.height);
  svg += fmt::format("  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
                     options.width, options.height);
  svg += fmt::format(
    "  <rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"none\" "
    "stroke=\"black\"/>\n",
    kMarginLeft, kMarginTop, pw, ph);
  for (int k = 0; k <= kTicks; ++k) {
    const double f = static_cast<double>(k) / kTicks;
    const double sx = kMarginLeft + f * pw;
    const double sy = kMarginTop + (1.0 - f) * ph;
    const double xv = e.x0 + f * (e.x1 - e.x0);
    const double yv = e.y0 + f * (e.y1 - e.y0);
    svg += fmt::format(
      "  <line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"{2:.3f}\" stroke=\"black\"/>\n",
      sx, kMarginTop + ph, kMarginTop + ph + 5.0);
    svg += fmt::format(
      "  <text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"middle\">{:.4g}</text>\n", sx,
      kMarginTop + ph + 20.0, xv);
    svg += fmt::format(
      "  <line x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" stroke=\"black\"/>\n",
      kMarginLeft - 5.0, sy, kMarginLeft);
    svg += fmt::format(
      "  <text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"end\">{:.4g}</text>\n", kMarginLeft - 8.0,
      sy + 4.0, yv);
  }
  svg += fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"middle\">x</text>\n",
                     kMarginLeft + 0.5 * pw, h - 10.0);

  if (bound) {
    svg += polyline(bound->points, e, w, h,
                    "stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
  }
  for (std::size_t c = 0; c < curves.size(); ++c) {
    svg += polyline(curves[c].points, e, w, h,
                    fmt::format("stroke=\"{}\" stroke-width=\"1.5\"", kPalette[c % kPalette.size()]));
  }

  // Legend, top right inside the plot box.
  const double lx = kMarginLeft + pw - 200.0;
  double ly = kMarginTop + 16.0;
  const auto legend_entry = [&](const std::string & label, const std::string & style) {
    svg += fmt::format(
      "  <line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" {}/>\n", lx, ly - 4.0,
      lx + 24.0, ly - 4.0, style);
    svg += fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n", lx + 30.0, ly,
                       escape_xml(label));
    ly += 16.0;
  };
  for (std::size_t c = 0; c < curves.size(); ++c) {
    legend_entry(curves[c].label,
                 fmt::format("stroke=\"{}\" stroke-width=\"1.5\"", kPalette[c % kPalette.size()]));
  }
  if (bound) {
    legend_entry(bound->label, "stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
  }
  svg += "</svg>\n";
  return svg;
}

std::vector<CurvePoint> sample_bound(const Mesh & mesh, const BoundSpec & bound, std::size_t n)
{
  require(n >= 2, ErrorCode::InvalidArgument, "need at least 2 bound samples");
  require(bound.pieces.size() == mesh.interval_count(), ErrorCode::LengthMismatch,
          "bound and mesh disagree on the number of intervals");
  std::vector<CurvePoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = std::lerp(mesh.first(), mesh.last(),
                               static_cast<double>(k) / static_cast<double>(n - 1));
    out.push_back({x, eval_bound(mesh, bound, x)});
  }
  return out;
}
}  // namespace rcfif::io
