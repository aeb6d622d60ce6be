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

#include "rcfif/io/curve_file.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

#include "rcfif/error.hpp"
#include "rcfif/io/problem_file.hpp"

namespace rcfif::io
{
namespace
{
double parse_field(const std::string & field, std::size_t line)
{
  const char * begin = field.c_str();
  char * end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    fail(ErrorCode::ParseError,
         "line " + std::to_string(line) + ": '" + field + "' is not a finite number");
  }
  return v;
}
}  // namespace

void write_curve(std::ostream & out, std::span<const CurvePoint> points)
{
  for (std::size_t k = 1; k < points.size(); ++k) {
    require(points[k - 1].x < points[k].x, ErrorCode::InvalidArgument,
            "curve abscissae must be strictly increasing");
  }
  out << "x,value\n";
  for (const CurvePoint & p : points) {
    out << fmt::format("{:.17g},{:.17g}\n", p.x, p.value);
  }
}

std::string format_curve(std::span<const CurvePoint> points)
{
  std::ostringstream ss;
  write_curve(ss, points);
  return ss.str();
}

std::vector<CurvePoint> parse_curve(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) {
    fail(ErrorCode::ParseError, "missing header line");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  require(line == "x,value", ErrorCode::ParseError,
          "line 1: expected header 'x,value', got '" + line + "'");
  std::vector<CurvePoint> points;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto comma = line.find(',');
    require(comma != std::string::npos && line.find(',', comma + 1) == std::string::npos,
            ErrorCode::ParseError, "line " + std::to_string(number) + ": expected 'x,value'");
    const CurvePoint p{parse_field(line.substr(0, comma), number),
                       parse_field(line.substr(comma + 1), number)};
    require(points.empty() || points.back().x < p.x, ErrorCode::ParseError,
            "line " + std::to_string(number) + ": x is not strictly increasing");
    points.push_back(p);
  }
  require(!points.empty(), ErrorCode::EmptyCurve, "curve has no rows");
  return points;
}

std::vector<CurvePoint> read_curve(const std::filesystem::path & path)
{
  const std::string text = read_text(path);
  try {
    return parse_curve(text);
  } catch (const Error & e) {
    fail(e.code(), path.string() + ": " + e.what());
  }
}
}  // namespace rcfif::io
