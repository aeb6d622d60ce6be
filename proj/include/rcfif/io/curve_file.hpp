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

#ifndef RCFIF__IO__CURVE_FILE_HPP_
#define RCFIF__IO__CURVE_FILE_HPP_

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcfif/fractal_spline.hpp"

namespace rcfif::io
{
// "x,value" header, then one row per point with 17 significant digits.
// Rows must have strictly increasing x.
void write_curve(std::ostream & out, std::span<const CurvePoint> points);
std::string format_curve(std::span<const CurvePoint> points);

std::vector<CurvePoint> parse_curve(std::string_view text);
std::vector<CurvePoint> read_curve(const std::filesystem::path & path);
}  // namespace rcfif::io

#endif  // RCFIF__IO__CURVE_FILE_HPP_
