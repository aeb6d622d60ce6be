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

#include "rcfif/io/problem_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "rcfif/error.hpp"

namespace rcfif::io
{
namespace
{
using nlohmann::json;

[[noreturn]] void parse_fail(const std::string & path, const std::string & what)
{
  fail(ErrorCode::ParseError, path + ": " + what);
}

void reject_unknown(const json & obj, const std::string & path, const std::set<std::string> & known)
{
  for (const auto & item : obj.items()) {
    if (known.count(item.key()) == 0) {
      parse_fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
    }
  }
}

double as_number(const json & v, const std::string & path)
{
  if (!v.is_number()) {
    parse_fail(path, "expected a number");
  }
  return v.get<double>();
}

std::vector<double> number_array(const json & obj, const std::string & key)
{
  const json & v = obj.at(key);
  if (!v.is_array()) {
    parse_fail(key, "expected an array of numbers");
  }
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(as_number(v[k], key + "[" + std::to_string(k) + "]"));
  }
  return out;
}

void expect_length(const std::vector<double> & v, std::size_t n, const std::string & path)
{
  if (v.size() != n) {
    parse_fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  }
}

std::string expect_string(const json & v, const std::string & path)
{
  if (!v.is_string()) {
    parse_fail(path, "expected a string");
  }
  return v.get<std::string>();
}

BoundSpec parse_bound(const json & b, std::size_t intervals)
{
  if (!b.is_object()) {
    parse_fail("bound", "expected an object");
  }
  reject_unknown(b, "bound", {"side", "pieces"});
  if (!b.contains("side") || !b.contains("pieces")) {
    parse_fail("bound", "needs both 'side' and 'pieces'");
  }
  BoundSpec spec;
  const std::string side = expect_string(b.at("side"), "bound.side");
  if (side == "above") {
    spec.side = BoundSide::above;
  } else if (side == "below") {
    spec.side = BoundSide::below;
  } else {
    parse_fail("bound.side", "expected \"above\" or \"below\", got \"" + side + "\"");
  }
  const json & pieces = b.at("pieces");
  if (!pieces.is_array()) {
    parse_fail("bound.pieces", "expected an array");
  }
  if (pieces.size() != intervals) {
    parse_fail("bound.pieces", "expected " + std::to_string(intervals) + " pieces, got " +
                                 std::to_string(pieces.size()));
  }
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string path = "bound.pieces[" + std::to_string(k) + "]";
    const json & p = pieces[k];
    if (!p.is_object()) {
      parse_fail(path, "expected an object");
    }
    reject_unknown(p, path, {"kind", "p_left", "p_right", "slope_left"});
    for (const char * key : {"kind", "p_left", "p_right"}) {
      if (!p.contains(key)) {
        parse_fail(path + "." + key, "missing field");
      }
    }
    BoundPiece piece;
    const std::string kind = expect_string(p.at("kind"), path + ".kind");
    piece.left = as_number(p.at("p_left"), path + ".p_left");
    piece.right = as_number(p.at("p_right"), path + ".p_right");
    if (kind == "linear") {
      piece.kind = PieceKind::linear;
      if (p.contains("slope_left")) {
        parse_fail(path + ".slope_left", "only quadratic pieces take a slope");
      }
    } else if (kind == "quadratic") {
      piece.kind = PieceKind::quadratic;
      if (!p.contains("slope_left")) {
        parse_fail(path + ".slope_left", "missing field");
      }
      piece.slope_left = as_number(p.at("slope_left"), path + ".slope_left");
    } else {
      parse_fail(path + ".kind", "expected \"linear\" or \"quadratic\", got \"" + kind + "\"");
    }
    spec.pieces.push_back(piece);
  }
  return spec;
}

json bound_to_json(const BoundSpec & spec)
{
  json pieces = json::array();
  for (const BoundPiece & p : spec.pieces) {
    json jp = {{"kind", p.kind == PieceKind::linear ? "linear" : "quadratic"},
               {"p_left", p.left},
               {"p_right", p.right}};
    if (p.kind == PieceKind::quadratic) {
      jp["slope_left"] = p.slope_left;
    }
    pieces.push_back(jp);
  }
  return {{"side", spec.side == BoundSide::above ? "above" : "below"}, {"pieces", pieces}};
}
}  // namespace

std::size_t ProblemFile::interval_count() const
{
  const std::size_t n = data.knots.size();
  const std::size_t interpolated = mode == SplineMode::values_only ? n - 1 : n;
  return interpolated == 0 ? 0 : interpolated - 1;
}

ProblemFile parse_problem(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error & e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    parse_fail("(root)", "expected a JSON object");
  }
  reject_unknown(doc, "", {"knots", "values", "derivatives", "shape_r", "shape_t", "alpha", "mode",
                           "bound"});
  for (const char * key : {"knots", "values"}) {
    if (!doc.contains(key)) {
      parse_fail(key, "missing field");
    }
  }

  ProblemFile pf;
  if (doc.contains("mode")) {
    const std::string mode = expect_string(doc.at("mode"), "mode");
    if (mode == "hermite") {
      pf.mode = SplineMode::hermite;
    } else if (mode == "values-only") {
      pf.mode = SplineMode::values_only;
    } else {
      parse_fail("mode", "expected \"hermite\" or \"values-only\", got \"" + mode + "\"");
    }
  }
  pf.data.knots = number_array(doc, "knots");
  pf.data.values = number_array(doc, "values");
  const std::size_t n = pf.data.knots.size();
  const std::size_t min_n = pf.mode == SplineMode::values_only ? 4 : 3;
  if (n < min_n) {
    parse_fail("knots", "expected at least " + std::to_string(min_n) + " entries, got " +
                          std::to_string(n));
  }
  expect_length(pf.data.values, n, "values");
  if (doc.contains("derivatives")) {
    if (pf.mode == SplineMode::values_only) {
      parse_fail("derivatives", "values-only mode takes no derivatives");
    }
    pf.data.derivatives = number_array(doc, "derivatives");
    expect_length(*pf.data.derivatives, n, "derivatives");
  }
  const std::size_t intervals = pf.interval_count();
  if (doc.contains("shape_r") != doc.contains("shape_t")) {
    parse_fail(doc.contains("shape_r") ? "shape_t" : "shape_r",
               "shape_r and shape_t must be given together");
  }
  if (doc.contains("shape_r")) {
    ShapeParams sp{number_array(doc, "shape_r"), number_array(doc, "shape_t")};
    expect_length(sp.r, intervals, "shape_r");
    expect_length(sp.t, intervals, "shape_t");
    pf.params = std::move(sp);
  }
  if (doc.contains("alpha")) {
    ScalingVector a{number_array(doc, "alpha")};
    expect_length(a.alpha, intervals, "alpha");
    pf.alpha = std::move(a);
  }
  if (doc.contains("bound")) {
    pf.bound = parse_bound(doc.at("bound"), intervals);
  }
  return pf;
}

std::string read_text(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path & path, std::string_view text)
{
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  require(static_cast<bool>(out), ErrorCode::IoError, "failed writing " + path.string());
}

ProblemFile read_problem(const std::filesystem::path & path)
{
  const std::string text = read_text(path);
  try {
    return parse_problem(text);
  } catch (const Error & e) {
    if (e.code() == ErrorCode::ParseError) {
      fail(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    throw;
  }
}

std::string write_problem(const ProblemFile & pf)
{
  json doc;
  doc["knots"] = pf.data.knots;
  doc["values"] = pf.data.values;
  if (pf.data.derivatives) {
    doc["derivatives"] = *pf.data.derivatives;
  }
  if (pf.params) {
    doc["shape_r"] = pf.params->r;
    doc["shape_t"] = pf.params->t;
  }
  if (pf.alpha) {
    doc["alpha"] = pf.alpha->alpha;
  }
  doc["mode"] = pf.mode == SplineMode::hermite ? "hermite" : "values-only";
  if (pf.bound) {
    doc["bound"] = bound_to_json(*pf.bound);
  }
  return doc.dump(2) + "\n";
}

InterpolationData effective_data(const ProblemFile & pf)
{
  if (pf.mode == SplineMode::values_only) {
    return values_only_data(pf.data);
  }
  return with_estimated_derivatives(pf.data);
}

const ShapeParams & require_params(const ProblemFile & pf)
{
  if (!pf.params) {
    parse_fail("shape_r", "missing field");
  }
  return *pf.params;
}

const ScalingVector & require_alpha(const ProblemFile & pf)
{
  if (!pf.alpha) {
    parse_fail("alpha", "missing field");
  }
  return *pf.alpha;
}

const BoundSpec & require_bound(const ProblemFile & pf)
{
  if (!pf.bound) {
    parse_fail("bound", "missing field");
  }
  return *pf.bound;
}

FractalSpline build_model(const ProblemFile & pf)
{
  if (pf.mode == SplineMode::values_only) {
    return FractalSpline::build(pf.data, require_params(pf), require_alpha(pf),
                                SplineMode::values_only);
  }
  return FractalSpline::build(with_estimated_derivatives(pf.data), require_params(pf),
                              require_alpha(pf));
}
}  // namespace rcfif::io
