// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/svg_plot.hpp"

#include <cstdio>

namespace polygran {

namespace {

// Unit square [-0.5, 1] x [-0.3, 1] of the projection plane, y flipped.
constexpr double kScale = 600.0;
constexpr double kOriginX = 350.0;
constexpr double kOriginY = 800.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string to_canvas(const std::array<double, 2>& uv) {
  return fmt(kOriginX + kScale * uv[0]) + " " + fmt(kOriginY - kScale * uv[1]);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string line(const Simplex& a, const Simplex& b, bool dashed) {
  const auto pa = to_canvas(project(a));
  const auto pb = to_canvas(project(b));
  std::string out = "  <path class=\"edge\" d=\"M " + pa + " L " + pb + "\"";
  if (dashed) out += " stroke-dasharray=\"12 8\"";
  return out + "/>\n";
}

}  // namespace

std::array<double, 2> project(const Simplex& x) {
  if (x.dim() == 2) return {x[0], x[1]};
  if (x.dim() == 3) return {-0.5 * x[0] + x[1], -0.3 * x[0] + x[2]};
  throw Error(ErrorKind::OutOfRange, "plots cover L_2 and L_3 only, got L_" + std::to_string(x.dim()));
}

std::string render_svg(std::size_t dim, const std::vector<PlotPoint>& points) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorKind::OutOfRange, "plots cover L_2 and L_3 only, got L_" + std::to_string(dim));
  }
  for (const auto& p : points) {
    if (p.point.dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "point '" + p.label + "' lives in L_" +
                                                    std::to_string(p.point.dim()) + ", plot is L_" +
                                                    std::to_string(dim));
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out += "  <style>.edge{fill:none;stroke:#222;stroke-width:3}.vertex{font:24px sans-serif;fill:#555}"
         ".marker{fill:#c0392b}.label{font:22px sans-serif;fill:#111}</style>\n";
  out += "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  const auto v = vertices(dim);
  if (dim == 2) {
    out += "  <path class=\"edge outline\" d=\"M " + to_canvas(project(v[0])) + " L " + to_canvas(project(v[1])) +
           " L " + to_canvas(project(v[2])) + " Z\"/>\n";
  } else {
    // v3 sits in front of the face v0 v1 v2, so the two edges behind it are dashed.
    out += line(v[3], v[0], true);
    out += line(v[0], v[2], true);
    out += line(v[0], v[1], false);
    out += line(v[1], v[2], false);
    out += line(v[2], v[3], false);
    out += line(v[1], v[3], false);
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto uv = project(v[k]);
    out += "  <text class=\"vertex\" x=\"" + fmt(kOriginX + kScale * uv[0] + 10.0) + "\" y=\"" +
           fmt(kOriginY - kScale * uv[1] - 10.0) + "\">v" + std::to_string(k) + "</text>\n";
  }

  for (const auto& p : points) {
    const auto uv = project(p.point);
    const double cx = kOriginX + kScale * uv[0];
    const double cy = kOriginY - kScale * uv[1];
    out += "  <circle class=\"marker\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"8\"/>\n";
    out += "  <text class=\"label\" x=\"" + fmt(cx + 12.0) + "\" y=\"" + fmt(cy + 24.0) + "\">" + escape(p.label) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polygran
