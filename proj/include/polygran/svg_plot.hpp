// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "polygran/simplex.hpp"

namespace polygran {

struct PlotPoint {
  Simplex point;
  std::string label;
};

/// Plane coordinates of x in L_3 under the fixed oblique projection
///   (u, v) = x1 * (-0.5, -0.3) + x2 * (1, 0) + x3 * (0, 1).
/// Dimension 2 uses (u, v) = (x1, x2) directly.
std::array<double, 2> project(const Simplex& x);

/// Renders the outline of L_dim (triangle for 2, tetrahedron for 3) with
/// labelled markers, viewBox 0 0 1000 1000. Output depends only on the
/// arguments. Throws DimensionMismatch for mixed dimensions and
/// OutOfRange for dim outside {2, 3}.
std::string render_svg(std::size_t dim, const std::vector<PlotPoint>& points);

}  // namespace polygran
