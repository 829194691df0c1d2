// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polygran {

namespace {

void require_positive_dim(std::size_t n, const char* what) {
  if (n == 0) {
    throw Error(ErrorKind::DimensionTooSmall, std::string(what) + ": dimension must be >= 1");
  }
}

void require_same_dim(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

}  // namespace

Simplex::Simplex(std::vector<double> coords, Tolerance tol) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorKind::Empty, "simplex needs at least one coordinate");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double x = coords_[i];
    if (!(x >= -tol.eps && x <= 1.0 + tol.eps)) {
      throw Error(ErrorKind::OutOfRange,
                  "coordinate " + std::to_string(i + 1) + " = " + std::to_string(x) + " outside [0,1]");
    }
  }
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) {
    if (coords_[i] > coords_[i + 1] + tol.eps) {
      throw Error(ErrorKind::NotMonotone, "coordinate " + std::to_string(i + 1) + " exceeds coordinate " +
                                              std::to_string(i + 2));
    }
  }
  for (std::size_t i = 1; i < coords_.size(); ++i) coords_[i] = std::max(coords_[i], coords_[i - 1]);
}

Simplex Simplex::top(std::size_t n) {
  require_positive_dim(n, "top");
  return Simplex(detail::trusted, std::vector<double>(n, 1.0));
}

Simplex Simplex::bottom(std::size_t n) {
  require_positive_dim(n, "bottom");
  return Simplex(detail::trusted, std::vector<double>(n, 0.0));
}

double Simplex::projection(std::size_t i) const {
  if (i < 1 || i > coords_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "projection " + std::to_string(i) + " of a " + std::to_string(coords_.size()) + "-simplex");
  }
  return coords_[i - 1];
}

WeightVector::WeightVector(std::vector<double> weights, Tolerance tol) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::Empty, "weight vector is empty");
  if (weights_.size() < 2) throw Error(ErrorKind::DimensionTooSmall, "weight vector needs at least 2 entries");
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w >= -tol.eps) || !std::isfinite(w)) {
      throw Error(ErrorKind::OutOfRange, "weight " + std::to_string(i + 1) + " is negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol.eps) {
    throw Error(ErrorKind::SumExceeded, "weights sum to " + std::to_string(sum) + ", expected 1");
  }
  for (double& w : weights_) w = std::max(w, 0.0);
}

bool is_strictly_increasing(const Simplex& s) noexcept {
  for (std::size_t i = 0; i + 1 < s.dim(); ++i) {
    if (!(s[i] < s[i + 1])) return false;
  }
  return true;
}

bool is_strict(const Simplex& s) noexcept {
  return s[0] >= 0.0 && s[s.dim() - 1] < 1.0 && is_strictly_increasing(s);
}

bool is_interior(const Simplex& s) noexcept {
  return s[0] > 0.0 && s[s.dim() - 1] < 1.0 && is_strictly_increasing(s);
}

bool leq(const Simplex& a, const Simplex& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

Simplex meet(const Simplex& a, const Simplex& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
  return Simplex(detail::trusted, std::move(out));
}

Simplex join(const Simplex& a, const Simplex& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Simplex(detail::trusted, std::move(out));
}

std::vector<Simplex> vertices(std::size_t n) {
  require_positive_dim(n, "vertices");
  std::vector<Simplex> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<double> v(n, 0.0);
    std::fill(v.end() - static_cast<std::ptrdiff_t>(k), v.end(), 1.0);
    out.emplace_back(detail::trusted, std::move(v));
  }
  return out;
}

WeightVector to_weights(const Simplex& s) {
  const std::size_t n = s.dim();
  std::vector<double> w(n + 1);
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::max(s[i] - prev, 0.0);
    prev = s[i];
  }
  w[n] = std::max(1.0 - prev, 0.0);
  return WeightVector(detail::trusted, std::move(w));
}

Simplex from_weights(const WeightVector& w) {
  std::vector<double> x(w.size() - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += w[i];
    x[i] = acc;
  }
  return Simplex(detail::trusted, std::move(x));
}

std::vector<double> barycentric(const Simplex& s) {
  const WeightVector w = to_weights(s);
  return {w.values().rbegin(), w.values().rend()};
}

Rational exact_volume(std::size_t n) {
  require_positive_dim(n, "exact_volume");
  if (n > 20) throw Error(ErrorKind::Overflow, std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return {1, f};
}

}  // namespace polygran
