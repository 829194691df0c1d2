// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Elements of the order polytope L_n: non-decreasing n-tuples in [0,1]^n.
// L_n is the simplex conv{v_0, ..., v_n} where v_k has ones in its last k
// coordinates. Every granule type in the library converts into this form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polygran/error.hpp"

namespace polygran {

namespace detail {
// Passkey for constructing values whose invariants already hold by
// construction (coordinate deletion, duplication, min/max, ...).
struct TrustedTag {
  explicit TrustedTag() = default;
};
inline constexpr TrustedTag trusted{};
}  // namespace detail

/// A validated point of L_n, n >= 1.
class Simplex {
 public:
  /// Validates `coords` against [0,1] and monotonicity within `tol.eps`.
  /// In-range values are kept verbatim; monotonicity violations inside the
  /// tolerance are lifted to the running maximum so the stored sequence is
  /// always non-decreasing.
  explicit Simplex(std::vector<double> coords, Tolerance tol = {});

  Simplex(detail::TrustedTag, std::vector<double> coords) noexcept
      : coords_(std::move(coords)) {}

  static Simplex top(std::size_t n);
  static Simplex bottom(std::size_t n);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& values() const noexcept { return coords_; }

  /// 0-based coordinate access, unchecked.
  double operator[](std::size_t i) const noexcept { return coords_[i]; }

  /// 1-based projection pi_i; throws IndexOutOfRange.
  double projection(std::size_t i) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<double> coords_;
};

/// A point of the probability simplex Delta_m, m >= 2.
class WeightVector {
 public:
  /// Accepts weights >= -eps summing to 1 within eps; negative entries
  /// inside the tolerance are stored as 0.
  explicit WeightVector(std::vector<double> weights, Tolerance tol = {});

  WeightVector(detail::TrustedTag, std::vector<double> weights) noexcept
      : weights_(std::move(weights)) {}

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  const std::vector<double>& values() const noexcept { return weights_; }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

/// Strict n-dimensional interval: strictly increasing, contained in [0,1).
bool is_strict(const Simplex& s) noexcept;

/// Strictly increasing coordinates, endpoints unrestricted.
bool is_strictly_increasing(const Simplex& s) noexcept;

/// Relative interior of L_n: 0 < x_1 < ... < x_n < 1. Exactly the points
/// whose barycentric coordinates are all positive.
bool is_interior(const Simplex& s) noexcept;

/// Componentwise order, exact. Throws DimensionMismatch.
bool leq(const Simplex& a, const Simplex& b);

Simplex meet(const Simplex& a, const Simplex& b);
Simplex join(const Simplex& a, const Simplex& b);

/// v_0 = (0,...,0), v_1 = (0,...,0,1), ..., v_n = (1,...,1).
std::vector<Simplex> vertices(std::size_t n);

/// phi: L_n -> Delta_{n+1}, w_i = x_i - x_{i-1} with x_0 = 0, x_{n+1} = 1.
WeightVector to_weights(const Simplex& s);

/// Inverse of phi: partial sums of the first m-1 weights.
Simplex from_weights(const WeightVector& w);

/// Barycentric coordinates w.r.t. vertices(n); lambda_k = w_{n-k}.
std::vector<double> barycentric(const Simplex& s);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Lebesgue volume of L_n, 1/n!. Throws Overflow for n > 20.
Rational exact_volume(std::size_t n);

}  // namespace polygran
