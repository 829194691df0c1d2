// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Face and degeneracy maps on L_n.
//
// Indices are 0-based and follow the operator subscripts: on an n-simplex
// d_i (0 <= i <= n-1) deletes coordinate x_{i+1} and s_j (0 <= j <= n-1)
// duplicates x_{j+1}. Coordinates in prose are 1-based.
//
// Map words are applied left to right: "s0 s2" applies s_0 first, which is
// the composite written s_2 o s_0 in the usual right-to-left notation.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polygran/simplex.hpp"

namespace polygran {

/// d_i : L_n -> L_{n-1}. Throws DimensionTooSmall for n == 1 and
/// IndexOutOfRange for i >= n.
Simplex face(const Simplex& s, std::size_t i);

/// s_j : L_n -> L_{n+1}. Throws IndexOutOfRange for j >= n.
Simplex degeneracy(const Simplex& s, std::size_t j);

struct MapOp {
  enum class Kind : char { Face = 'd', Degeneracy = 's' };
  Kind kind;
  std::size_t index;

  static constexpr MapOp face(std::size_t i) { return {Kind::Face, i}; }
  static constexpr MapOp degeneracy(std::size_t j) { return {Kind::Degeneracy, j}; }
  bool is_face() const noexcept { return kind == Kind::Face; }

  friend bool operator==(const MapOp&, const MapOp&) = default;
};

/// Dimension-tracked sequence of face/degeneracy operators.
class MapWord {
 public:
  /// Throws InvalidWord if some operator is out of range for the dimension
  /// it receives, or a face would act on L_1.
  explicit MapWord(std::size_t input_dim, std::vector<MapOp> ops = {});

  /// Whitespace-separated tokens matching ^[ds][0-9]+$.
  static MapWord parse(std::string_view text, std::size_t input_dim);

  std::size_t input_dim() const noexcept { return input_dim_; }
  std::size_t output_dim() const noexcept { return output_dim_; }
  const std::vector<MapOp>& ops() const noexcept { return ops_; }
  bool empty() const noexcept { return ops_.empty(); }
  bool degeneracies_only() const noexcept;

  /// Inverse of parse; the empty word renders as "".
  std::string to_string() const;

  friend bool operator==(const MapWord&, const MapWord&) = default;

 private:
  std::size_t input_dim_;
  std::size_t output_dim_;
  std::vector<MapOp> ops_;
};

/// Throws DimensionMismatch if s.dim() != w.input_dim().
Simplex apply_word(const Simplex& s, const MapWord& w);

/// Rewrites with the simplicial identities until no rule applies. The normal
/// form applies faces first with decreasing indices, then degeneracies with
/// increasing indices. Semantics-preserving and idempotent.
MapWord canonicalize_word(const MapWord& w);

// --- identity verification ---

enum class IdentityFamily : std::size_t {
  FaceFace = 0,      // d_i d_j = d_{j-1} d_i, i < j
  DegenDegen,        // s_i s_j = s_j s_{i-1}, i > j
  FaceDegenBelow,    // d_i s_j = s_{j-1} d_i, i < j
  FaceDegenCancel,   // d_i s_j = id, i = j, j+1
  FaceDegenAbove,    // d_i s_j = s_j d_{i-1}, i > j+1
};
inline constexpr std::size_t kIdentityFamilies = 5;

std::string_view family_name(IdentityFamily f) noexcept;
std::string_view family_formula(IdentityFamily f) noexcept;

struct FamilyTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  friend bool operator==(const FamilyTally&, const FamilyTally&) = default;
};

struct IdentityReport {
  std::size_t dim = 0;
  std::uint64_t trials = 0;
  std::array<FamilyTally, kIdentityFamilies> families{};

  const FamilyTally& operator[](IdentityFamily f) const noexcept {
    return families[static_cast<std::size_t>(f)];
  }
  bool all_passed() const noexcept;
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline constexpr std::uint64_t kIdentityChunk = 256;

/// Checks every applicable instance of the five families on `trials` random
/// n-simplices with bitwise coordinate equality. Families that need more
/// room than L_n offers (d o d on n < 3) report zero checks. OpenMP kernel.
IdentityReport verify_identities(std::size_t n, std::uint64_t trials, std::uint64_t seed);

/// Checks all identity instances on one simplex, accumulating into `report`.
void check_identities_on(const Simplex& s, IdentityReport& report);

namespace serial {
IdentityReport verify_identities(std::size_t n, std::uint64_t trials, std::uint64_t seed);
}  // namespace serial

}  // namespace polygran
