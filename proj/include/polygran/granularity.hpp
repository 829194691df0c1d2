// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Moving granules between dimensions with face and degeneracy maps.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "polygran/granules.hpp"
#include "polygran/simplicial.hpp"

namespace polygran {

/// An n-ICUI granule read as a step fuzzy number: interval i is the
/// alpha_i-cut, with 0 < alpha_1 < ... < alpha_n <= 1.
struct LevelledGranule {
  static constexpr std::string_view kind = "levelled";
  NIcuiGranule granule;
  std::vector<double> alphas;
  friend bool operator==(const LevelledGranule&, const LevelledGranule&) = default;
};

void validate(const LevelledGranule& g, Tolerance tol = {});
Simplex to_simplex(const LevelledGranule& g, Tolerance tol = {});

/// simplex_to_bui(face(cii_to_simplex(g), i)) in closed form:
///   i = 0: (x/(x+1-a_hi), x+1-a_hi)
///   i = 1: (a_lo/(a_lo+1-a_hi), a_lo+1-a_hi)
///   i = 2: (a_lo/(a_lo+1-x), a_lo+1-x)
/// Throws TotalIgnorance when the face lands on (0, 1).
BuiGranule induced_face_cii_to_bui(const CiiGranule& g, std::size_t i, Tolerance tol = {});

/// simplex_to_cii(degeneracy(bui_to_simplex(g), j)) in closed form:
///   j = 0: (c x, [c x, c x + 1 - c])
///   j = 1: (c x + 1 - c, [c x, c x + 1 - c])
CiiGranule induced_degeneracy_bui_to_cii(const BuiGranule& g, std::size_t j, Tolerance tol = {});

/// (a, b, c) -> (a, b, b, c).
Simplex triangular_to_trapezoidal(const Simplex& s);

/// psi^{-1} o word o psi. The word must be made of degeneracies only and
/// take the source scale size to the target scale size; inserted labels
/// receive probability exactly 0.
Plts embed_plts(const Plts& p, const LinguisticScale& target, const MapWord& word, Tolerance tol = {});

/// max{alpha_i : t in interval_i}, 0 outside the outermost interval.
double step_membership(const LevelledGranule& g, double t);

/// interval_i for the smallest alpha_i >= alpha; nullopt when alpha > alpha_n.
std::optional<IntervalGranule> alpha_cut(const LevelledGranule& g, double alpha);

/// Removes level `drop` (1-based). On the simplex side this is the word
/// returned by coarsening_word.
LevelledGranule coarsen_levels(const LevelledGranule& g, std::size_t drop);

/// The two faces deleting both endpoints of level `drop` in L_{2n}.
MapWord coarsening_word(std::size_t levels, std::size_t drop);

enum class Ordering { Leq, Geq, Equal, Incomparable };

std::string_view to_string(Ordering o) noexcept;

/// Four-valued comparison under the componentwise order.
Ordering compare(const Simplex& a, const Simplex& b);

/// Encodes both granules, applies their words and compares the images.
/// Throws DimensionMismatch if the images live in different L_n.
Ordering lift_and_compare(const Granule& a, const Granule& b, const MapWord& word_a, const MapWord& word_b,
                          Tolerance tol = {});

}  // namespace polygran
