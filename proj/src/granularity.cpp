// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/granularity.hpp"

#include <string>

namespace polygran {

void validate(const LevelledGranule& g, Tolerance tol) {
  validate(g.granule, tol);
  if (g.alphas.size() != g.granule.intervals.size()) {
    throw Error(ErrorKind::DimensionMismatch, "levelled: " + std::to_string(g.alphas.size()) + " alphas for " +
                                                  std::to_string(g.granule.intervals.size()) + " intervals");
  }
  for (std::size_t i = 0; i < g.alphas.size(); ++i) {
    const double a = g.alphas[i];
    if (!(a > 0.0 && a <= 1.0 + tol.eps)) {
      throw Error(ErrorKind::OutOfRange, "levelled: alpha " + std::to_string(a) + " outside (0,1]");
    }
    if (i > 0 && !(g.alphas[i - 1] < a)) throw Error(ErrorKind::NotMonotone, "levelled: alphas must strictly increase");
  }
}

Simplex to_simplex(const LevelledGranule& g, Tolerance tol) {
  validate(g, tol);
  return to_simplex(g.granule, tol);
}

BuiGranule induced_face_cii_to_bui(const CiiGranule& g, std::size_t i, Tolerance tol) {
  validate(g, tol);
  double lo = 0.0;
  double hi = 0.0;
  switch (i) {
    case 0: lo = g.x; hi = g.a_hi; break;
    case 1: lo = g.a_lo; hi = g.a_hi; break;
    case 2: lo = g.a_lo; hi = g.x; break;
    default:
      throw Error(ErrorKind::IndexOutOfRange, "CII -> BUI face index " + std::to_string(i) + " (needs 0..2)");
  }
  if (lo <= tol.eps && hi >= 1.0 - tol.eps) {
    throw Error(ErrorKind::TotalIgnorance, "d_" + std::to_string(i) + " lands on (0, 1)");
  }
  const double c = 1.0 - (hi - lo);
  return {lo / c, c};
}

CiiGranule induced_degeneracy_bui_to_cii(const BuiGranule& g, std::size_t j, Tolerance tol) {
  validate(g, tol);
  const double lo = g.c * g.x;
  const double hi = lo + (1.0 - g.c);
  switch (j) {
    case 0: return {lo, lo, hi};
    case 1: return {hi, lo, hi};
    default:
      throw Error(ErrorKind::IndexOutOfRange, "BUI -> CII degeneracy index " + std::to_string(j) + " (needs 0..1)");
  }
}

Simplex triangular_to_trapezoidal(const Simplex& s) {
  if (s.dim() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "triangular numbers live in L_3, got L_" + std::to_string(s.dim()));
  }
  return degeneracy(s, 1);
}

Plts embed_plts(const Plts& p, const LinguisticScale& target, const MapWord& word, Tolerance tol) {
  if (!word.degeneracies_only()) {
    throw Error(ErrorKind::InvalidWord, "PLTS embedding takes degeneracies only, got '" + word.to_string() + "'");
  }
  if (word.input_dim() != p.scale.size() || word.output_dim() != target.size()) {
    throw Error(ErrorKind::DimensionMismatch, "word maps L_" + std::to_string(word.input_dim()) + " -> L_" +
                                                  std::to_string(word.output_dim()) + ", scales have " +
                                                  std::to_string(p.scale.size()) + " and " +
                                                  std::to_string(target.size()) + " labels");
  }
  validate(p, tol);
  // On weights, s_j inserts a zero at position j+1 and shifts the rest, so
  // psi^{-1} o word o psi needs no partial sums and is exact.
  std::vector<double> probs = p.probs;
  for (const MapOp& op : word.ops()) probs.insert(probs.begin() + static_cast<std::ptrdiff_t>(op.index) + 1, 0.0);
  Plts out{target, std::move(probs)};
  validate(out, tol);
  return out;
}

double step_membership(const LevelledGranule& g, double t) {
  const auto& iv = g.granule.intervals;
  for (std::size_t k = iv.size(); k-- > 0;) {
    if (iv[k].lo <= t && t <= iv[k].hi) return g.alphas[k];
  }
  return 0.0;
}

std::optional<IntervalGranule> alpha_cut(const LevelledGranule& g, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "alpha " + std::to_string(alpha) + " outside (0,1]");
  }
  for (std::size_t k = 0; k < g.alphas.size(); ++k) {
    if (g.alphas[k] >= alpha) return IntervalGranule{g.granule.intervals[k].lo, g.granule.intervals[k].hi};
  }
  return std::nullopt;
}

MapWord coarsening_word(std::size_t levels, std::size_t drop) {
  if (levels < 2) throw Error(ErrorKind::DimensionTooSmall, "cannot drop the only level");
  if (drop < 1 || drop > levels) {
    throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(drop) + " of " + std::to_string(levels));
  }
  // lo_k sits at coordinate k-1 and hi_k at 2n-k (0-based); delete the
  // higher one first so the lower index is unaffected.
  return MapWord(2 * levels, {MapOp::face(2 * levels - drop), MapOp::face(drop - 1)});
}

LevelledGranule coarsen_levels(const LevelledGranule& g, std::size_t drop) {
  const std::size_t n = g.alphas.size();
  (void)coarsening_word(n, drop);
  LevelledGranule out = g;
  out.granule.intervals.erase(out.granule.intervals.begin() + static_cast<std::ptrdiff_t>(drop - 1));
  out.alphas.erase(out.alphas.begin() + static_cast<std::ptrdiff_t>(drop - 1));
  return out;
}

std::string_view to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Leq: return "leq";
    case Ordering::Geq: return "geq";
    case Ordering::Equal: return "equal";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

Ordering compare(const Simplex& a, const Simplex& b) {
  const bool le = leq(a, b);
  const bool ge = leq(b, a);
  if (le && ge) return Ordering::Equal;
  if (le) return Ordering::Leq;
  if (ge) return Ordering::Geq;
  return Ordering::Incomparable;
}

Ordering lift_and_compare(const Granule& a, const Granule& b, const MapWord& word_a, const MapWord& word_b,
                          Tolerance tol) {
  const Simplex ia = apply_word(encode(a, tol), word_a);
  const Simplex ib = apply_word(encode(b, tol), word_b);
  if (ia.dim() != ib.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "lifted images live in L_" + std::to_string(ia.dim()) + " and L_" +
                                                  std::to_string(ib.dim()));
  }
  return compare(ia, ib);
}

}  // namespace polygran
