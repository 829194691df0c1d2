// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Random valid values for property tests. Generators that feed partial
// decoders keep certainty degrees and gaps away from zero (>= 0.01) so the
// decode residual stays far below the 1e-9 tolerance.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polygran/granularity.hpp"
#include "polygran/granules.hpp"
#include "polygran/simplex.hpp"

namespace gen {

using Rng = std::mt19937_64;
using namespace polygran;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return uniform(rng) < p; }

/// n sorted values in [0,1]. With small probability a value is snapped to
/// its predecessor, 0 or 1 so ties and boundary points get exercised.
inline std::vector<double> sorted(Rng& rng, std::size_t n, bool edgy = true) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = uniform(rng);
    if (edgy && coin(rng, 0.05)) x = coin(rng, 0.5) ? 0.0 : 1.0;
  }
  std::sort(v.begin(), v.end());
  if (edgy) {
    for (std::size_t k = 1; k < n; ++k) {
      if (coin(rng, 0.05)) v[k] = v[k - 1];
    }
  }
  return v;
}

/// n sorted values in [0,1] with consecutive gaps of at least gap.
inline std::vector<double> gapped(Rng& rng, std::size_t n, double gap = 0.01) {
  const double room = 1.0 - gap * static_cast<double>(n - 1);
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, 0.0, room);
  std::sort(v.begin(), v.end());
  for (std::size_t k = 0; k < n; ++k) v[k] += gap * static_cast<double>(k);
  return v;
}

inline Simplex simplex(Rng& rng, std::size_t n, bool edgy = true) { return Simplex(sorted(rng, n, edgy)); }

/// Nonnegative entries with sum <= 1 (differences of sorted values).
inline std::vector<double> subprobability(Rng& rng, std::size_t n) {
  const auto s = sorted(rng, n);
  std::vector<double> p(n);
  double prev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    p[k] = s[k] - prev;
    prev = s[k];
  }
  return p;
}

inline WeightVector weights(Rng& rng, std::size_t m) {
  auto p = subprobability(rng, m - 1);
  double rest = 1.0;
  for (double x : p) rest -= x;
  p.push_back(std::max(rest, 0.0));
  return WeightVector(std::move(p));
}

template <class G>
G granule(Rng& rng);

template <>
inline IntervalGranule granule<IntervalGranule>(Rng& rng) {
  const auto s = sorted(rng, 2);
  return {s[0], s[1]};
}
template <>
inline GreyGranule granule<GreyGranule>(Rng& rng) {
  const auto s = sorted(rng, 2);
  return {s[0], s[1]};
}
template <>
inline VagueGranule granule<VagueGranule>(Rng& rng) {
  const auto s = sorted(rng, 2);
  return {s[0], s[1]};
}
template <>
inline RoughPair granule<RoughPair>(Rng& rng) {
  const auto s = sorted(rng, 2);
  return {s[0], s[1]};
}
template <>
inline AtanassovPair granule<AtanassovPair>(Rng& rng) {
  const auto s = sorted(rng, 2);
  return {s[0], 1.0 - s[1]};
}
template <>
inline BuiGranule granule<BuiGranule>(Rng& rng) {
  return {uniform(rng), uniform(rng, 0.01, 1.0)};
}
template <>
inline CiiGranule granule<CiiGranule>(Rng& rng) {
  const auto s = sorted(rng, 3);
  return {s[1], s[0], s[2]};
}
template <>
inline AinGranule granule<AinGranule>(Rng& rng) {
  const auto s = sorted(rng, 3);
  return {s[1], s[0], s[2]};
}
template <>
inline PictureTriple granule<PictureTriple>(Rng& rng) {
  const auto p = subprobability(rng, 3);
  return {p[0], p[1], p[2]};
}
template <>
inline IvifsPair granule<IvifsPair>(Rng& rng) {
  const auto s = sorted(rng, 4);
  return {s[0], s[1], 1.0 - s[3], 1.0 - s[2]};
}
template <>
inline ShadowedPair granule<ShadowedPair>(Rng& rng) {
  const auto s = sorted(rng, 4);
  return {s[1], s[2], s[0], s[3]};
}
template <>
inline IciiGranule granule<IciiGranule>(Rng& rng) {
  const auto s = sorted(rng, 4);
  return {s[1], s[2], s[0], s[3]};
}
template <>
inline RbuiGranule granule<RbuiGranule>(Rng& rng) {
  const auto a = gapped(rng, 2);
  return {uniform(rng, a[0], a[1]), a[0], a[1], uniform(rng, 0.01, 1.0)};
}
template <>
inline ItbuiGranule granule<ItbuiGranule>(Rng& rng) {
  const double lo = uniform(rng, 0.01, 1.0);
  return {uniform(rng), lo, uniform(rng, lo, 1.0)};
}
template <>
inline BtbuiGranule granule<BtbuiGranule>(Rng& rng) {
  // inner dilation [c x, c x + 1 - c] must have a positive lower end
  return {uniform(rng), {uniform(rng, 0.01, 1.0), uniform(rng, 0.01, 1.0)}};
}
template <>
inline CuiGranule granule<CuiGranule>(Rng& rng) {
  const auto s = sorted(rng, 5);
  return {s[2], s[1], s[3], s[0], s[4]};
}
template <>
inline IcuiGranule granule<IcuiGranule>(Rng& rng) {
  const auto s = sorted(rng, 6);
  return {s[2], s[3], s[1], s[4], s[0], s[5]};
}
template <>
inline HmcuiGranule granule<HmcuiGranule>(Rng& rng) {
  const std::size_t k = pick(rng, 1, 6);
  const auto s = gapped(rng, k + 2);
  return {std::vector<double>(s.begin() + 1, s.end() - 1), s.front(), s.back()};
}
template <>
inline HcuiGranule granule<HcuiGranule>(Rng& rng) {
  const std::size_t k = pick(rng, 1, 6);
  const auto s = gapped(rng, k + 4);
  return {std::vector<double>(s.begin() + 2, s.end() - 2), s[1], s[k + 2], s[0], s[k + 3]};
}
template <>
inline AnPoint granule<AnPoint>(Rng& rng) {
  return {subprobability(rng, pick(rng, 1, 8))};
}
template <>
inline Plts granule<Plts>(Rng& rng) {
  const std::size_t n = pick(rng, 2, 8);
  return {LinguisticScale::generic(n), subprobability(rng, n)};
}
template <>
inline NIcuiGranule granule<NIcuiGranule>(Rng& rng) {
  const std::size_t n = pick(rng, 1, 5);
  const auto s = sorted(rng, 2 * n);
  NIcuiGranule g;
  for (std::size_t k = 0; k < n; ++k) g.intervals.push_back({s[k], s[2 * n - 1 - k]});
  return g;
}

/// Nested intervals with strictly increasing alphas in (0,1].
inline LevelledGranule levelled(Rng& rng, std::size_t n) {
  const auto s = sorted(rng, 2 * n);
  LevelledGranule g;
  for (std::size_t k = 0; k < n; ++k) g.granule.intervals.push_back({s[k], s[2 * n - 1 - k]});
  const auto a = gapped(rng, n, 1e-3);
  for (double x : a) g.alphas.push_back(std::max(x, 1e-3));
  if (coin(rng, 0.3)) g.alphas.back() = 1.0;
  std::sort(g.alphas.begin(), g.alphas.end());
  g.alphas.erase(std::unique(g.alphas.begin(), g.alphas.end()), g.alphas.end());
  if (g.alphas.size() < n) return levelled(rng, n);
  return g;
}

}  // namespace gen
