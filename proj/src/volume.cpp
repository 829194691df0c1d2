// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/volume.hpp"

#include <algorithm>
#include <cmath>

#include "polygran/error.hpp"
#include "polygran/rng.hpp"

namespace polygran {

Simplex random_simplex(std::mt19937_64& gen, std::size_t n) {
  std::vector<double> x(n);
  for (double& v : x) v = unit_double(gen);
  std::sort(x.begin(), x.end());
  return Simplex(detail::trusted, std::move(x));
}

namespace detail {

std::uint64_t count_monotone_chunk(std::size_t n, std::uint64_t seed, std::uint64_t chunk,
                                   std::uint64_t count) {
  auto gen = chunk_engine(seed, chunk);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    // Every point consumes exactly n draws so the stream layout is fixed.
    double prev = unit_double(gen);
    bool monotone = true;
    for (std::size_t k = 1; k < n; ++k) {
      const double x = unit_double(gen);
      monotone = monotone && prev <= x;
      prev = x;
    }
    hits += monotone ? 1 : 0;
  }
  return hits;
}

}  // namespace detail

namespace {

void check_args(std::size_t n, std::uint64_t samples) {
  if (n == 0) throw Error(ErrorKind::DimensionTooSmall, "volume: dimension must be >= 1");
  if (samples == 0) throw Error(ErrorKind::Empty, "volume: samples must be >= 1");
}

VolumeEstimate finish(std::uint64_t hits, std::uint64_t samples) {
  VolumeEstimate r;
  r.hits = hits;
  r.samples = samples;
  r.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
  return r;
}

std::uint64_t chunk_size(std::uint64_t chunk, std::uint64_t samples) {
  return std::min(kVolumeChunk, samples - chunk * kVolumeChunk);
}

}  // namespace

VolumeEstimate estimate_volume(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  check_args(n, samples);
  const auto chunks = static_cast<std::int64_t>((samples + kVolumeChunk - 1) / kVolumeChunk);
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hits)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto chunk = static_cast<std::uint64_t>(c);
    hits += detail::count_monotone_chunk(n, seed, chunk, chunk_size(chunk, samples));
  }
  return finish(hits, samples);
}

namespace serial {

VolumeEstimate estimate_volume(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  check_args(n, samples);
  const std::uint64_t chunks = (samples + kVolumeChunk - 1) / kVolumeChunk;
  std::uint64_t hits = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    hits += detail::count_monotone_chunk(n, seed, c, chunk_size(c, samples));
  }
  return finish(hits, samples);
}

}  // namespace serial

}  // namespace polygran
