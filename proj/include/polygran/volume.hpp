// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Monte-Carlo estimate of vol(L_n) = 1/n!.
//
// Samples are split into fixed chunks of kVolumeChunk points; chunk c draws
// from chunk_engine(seed, c). Hit counts are integers, so the OpenMP kernel
// and the serial reference return bit-identical results.

#pragma once

#include <cstddef>
#include <cstdint>

namespace polygran {

inline constexpr std::uint64_t kVolumeChunk = 65536;

struct VolumeEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/samples)
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Parallel (OpenMP) estimate. Throws DimensionTooSmall for n == 0 and
/// Empty for samples == 0.
VolumeEstimate estimate_volume(std::size_t n, std::uint64_t samples, std::uint64_t seed);

namespace serial {
/// Single-threaded reference with the same chunk contract.
VolumeEstimate estimate_volume(std::size_t n, std::uint64_t samples, std::uint64_t seed);
}  // namespace serial

namespace detail {
/// Monotone points among `count` uniform draws of chunk `chunk`.
std::uint64_t count_monotone_chunk(std::size_t n, std::uint64_t seed, std::uint64_t chunk,
                                   std::uint64_t count);
}  // namespace detail

}  // namespace polygran
