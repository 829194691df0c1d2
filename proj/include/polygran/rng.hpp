// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polygran/simplex.hpp"

namespace polygran {

/// Engine for one work chunk. Seeded from (seed, chunk) through seed_seq so
/// the stream depends only on those two values, never on the thread count.
inline std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform double in [0,1) from the top 53 bits.
inline double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform point of L_n (sorted uniforms).
Simplex random_simplex(std::mt19937_64& gen, std::size_t n);

}  // namespace polygran
