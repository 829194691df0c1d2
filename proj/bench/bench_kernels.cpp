// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernel for the two sampling sweeps.
// Both paths return identical results; only wall time differs.

#include <benchmark/benchmark.h>

#include "polygran/simplicial.hpp"
#include "polygran/volume.hpp"

namespace {

void BM_VolumeSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polygran::serial::estimate_volume(n, 1 << 20, 42));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}

void BM_VolumeParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polygran::estimate_volume(n, 1 << 20, 42));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}

void BM_IdentitiesSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polygran::serial::verify_identities(n, 10000, 7));
  state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_IdentitiesParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polygran::verify_identities(n, 10000, 7));
  state.SetItemsProcessed(state.iterations() * 10000);
}

}  // namespace

BENCHMARK(BM_VolumeSerial)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VolumeParallel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitiesSerial)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitiesParallel)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
