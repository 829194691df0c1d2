// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <bit>
#include <cstdint>

#include "polygran/rng.hpp"
#include "polygran/simplicial.hpp"

namespace polygran {

std::string_view family_name(IdentityFamily f) noexcept {
  switch (f) {
    case IdentityFamily::FaceFace: return "face-face";
    case IdentityFamily::DegenDegen: return "degen-degen";
    case IdentityFamily::FaceDegenBelow: return "face-degen-below";
    case IdentityFamily::FaceDegenCancel: return "face-degen-cancel";
    case IdentityFamily::FaceDegenAbove: return "face-degen-above";
  }
  return "?";
}

std::string_view family_formula(IdentityFamily f) noexcept {
  switch (f) {
    case IdentityFamily::FaceFace: return "d_i d_j = d_{j-1} d_i (i<j)";
    case IdentityFamily::DegenDegen: return "s_i s_j = s_j s_{i-1} (i>j)";
    case IdentityFamily::FaceDegenBelow: return "d_i s_j = s_{j-1} d_i (i<j)";
    case IdentityFamily::FaceDegenCancel: return "d_i s_j = id (i=j,j+1)";
    case IdentityFamily::FaceDegenAbove: return "d_i s_j = s_j d_{i-1} (i>j+1)";
  }
  return "?";
}

bool IdentityReport::all_passed() const noexcept {
  return std::all_of(families.begin(), families.end(), [](const FamilyTally& t) { return t.failed == 0; });
}

namespace {

bool bitwise_equal(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (std::bit_cast<std::uint64_t>(a[k]) != std::bit_cast<std::uint64_t>(b[k])) return false;
  }
  return true;
}

void tally(IdentityReport& r, IdentityFamily f, const Simplex& lhs, const Simplex& rhs) {
  auto& t = r.families[static_cast<std::size_t>(f)];
  ++t.checked;
  if (!bitwise_equal(lhs, rhs)) ++t.failed;
}

void merge(IdentityReport& into, const IdentityReport& from) {
  for (std::size_t k = 0; k < kIdentityFamilies; ++k) {
    into.families[k].checked += from.families[k].checked;
    into.families[k].failed += from.families[k].failed;
  }
}

void check_argument(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DimensionTooSmall, "identities: dimension must be >= 1");
}

IdentityReport run_chunk(std::size_t n, std::uint64_t trials, std::uint64_t seed, std::uint64_t chunk) {
  IdentityReport local;
  auto gen = chunk_engine(seed, chunk);
  const std::uint64_t begin = chunk * kIdentityChunk;
  const std::uint64_t end = std::min(trials, begin + kIdentityChunk);
  for (std::uint64_t t = begin; t < end; ++t) check_identities_on(random_simplex(gen, n), local);
  return local;
}

}  // namespace

void check_identities_on(const Simplex& s, IdentityReport& report) {
  const std::size_t n = s.dim();

  if (n >= 3) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        tally(report, IdentityFamily::FaceFace, face(face(s, j), i), face(face(s, i), j - 1));
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i <= n; ++i) {
      tally(report, IdentityFamily::DegenDegen, degeneracy(degeneracy(s, j), i),
            degeneracy(degeneracy(s, i - 1), j));
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const Simplex lifted = degeneracy(s, j);
    for (std::size_t i = 0; i <= n; ++i) {
      const Simplex lhs = face(lifted, i);
      if (i < j) {
        tally(report, IdentityFamily::FaceDegenBelow, lhs, degeneracy(face(s, i), j - 1));
      } else if (i == j || i == j + 1) {
        tally(report, IdentityFamily::FaceDegenCancel, lhs, s);
      } else {
        tally(report, IdentityFamily::FaceDegenAbove, lhs, degeneracy(face(s, i - 1), j));
      }
    }
  }
}

IdentityReport verify_identities(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
  check_argument(n);
  IdentityReport report;
  report.dim = n;
  report.trials = trials;
  const auto chunks = static_cast<std::int64_t>((trials + kIdentityChunk - 1) / kIdentityChunk);
#pragma omp parallel
  {
    IdentityReport mine;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t c = 0; c < chunks; ++c) merge(mine, run_chunk(n, trials, seed, static_cast<std::uint64_t>(c)));
#pragma omp critical(polygran_identity_merge)
    merge(report, mine);
  }
  return report;
}

namespace serial {

IdentityReport verify_identities(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
  check_argument(n);
  IdentityReport report;
  report.dim = n;
  report.trials = trials;
  const std::uint64_t chunks = (trials + kIdentityChunk - 1) / kIdentityChunk;
  for (std::uint64_t c = 0; c < chunks; ++c) merge(report, run_chunk(n, trials, seed, c));
  return report;
}

}  // namespace serial

}  // namespace polygran
