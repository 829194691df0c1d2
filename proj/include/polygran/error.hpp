// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polygran {

/// Named failure categories. The CLI prints the name verbatim, so the
/// spelling of each enumerator is part of the external contract.
enum class ErrorKind {
  Empty,
  NotMonotone,
  OutOfRange,
  SumExceeded,
  DimensionMismatch,
  IndexOutOfRange,
  DimensionTooSmall,
  TotalIgnorance,
  NotInImage,
  Overflow,
  InvalidWord,
  NoPath,
  ScaleMismatch,
  InvalidScale,
  UnknownKind,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error: an input violates an invariant or lies outside a map's image.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Ingestion tolerance. Applied once when values enter the library;
/// lattice comparisons on accepted values are exact.
struct Tolerance {
  double eps = 1e-9;
};

}  // namespace polygran
