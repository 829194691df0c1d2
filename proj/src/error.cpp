// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/error.hpp"

namespace polygran {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SumExceeded: return "SumExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::TotalIgnorance: return "TotalIgnorance";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::ScaleMismatch: return "ScaleMismatch";
    case ErrorKind::InvalidScale: return "InvalidScale";
    case ErrorKind::UnknownKind: return "UnknownKind";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace polygran
