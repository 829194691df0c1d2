// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// JSON envelopes: one object per value, tagged by "kind".
//
//   {"kind":"simplex","coords":[...]}
//   {"kind":"weights","weights":[...]}
//   {"kind":"levelled","alphas":[...],"intervals":[[lo,hi],...]}
//   {"kind":"nicui","intervals":[[lo,hi],...]}
//   {"kind":"plts","scale":["s1",...],"probs":[...]}
//   {"kind":"btbui","y":..,"inner":{"x":..,"c":..}}
//   every other granule kind: its struct fields by name.
//
// Shape problems (bad JSON, missing or mistyped fields) raise SchemaError.
// Unknown kinds and invariant failures raise polygran::Error.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polygran/granularity.hpp"
#include "polygran/granules.hpp"
#include "polygran/simplex.hpp"

namespace polygran {

using json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Envelope = std::variant<Simplex, WeightVector, LevelledGranule, Granule>;

/// Every kind tag accepted by parse_envelope, in a fixed order.
const std::vector<std::string_view>& registered_kinds();

json parse_json(std::string_view text);
Envelope parse_envelope(const json& j, Tolerance tol = {});
Envelope parse_envelope_text(std::string_view text, Tolerance tol = {});

json to_json(const Envelope& e);
json to_json(const Simplex& s);
json to_json(const Granule& g);

/// Compact serialization; floating-point numbers carry 17 significant digits.
std::string dump(const json& j);
std::string format_number(double v);

std::string_view kind_of(const Envelope& e) noexcept;
Simplex encode(const Envelope& e, Tolerance tol = {});

/// Decodes a point of L_n as the given kind. "levelled" has no decoder
/// (its alphas are not stored in the simplex) and raises NoPath.
Envelope decode_as(std::string_view kind, const Simplex& s, Tolerance tol = {});

}  // namespace polygran
