// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/granules.hpp"

#include <cmath>
#include <set>
#include <string>

namespace polygran {

namespace {

std::string prefixed(std::string_view kind, const std::string& what) { return std::string(kind) + ": " + what; }

void check_unit(double v, std::string_view kind, const char* field, Tolerance tol) {
  if (!(v >= -tol.eps && v <= 1.0 + tol.eps)) {
    throw Error(ErrorKind::OutOfRange, prefixed(kind, std::string(field) + " = " + std::to_string(v) + " outside [0,1]"));
  }
}

void check_le(double a, double b, std::string_view kind, const char* relation, Tolerance tol) {
  if (!(a <= b + tol.eps)) throw Error(ErrorKind::NotMonotone, prefixed(kind, std::string("requires ") + relation));
}

void check_sum(double sum, std::string_view kind, const char* relation, Tolerance tol) {
  if (!(sum <= 1.0 + tol.eps)) {
    throw Error(ErrorKind::SumExceeded, prefixed(kind, std::string("requires ") + relation + ", got " + std::to_string(sum)));
  }
}

void require_dim(const Simplex& s, std::size_t n, std::string_view kind) {
  if (s.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                prefixed(kind, "decodes from L_" + std::to_string(n) + ", got L_" + std::to_string(s.dim())));
  }
}

template <class Tag>
void validate_interval(const BasicInterval<Tag>& g, Tolerance tol) {
  check_unit(g.lo, Tag::kind, "lo", tol);
  check_unit(g.hi, Tag::kind, "hi", tol);
  check_le(g.lo, g.hi, Tag::kind, "lo <= hi", tol);
}

template <class Tag>
Simplex interval_to_simplex(const BasicInterval<Tag>& g, Tolerance tol) {
  validate_interval(g, tol);
  return Simplex({g.lo, g.hi}, tol);
}

template <class Tag>
BasicInterval<Tag> interval_from_simplex(const Simplex& s) {
  require_dim(s, 2, Tag::kind);
  return {s[0], s[1]};
}

std::vector<double> cumulative(const std::vector<double>& ps) {
  std::vector<double> out(ps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    acc += ps[i];
    out[i] = acc;
  }
  return out;
}

std::vector<double> differences(const Simplex& s) {
  std::vector<double> out(s.dim());
  double prev = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    out[i] = s[i] - prev;
    prev = s[i];
  }
  return out;
}

void validate_probability_list(const std::vector<double>& ps, std::string_view kind, Tolerance tol) {
  if (ps.empty()) throw Error(ErrorKind::Empty, prefixed(kind, "needs at least one entry"));
  double sum = 0.0;
  for (double p : ps) {
    check_unit(p, kind, "entry", tol);
    sum += p;
  }
  check_sum(sum, kind, "sum <= 1", tol);
}

void validate_hesitant(const std::vector<double>& xs, std::string_view kind, Tolerance tol) {
  if (xs.empty()) throw Error(ErrorKind::Empty, prefixed(kind, "hesitant set is empty"));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    check_unit(xs[i], kind, "xs entry", tol);
    if (i > 0 && !(xs[i - 1] < xs[i])) throw Error(ErrorKind::NotMonotone, prefixed(kind, "xs must be strictly increasing"));
  }
}

std::vector<double> strict_interior(const Simplex& s, std::size_t skip, std::string_view kind) {
  std::vector<double> xs(s.values().begin() + static_cast<std::ptrdiff_t>(skip),
                         s.values().end() - static_cast<std::ptrdiff_t>(skip));
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) throw Error(ErrorKind::NotInImage, prefixed(kind, "interior coordinates tie"));
  }
  return xs;
}

bool is_total_ignorance(double lo, double hi, Tolerance tol) { return lo <= tol.eps && hi >= 1.0 - tol.eps; }

}  // namespace

// --- linguistic scale ---

LinguisticScale::LinguisticScale(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw Error(ErrorKind::InvalidScale, "a linguistic scale needs at least two labels");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(ErrorKind::InvalidScale, "duplicate label '" + l + "'");
  }
}

LinguisticScale LinguisticScale::generic(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
  return LinguisticScale(std::move(labels));
}

// --- validation ---

void validate(const IntervalGranule& g, Tolerance tol) { validate_interval(g, tol); }
void validate(const GreyGranule& g, Tolerance tol) { validate_interval(g, tol); }
void validate(const VagueGranule& g, Tolerance tol) { validate_interval(g, tol); }

void validate(const RoughPair& g, Tolerance tol) {
  check_unit(g.lower, RoughPair::kind, "lower", tol);
  check_unit(g.upper, RoughPair::kind, "upper", tol);
  check_le(g.lower, g.upper, RoughPair::kind, "lower <= upper", tol);
}

void validate(const AtanassovPair& g, Tolerance tol) {
  check_unit(g.mu, AtanassovPair::kind, "mu", tol);
  check_unit(g.nu, AtanassovPair::kind, "nu", tol);
  check_sum(g.mu + g.nu, AtanassovPair::kind, "mu + nu <= 1", tol);
}

void validate(const BuiGranule& g, Tolerance tol) {
  check_unit(g.x, BuiGranule::kind, "x", tol);
  check_unit(g.c, BuiGranule::kind, "c", tol);
}

void validate(const CiiGranule& g, Tolerance tol) {
  check_unit(g.x, CiiGranule::kind, "x", tol);
  check_unit(g.a_lo, CiiGranule::kind, "a_lo", tol);
  check_unit(g.a_hi, CiiGranule::kind, "a_hi", tol);
  check_le(g.a_lo, g.x, CiiGranule::kind, "a_lo <= x", tol);
  check_le(g.x, g.a_hi, CiiGranule::kind, "x <= a_hi", tol);
}

void validate(const AinGranule& g, Tolerance tol) {
  check_unit(g.expected, AinGranule::kind, "expected", tol);
  check_unit(g.lo, AinGranule::kind, "lo", tol);
  check_unit(g.hi, AinGranule::kind, "hi", tol);
  check_le(g.lo, g.expected, AinGranule::kind, "lo <= expected", tol);
  check_le(g.expected, g.hi, AinGranule::kind, "expected <= hi", tol);
}

void validate(const PictureTriple& g, Tolerance tol) {
  check_unit(g.a1, PictureTriple::kind, "a1", tol);
  check_unit(g.a2, PictureTriple::kind, "a2", tol);
  check_unit(g.a3, PictureTriple::kind, "a3", tol);
  check_sum(g.a1 + g.a2 + g.a3, PictureTriple::kind, "a1 + a2 + a3 <= 1", tol);
}

void validate(const IvifsPair& g, Tolerance tol) {
  check_unit(g.mu_lo, IvifsPair::kind, "mu_lo", tol);
  check_unit(g.mu_hi, IvifsPair::kind, "mu_hi", tol);
  check_unit(g.nu_lo, IvifsPair::kind, "nu_lo", tol);
  check_unit(g.nu_hi, IvifsPair::kind, "nu_hi", tol);
  check_le(g.mu_lo, g.mu_hi, IvifsPair::kind, "mu_lo <= mu_hi", tol);
  check_le(g.nu_lo, g.nu_hi, IvifsPair::kind, "nu_lo <= nu_hi", tol);
  check_sum(g.mu_hi + g.nu_hi, IvifsPair::kind, "mu_hi + nu_hi <= 1", tol);
}

void validate(const ShadowedPair& g, Tolerance tol) {
  check_unit(g.supp_lo, ShadowedPair::kind, "supp_lo", tol);
  check_unit(g.core_lo, ShadowedPair::kind, "core_lo", tol);
  check_unit(g.core_hi, ShadowedPair::kind, "core_hi", tol);
  check_unit(g.supp_hi, ShadowedPair::kind, "supp_hi", tol);
  check_le(g.supp_lo, g.core_lo, ShadowedPair::kind, "supp_lo <= core_lo", tol);
  check_le(g.core_lo, g.core_hi, ShadowedPair::kind, "core_lo <= core_hi", tol);
  check_le(g.core_hi, g.supp_hi, ShadowedPair::kind, "core_hi <= supp_hi", tol);
}

void validate(const IciiGranule& g, Tolerance tol) {
  check_unit(g.a_lo, IciiGranule::kind, "a_lo", tol);
  check_unit(g.x_lo, IciiGranule::kind, "x_lo", tol);
  check_unit(g.x_hi, IciiGranule::kind, "x_hi", tol);
  check_unit(g.a_hi, IciiGranule::kind, "a_hi", tol);
  check_le(g.a_lo, g.x_lo, IciiGranule::kind, "a_lo <= x_lo", tol);
  check_le(g.x_lo, g.x_hi, IciiGranule::kind, "x_lo <= x_hi", tol);
  check_le(g.x_hi, g.a_hi, IciiGranule::kind, "x_hi <= a_hi", tol);
}

void validate(const RbuiGranule& g, Tolerance tol) {
  check_unit(g.x, RbuiGranule::kind, "x", tol);
  check_unit(g.a_lo, RbuiGranule::kind, "a_lo", tol);
  check_unit(g.a_hi, RbuiGranule::kind, "a_hi", tol);
  check_unit(g.c, RbuiGranule::kind, "c", tol);
  check_le(g.a_lo, g.x, RbuiGranule::kind, "a_lo <= x", tol);
  check_le(g.x, g.a_hi, RbuiGranule::kind, "x <= a_hi", tol);
}

void validate(const ItbuiGranule& g, Tolerance tol) {
  check_unit(g.x, ItbuiGranule::kind, "x", tol);
  check_unit(g.c_lo, ItbuiGranule::kind, "c_lo", tol);
  check_unit(g.c_hi, ItbuiGranule::kind, "c_hi", tol);
  check_le(g.c_lo, g.c_hi, ItbuiGranule::kind, "c_lo <= c_hi", tol);
}

void validate(const BtbuiGranule& g, Tolerance tol) {
  check_unit(g.y, BtbuiGranule::kind, "y", tol);
  validate(g.inner, tol);
}

void validate(const CuiGranule& g, Tolerance tol) {
  const double chain[] = {g.u1, g.a1, g.x, g.a2, g.u2};
  const char* names[] = {"u1", "a1", "x", "a2", "u2"};
  for (std::size_t i = 0; i < 5; ++i) check_unit(chain[i], CuiGranule::kind, names[i], tol);
  for (std::size_t i = 0; i + 1 < 5; ++i) check_le(chain[i], chain[i + 1], CuiGranule::kind, "u1 <= a1 <= x <= a2 <= u2", tol);
}

void validate(const IcuiGranule& g, Tolerance tol) {
  const double chain[] = {g.u1, g.a1, g.x1, g.x2, g.a2, g.u2};
  const char* names[] = {"u1", "a1", "x1", "x2", "a2", "u2"};
  for (std::size_t i = 0; i < 6; ++i) check_unit(chain[i], IcuiGranule::kind, names[i], tol);
  for (std::size_t i = 0; i + 1 < 6; ++i) {
    check_le(chain[i], chain[i + 1], IcuiGranule::kind, "u1 <= a1 <= x1 <= x2 <= a2 <= u2", tol);
  }
}

void validate(const HmcuiGranule& g, Tolerance tol) {
  validate_hesitant(g.xs, HmcuiGranule::kind, tol);
  check_unit(g.a_lo, HmcuiGranule::kind, "a_lo", tol);
  check_unit(g.a_hi, HmcuiGranule::kind, "a_hi", tol);
  check_le(g.a_lo, g.xs.front(), HmcuiGranule::kind, "a_lo <= xs[1]", tol);
  check_le(g.xs.back(), g.a_hi, HmcuiGranule::kind, "xs[k] <= a_hi", tol);
}

void validate(const HcuiGranule& g, Tolerance tol) {
  validate_hesitant(g.xs, HcuiGranule::kind, tol);
  check_unit(g.a_lo, HcuiGranule::kind, "a_lo", tol);
  check_unit(g.a_hi, HcuiGranule::kind, "a_hi", tol);
  check_unit(g.u_lo, HcuiGranule::kind, "u_lo", tol);
  check_unit(g.u_hi, HcuiGranule::kind, "u_hi", tol);
  check_le(g.u_lo, g.a_lo, HcuiGranule::kind, "u_lo <= a_lo", tol);
  check_le(g.a_lo, g.xs.front(), HcuiGranule::kind, "a_lo <= xs[1]", tol);
  check_le(g.xs.back(), g.a_hi, HcuiGranule::kind, "xs[k] <= a_hi", tol);
  check_le(g.a_hi, g.u_hi, HcuiGranule::kind, "a_hi <= u_hi", tol);
}

void validate(const AnPoint& g, Tolerance tol) { validate_probability_list(g.ps, AnPoint::kind, tol); }

void validate(const Plts& g, Tolerance tol) {
  if (g.probs.size() != g.scale.size()) {
    throw Error(ErrorKind::ScaleMismatch, "plts: " + std::to_string(g.probs.size()) + " probabilities for a scale of " +
                                              std::to_string(g.scale.size()) + " labels");
  }
  validate_probability_list(g.probs, Plts::kind, tol);
}

void validate(const NIcuiGranule& g, Tolerance tol) {
  if (g.intervals.empty()) throw Error(ErrorKind::Empty, "nicui: needs at least one interval");
  for (std::size_t i = 0; i < g.intervals.size(); ++i) {
    const auto& iv = g.intervals[i];
    check_unit(iv.lo, NIcuiGranule::kind, "lo", tol);
    check_unit(iv.hi, NIcuiGranule::kind, "hi", tol);
    check_le(iv.lo, iv.hi, NIcuiGranule::kind, "lo <= hi", tol);
    if (i > 0) {
      check_le(g.intervals[i - 1].lo, iv.lo, NIcuiGranule::kind, "intervals nested inward (lo non-decreasing)", tol);
      check_le(iv.hi, g.intervals[i - 1].hi, NIcuiGranule::kind, "intervals nested inward (hi non-increasing)", tol);
    }
  }
}

// --- encode ---

Simplex to_simplex(const IntervalGranule& g, Tolerance tol) { return interval_to_simplex(g, tol); }
Simplex to_simplex(const GreyGranule& g, Tolerance tol) { return interval_to_simplex(g, tol); }
Simplex to_simplex(const VagueGranule& g, Tolerance tol) { return interval_to_simplex(g, tol); }

Simplex to_simplex(const RoughPair& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.lower, g.upper}, tol);
}

Simplex to_simplex(const AtanassovPair& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.mu, 1.0 - g.nu}, tol);
}

Simplex to_simplex(const BuiGranule& g, Tolerance tol) {
  validate(g, tol);
  const double lo = g.c * g.x;
  return Simplex({lo, lo + (1.0 - g.c)}, tol);
}

Simplex to_simplex(const CiiGranule& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.a_lo, g.x, g.a_hi}, tol);
}

Simplex to_simplex(const AinGranule& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.lo, g.expected, g.hi}, tol);
}

Simplex to_simplex(const PictureTriple& g, Tolerance tol) {
  validate(g, tol);
  return Simplex(cumulative({g.a1, g.a2, g.a3}), tol);
}

Simplex to_simplex(const IvifsPair& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.mu_lo, g.mu_hi, 1.0 - g.nu_hi, 1.0 - g.nu_lo}, tol);
}

Simplex to_simplex(const ShadowedPair& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.supp_lo, g.core_lo, g.core_hi, g.supp_hi}, tol);
}

Simplex to_simplex(const IciiGranule& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.a_lo, g.x_lo, g.x_hi, g.a_hi}, tol);
}

Simplex to_simplex(const RbuiGranule& g, Tolerance tol) {
  validate(g, tol);
  const double keep = 1.0 - g.c;
  return Simplex({g.a_lo, g.x * g.c + keep * g.a_lo, g.x * g.c + keep * g.a_hi, g.a_hi}, tol);
}

Simplex to_simplex(const ItbuiGranule& g, Tolerance tol) {
  validate(g, tol);
  const double outer_lo = g.c_lo * g.x;
  const double inner_lo = g.c_hi * g.x;
  return Simplex({outer_lo, inner_lo, inner_lo + (1.0 - g.c_hi), outer_lo + (1.0 - g.c_lo)}, tol);
}

Simplex to_simplex(const BtbuiGranule& g, Tolerance tol) {
  validate(g, tol);
  const Simplex certainty = to_simplex(g.inner, tol);
  return to_simplex(ItbuiGranule{g.y, certainty[0], certainty[1]}, tol);
}

Simplex to_simplex(const CuiGranule& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.u1, g.a1, g.x, g.a2, g.u2}, tol);
}

Simplex to_simplex(const IcuiGranule& g, Tolerance tol) {
  validate(g, tol);
  return Simplex({g.u1, g.a1, g.x1, g.x2, g.a2, g.u2}, tol);
}

Simplex to_simplex(const HmcuiGranule& g, Tolerance tol) {
  validate(g, tol);
  std::vector<double> c;
  c.reserve(g.xs.size() + 2);
  c.push_back(g.a_lo);
  c.insert(c.end(), g.xs.begin(), g.xs.end());
  c.push_back(g.a_hi);
  return Simplex(std::move(c), tol);
}

Simplex to_simplex(const HcuiGranule& g, Tolerance tol) {
  validate(g, tol);
  std::vector<double> c;
  c.reserve(g.xs.size() + 4);
  c.push_back(g.u_lo);
  c.push_back(g.a_lo);
  c.insert(c.end(), g.xs.begin(), g.xs.end());
  c.push_back(g.a_hi);
  c.push_back(g.u_hi);
  return Simplex(std::move(c), tol);
}

Simplex to_simplex(const AnPoint& g, Tolerance tol) {
  validate(g, tol);
  return Simplex(cumulative(g.ps), tol);
}

Simplex to_simplex(const Plts& g, Tolerance tol) {
  validate(g, tol);
  return Simplex(cumulative(g.probs), tol);
}

Simplex to_simplex(const NIcuiGranule& g, Tolerance tol) {
  validate(g, tol);
  const std::size_t n = g.intervals.size();
  std::vector<double> c(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = g.intervals[i].lo;
    c[2 * n - 1 - i] = g.intervals[i].hi;
  }
  return Simplex(std::move(c), tol);
}

// --- decode ---

template <>
IntervalGranule from_simplex<IntervalGranule>(const Simplex& s, Tolerance) {
  return interval_from_simplex<IntervalTag>(s);
}
template <>
GreyGranule from_simplex<GreyGranule>(const Simplex& s, Tolerance) {
  return interval_from_simplex<GreyTag>(s);
}
template <>
VagueGranule from_simplex<VagueGranule>(const Simplex& s, Tolerance) {
  return interval_from_simplex<VagueTag>(s);
}

template <>
RoughPair from_simplex<RoughPair>(const Simplex& s, Tolerance) {
  require_dim(s, 2, RoughPair::kind);
  return {s[0], s[1]};
}

template <>
AtanassovPair from_simplex<AtanassovPair>(const Simplex& s, Tolerance) {
  require_dim(s, 2, AtanassovPair::kind);
  return {s[0], 1.0 - s[1]};
}

template <>
BuiGranule from_simplex<BuiGranule>(const Simplex& s, Tolerance tol) {
  require_dim(s, 2, BuiGranule::kind);
  if (is_total_ignorance(s[0], s[1], tol)) {
    throw Error(ErrorKind::TotalIgnorance, "bui: (0, 1) has zero certainty and no evaluation value");
  }
  const double c = 1.0 - (s[1] - s[0]);
  return {s[0] / c, c};
}

template <>
CiiGranule from_simplex<CiiGranule>(const Simplex& s, Tolerance) {
  require_dim(s, 3, CiiGranule::kind);
  return {s[1], s[0], s[2]};
}

template <>
AinGranule from_simplex<AinGranule>(const Simplex& s, Tolerance) {
  require_dim(s, 3, AinGranule::kind);
  return {s[1], s[0], s[2]};
}

template <>
PictureTriple from_simplex<PictureTriple>(const Simplex& s, Tolerance) {
  require_dim(s, 3, PictureTriple::kind);
  const auto d = differences(s);
  return {d[0], d[1], d[2]};
}

template <>
IvifsPair from_simplex<IvifsPair>(const Simplex& s, Tolerance) {
  require_dim(s, 4, IvifsPair::kind);
  return {s[0], s[1], 1.0 - s[3], 1.0 - s[2]};
}

template <>
ShadowedPair from_simplex<ShadowedPair>(const Simplex& s, Tolerance) {
  require_dim(s, 4, ShadowedPair::kind);
  return {s[1], s[2], s[0], s[3]};
}

template <>
IciiGranule from_simplex<IciiGranule>(const Simplex& s, Tolerance) {
  require_dim(s, 4, IciiGranule::kind);
  return {s[1], s[2], s[0], s[3]};
}

template <>
RbuiGranule from_simplex<RbuiGranule>(const Simplex& s, Tolerance tol) {
  require_dim(s, 4, RbuiGranule::kind);
  const double width = s[3] - s[0];
  if (!(width > 0.0)) throw Error(ErrorKind::NotInImage, "rbui: a_lo == a_hi leaves x and c undetermined");
  const double c = 1.0 - (s[2] - s[1]) / width;
  if (!(c > 0.0)) throw Error(ErrorKind::NotInImage, "rbui: zero certainty, x is unrecoverable");
  const double x = (s[1] - (1.0 - c) * s[0]) / c;
  if (x < s[0] - tol.eps || x > s[3] + tol.eps) {
    throw Error(ErrorKind::NotInImage, "rbui: recovered x = " + std::to_string(x) + " outside [a_lo, a_hi]");
  }
  return {x, s[0], s[3], c};
}

template <>
ItbuiGranule from_simplex<ItbuiGranule>(const Simplex& s, Tolerance tol) {
  require_dim(s, 4, ItbuiGranule::kind);
  const double c_lo = 1.0 - (s[3] - s[0]);
  const double c_hi = 1.0 - (s[2] - s[1]);
  if (!(c_lo > 0.0)) throw Error(ErrorKind::NotInImage, "itbui: c_lo = 0, x is unrecoverable");
  if (c_lo > c_hi + tol.eps) throw Error(ErrorKind::NotInImage, "itbui: c_lo > c_hi");
  const double x_outer = s[0] / c_lo;
  const double x_inner = s[1] / c_hi;
  if (std::abs(x_outer - x_inner) > tol.eps) {
    throw Error(ErrorKind::NotInImage, "itbui: the two dilations disagree on x (" + std::to_string(x_outer) + " vs " +
                                           std::to_string(x_inner) + ")");
  }
  return {x_inner, c_lo, c_hi};
}

template <>
BtbuiGranule from_simplex<BtbuiGranule>(const Simplex& s, Tolerance tol) {
  const auto it = from_simplex<ItbuiGranule>(s, tol);
  const auto inner = from_simplex<BuiGranule>(Simplex({it.c_lo, it.c_hi}, tol), tol);
  return {it.x, inner};
}

template <>
CuiGranule from_simplex<CuiGranule>(const Simplex& s, Tolerance) {
  require_dim(s, 5, CuiGranule::kind);
  return {s[2], s[1], s[3], s[0], s[4]};
}

template <>
IcuiGranule from_simplex<IcuiGranule>(const Simplex& s, Tolerance) {
  require_dim(s, 6, IcuiGranule::kind);
  return {s[2], s[3], s[1], s[4], s[0], s[5]};
}

template <>
HmcuiGranule from_simplex<HmcuiGranule>(const Simplex& s, Tolerance) {
  if (s.dim() < 3) {
    throw Error(ErrorKind::DimensionMismatch, "hmcui: decodes from L_{k+2} with k >= 1, got L_" + std::to_string(s.dim()));
  }
  return {strict_interior(s, 1, HmcuiGranule::kind), s[0], s[s.dim() - 1]};
}

template <>
HcuiGranule from_simplex<HcuiGranule>(const Simplex& s, Tolerance) {
  if (s.dim() < 5) {
    throw Error(ErrorKind::DimensionMismatch, "hcui: decodes from L_{k+4} with k >= 1, got L_" + std::to_string(s.dim()));
  }
  const std::size_t n = s.dim();
  return {strict_interior(s, 2, HcuiGranule::kind), s[1], s[n - 2], s[0], s[n - 1]};
}

template <>
AnPoint from_simplex<AnPoint>(const Simplex& s, Tolerance) {
  return {differences(s)};
}

template <>
Plts from_simplex<Plts>(const Simplex& s, Tolerance tol) {
  if (s.dim() < 2) throw Error(ErrorKind::DimensionMismatch, "plts: decodes from L_n with n >= 2");
  return plts_from_simplex(s, LinguisticScale::generic(s.dim()), tol);
}

Plts plts_from_simplex(const Simplex& s, LinguisticScale scale, Tolerance) {
  if (scale.size() != s.dim()) {
    throw Error(ErrorKind::ScaleMismatch, "plts: scale of " + std::to_string(scale.size()) + " labels for L_" +
                                              std::to_string(s.dim()));
  }
  return {std::move(scale), differences(s)};
}

template <>
NIcuiGranule from_simplex<NIcuiGranule>(const Simplex& s, Tolerance) {
  if (s.dim() % 2 != 0) {
    throw Error(ErrorKind::DimensionMismatch, "nicui: decodes from L_{2n}, got odd dimension " + std::to_string(s.dim()));
  }
  const std::size_t n = s.dim() / 2;
  NIcuiGranule g;
  g.intervals.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.intervals[i] = {s[i], s[2 * n - 1 - i]};
  return g;
}

// --- PLTS views ---

AnPoint to_anpoint(const Plts& p, Tolerance tol) {
  validate(p, tol);
  return {p.probs};
}

WeightVector to_weights(const Plts& p, Tolerance tol) {
  validate(p, tol);
  std::vector<double> w = p.probs;
  double sum = 0.0;
  for (double v : w) sum += v;
  w.push_back(1.0 - sum);
  return WeightVector(std::move(w), tol);
}

Plts plts_from_anpoint(const AnPoint& a, LinguisticScale scale, Tolerance tol) {
  Plts p{std::move(scale), a.ps};
  validate(p, tol);
  return p;
}

Plts plts_from_weights(const WeightVector& w, LinguisticScale scale) {
  if (scale.size() + 1 != w.size()) {
    throw Error(ErrorKind::ScaleMismatch, "plts: " + std::to_string(w.size()) + " weights for a scale of " +
                                              std::to_string(scale.size()) + " labels (expects labels + 1)");
  }
  return {std::move(scale), std::vector<double>(w.values().begin(), w.values().end() - 1)};
}

// --- derived ---

double asymmetry_coefficient(const Simplex& s) {
  require_dim(s, 3, "asymmetry");
  if (s[0] == s[2]) return 0.0;
  return (s[0] + s[2] - 2.0 * s[1]) / (s[0] + s[2]);
}

bool bui_leq(const BuiGranule& a, const BuiGranule& b) { return leq(to_simplex(a), to_simplex(b)); }

// --- tagged union ---

std::string_view kind_of(const Granule& g) noexcept {
  return std::visit([](const auto& v) { return std::decay_t<decltype(v)>::kind; }, g);
}

Simplex encode(const Granule& g, Tolerance tol) {
  return std::visit([tol](const auto& v) { return to_simplex(v, tol); }, g);
}

void validate(const Granule& g, Tolerance tol) {
  std::visit([tol](const auto& v) { validate(v, tol); }, g);
}

}  // namespace polygran
