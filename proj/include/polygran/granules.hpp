// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

// Uncertainty granules and their codecs into L_n.
//
// Each granule type G provides
//   void    validate(const G&, Tolerance)
//   Simplex to_simplex(const G&, Tolerance)        (validates first)
//   G       from_simplex<G>(const Simplex&, Tolerance)
// Bijections decode every point of the right dimension. Embeddings (BUI,
// RBUI, ItBUI, BtBUI, HMCUI, HCUI) decode only their image and throw
// NotInImage or TotalIgnorance elsewhere; they never project.
//
//   granule                    dim   coordinates
//   interval/rough/grey/vague  2     (lo, hi)
//   atanassov                  2     (mu, 1 - nu)
//   bui                        2     (c x, c x + 1 - c)
//   cii / ain                  3     (a_lo, x, a_hi)
//   picture / anpoint          n     cumulative sums
//   ivifs                      4     (mu_lo, mu_hi, 1 - nu_hi, 1 - nu_lo)
//   shadowed                   4     (supp_lo, core_lo, core_hi, supp_hi)
//   icii                       4     (a_lo, x_lo, x_hi, a_hi)
//   rbui                       4     (a_lo, x c + (1-c) a_lo, x c + (1-c) a_hi, a_hi)
//   itbui                      4     (c_lo x, c_hi x, c_hi x + 1 - c_hi, c_lo x + 1 - c_lo)
//   btbui                      4     itbui of (y, dilation of the inner bui)
//   cui                        5     (u1, a1, x, a2, u2)
//   icui                       6     (u1, a1, x1, x2, a2, u2)
//   hmcui                      k+2   (a_lo, xs..., a_hi)
//   hcui                       k+4   (u_lo, a_lo, xs..., a_hi, u_hi)
//   plts                       n     cumulative sums of probs
//   nicui                      2n    (lo_1, ..., lo_n, hi_n, ..., hi_1), interval 1 outermost

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polygran/simplex.hpp"

namespace polygran {

// --- L_2 ---

/// A closed subinterval of [0,1]. Grey and vague granules are the same
/// structure under a different name.
template <class Tag>
struct BasicInterval {
  static constexpr std::string_view kind = Tag::kind;
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

struct IntervalTag { static constexpr std::string_view kind = "interval"; };
struct GreyTag { static constexpr std::string_view kind = "grey"; };
struct VagueTag { static constexpr std::string_view kind = "vague"; };

using IntervalGranule = BasicInterval<IntervalTag>;
using GreyGranule = BasicInterval<GreyTag>;
using VagueGranule = BasicInterval<VagueTag>;

/// Fuzzy rough pair at a point: lower <= upper approximation.
struct RoughPair {
  static constexpr std::string_view kind = "rough";
  double lower = 0.0;
  double upper = 0.0;
  friend bool operator==(const RoughPair&, const RoughPair&) = default;
};

/// Intuitionistic pair, mu + nu <= 1.
struct AtanassovPair {
  static constexpr std::string_view kind = "atanassov";
  double mu = 0.0;
  double nu = 0.0;
  friend bool operator==(const AtanassovPair&, const AtanassovPair&) = default;
};

/// Evaluation value x with certainty degree c. Decodes only for c > 0.
struct BuiGranule {
  static constexpr std::string_view kind = "bui";
  double x = 0.0;
  double c = 0.0;
  friend bool operator==(const BuiGranule&, const BuiGranule&) = default;
};

// --- L_3 ---

struct CiiGranule {
  static constexpr std::string_view kind = "cii";
  double x = 0.0;
  double a_lo = 0.0;
  double a_hi = 0.0;
  friend bool operator==(const CiiGranule&, const CiiGranule&) = default;
};

/// Asymmetric interval number; same codec as CII.
struct AinGranule {
  static constexpr std::string_view kind = "ain";
  double expected = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const AinGranule&, const AinGranule&) = default;
};

/// Picture fuzzy triple, a1 + a2 + a3 <= 1.
struct PictureTriple {
  static constexpr std::string_view kind = "picture";
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  friend bool operator==(const PictureTriple&, const PictureTriple&) = default;
};

// --- L_4 ---

struct IvifsPair {
  static constexpr std::string_view kind = "ivifs";
  double mu_lo = 0.0;
  double mu_hi = 0.0;
  double nu_lo = 0.0;
  double nu_hi = 0.0;
  friend bool operator==(const IvifsPair&, const IvifsPair&) = default;
};

/// Core inside support: supp_lo <= core_lo <= core_hi <= supp_hi.
struct ShadowedPair {
  static constexpr std::string_view kind = "shadowed";
  double core_lo = 0.0;
  double core_hi = 0.0;
  double supp_lo = 0.0;
  double supp_hi = 0.0;
  friend bool operator==(const ShadowedPair&, const ShadowedPair&) = default;
};

struct IciiGranule {
  static constexpr std::string_view kind = "icii";
  double x_lo = 0.0;
  double x_hi = 0.0;
  double a_lo = 0.0;
  double a_hi = 0.0;
  friend bool operator==(const IciiGranule&, const IciiGranule&) = default;
};

struct RbuiGranule {
  static constexpr std::string_view kind = "rbui";
  double x = 0.0;
  double a_lo = 0.0;
  double a_hi = 0.0;
  double c = 0.0;
  friend bool operator==(const RbuiGranule&, const RbuiGranule&) = default;
};

struct ItbuiGranule {
  static constexpr std::string_view kind = "itbui";
  double x = 0.0;
  double c_lo = 0.0;
  double c_hi = 0.0;
  friend bool operator==(const ItbuiGranule&, const ItbuiGranule&) = default;
};

struct BtbuiGranule {
  static constexpr std::string_view kind = "btbui";
  double y = 0.0;
  BuiGranule inner;
  friend bool operator==(const BtbuiGranule&, const BtbuiGranule&) = default;
};

// --- L_5, L_6 ---

struct CuiGranule {
  static constexpr std::string_view kind = "cui";
  double x = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  friend bool operator==(const CuiGranule&, const CuiGranule&) = default;
};

struct IcuiGranule {
  static constexpr std::string_view kind = "icui";
  double x1 = 0.0;
  double x2 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  friend bool operator==(const IcuiGranule&, const IcuiGranule&) = default;
};

// --- L_n ---

/// Hesitant evaluation set xs (strictly increasing) inside [a_lo, a_hi].
struct HmcuiGranule {
  static constexpr std::string_view kind = "hmcui";
  std::vector<double> xs;
  double a_lo = 0.0;
  double a_hi = 0.0;
  friend bool operator==(const HmcuiGranule&, const HmcuiGranule&) = default;
};

struct HcuiGranule {
  static constexpr std::string_view kind = "hcui";
  std::vector<double> xs;
  double a_lo = 0.0;
  double a_hi = 0.0;
  double u_lo = 0.0;
  double u_hi = 0.0;
  friend bool operator==(const HcuiGranule&, const HcuiGranule&) = default;
};

/// Point of A_n: nonnegative entries with sum <= 1.
struct AnPoint {
  static constexpr std::string_view kind = "anpoint";
  std::vector<double> ps;
  friend bool operator==(const AnPoint&, const AnPoint&) = default;
};

/// Ordered list of distinct linguistic labels, at least two.
class LinguisticScale {
 public:
  explicit LinguisticScale(std::vector<std::string> labels);

  /// Labels "s1", ..., "sn".
  static LinguisticScale generic(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& operator[](std::size_t i) const noexcept { return labels_[i]; }

  friend bool operator==(const LinguisticScale&, const LinguisticScale&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Probabilistic linguistic term set, stored positionally against its
/// scale: probs[i] belongs to scale[i]; absent terms are zeros.
struct Plts {
  static constexpr std::string_view kind = "plts";
  LinguisticScale scale;
  std::vector<double> probs;
  friend bool operator==(const Plts&, const Plts&) = default;
};

struct LevelInterval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const LevelInterval&, const LevelInterval&) = default;
};

/// n nested intervals, outermost first: intervals[i+1] inside intervals[i].
struct NIcuiGranule {
  static constexpr std::string_view kind = "nicui";
  std::vector<LevelInterval> intervals;
  friend bool operator==(const NIcuiGranule&, const NIcuiGranule&) = default;
};

// --- validation ---

void validate(const IntervalGranule& g, Tolerance tol = {});
void validate(const GreyGranule& g, Tolerance tol = {});
void validate(const VagueGranule& g, Tolerance tol = {});
void validate(const RoughPair& g, Tolerance tol = {});
void validate(const AtanassovPair& g, Tolerance tol = {});
void validate(const BuiGranule& g, Tolerance tol = {});
void validate(const CiiGranule& g, Tolerance tol = {});
void validate(const AinGranule& g, Tolerance tol = {});
void validate(const PictureTriple& g, Tolerance tol = {});
void validate(const IvifsPair& g, Tolerance tol = {});
void validate(const ShadowedPair& g, Tolerance tol = {});
void validate(const IciiGranule& g, Tolerance tol = {});
void validate(const RbuiGranule& g, Tolerance tol = {});
void validate(const ItbuiGranule& g, Tolerance tol = {});
void validate(const BtbuiGranule& g, Tolerance tol = {});
void validate(const CuiGranule& g, Tolerance tol = {});
void validate(const IcuiGranule& g, Tolerance tol = {});
void validate(const HmcuiGranule& g, Tolerance tol = {});
void validate(const HcuiGranule& g, Tolerance tol = {});
void validate(const AnPoint& g, Tolerance tol = {});
void validate(const Plts& g, Tolerance tol = {});
void validate(const NIcuiGranule& g, Tolerance tol = {});

// --- encode ---

Simplex to_simplex(const IntervalGranule& g, Tolerance tol = {});
Simplex to_simplex(const GreyGranule& g, Tolerance tol = {});
Simplex to_simplex(const VagueGranule& g, Tolerance tol = {});
Simplex to_simplex(const RoughPair& g, Tolerance tol = {});
Simplex to_simplex(const AtanassovPair& g, Tolerance tol = {});
/// Certainty dilation [c x, c x + 1 - c]; c = 0 lands on (0, 1).
Simplex to_simplex(const BuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const CiiGranule& g, Tolerance tol = {});
Simplex to_simplex(const AinGranule& g, Tolerance tol = {});
Simplex to_simplex(const PictureTriple& g, Tolerance tol = {});
Simplex to_simplex(const IvifsPair& g, Tolerance tol = {});
Simplex to_simplex(const ShadowedPair& g, Tolerance tol = {});
Simplex to_simplex(const IciiGranule& g, Tolerance tol = {});
Simplex to_simplex(const RbuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const ItbuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const BtbuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const CuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const IcuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const HmcuiGranule& g, Tolerance tol = {});
Simplex to_simplex(const HcuiGranule& g, Tolerance tol = {});
/// psi: A_n -> L_n, cumulative sums.
Simplex to_simplex(const AnPoint& g, Tolerance tol = {});
Simplex to_simplex(const Plts& g, Tolerance tol = {});
Simplex to_simplex(const NIcuiGranule& g, Tolerance tol = {});

// --- decode ---

/// Decoders throw DimensionMismatch when s has the wrong dimension.
template <class G>
G from_simplex(const Simplex& s, Tolerance tol = {});

template <> IntervalGranule from_simplex<IntervalGranule>(const Simplex&, Tolerance);
template <> GreyGranule from_simplex<GreyGranule>(const Simplex&, Tolerance);
template <> VagueGranule from_simplex<VagueGranule>(const Simplex&, Tolerance);
template <> RoughPair from_simplex<RoughPair>(const Simplex&, Tolerance);
template <> AtanassovPair from_simplex<AtanassovPair>(const Simplex&, Tolerance);
/// c = x1 + 1 - x2, x = x1 / c. TotalIgnorance at (0, 1).
template <> BuiGranule from_simplex<BuiGranule>(const Simplex&, Tolerance);
template <> CiiGranule from_simplex<CiiGranule>(const Simplex&, Tolerance);
template <> AinGranule from_simplex<AinGranule>(const Simplex&, Tolerance);
template <> PictureTriple from_simplex<PictureTriple>(const Simplex&, Tolerance);
template <> IvifsPair from_simplex<IvifsPair>(const Simplex&, Tolerance);
template <> ShadowedPair from_simplex<ShadowedPair>(const Simplex&, Tolerance);
template <> IciiGranule from_simplex<IciiGranule>(const Simplex&, Tolerance);
/// c = 1 - (x3 - x2)/(x4 - x1), x = (x2 - (1-c) x1)/c. NotInImage when
/// x1 == x4, c <= 0, or x falls outside [x1, x4] beyond eps.
template <> RbuiGranule from_simplex<RbuiGranule>(const Simplex&, Tolerance);
/// c_lo = x1 + 1 - x4, c_hi = x2 + 1 - x3. NotInImage unless c_lo > 0,
/// c_lo <= c_hi and x1/c_lo agrees with x2/c_hi within eps.
template <> ItbuiGranule from_simplex<ItbuiGranule>(const Simplex&, Tolerance);
/// ItBUI decode followed by a BUI decode of [c_lo, c_hi].
template <> BtbuiGranule from_simplex<BtbuiGranule>(const Simplex&, Tolerance);
template <> CuiGranule from_simplex<CuiGranule>(const Simplex&, Tolerance);
template <> IcuiGranule from_simplex<IcuiGranule>(const Simplex&, Tolerance);
/// k = dim - 2; interior must be strictly increasing.
template <> HmcuiGranule from_simplex<HmcuiGranule>(const Simplex&, Tolerance);
/// k = dim - 4; interior must be strictly increasing.
template <> HcuiGranule from_simplex<HcuiGranule>(const Simplex&, Tolerance);
/// Consecutive differences with x_0 = 0.
template <> AnPoint from_simplex<AnPoint>(const Simplex&, Tolerance);
/// Attaches LinguisticScale::generic(dim).
template <> Plts from_simplex<Plts>(const Simplex&, Tolerance);
/// Requires an even dimension.
template <> NIcuiGranule from_simplex<NIcuiGranule>(const Simplex&, Tolerance);

Plts plts_from_simplex(const Simplex& s, LinguisticScale scale, Tolerance tol = {});

// --- PLTS views ---

AnPoint to_anpoint(const Plts& p, Tolerance tol = {});
/// Appends the remainder p_{n+1} = 1 - sum(probs).
WeightVector to_weights(const Plts& p, Tolerance tol = {});
Plts plts_from_anpoint(const AnPoint& a, LinguisticScale scale, Tolerance tol = {});
/// Drops the remainder slot.
Plts plts_from_weights(const WeightVector& w, LinguisticScale scale);

// --- derived quantities ---

/// (x1 + x3 - 2 x2)/(x1 + x3) on L_3, 0 on the all-equal locus.
double asymmetry_coefficient(const Simplex& s);

/// Order on BUI granules pulled back through the dilation.
bool bui_leq(const BuiGranule& a, const BuiGranule& b);

// --- tagged union ---

using Granule = std::variant<IntervalGranule, GreyGranule, VagueGranule, RoughPair, AtanassovPair, BuiGranule,
                             CiiGranule, AinGranule, PictureTriple, IvifsPair, ShadowedPair, IciiGranule,
                             RbuiGranule, ItbuiGranule, BtbuiGranule, CuiGranule, IcuiGranule, HmcuiGranule,
                             HcuiGranule, AnPoint, Plts, NIcuiGranule>;

std::string_view kind_of(const Granule& g) noexcept;
Simplex encode(const Granule& g, Tolerance tol = {});
void validate(const Granule& g, Tolerance tol = {});

}  // namespace polygran
