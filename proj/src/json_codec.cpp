// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/json_codec.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>
#include <utility>

namespace polygran {

namespace {

// --- field tables ---

template <class G, class M>
struct Field {
  const char* name;
  M G::*ptr;
};

template <class G>
constexpr auto members();

template <class G>
  requires std::same_as<G, IntervalGranule> || std::same_as<G, GreyGranule> || std::same_as<G, VagueGranule>
constexpr auto interval_members() {
  return std::tuple{Field<G, double>{"lo", &G::lo}, Field<G, double>{"hi", &G::hi}};
}

template <> constexpr auto members<IntervalGranule>() { return interval_members<IntervalGranule>(); }
template <> constexpr auto members<GreyGranule>() { return interval_members<GreyGranule>(); }
template <> constexpr auto members<VagueGranule>() { return interval_members<VagueGranule>(); }

template <>
constexpr auto members<RoughPair>() {
  using G = RoughPair;
  return std::tuple{Field<G, double>{"lower", &G::lower}, Field<G, double>{"upper", &G::upper}};
}

template <>
constexpr auto members<AtanassovPair>() {
  using G = AtanassovPair;
  return std::tuple{Field<G, double>{"mu", &G::mu}, Field<G, double>{"nu", &G::nu}};
}

template <>
constexpr auto members<BuiGranule>() {
  using G = BuiGranule;
  return std::tuple{Field<G, double>{"x", &G::x}, Field<G, double>{"c", &G::c}};
}

template <>
constexpr auto members<CiiGranule>() {
  using G = CiiGranule;
  return std::tuple{Field<G, double>{"x", &G::x}, Field<G, double>{"a_lo", &G::a_lo},
                    Field<G, double>{"a_hi", &G::a_hi}};
}

template <>
constexpr auto members<AinGranule>() {
  using G = AinGranule;
  return std::tuple{Field<G, double>{"expected", &G::expected}, Field<G, double>{"lo", &G::lo},
                    Field<G, double>{"hi", &G::hi}};
}

template <>
constexpr auto members<PictureTriple>() {
  using G = PictureTriple;
  return std::tuple{Field<G, double>{"a1", &G::a1}, Field<G, double>{"a2", &G::a2}, Field<G, double>{"a3", &G::a3}};
}

template <>
constexpr auto members<IvifsPair>() {
  using G = IvifsPair;
  return std::tuple{Field<G, double>{"mu_lo", &G::mu_lo}, Field<G, double>{"mu_hi", &G::mu_hi},
                    Field<G, double>{"nu_lo", &G::nu_lo}, Field<G, double>{"nu_hi", &G::nu_hi}};
}

template <>
constexpr auto members<ShadowedPair>() {
  using G = ShadowedPair;
  return std::tuple{Field<G, double>{"core_lo", &G::core_lo}, Field<G, double>{"core_hi", &G::core_hi},
                    Field<G, double>{"supp_lo", &G::supp_lo}, Field<G, double>{"supp_hi", &G::supp_hi}};
}

template <>
constexpr auto members<IciiGranule>() {
  using G = IciiGranule;
  return std::tuple{Field<G, double>{"x_lo", &G::x_lo}, Field<G, double>{"x_hi", &G::x_hi},
                    Field<G, double>{"a_lo", &G::a_lo}, Field<G, double>{"a_hi", &G::a_hi}};
}

template <>
constexpr auto members<RbuiGranule>() {
  using G = RbuiGranule;
  return std::tuple{Field<G, double>{"x", &G::x}, Field<G, double>{"a_lo", &G::a_lo},
                    Field<G, double>{"a_hi", &G::a_hi}, Field<G, double>{"c", &G::c}};
}

template <>
constexpr auto members<ItbuiGranule>() {
  using G = ItbuiGranule;
  return std::tuple{Field<G, double>{"x", &G::x}, Field<G, double>{"c_lo", &G::c_lo},
                    Field<G, double>{"c_hi", &G::c_hi}};
}

template <>
constexpr auto members<BtbuiGranule>() {
  using G = BtbuiGranule;
  return std::tuple{Field<G, double>{"y", &G::y}, Field<G, BuiGranule>{"inner", &G::inner}};
}

template <>
constexpr auto members<CuiGranule>() {
  using G = CuiGranule;
  return std::tuple{Field<G, double>{"x", &G::x}, Field<G, double>{"a1", &G::a1}, Field<G, double>{"a2", &G::a2},
                    Field<G, double>{"u1", &G::u1}, Field<G, double>{"u2", &G::u2}};
}

template <>
constexpr auto members<IcuiGranule>() {
  using G = IcuiGranule;
  return std::tuple{Field<G, double>{"x1", &G::x1}, Field<G, double>{"x2", &G::x2}, Field<G, double>{"a1", &G::a1},
                    Field<G, double>{"a2", &G::a2}, Field<G, double>{"u1", &G::u1}, Field<G, double>{"u2", &G::u2}};
}

template <>
constexpr auto members<HmcuiGranule>() {
  using G = HmcuiGranule;
  return std::tuple{Field<G, std::vector<double>>{"xs", &G::xs}, Field<G, double>{"a_lo", &G::a_lo},
                    Field<G, double>{"a_hi", &G::a_hi}};
}

template <>
constexpr auto members<HcuiGranule>() {
  using G = HcuiGranule;
  return std::tuple{Field<G, std::vector<double>>{"xs", &G::xs}, Field<G, double>{"a_lo", &G::a_lo},
                    Field<G, double>{"a_hi", &G::a_hi}, Field<G, double>{"u_lo", &G::u_lo},
                    Field<G, double>{"u_hi", &G::u_hi}};
}

template <>
constexpr auto members<AnPoint>() {
  return std::tuple{Field<AnPoint, std::vector<double>>{"ps", &AnPoint::ps}};
}

template <>
constexpr auto members<NIcuiGranule>() {
  return std::tuple{Field<NIcuiGranule, std::vector<LevelInterval>>{"intervals", &NIcuiGranule::intervals}};
}

// --- reading ---

const json& require(const json& j, const char* name) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

double read_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw SchemaError(what + " must be a number");
  return v.get<double>();
}

std::vector<double> read_numbers(const json& v, const std::string& what) {
  if (!v.is_array()) throw SchemaError(what + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(read_number(v[k], what + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<LevelInterval> read_intervals(const json& v, const std::string& what) {
  if (!v.is_array()) throw SchemaError(what + " must be an array of [lo, hi] pairs");
  std::vector<LevelInterval> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = what + "[" + std::to_string(k) + "]";
    if (!v[k].is_array() || v[k].size() != 2) throw SchemaError(at + " must be a [lo, hi] pair");
    out.push_back({read_number(v[k][0], at + "[0]"), read_number(v[k][1], at + "[1]")});
  }
  return out;
}

template <class G>
G read_struct(const json& j);

template <class M>
M read_value(const json& v, const std::string& name) {
  if constexpr (std::same_as<M, double>) {
    return read_number(v, "field '" + name + "'");
  } else if constexpr (std::same_as<M, std::vector<double>>) {
    return read_numbers(v, "field '" + name + "'");
  } else if constexpr (std::same_as<M, std::vector<LevelInterval>>) {
    return read_intervals(v, "field '" + name + "'");
  } else {
    return read_struct<M>(v);
  }
}

template <class G>
G read_struct(const json& j) {
  G g{};
  std::apply(
      [&](auto... f) {
        ((g.*(f.ptr) = read_value<std::remove_cvref_t<decltype(g.*(f.ptr))>>(require(j, f.name), f.name)), ...);
      },
      members<G>());
  return g;
}

Plts read_plts(const json& j) {
  const json& labels = require(j, "scale");
  if (!labels.is_array()) throw SchemaError("field 'scale' must be an array of strings");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw SchemaError("field 'scale' must be an array of strings");
    names.push_back(l.get<std::string>());
  }
  LinguisticScale scale(std::move(names));
  return Plts{std::move(scale), read_numbers(require(j, "probs"), "field 'probs'")};
}

// --- writing ---

template <class G>
json write_struct(const G& g);

template <class M>
json write_value(const M& v) {
  if constexpr (std::same_as<M, double>) {
    return v;
  } else if constexpr (std::same_as<M, std::vector<double>>) {
    return json(v);
  } else if constexpr (std::same_as<M, std::vector<LevelInterval>>) {
    json arr = json::array();
    for (const auto& iv : v) arr.push_back(json::array({iv.lo, iv.hi}));
    return arr;
  } else {
    return write_struct(v);
  }
}

template <class G>
json write_struct(const G& g) {
  json out = json::object();
  std::apply([&](auto... f) { ((out[f.name] = write_value(g.*(f.ptr))), ...); }, members<G>());
  return out;
}

template <class G>
json write_granule(const G& g) {
  json out = json::object();
  out["kind"] = G::kind;
  if constexpr (std::same_as<G, Plts>) {
    out["scale"] = g.scale.labels();
    out["probs"] = g.probs;
  } else {
    out.update(write_struct(g));
  }
  return out;
}

// --- kind tables ---

using Parser = std::function<Envelope(const json&, Tolerance)>;
using Decoder = std::function<Envelope(const Simplex&, Tolerance)>;

struct KindEntry {
  Parser parse;
  Decoder decode;
};

template <class G>
KindEntry granule_entry() {
  KindEntry e;
  e.parse = [](const json& j, Tolerance tol) -> Envelope {
    G g = [&] {
      if constexpr (std::same_as<G, Plts>) {
        return read_plts(j);
      } else {
        return read_struct<G>(j);
      }
    }();
    validate(g, tol);
    return Granule{std::move(g)};
  };
  e.decode = [](const Simplex& s, Tolerance tol) -> Envelope { return Granule{from_simplex<G>(s, tol)}; };
  return e;
}

struct Registry {
  std::vector<std::string_view> kinds;
  std::map<std::string, KindEntry, std::less<>> entries;

  void add(std::string_view kind, KindEntry e) {
    kinds.push_back(kind);
    entries.emplace(std::string(kind), std::move(e));
  }

  template <std::size_t... I>
  void add_granules(std::index_sequence<I...>) {
    (add(std::variant_alternative_t<I, Granule>::kind, granule_entry<std::variant_alternative_t<I, Granule>>()), ...);
  }

  Registry() {
    add("simplex", {[](const json& j, Tolerance tol) -> Envelope {
                      return Simplex(read_numbers(require(j, "coords"), "field 'coords'"), tol);
                    },
                    [](const Simplex& s, Tolerance) -> Envelope { return s; }});
    add("weights", {[](const json& j, Tolerance tol) -> Envelope {
                      return WeightVector(read_numbers(require(j, "weights"), "field 'weights'"), tol);
                    },
                    [](const Simplex& s, Tolerance) -> Envelope { return to_weights(s); }});
    add("levelled", {[](const json& j, Tolerance tol) -> Envelope {
                       LevelledGranule g{NIcuiGranule{read_intervals(require(j, "intervals"), "field 'intervals'")},
                                         read_numbers(require(j, "alphas"), "field 'alphas'")};
                       validate(g, tol);
                       return g;
                     },
                     [](const Simplex&, Tolerance) -> Envelope {
                       throw Error(ErrorKind::NoPath, "levelled granules cannot be decoded: alphas are not stored");
                     }});
    add_granules(std::make_index_sequence<std::variant_size_v<Granule>>{});
  }

  const KindEntry& at(std::string_view kind) const {
    const auto it = entries.find(kind);
    if (it == entries.end()) throw Error(ErrorKind::UnknownKind, "unknown kind '" + std::string(kind) + "'");
    return it->second;
  }
};

const Registry& registry() {
  static const Registry r;
  return r;
}

void dump_to(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(k).dump();
        out += ':';
        dump_to(v, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k > 0) out += ',';
        dump_to(j[k], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

const std::vector<std::string_view>& registered_kinds() { return registry().kinds; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Envelope parse_envelope(const json& j, Tolerance tol) {
  const json& kind = require(j, "kind");
  if (!kind.is_string()) throw SchemaError("field 'kind' must be a string");
  return registry().at(kind.get<std::string>()).parse(j, tol);
}

Envelope parse_envelope_text(std::string_view text, Tolerance tol) { return parse_envelope(parse_json(text), tol); }

json to_json(const Simplex& s) {
  json out = json::object();
  out["kind"] = "simplex";
  out["coords"] = s.values();
  return out;
}

json to_json(const Granule& g) {
  return std::visit([](const auto& v) { return write_granule(v); }, g);
}

json to_json(const Envelope& e) {
  struct Writer {
    json operator()(const Simplex& s) const { return to_json(s); }
    json operator()(const WeightVector& w) const {
      json out = json::object();
      out["kind"] = "weights";
      out["weights"] = w.values();
      return out;
    }
    json operator()(const LevelledGranule& g) const {
      json out = json::object();
      out["kind"] = "levelled";
      out["alphas"] = g.alphas;
      out["intervals"] = write_value(g.granule.intervals);
      return out;
    }
    json operator()(const Granule& g) const { return to_json(g); }
  };
  return std::visit(Writer{}, e);
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

std::string dump(const json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

std::string_view kind_of(const Envelope& e) noexcept {
  struct Kind {
    std::string_view operator()(const Simplex&) const noexcept { return "simplex"; }
    std::string_view operator()(const WeightVector&) const noexcept { return "weights"; }
    std::string_view operator()(const LevelledGranule&) const noexcept { return LevelledGranule::kind; }
    std::string_view operator()(const Granule& g) const noexcept { return kind_of(g); }
  };
  return std::visit(Kind{}, e);
}

Simplex encode(const Envelope& e, Tolerance tol) {
  struct Encoder {
    Tolerance tol;
    Simplex operator()(const Simplex& s) const { return s; }
    Simplex operator()(const WeightVector& w) const { return from_weights(w); }
    Simplex operator()(const LevelledGranule& g) const { return to_simplex(g, tol); }
    Simplex operator()(const Granule& g) const { return encode(g, tol); }
  };
  return std::visit(Encoder{tol}, e);
}

Envelope decode_as(std::string_view kind, const Simplex& s, Tolerance tol) {
  return registry().at(kind).decode(s, tol);
}

}  // namespace polygran
