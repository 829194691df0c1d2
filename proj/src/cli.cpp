// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#include "polygran/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polygran/granularity.hpp"
#include "polygran/json_codec.hpp"
#include "polygran/simplicial.hpp"
#include "polygran/svg_plot.hpp"
#include "polygran/volume.hpp"

namespace polygran {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string output = "-";
  double tolerance = 1e-9;

  std::string to;
  std::string via;

  std::size_t target_size = 0;
  std::string word;
  std::vector<std::string> labels;

  std::size_t dim = 0;
  std::uint64_t samples = 1000000;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;

  std::string svg_out;
};

constexpr const char* kPlotHelp =
    "Emit an SVG of L_2 or L_3 with labelled points. Input: one envelope or a JSON array of envelopes; an "
    "envelope may carry a \"label\" string. L_3 is drawn with the oblique projection whose columns are "
    "x1 -> (-0.5, -0.3), x2 -> (1, 0), x3 -> (0, 1); viewBox 0 0 1000 1000.";

std::string read_input(const Options& o, std::istream& in) {
  std::ostringstream buf;
  if (o.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw InputError("cannot read '" + o.input + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + path + "'");
}

std::string cmd_validate(const Options& o, const std::string& text, int& code) {
  const json j = parse_json(text);
  try {
    const Envelope e = parse_envelope(j, Tolerance{o.tolerance});
    return "valid: " + std::string(kind_of(e)) + " in L_" + std::to_string(encode(e, Tolerance{o.tolerance}).dim()) +
           "\n";
  } catch (const Error& ex) {
    code = kExitDomain;
    return std::string("invalid: ") + ex.what() + "\n";
  }
}

std::string cmd_convert(const Options& o, const std::string& text) {
  const Tolerance tol{o.tolerance};
  const Envelope e = parse_envelope_text(text, tol);
  Simplex s = encode(e, tol);
  if (!o.via.empty()) s = apply_word(s, MapWord::parse(o.via, s.dim()));
  try {
    return dump(to_json(decode_as(o.to, s, tol))) + "\n";
  } catch (const Error& ex) {
    if (ex.kind() != ErrorKind::DimensionMismatch) throw;
    throw Error(ErrorKind::NoPath, std::string(kind_of(e)) + " -> " + o.to +
                                       (o.via.empty() ? " needs a --via word (" : " via '" + o.via + "' (") +
                                       ex.what() + ")");
  }
}

std::string cmd_embed_plts(const Options& o, const std::string& text) {
  const Tolerance tol{o.tolerance};
  const Envelope e = parse_envelope_text(text, tol);
  const auto* g = std::get_if<Granule>(&e);
  const auto* p = g ? std::get_if<Plts>(g) : nullptr;
  if (p == nullptr) throw Error(ErrorKind::NoPath, "embed-plts needs a plts input, got " + std::string(kind_of(e)));

  if (o.labels.empty() && o.target_size == 0) throw InputError("embed-plts needs --target-size or --labels");
  if (!o.labels.empty() && o.target_size != 0 && o.labels.size() != o.target_size) {
    throw InputError("--labels has " + std::to_string(o.labels.size()) + " entries, --target-size says " +
                     std::to_string(o.target_size));
  }
  const LinguisticScale target =
      o.labels.empty() ? LinguisticScale::generic(o.target_size) : LinguisticScale(o.labels);
  const MapWord word = MapWord::parse(o.word, p->scale.size());
  return dump(to_json(Granule{embed_plts(*p, target, word, tol)})) + "\n";
}

std::string cmd_volume(const Options& o) {
  const Rational exact = exact_volume(o.dim);
  const VolumeEstimate v = estimate_volume(o.dim, o.samples, o.seed);
  return "estimate=" + format_number(v.estimate) + " exact=" + std::to_string(exact.num) + "/" +
         std::to_string(exact.den) + " stderr=" + format_number(v.std_error) + "\n";
}

std::string cmd_identities(const Options& o, int& code) {
  const IdentityReport r = verify_identities(o.dim, o.trials, o.seed);
  std::string out;
  char row[160];
  std::snprintf(row, sizeof row, "%-18s %-32s %10s %8s  %s\n", "family", "identity", "checked", "failed", "result");
  out += row;
  for (std::size_t k = 0; k < kIdentityFamilies; ++k) {
    const auto f = static_cast<IdentityFamily>(k);
    const FamilyTally& t = r[f];
    const char* verdict = t.checked == 0 ? "n/a" : (t.failed == 0 ? "pass" : "FAIL");
    std::snprintf(row, sizeof row, "%-18s %-32s %10llu %8llu  %s\n", std::string(family_name(f)).c_str(),
                  std::string(family_formula(f)).c_str(), static_cast<unsigned long long>(t.checked),
                  static_cast<unsigned long long>(t.failed), verdict);
    out += row;
  }
  out += "dim=" + std::to_string(r.dim) + " trials=" + std::to_string(r.trials) + " seed=" + std::to_string(o.seed) +
         (r.all_passed() ? " all identities hold\n" : " identity failures found\n");
  if (!r.all_passed()) code = kExitDomain;
  return out;
}

std::string cmd_plot(const Options& o, const std::string& text) {
  const Tolerance tol{o.tolerance};
  const json j = parse_json(text);
  const json items = j.is_array() ? j : json::array({j});
  std::vector<PlotPoint> points;
  for (std::size_t k = 0; k < items.size(); ++k) {
    std::string label = "p" + std::to_string(k + 1);
    if (items[k].is_object() && items[k].contains("label")) {
      if (!items[k]["label"].is_string()) throw SchemaError("field 'label' must be a string");
      label = items[k]["label"].get<std::string>();
    }
    points.push_back({encode(parse_envelope(items[k], tol), tol), std::move(label)});
  }
  std::size_t dim = o.dim;
  if (dim == 0) dim = points.empty() ? 2 : points.front().point.dim();
  return render_svg(dim, points);
}

std::string cmd_asymmetry(const Options& o, const std::string& text) {
  const Tolerance tol{o.tolerance};
  const Simplex s = encode(parse_envelope_text(text, tol), tol);
  json out = json::object();
  out["asymmetry"] = asymmetry_coefficient(s);
  return dump(out) + "\n";
}

std::string cmd_lattice(const Options& o, const std::string& text) {
  const Tolerance tol{o.tolerance};
  const json j = parse_json(text);
  if (!j.is_array() || j.size() != 2) throw SchemaError("lattice expects a JSON array of two envelopes");
  const Simplex a = encode(parse_envelope(j[0], tol), tol);
  const Simplex b = encode(parse_envelope(j[1], tol), tol);
  json out = json::object();
  out["meet"] = to_json(meet(a, b));
  out["join"] = to_json(join(a, b));
  out["order"] = to_string(compare(a, b));
  return dump(out) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Uncertainty granules as points of order polytopes L_n", "polygran"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-i,--input", o.input, "input JSON file, '-' for stdin")->capture_default_str();
  app.add_option("-o,--output", o.output, "output file, '-' for stdout")->capture_default_str();
  app.add_option("--tolerance", o.tolerance, "ingestion tolerance eps")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "Check an envelope against its invariants");

  auto* convert_cmd = app.add_subcommand("convert", "Encode, optionally apply a map word, decode as another kind");
  convert_cmd->add_option("--to", o.to, "target kind")->required();
  convert_cmd->add_option("--via", o.via, "map word applied left to right, e.g. \"s1\" or \"d2 s0\"");

  auto* embed_cmd = app.add_subcommand("embed-plts", "Move a PLTS to a finer scale along degeneracies");
  embed_cmd->add_option("--target-size", o.target_size, "number of labels in the target scale")
      ->check(CLI::PositiveNumber);
  embed_cmd->add_option("--word", o.word, "degeneracy word, empty for the identity");
  embed_cmd->add_option("--labels", o.labels, "target labels, comma separated")->delimiter(',');

  auto* volume_cmd = app.add_subcommand("volume", "Monte-Carlo volume of L_n against 1/n!");
  volume_cmd->add_option("--dim", o.dim, "dimension n")->required()->check(CLI::PositiveNumber);
  volume_cmd->add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber)->capture_default_str();
  volume_cmd->add_option("--seed", o.seed, "seed")->capture_default_str();

  auto* ident_cmd = app.add_subcommand("identities", "Check the simplicial identities on random points");
  ident_cmd->add_option("--dim", o.dim, "dimension n")->required()->check(CLI::PositiveNumber);
  ident_cmd->add_option("--trials", o.trials, "random points")->capture_default_str();
  ident_cmd->add_option("--seed", o.seed, "seed")->capture_default_str();

  auto* plot_cmd = app.add_subcommand("plot", kPlotHelp);
  plot_cmd->add_option("--out", o.svg_out, "SVG path (defaults to --output)");
  plot_cmd->add_option("--dim", o.dim, "dimension of an empty plot (2 or 3)");

  auto* asym_cmd = app.add_subcommand("asymmetry", "Asymmetry coefficient of an L_3 input");
  auto* lattice_cmd = app.add_subcommand("lattice", "Meet, join and order of a JSON array of two envelopes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  int code = kExitOk;
  try {
    std::string result;
    std::string target = o.output;
    if (validate_cmd->parsed()) {
      result = cmd_validate(o, read_input(o, in), code);
    } else if (convert_cmd->parsed()) {
      result = cmd_convert(o, read_input(o, in));
    } else if (embed_cmd->parsed()) {
      result = cmd_embed_plts(o, read_input(o, in));
    } else if (volume_cmd->parsed()) {
      result = cmd_volume(o);
    } else if (ident_cmd->parsed()) {
      result = cmd_identities(o, code);
    } else if (plot_cmd->parsed()) {
      result = cmd_plot(o, read_input(o, in));
      if (!o.svg_out.empty()) target = o.svg_out;
    } else if (asym_cmd->parsed()) {
      result = cmd_asymmetry(o, read_input(o, in));
    } else if (lattice_cmd->parsed()) {
      result = cmd_lattice(o, read_input(o, in));
    }
    write_output(target, result, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return code;
}

}  // namespace polygran
