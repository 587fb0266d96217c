#include "dseidel/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dseidel/bounds.hpp"
#include "dseidel/closed_forms.hpp"
#include "dseidel/errors.hpp"
#include "dseidel/graph_ops.hpp"
#include "dseidel/scan.hpp"
#include "dseidel/seidel.hpp"

namespace dseidel {

namespace {

constexpr double kFamilyTolerance = 1e-7;

/// Bad input that is not a graph decoding problem (missing file, wrong output mode).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed check disagreed; the report is still printed.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input = "-";
  std::string format = "graph6";
  std::string output = "json";
  double tol = kDefaultGroupingTolerance;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

Graph parse_graph_text(const std::string& text, const std::string& format) {
  if (format == "edges") return parse_edge_list(text);
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.size() != 1) {
    throw ParseError("expected exactly one graph6 line, found " + std::to_string(lines.size()));
  }
  auto& line = lines.front();
  line.erase(0, line.find_first_not_of(" \t"));
  line.erase(line.find_last_not_of(" \t\r") + 1);
  return parse_graph6(line);
}

// An existing file is read in the chosen format; anything else is taken as a literal graph6 string.
Graph load_operand(const std::string& arg, const std::string& format) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream file(arg);
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_graph_text(buf.str(), format);
  }
  return parse_graph6(arg);
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ":";
  if (j.is_array()) {
    for (const auto& e : j) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
  } else {
    out << ' ' << (j.is_string() ? j.get<std::string>() : j.dump());
  }
  out << '\n';
}

void emit(const Json& j, const Common& c, std::ostream& out) {
  if (c.output == "json") {
    out << j.dump(2) << '\n';
  } else if (c.output == "text") {
    render_text(j, "", out);
  } else {
    throw UsageError("--output csv is only available for scan");
  }
}

Json rational_json(const boost::multiprecision::cpp_rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return q.str();
}

int cmd_spectrum(const Common& c, std::istream& in, std::ostream& out) {
  const auto g = parse_graph_text(read_source(c.input, in), c.format);
  emit(to_json(spectral_summary(g, c.tol)), c, out);
  return 0;
}

int cmd_analyze(const Common& c, std::istream& in, std::ostream& out) {
  const auto g = parse_graph_text(read_source(c.input, in), c.format);
  const auto summary = spectral_summary(g, c.tol);
  const auto inv = graph_invariants(g);
  const auto wiener = wiener_identity_check(g);
  Json invariants{{"diameter", inv.diameter},
                  {"transmissions", inv.transmissions},
                  {"wiener", inv.wiener},
                  {"maxDegree", inv.max_degree},
                  {"secondMaxDegree", inv.second_max_degree},
                  {"minDegree", inv.min_degree},
                  {"secondMinDegree", inv.second_min_degree},
                  {"transmissionRegular", inv.transmission_regular ? Json(*inv.transmission_regular) : Json(nullptr)}};
  Json report{{"graph6", encode_graph6(g)},
              {"summary", to_json(summary)},
              {"invariants", invariants},
              {"wienerIdentity",
               {{"wiener", wiener.wiener},
                {"rhs", rational_json(wiener.rhs)},
                {"residual", rational_json(wiener.residual)},
                {"exact", wiener.exact()}}}};
  bool consistent = wiener.exact();
  if (auto tr = transmission_regular_spectrum(g, c.tol)) {
    const double dev = max_deviation(tr->eigenvalues, summary.spectrum.eigenvalues);
    report["transmissionRegularSpectrum"] = {{"spectrum", spectrum_json(*tr)}, {"maxDeviation", json_number(dev)}};
    consistent = consistent && dev <= kPredictionTolerance;
  } else {
    report["transmissionRegularSpectrum"] = nullptr;
  }
  emit(report, c, out);
  if (!consistent) throw CheckFailed("analysis identities do not hold");
  return 0;
}

int cmd_bounds(const Common& c, std::istream& in, std::ostream& out) {
  const auto g = parse_graph_text(read_source(c.input, in), c.format);
  const auto report = evaluate_bounds(g, c.tol);
  Json j = to_json(report);
  j["violations"] = report.violations().size();
  emit(j, c, out);
  return 0;
}

int cmd_construct(const Common& c, const std::string& op, const std::vector<std::string>& inputs, bool predict,
                  std::ostream& out) {
  std::vector<Graph> graphs;
  for (const auto& arg : inputs) graphs.push_back(load_operand(arg, c.format));
  const auto result = apply_operation(op, graphs);
  Json j{{"op", op}, {"graph6", encode_graph6(result)}, {"n", result.order()}, {"m", result.size()}};
  bool agrees = true;
  if (predict) {
    const auto prediction = predict_operation(op, graphs);
    const auto check = check_prediction(prediction, result);
    j["prediction"] = to_json(prediction, check);
    agrees = !prediction.hypothesis_ok || check.agrees;
  }
  emit(j, c, out);
  if (!agrees) throw CheckFailed("predicted spectrum differs from the computed one");
  return 0;
}

int cmd_family(const Common& c, const std::string& name, const std::vector<std::size_t>& params,
               std::ostream& out) {
  const auto spec = parse_family(name, params);
  const auto g = build_family_graph(spec);
  const auto closed = closed_form_spectrum(spec, c.tol);
  const auto numeric = spectral_summary(g, c.tol);
  const double dev = max_deviation(closed.eigenvalues, numeric.spectrum.eigenvalues);
  bool mult_match = closed.groups.size() == numeric.spectrum.groups.size();
  for (std::size_t i = 0; mult_match && i < closed.groups.size(); ++i) {
    mult_match = closed.groups[i].multiplicity == numeric.spectrum.groups[i].multiplicity;
  }
  const double energy = closed_form_energy(spec);
  Json energy_json{{"closedForm", json_number(energy)},
                   {"numeric", json_number(numeric.energy)},
                   {"deviation", json_number(std::fabs(energy - numeric.energy))}};
  if (auto printed = printed_energy(spec)) {
    energy_json["printed"] = json_number(*printed);
    energy_json["printedMatches"] = std::fabs(*printed - numeric.energy) <= kFamilyTolerance;
  }
  Json j{{"family", family_name(spec.family)},
         {"params", spec.params},
         {"graph6", encode_graph6(g)},
         {"n", g.order()},
         {"closedForm", spectrum_json(closed)},
         {"numeric", spectrum_json(numeric.spectrum)},
         {"maxDeviation", json_number(dev)},
         {"multiplicitiesMatch", mult_match},
         {"energy", energy_json}};
  emit(j, c, out);
  if (dev > kFamilyTolerance || !mult_match || std::fabs(energy - numeric.energy) > kFamilyTolerance) {
    throw CheckFailed("closed form differs from the computed spectrum");
  }
  return 0;
}

int cmd_scan(const Common& c, ScanOptions options, std::optional<std::size_t> generate, std::istream& in,
             std::ostream& out, std::ostream& err) {
  options.tolerance = c.tol;
  ScanReport report;
  if (generate) {
    std::vector<std::string> lines;
    for (const auto& g : enumerate_graphs(*generate)) lines.push_back(encode_graph6(g));
    report = scan_catalog(lines, options);
  } else {
    std::istringstream is(read_source(c.input, in));
    report = scan_catalog(is, options);
  }
  for (const auto& e : report.parse_errors) err << "line " << e.line << ": " << e.message << '\n';
  if (c.output == "csv") {
    out << to_csv(report);
  } else {
    emit(to_json(report), c, out);
  }
  return 0;
}

int cmd_generate(std::size_t n, bool connected_only, std::ostream& out) {
  for (const auto& g : connected_only ? enumerate_connected_graphs(n) : enumerate_graphs(n)) {
    out << encode_graph6(g) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance Seidel spectra, bounds and catalog scans", "dseidel"};
  app.fallthrough();
  app.require_subcommand(1);

  Common common;
  app.add_option("--input", common.input, "Graph source: a path, or - for standard input");
  app.add_option("--format", common.format, "Input format")->check(CLI::IsMember({"graph6", "edges"}));
  app.add_option("--output", common.output, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--tol", common.tol, "Eigenvalue grouping tolerance")->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "D^S spectrum, energy, radius and characteristic polynomial");
  auto* analyze = app.add_subcommand("analyze", "Spectrum plus invariants and the Wiener identity");
  auto* bounds = app.add_subcommand("bounds", "Evaluate every radius, energy and interlacing bound");

  auto* construct = app.add_subcommand("construct", "Build a graph operation and optionally check its prediction");
  std::string op;
  std::vector<std::string> inputs;
  bool predict = false;
  construct->add_option("--op", op, "join, join-union, double, prism, lex-k2 or edc")->required();
  construct->add_option("--inputs", inputs, "Operand graphs: files or graph6 strings")->required();
  construct->add_flag("--predict", predict, "Compare the predicted spectrum with the computed one");

  auto* family = app.add_subcommand("family", "Closed-form spectrum of a named family against the eigensolver");
  std::string family_name_arg;
  std::vector<std::size_t> params;
  family->add_option("--name", family_name_arg,
                     "kn, kn-e, kab, kab-e, star, cycle, wheel, split, friendship, multipartite, cocktail, balanced")
      ->required();
  family->add_option("--params", params, "Family parameters");

  auto* scan = app.add_subcommand("scan", "Scan a graph6 catalog");
  std::string find = "cospectral,integral";
  std::string verify;
  std::size_t jobs = 1;
  std::optional<std::size_t> generate;
  scan->add_option("--find", find, "cospectral, integral, distance-cospectral");
  scan->add_option("--verify", verify,
                   "kn-characterization, multipartite-characterization, bounds, regular-diameter2, operations");
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--generate", generate, "Scan all graphs of this order (at most 8) instead of reading input");

  auto* edge_deletion = app.add_subcommand("edge-deletion", "Energy of K_{a,b} against K_{a,b} minus an edge");
  std::size_t a = 0;
  std::size_t b = 0;
  edge_deletion->add_option("--a", a)->required();
  edge_deletion->add_option("--b", b)->required();

  auto* generate_cmd = app.add_subcommand("generate", "Print all graphs of a given order as graph6");
  std::size_t gen_n = 0;
  bool connected_only = false;
  generate_cmd->add_option("--n", gen_n)->required();
  generate_cmd->add_flag("--connected", connected_only, "Only connected graphs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (common.output == "csv" && !scan->parsed()) throw UsageError("--output csv is only available for scan");
    if (spectrum->parsed()) return cmd_spectrum(common, in, out);
    if (analyze->parsed()) return cmd_analyze(common, in, out);
    if (bounds->parsed()) return cmd_bounds(common, in, out);
    if (construct->parsed()) return cmd_construct(common, op, inputs, predict, out);
    if (family->parsed()) return cmd_family(common, family_name_arg, params, out);
    if (scan->parsed()) {
      ScanOptions options;
      options.jobs = jobs;
      apply_find_list(options, find);
      apply_verify_list(options, verify);
      return cmd_scan(common, options, generate, in, out, err);
    }
    if (edge_deletion->parsed()) {
      emit(to_json(check_kab_edge_deletion(a, b)), common, out);
      return 0;
    }
    if (generate_cmd->parsed()) return cmd_generate(gen_n, connected_only, out);
  } catch (const CheckFailed& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace dseidel
