// Acceptance driver: one PASS/FAIL line per criterion. With arguments, runs only the listed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dseidel/bounds.hpp"
#include "dseidel/cli.hpp"
#include "dseidel/closed_forms.hpp"
#include "dseidel/errors.hpp"
#include "dseidel/graph_ops.hpp"
#include "dseidel/scan.hpp"
#include "dseidel/seidel.hpp"
#include "fixtures.hpp"

using namespace dseidel;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    passed = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

std::vector<std::vector<std::size_t>> partitions(std::size_t total, std::size_t max_part) {
  std::vector<std::vector<std::size_t>> out;
  if (total == 0) return {{}};
  for (std::size_t first = std::min(total, max_part); first >= 1; --first) {
    for (auto rest : partitions(total - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// Every valid parameter tuple of a family with graph order at most max_order.
std::vector<FamilySpec> family_instances(Family f, std::size_t max_order) {
  std::vector<std::vector<std::size_t>> candidates;
  for (std::size_t x = 1; x <= max_order; ++x) {
    candidates.push_back({x});
    for (std::size_t y = 1; y <= max_order; ++y) candidates.push_back({x, y});
  }
  if (f == Family::CompleteMultipartite) {
    candidates.clear();
    for (std::size_t n = 2; n <= max_order; ++n) {
      for (auto p : partitions(n, n)) {
        if (p.size() >= 2) candidates.push_back(std::move(p));
      }
    }
  }
  std::vector<FamilySpec> out;
  for (auto& params : candidates) {
    try {
      auto spec = make_family(f, params);
      if (family_order(spec) <= max_order) out.push_back(std::move(spec));
    } catch (const InvalidParameters&) {
    }
  }
  return out;
}

std::string describe(const FamilySpec& spec) {
  std::string s = family_name(spec.family);
  for (auto p : spec.params) s += " " + std::to_string(p);
  return s;
}

bool groups_match(const Spectrum& a, const Spectrum& b) {
  if (a.groups.size() != b.groups.size()) return false;
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    if (a.groups[i].multiplicity != b.groups[i].multiplicity) return false;
  }
  return true;
}

Outcome closed_form_suite() {
  Outcome o;
  std::size_t count = 0;
  double worst = 0.0;
  for (auto f : all_families()) {
    for (const auto& spec : family_instances(f, 10)) {
      ++count;
      const auto closed = closed_form_spectrum(spec);
      const auto numeric = spectral_summary(build_family_graph(spec));
      const double dev = max_deviation(closed.eigenvalues, numeric.spectrum.eigenvalues);
      worst = std::max(worst, dev);
      if (dev > 1e-7 || !groups_match(closed, numeric.spectrum)) o.fail(describe(spec));
    }
  }
  std::ostringstream d;
  d << count << " instances, worst deviation " << worst;
  o.detail = d.str();
  return o;
}

Outcome polynomial_identities() {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& parts : partitions(n, n)) {
      if (parts.size() < 2) continue;
      ++count;
      const auto g = complete_multipartite_graph(parts);
      if (!(charpoly_complete_multipartite(parts) == char_poly_exact(distance_seidel_matrix(g)))) {
        o.fail("multipartite " + describe(make_family(Family::CompleteMultipartite, parts)));
      }
    }
  }
  for (std::size_t a = 2; a <= 7; ++a) {
    for (std::size_t b = 2; a + b <= 9; ++b) {
      ++count;
      const auto g = build_family_graph(make_family(Family::CompleteBipartiteMinusEdge, {a, b}));
      if (!(charpoly_kab_minus_edge(a, b) == char_poly_exact(distance_seidel_matrix(g)))) {
        o.fail("kab-e " + std::to_string(a) + " " + std::to_string(b));
      }
    }
  }
  o.detail = std::to_string(count) + " exact polynomial comparisons";
  return o;
}

Outcome reference_values() {
  Outcome o;
  std::ostringstream d;
  auto expect = [&](const std::string& label, double got, double want, double tol) {
    d << label << "=" << got << " ";
    if (std::fabs(got - want) > tol) o.fail(label);
  };
  expect("E(K22-e)", check_kab_edge_deletion(2, 2).energy_after, 14.94, 0.01);
  expect("E(K23-e)", check_kab_edge_deletion(2, 3).energy_after, 20.41, 0.02);
  expect("E(K33-e)", check_kab_edge_deletion(3, 3).energy_after, 25.6, 0.05);
  expect("F1", spectral_summary(testing::fixture_f1()).spectrum.eigenvalues.front(), 3.78, 0.01);
  expect("F2", spectral_summary(testing::fixture_f2()).spectrum.eigenvalues.front(), 5.97, 0.01);
  expect("F3", spectral_summary(testing::fixture_f3()).spectrum.eigenvalues.front(), 5.82, 0.01);
  expect("F4", spectral_summary(testing::fixture_f4()).spectrum.eigenvalues.front(), 4.23, 0.01);
  o.detail = d.str();
  return o;
}

std::vector<std::string> connected_catalog(std::size_t n) {
  std::vector<std::string> lines;
  for (const auto& g : enumerate_connected_graphs(n)) lines.push_back(encode_graph6(g));
  return lines;
}

Outcome characterization_sweep() {
  Outcome o;
  ScanOptions options;
  options.kn_characterization = options.multipartite_characterization = true;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto r = scan_catalog(connected_catalog(n), options);
    graphs += r.connected;
    for (const auto& f : r.characterization_failures) o.fail(f);
  }
  o.detail = std::to_string(graphs) + " connected graphs";
  return o;
}

Outcome bounds_sweep() {
  Outcome o;
  std::size_t graphs = 0;
  std::size_t records = 0;
  std::size_t tight_regular = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      ++graphs;
      const auto report = evaluate_bounds(g);
      records += report.bounds.size();
      for (const auto* v : report.violations()) o.fail(encode_graph6(g) + " " + v->name);
      const bool regular_d2 = is_regular(g) && graph_invariants(g).diameter <= 2;
      for (const auto& b : report.bounds) {
        if (b.name != "radius-degree-lower") continue;
        if (b.equality != regular_d2) o.fail(encode_graph6(g) + " degree-bound equality");
        tight_regular += b.equality ? 1 : 0;
      }
    }
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(records) + " records, " +
             std::to_string(tight_regular) + " regular diameter<=2 equality cases";
  return o;
}

Outcome operation_suite() {
  Outcome o;
  std::size_t checks = 0;
  auto verify = [&](const std::string& label, const PredictedSpectrum& p, const Graph& built, bool need_hypothesis) {
    ++checks;
    if (need_hypothesis && !p.hypothesis_ok) o.fail(label + " hypothesis");
    if (!check_prediction(p, built).agrees) o.fail(label);
  };

  const auto e2 = empty_graph(2);
  const auto e3 = empty_graph(3);
  const std::vector<std::pair<Graph, Graph>> join_pairs{
      {complete_graph(1), cycle_graph(4)}, {complete_graph(2), complete_graph(2)}, {complete_graph(1), complete_graph(3)},
      {cycle_graph(4), cycle_graph(5)},    {complete_graph(3), cycle_graph(5)},    {cycle_graph(4), complete_graph(2)},
      {e3, complete_graph(2)},             {petersen_graph(), complete_graph(1)},   {cycle_graph(6), complete_graph(3)},
      {e2, e3}};
  for (const auto& [a, b] : join_pairs) verify("join " + encode_graph6(a) + " " + encode_graph6(b), predict_join_spectrum(a, b), join(a, b), true);

  const std::vector<std::array<Graph, 3>> triples{{complete_graph(1), complete_graph(2), complete_graph(2)},
                                                  {complete_graph(1), complete_graph(1), complete_graph(1)},
                                                  {complete_graph(2), complete_graph(2), complete_graph(2)},
                                                  {cycle_graph(4), complete_graph(1), complete_graph(3)},
                                                  {complete_graph(3), cycle_graph(5), e2}};
  for (const auto& t : triples) {
    verify("join-union " + encode_graph6(t[0]) + " " + encode_graph6(t[1]) + " " + encode_graph6(t[2]),
           predict_join_union_spectrum(t[0], t[1], t[2]), join_union(t[0], t[1], t[2]), true);
  }

  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      const auto name = encode_graph6(g);
      if (n >= 2) verify("double " + name, predict_double_spectrum(g), double_graph(g), true);
      verify("prism " + name, predict_prism_spectrum(g), prism(g), false);
      verify("lex " + name, predict_lex_spectrum(g), lex_k2(g), false);
    }
  }

  std::size_t edc_count = 0;
  auto edc_case = [&](const Graph& g) {
    ++edc_count;
    verify("edc " + encode_graph6(g), predict_edc_spectrum(g), edc(g), true);
  };
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (is_regular(g) && graph_invariants(g).diameter == 2) edc_case(g);
    }
  }
  edc_case(petersen_graph());
  o.detail = std::to_string(checks) + " predictions, " + std::to_string(edc_count) + " EDC inputs";
  return o;
}

Outcome transmission_identity() {
  Outcome o;
  const auto pet = evaluate_bounds(petersen_graph());
  const auto pet_summary = spectral_summary(petersen_graph());
  const double rhs = 2.0 * (static_cast<double>(pet.a_plus) - 10.0 + pet.distance_energy);
  if (pet.a_plus != 5 || std::fabs(pet.distance_energy - 30.0) > 1e-9) o.fail("Petersen D spectrum");
  if (std::fabs(pet_summary.energy - 50.0) > 1e-9 || std::fabs(rhs - 50.0) > 1e-9) o.fail("Petersen energy");

  const std::vector<double> c5{4.236, 4.236, -0.236, -0.236, -8.0};
  const auto closed = transmission_regular_spectrum(cycle_graph(5));
  const auto numeric = spectral_summary(cycle_graph(5));
  if (!closed || max_deviation(closed->eigenvalues, c5) > 1e-3) o.fail("C5 transmission-regular formula");
  if (max_deviation(numeric.spectrum.eigenvalues, c5) > 1e-3) o.fail("C5 eigensolver");
  std::ostringstream d;
  d << "Petersen E=" << pet_summary.energy << " rhs=" << rhs << ", C5 checked both ways";
  o.detail = d.str();
  return o;
}

Outcome wiener_sweep() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      ++graphs;
      const auto w = wiener_identity_check(g);
      if (!w.exact()) o.fail(encode_graph6(g));
    }
  }
  o.detail = std::to_string(graphs) + " graphs, residual exactly 0";
  return o;
}

Outcome edge_deletion_sweep() {
  Outcome o;
  std::size_t checked = 0;
  std::vector<std::string> reported;
  for (std::size_t a = 2; a <= 10; ++a) {
    for (std::size_t b = a; b <= 10; ++b) {
      ++checked;
      const auto r = check_kab_edge_deletion(a, b);
      if (r.increased) continue;
      const std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (a <= 3) {
        o.fail(label);
      } else {
        reported.push_back(label);
      }
    }
  }
  o.detail = std::to_string(checked) + " pairs";
  if (!reported.empty()) {
    o.detail += ", energy did not increase for";
    for (const auto& r : reported) o.detail += " " + r;
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string catalog;
  for (const auto& g : enumerate_graphs(7)) catalog += encode_graph6(g) + "\n";
  const auto path = std::filesystem::temp_directory_path() / "dseidel_acceptance_n7.g6";
  std::ofstream(path) << catalog;

  auto scan = [&](const std::string& jobs) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = run({"--input", path.string(), "scan", "--find", "cospectral,integral,distance-cospectral",
                          "--verify", "kn-characterization,multipartite-characterization,bounds,regular-diameter2,operations",
                          "--jobs", jobs},
                         in, out, err);
    if (code != 0) o.fail("scan --jobs " + jobs + " exited " + std::to_string(code) + ": " + err.str());
    return out.str();
  };
  const auto one = scan("1");
  const auto four = scan("4");
  if (one != four) o.fail("outputs differ");
  if (one.empty()) o.fail("empty output");
  std::filesystem::remove(path);
  o.detail = std::to_string(one.size()) + " bytes, identical";
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "closed-form spectra match the eigensolver for every family up to order 10", closed_form_suite},
      {2, "multipartite and K_{a,b}-e polynomials equal the exact characteristic polynomial", polynomial_identities},
      {3, "reference energies and forbidden-subgraph radii reproduced", reference_values},
      {4, "K_n and complete multipartite characterisations hold for all connected graphs n<=7", characterization_sweep},
      {5, "every applicable bound holds for all connected graphs n<=7", bounds_sweep},
      {6, "operation spectra agree with numeric spectra", operation_suite},
      {7, "transmission identity on Petersen and C5", transmission_identity},
      {8, "Wiener identity exact for all connected graphs n<=7", wiener_sweep},
      {9, "removing an edge from K_{a,b} increases energy", edge_deletion_sweep},
      {10, "scan output identical for --jobs 1 and --jobs 4", determinism},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail
              << "; " << std::fixed << std::setprecision(2) << secs << "s]" << std::defaultfloat << '\n';
    for (const auto& f : o.failures) std::cout << "    failed: " << f << '\n';
    failed += o.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
