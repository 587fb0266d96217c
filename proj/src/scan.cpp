#include "dseidel/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "dseidel/bounds.hpp"
#include "dseidel/errors.hpp"
#include "dseidel/graph_ops.hpp"
#include "dseidel/seidel.hpp"

namespace dseidel {

namespace {

std::vector<std::string_view> split_list(std::string_view list) {
  std::vector<std::string_view> out;
  while (!list.empty()) {
    const auto cut = list.find(',');
    auto item = list.substr(0, cut);
    if (!item.empty()) out.push_back(item);
    if (cut == std::string_view::npos) break;
    list.remove_prefix(cut + 1);
  }
  return out;
}

struct Item {
  std::size_t line = 0;
  std::string text;
  bool blank = false;
  std::optional<std::string> parse_error;
  std::exception_ptr failure;

  Graph graph;
  bool connected = false;
  std::vector<BigInt> ds_poly;
  std::vector<BigInt> d_poly;
  std::vector<BigInt> a_poly;                               // regular diameter-2 graphs only
  std::optional<std::pair<std::size_t, std::size_t>> rd2;  // (n, k)
  bool integral = false;
  double energy = 0.0;
  double radius = 0.0;
  std::vector<std::string> characterization_failures;
  std::vector<std::string> bound_violations;
};

std::string describe(const BoundRecord& b) {
  std::ostringstream os;
  os.precision(12);
  os << b.name << " observed " << b.observed;
  if (b.lower) os << " lower " << *b.lower;
  if (b.upper) os << " upper " << *b.upper;
  if (b.violated()) os << " violated";
  if (b.equality_mismatch()) os << " equality " << (b.equality ? "holds" : "fails") << " but expected otherwise";
  return os.str();
}

void check_characterizations(Item& item, const SpectralSummary& s, const ScanOptions& options) {
  const std::size_t n = item.graph.order();
  if (n < 2) return;
  const double top = s.spectrum.eigenvalues.front();
  if (options.kn_characterization) {
    const bool top_is_one = std::fabs(top - 1.0) <= options.tolerance && s.char_poly.evaluate(BigInt(1)) == 0;
    const bool complete = item.graph.size() == n * (n - 1) / 2;
    if (top_is_one != complete) {
      item.characterization_failures.push_back(item.text + ": largest eigenvalue " + (top_is_one ? "is" : "is not") +
                                               " 1 but the graph is " + (complete ? "" : "not ") + "complete");
    }
  }
  if (options.multipartite_characterization) {
    const bool top_is_three = std::fabs(top - 3.0) <= options.tolerance && s.char_poly.evaluate(BigInt(3)) == 0;
    const auto parts = is_complete_multipartite(item.graph);
    const bool multipartite = parts && !parts->complete_graph;
    if (top_is_three != multipartite) {
      item.characterization_failures.push_back(item.text + ": largest eigenvalue " +
                                               (top_is_three ? "is" : "is not") + " 3 but the graph is " +
                                               (multipartite ? "" : "not ") + "complete multipartite");
    } else if (multipartite) {
      const std::size_t mult = s.char_poly.root_multiplicity(3);
      const std::size_t q = parts->parts.size();
      if (mult != n - q) {
        item.characterization_failures.push_back(item.text + ": eigenvalue 3 has multiplicity " + std::to_string(mult) +
                                                 ", expected n - q = " + std::to_string(n - q));
      }
    }
  }
}

void process(Item& item, const ScanOptions& options) {
  try {
    item.graph = parse_graph6(item.text);
  } catch (const ParseError& e) {
    item.parse_error = e.what();
    return;
  }
  item.connected = is_connected(item.graph);
  if (!item.connected) return;

  const auto dist = all_pairs_distances(item.graph);
  const auto s = summarize_matrix(distance_seidel_matrix(dist), options.tolerance);
  item.ds_poly = s.char_poly.coefficients();
  item.integral = s.integral;
  item.energy = s.energy;
  item.radius = s.radius;
  if (options.distance_cospectral) item.d_poly = char_poly_exact(distance_matrix(dist)).coefficients();

  check_characterizations(item, s, options);

  if (options.bounds && item.graph.order() >= 2) {
    for (const auto* b : evaluate_bounds(item.graph, options.tolerance).violations()) {
      item.bound_violations.push_back(item.text + ": " + describe(*b));
    }
  }

  if (options.regular_diameter2 && is_regular(item.graph) && graph_invariants(item.graph, dist).diameter == 2) {
    item.rd2 = std::make_pair(item.graph.order(), item.graph.degree(0));
    item.a_poly = char_poly_exact(adjacency_matrix(item.graph)).coefficients();
  }
}

void run_pool(std::vector<Item>& items, const ScanOptions& options) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.jobs, items.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      if (items[i].blank) continue;
      try {
        process(items[i], options);
      } catch (...) {
        items[i].failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
}

// Groups indices by exact polynomial; classes of size ≥ 2 in first-occurrence order.
std::vector<std::vector<std::size_t>> classes_by(const std::vector<Item>& items,
                                                 std::vector<BigInt> Item::*poly) {
  std::map<std::vector<BigInt>, std::size_t> index;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.blank || it.parse_error || !it.connected) continue;
    auto [pos, inserted] = index.emplace(it.*poly, groups.size());
    if (inserted) groups.emplace_back();
    groups[pos->second].push_back(i);
  }
  std::erase_if(groups, [](const auto& g) { return g.size() < 2; });
  return groups;
}

std::vector<std::string> names_of(const std::vector<Item>& items, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(items[i].text);
  return out;
}

}  // namespace

void apply_find_list(ScanOptions& options, std::string_view list) {
  options.cospectral = options.integral = options.distance_cospectral = false;
  for (auto item : split_list(list)) {
    if (item == "cospectral") {
      options.cospectral = true;
    } else if (item == "integral") {
      options.integral = true;
    } else if (item == "distance-cospectral") {
      options.distance_cospectral = true;
    } else {
      throw InvalidParameters("unknown --find item '" + std::string(item) + "'");
    }
  }
}

void apply_verify_list(ScanOptions& options, std::string_view list) {
  for (auto item : split_list(list)) {
    if (item == "kn-characterization") {
      options.kn_characterization = true;
    } else if (item == "multipartite-characterization") {
      options.multipartite_characterization = true;
    } else if (item == "bounds") {
      options.bounds = true;
    } else if (item == "regular-diameter2") {
      options.regular_diameter2 = true;
    } else if (item == "operations") {
      options.operations = true;
    } else {
      throw InvalidParameters("unknown --verify item '" + std::string(item) + "'");
    }
  }
}

ScanReport scan_catalog(std::span<const std::string> lines, const ScanOptions& options) {
  std::vector<Item> items(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view text = lines[i];
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    items[i].line = i + 1;
    items[i].text = std::string(text);
    items[i].blank = text.empty();
  }
  run_pool(items, options);

  ScanReport report;
  for (auto& it : items) {
    if (it.failure) std::rethrow_exception(it.failure);
    if (it.blank) continue;
    ++report.total;
    if (it.parse_error) {
      report.parse_errors.push_back({it.line, *it.parse_error});
      continue;
    }
    if (!it.connected) {
      ++report.disconnected;
      continue;
    }
    ++report.connected;
    if (options.integral && it.integral) report.integral_graphs.push_back(it.text);
    report.characterization_failures.insert(report.characterization_failures.end(),
                                            it.characterization_failures.begin(), it.characterization_failures.end());
    report.bound_violations.insert(report.bound_violations.end(), it.bound_violations.begin(),
                                   it.bound_violations.end());
    report.rows.push_back({it.text, it.energy, it.radius, it.integral});
  }

  const auto ds_classes = classes_by(items, &Item::ds_poly);
  if (options.cospectral) {
    for (const auto& c : ds_classes) report.cospectral_classes.push_back(names_of(items, c));
  }
  std::vector<std::vector<std::size_t>> d_classes;
  if (options.distance_cospectral) {
    d_classes = classes_by(items, &Item::d_poly);
    for (const auto& c : d_classes) report.distance_cospectral_classes.push_back(names_of(items, c));
  }

  if (options.regular_diameter2) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].rd2) groups[*items[i].rd2].push_back(i);
    }
    for (const auto& [key, idx] : groups) {
      for (std::size_t x = 0; x < idx.size(); ++x) {
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
          const auto& a = items[idx[x]];
          const auto& b = items[idx[y]];
          const bool ds_equal = a.ds_poly == b.ds_poly;
          const bool a_equal = a.a_poly == b.a_poly;
          if (ds_equal != a_equal) {
            report.regular_diameter2_mismatches.push_back(a.text + " " + b.text + ": D^S-cospectral " +
                                                          (ds_equal ? "yes" : "no") + ", A-cospectral " +
                                                          (a_equal ? "yes" : "no"));
          }
        }
      }
    }
  }

  if (options.operations) {
    std::vector<std::pair<Graph, Graph>> pairs;
    for (const auto& c : ds_classes) pairs.emplace_back(items[c[0]].graph, items[c[1]].graph);
    report.operation_checks = verify_operation_corollaries(pairs, false);
    pairs.clear();
    for (const auto& c : d_classes) pairs.emplace_back(items[c[0]].graph, items[c[1]].graph);
    for (auto& check : verify_operation_corollaries(pairs, true)) report.operation_checks.push_back(std::move(check));
  }
  return report;
}

ScanReport scan_catalog(std::istream& in, const ScanOptions& options) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return scan_catalog(lines, options);
}

std::vector<CorollaryCheck> verify_operation_corollaries(std::span<const std::pair<Graph, Graph>> pairs,
                                                         bool include_prism) {
  std::vector<CorollaryCheck> out;
  for (const auto& [g, h] : pairs) {
    CorollaryCheck c;
    c.first = encode_graph6(g);
    c.second = encode_graph6(h);
    c.lex_cospectral = are_ds_cospectral(lex_k2(g), lex_k2(h));
    c.double_cospectral = are_ds_cospectral(double_graph(g), double_graph(h));
    if (include_prism) c.prism_cospectral = are_ds_cospectral(prism(g), prism(h));
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const ScanReport& r) {
  Json parse_errors = Json::array();
  for (const auto& e : r.parse_errors) parse_errors.push_back({{"line", e.line}, {"message", e.message}});
  Json checks = Json::array();
  for (const auto& c : r.operation_checks) {
    Json j{{"first", c.first}, {"second", c.second}, {"lexCospectral", c.lex_cospectral},
           {"doubleCospectral", c.double_cospectral}};
    if (c.prism_cospectral) j["prismCospectral"] = *c.prism_cospectral;
    checks.push_back(j);
  }
  return Json{{"total", r.total},
              {"connected", r.connected},
              {"disconnected", r.disconnected},
              {"parseErrors", parse_errors},
              {"cospectralClasses", r.cospectral_classes},
              {"distanceCospectralClasses", r.distance_cospectral_classes},
              {"integralGraphs", r.integral_graphs},
              {"characterizationFailures", r.characterization_failures},
              {"boundViolations", r.bound_violations},
              {"regularDiameter2Mismatches", r.regular_diameter2_mismatches},
              {"operationChecks", checks}};
}

std::string to_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "graph6,energy,radius,integral\n";
  for (const auto& row : r.rows) {
    // graph6 bytes lie in 63..126, so fields never need quoting.
    os << row.graph6 << ',' << Json(json_number(row.energy)).dump() << ',' << Json(json_number(row.radius)).dump()
       << ',' << (row.integral ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace dseidel
