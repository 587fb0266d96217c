#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dseidel/exact_linalg.hpp"
#include "dseidel/graph.hpp"
#include "dseidel/json_io.hpp"

namespace dseidel {

struct ScanOptions {
  // find
  bool cospectral = true;
  bool integral = true;
  bool distance_cospectral = false;
  // verify
  bool kn_characterization = false;
  bool multipartite_characterization = false;
  bool bounds = false;
  /// Equal-degree regular diameter-2 graphs: D^S-cospectral iff A-cospectral.
  bool regular_diameter2 = false;
  /// Lex and double images of the first two members of every cospectral class (prism for
  /// distance-cospectral classes) must again be D^S-cospectral.
  bool operations = false;

  std::size_t jobs = 1;
  double tolerance = kDefaultGroupingTolerance;
};

/// Parses comma-separated --find / --verify lists into the options; throws InvalidParameters.
void apply_find_list(ScanOptions& options, std::string_view list);
void apply_verify_list(ScanOptions& options, std::string_view list);

struct ScanParseError {
  std::size_t line = 0;
  std::string message;
};

struct CsvRow {
  std::string graph6;
  double energy = 0.0;
  double radius = 0.0;
  bool integral = false;
};

struct CorollaryCheck {
  std::string first;
  std::string second;
  bool lex_cospectral = false;
  bool double_cospectral = false;
  std::optional<bool> prism_cospectral;  // only for distance-cospectral pairs
  bool passed() const { return lex_cospectral && double_cospectral && prism_cospectral.value_or(true); }
};

struct ScanReport {
  std::size_t total = 0;
  std::size_t connected = 0;
  std::size_t disconnected = 0;
  std::vector<ScanParseError> parse_errors;
  std::vector<std::vector<std::string>> cospectral_classes;  // ordered by first occurrence
  std::vector<std::vector<std::string>> distance_cospectral_classes;
  std::vector<std::string> integral_graphs;
  std::vector<std::string> characterization_failures;
  std::vector<std::string> bound_violations;
  std::vector<std::string> regular_diameter2_mismatches;
  std::vector<CorollaryCheck> operation_checks;
  std::vector<CsvRow> rows;  // one per connected graph, input order
};

/// Lines are graph6 records (blank lines skipped). Per-graph work runs on `jobs`
/// threads; results are merged in input order, so the report does not depend on `jobs`.
ScanReport scan_catalog(std::span<const std::string> lines, const ScanOptions& options);
ScanReport scan_catalog(std::istream& in, const ScanOptions& options);

/// For each pair: both lex images and both double images are D^S-cospectral; with
/// `include_prism` the prism images too (meaningful for distance-cospectral pairs).
std::vector<CorollaryCheck> verify_operation_corollaries(std::span<const std::pair<Graph, Graph>> pairs,
                                                         bool include_prism = false);

Json to_json(const ScanReport& r);
std::string to_csv(const ScanReport& r);

}  // namespace dseidel
