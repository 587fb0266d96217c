#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseidel/exact_linalg.hpp"
#include "dseidel/graph.hpp"
#include "dseidel/json_io.hpp"
#include "dseidel/seidel.hpp"

namespace dseidel {

/// Endpoint slack for hypotheses of the form "∂ ∉ (a, b)" and for equality detection.
inline constexpr double kHypothesisTolerance = 1e-7;

struct BoundRecord {
  std::string name;
  std::optional<double> lower;
  std::optional<double> upper;
  double observed = 0.0;
  bool satisfied = true;
  bool equality = false;
  /// Set when the statement characterises its equality case; compared against `equality`.
  std::optional<bool> equality_expected;
  bool hypothesis_ok = true;

  bool violated() const { return hypothesis_ok && !satisfied; }
  bool equality_mismatch() const { return hypothesis_ok && equality_expected && *equality_expected != equality; }
};

/// Everything the bound formulas read, computed once per graph.
struct BoundsContext {
  Graph graph;
  DistanceMatrix dist;
  GraphInvariants invariants;
  SpectralSummary ds;                 // D^S
  SpectralSummary distance;           // D
  std::vector<double> adjacency;      // A eigenvalues, descending
  std::vector<std::int64_t> row_sums;  // Σ_{t≠r} (2 d_rt − 1)
  BigInt t_sum;                        // T = Σ_{r<t} (1 − 2 d_rt)²
  BigInt det;                          // det D^S
};

BoundsContext make_bounds_context(const Graph& g, double grouping_tol = kDefaultGroupingTolerance);

std::vector<BoundRecord> radius_bounds(const BoundsContext& ctx);
std::vector<BoundRecord> energy_bounds(const BoundsContext& ctx);
std::vector<BoundRecord> interlacing_checks(const BoundsContext& ctx);

struct BoundsReport {
  std::vector<BoundRecord> bounds;
  std::vector<std::int64_t> row_sums;
  BigInt t_sum;
  std::size_t a_plus = 0;  // nonnegative D eigenvalues
  std::size_t a_minus = 0;
  double distance_energy = 0.0;  // Σ |∂_r|
  BigInt det;
  BigInt det_abs;

  std::vector<const BoundRecord*> violations() const;  // including equality mismatches
};

/// Radius, energy and interlacing records for a connected graph of order ≥ 2.
BoundsReport evaluate_bounds(const Graph& g, double grouping_tol = kDefaultGroupingTolerance);

/// |det|^{2/n} evaluated in 50-digit floating point, so huge determinants do not overflow.
double det_power(const BigInt& det_abs, std::size_t n);

struct EdgeDeletionRecord {
  std::size_t a = 0;
  std::size_t b = 0;
  double energy_before = 0.0;  // K_{a,b}
  double energy_after = 0.0;   // K_{a,b} − e
  bool increased = false;
};
EdgeDeletionRecord check_kab_edge_deletion(std::size_t a, std::size_t b);

Json to_json(const BoundRecord& r);
Json to_json(const BoundsReport& r);
Json to_json(const EdgeDeletionRecord& r);

}  // namespace dseidel
