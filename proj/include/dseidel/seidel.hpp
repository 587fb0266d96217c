#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dseidel/exact_linalg.hpp"
#include "dseidel/graph.hpp"
#include "dseidel/json_io.hpp"

namespace dseidel {

// The four matrices. Distance-based ones throw DisconnectedGraph.
IntSymMatrix adjacency_matrix(const Graph& g);
IntSymMatrix seidel_matrix(const Graph& g);  // J − I − 2A
IntSymMatrix distance_matrix(const Graph& g);
IntSymMatrix distance_matrix(const DistanceMatrix& dist);
IntSymMatrix distance_seidel_matrix(const Graph& g);  // J − I − 2D
IntSymMatrix distance_seidel_matrix(const DistanceMatrix& dist);

/// Spectrum plus the exact data derived from the characteristic polynomial.
struct SpectralSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  Spectrum spectrum;
  double energy = 0.0;
  double radius = 0.0;
  std::size_t a_plus = 0;   // eigenvalues ≥ 0
  std::size_t a_minus = 0;  // eigenvalues < 0
  ExactPoly char_poly;
  bool integral = false;
  std::optional<std::vector<std::int64_t>> integer_spectrum;  // descending, set iff integral
};

/// Works for any integer symmetric matrix; m is left 0. An exact zero root of the
/// characteristic polynomial pins the nearest numeric eigenvalues to 0, and an integral
/// polynomial replaces the numeric eigenvalues by its integer roots.
SpectralSummary summarize_matrix(const IntSymMatrix& mat, double grouping_tol = kDefaultGroupingTolerance);

/// D^S summary of a connected graph.
SpectralSummary spectral_summary(const Graph& g, double grouping_tol = kDefaultGroupingTolerance);

struct WienerCheck {
  std::uint64_t wiener = 0;
  boost::multiprecision::cpp_rational rhs;  // (n(n−1) − tr((D^S)²) + 4 tr(D²)) / 8
  boost::multiprecision::cpp_rational residual;
  bool exact() const { return residual == 0; }
};
WienerCheck wiener_identity_check(const Graph& g);

/// Exact equality of D^S characteristic polynomials; graphs of different order are never cospectral.
bool are_ds_cospectral(const Graph& a, const Graph& b);

Json spectrum_json(const Spectrum& s);
Json to_json(const SpectralSummary& s);

}  // namespace dseidel
