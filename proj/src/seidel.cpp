#include "dseidel/seidel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dseidel {

IntSymMatrix adjacency_matrix(const Graph& g) {
  IntSymMatrix out(g.order());
  for (auto [u, v] : g.edges()) out.set(u, v, 1);
  return out;
}

IntSymMatrix seidel_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntSymMatrix out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.set(u, v, g.adjacent(u, v) ? -1 : 1);
  }
  return out;
}

IntSymMatrix distance_matrix(const DistanceMatrix& dist) {
  IntSymMatrix out(dist.n);
  for (std::size_t r = 0; r < dist.n; ++r) {
    for (std::size_t t = r + 1; t < dist.n; ++t) out.set(r, t, dist.at(r, t));
  }
  return out;
}

IntSymMatrix distance_matrix(const Graph& g) { return distance_matrix(all_pairs_distances(g)); }

IntSymMatrix distance_seidel_matrix(const DistanceMatrix& dist) {
  IntSymMatrix out(dist.n);
  for (std::size_t r = 0; r < dist.n; ++r) {
    for (std::size_t t = r + 1; t < dist.n; ++t) out.set(r, t, 1 - 2 * static_cast<long>(dist.at(r, t)));
  }
  return out;
}

IntSymMatrix distance_seidel_matrix(const Graph& g) { return distance_seidel_matrix(all_pairs_distances(g)); }

SpectralSummary summarize_matrix(const IntSymMatrix& mat, double grouping_tol) {
  SpectralSummary s;
  s.n = mat.dim();
  s.char_poly = char_poly_exact(mat);
  std::vector<double> eigs = jacobi_eigenvalues(mat);

  s.integer_spectrum = integer_roots(s.char_poly, eigs);
  if (s.integer_spectrum) {
    s.integral = true;
    std::transform(s.integer_spectrum->begin(), s.integer_spectrum->end(), eigs.begin(),
                   [](std::int64_t z) { return static_cast<double>(z); });
  } else {
    // Zero roots are exact: the trailing zero coefficients count them.
    std::size_t zeros = 0;
    const auto& c = s.char_poly.coefficients();
    while (zeros < c.size() && c[c.size() - 1 - zeros] == 0) ++zeros;
    std::vector<std::size_t> idx(eigs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return std::fabs(eigs[a]) < std::fabs(eigs[b]); });
    for (std::size_t i = 0; i < zeros; ++i) eigs[idx[i]] = 0.0;
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
  }

  for (double v : eigs) {
    s.energy += std::fabs(v);
    s.radius = std::max(s.radius, std::fabs(v));
    const bool nonnegative = s.integral ? v >= 0.0 : v >= -grouping_tol;
    if (nonnegative) {
      ++s.a_plus;
    } else {
      ++s.a_minus;
    }
  }
  s.spectrum = group_multiplicities(eigs, grouping_tol);
  return s;
}

SpectralSummary spectral_summary(const Graph& g, double grouping_tol) {
  SpectralSummary s = summarize_matrix(distance_seidel_matrix(g), grouping_tol);
  s.m = g.size();
  return s;
}

WienerCheck wiener_identity_check(const Graph& g) {
  const auto dist = all_pairs_distances(g);
  const auto inv = graph_invariants(g, dist);
  const BigInt n = g.order();
  const BigInt ds2 = distance_seidel_matrix(dist).trace_of_square();
  const BigInt d2 = distance_matrix(dist).trace_of_square();
  WienerCheck out;
  out.wiener = inv.wiener;
  out.rhs = boost::multiprecision::cpp_rational(n * (n - 1) - ds2 + 4 * d2, 8);
  out.residual = abs(boost::multiprecision::cpp_rational(BigInt(out.wiener)) - out.rhs);
  return out;
}

bool are_ds_cospectral(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return char_poly_exact(distance_seidel_matrix(a)) == char_poly_exact(distance_seidel_matrix(b));
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& g : s.groups) out.push_back({{"value", json_number(g.value)}, {"mult", g.multiplicity}});
  return out;
}

Json to_json(const SpectralSummary& s) {
  return Json{{"n", s.n},
              {"m", s.m},
              {"spectrum", spectrum_json(s.spectrum)},
              {"energy", json_number(s.energy)},
              {"radius", json_number(s.radius)},
              {"aPlus", s.a_plus},
              {"aMinus", s.a_minus},
              {"charPoly", s.char_poly.to_decimal_strings()},
              {"integral", s.integral}};
}

}  // namespace dseidel
