#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "dseidel/exact_linalg.hpp"
#include "dseidel/graph.hpp"

namespace dseidel::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph(n, list);
}

// Induced subgraphs that force diameter above 2 in the interlacing characterisations.
inline Graph fixture_f1() { return make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}}); }
inline Graph fixture_f2() { return make_graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 1}}); }
inline Graph fixture_f3() { return path_graph(4); }
inline Graph fixture_f4() { return cycle_graph(5); }

/// Fraction-free Gaussian elimination; exact determinant of an integer matrix.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det(xI − M) by Bareiss, for cross-checking the characteristic polynomial at a point.
inline BigInt shifted_determinant(const IntSymMatrix& m, const BigInt& x) {
  std::vector<std::vector<BigInt>> a(m.dim(), std::vector<BigInt>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t t = 0; t < m.dim(); ++t) a[r][t] = (r == t ? x : BigInt(0)) - m(r, t);
  }
  return bareiss_determinant(std::move(a));
}

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace dseidel::testing
