#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "dseidel/errors.hpp"
#include "dseidel/exact_linalg.hpp"

namespace dseidel {

void IntSymMatrix::set(std::size_t r, std::size_t t, const BigInt& value) {
  entries_[r * n_ + t] = value;
  entries_[t * n_ + r] = value;
}

BigInt IntSymMatrix::trace() const {
  BigInt acc = 0;
  for (std::size_t r = 0; r < n_; ++r) acc += (*this)(r, r);
  return acc;
}

BigInt IntSymMatrix::trace_of_square() const {
  BigInt acc = 0;
  for (const auto& e : entries_) acc += e * e;
  return acc;
}

RealSymMatrix::RealSymMatrix(const IntSymMatrix& m) : RealSymMatrix(m.dim()) {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t t = 0; t < n_; ++t) at(r, t) = m(r, t).convert_to<double>();
  }
}

std::vector<double> jacobi_eigenvalues(const RealSymMatrix& m, double tol) {
  constexpr int kMaxSweeps = 100;
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < n; ++t) a[r * n + t] = m(r, t);
  }
  auto A = [&](std::size_t r, std::size_t t) -> double& { return a[r * n + t]; };

  double full = 0;
  for (double v : a) full += v * v;
  const double threshold = tol * (1.0 + std::sqrt(full));

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t t = 0; t < n; ++t) {
        if (r != t) s += A(r, t) * A(r, t);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > kMaxSweeps) throw InvariantViolation("Jacobi iteration did not converge in 100 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = A(r, p);
          const double arq = A(r, q);
          A(r, p) = A(p, r) = arp - s * (arq + tau * arp);
          A(r, q) = A(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = A(r, r);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> jacobi_eigenvalues(const IntSymMatrix& m, double tol) {
  return jacobi_eigenvalues(RealSymMatrix(m), tol);
}

namespace {

// Faddeev–LeVerrier over an integer type T: M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k.
template <typename T>
std::vector<BigInt> faddeev_leverrier(const IntSymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<T> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<T>(m(i / n, i % n));

  std::vector<T> coeffs{T(1)};
  std::vector<T> mk(n * n, T(0));
  std::vector<T> product(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t r = 0; r < n; ++r) mk[r * n + r] += coeffs.back();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t t = 0; t < n; ++t) {
        T acc = 0;
        for (std::size_t u = 0; u < n; ++u) acc += a[r * n + u] * mk[u * n + t];
        product[r * n + t] = acc;
      }
    }
    T tr = 0;
    for (std::size_t r = 0; r < n; ++r) tr += product[r * n + r];
    if (tr % T(k) != 0) throw InvariantViolation("Faddeev-LeVerrier: inexact division by step index");
    coeffs.push_back(-(tr / T(k)));
    mk.swap(product);
  }
  return std::vector<BigInt>(coeffs.begin(), coeffs.end());
}

}  // namespace

ExactPoly char_poly_exact(const IntSymMatrix& m) {
  if (m.dim() == 0) return ExactPoly::constant(1);
  try {
    return ExactPoly(faddeev_leverrier<boost::multiprecision::checked_int128_t>(m));
  } catch (const std::overflow_error&) {
    return ExactPoly(faddeev_leverrier<BigInt>(m));
  } catch (const std::range_error&) {
    return ExactPoly(faddeev_leverrier<BigInt>(m));
  }
}

Spectrum group_multiplicities(std::span<const double> descending, double tol) {
  Spectrum out;
  out.tolerance = tol;
  out.eigenvalues.assign(descending.begin(), descending.end());
  double sum = 0;
  std::size_t count = 0;
  for (double v : descending) {
    if (count > 0) {
      const double mean = sum / static_cast<double>(count);
      if (std::fabs(v - mean) <= tol * (1.0 + std::fabs(v))) {
        sum += v;
        ++count;
        out.groups.back() = {sum / static_cast<double>(count), count};
        continue;
      }
    }
    sum = v;
    count = 1;
    out.groups.push_back({v, 1});
  }
  return out;
}

double max_deviation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

}  // namespace dseidel
