#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dseidel {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kDefaultJacobiTolerance = 1e-12;
inline constexpr double kDefaultGroupingTolerance = 1e-7;

/// Dense symmetric matrix of arbitrary-precision integers.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t dim() const { return n_; }
  const BigInt& operator()(std::size_t r, std::size_t t) const { return entries_[r * n_ + t]; }
  /// Writes both (r, t) and (t, r).
  void set(std::size_t r, std::size_t t, const BigInt& value);

  BigInt trace() const;
  /// trace(M²) = Σ entries², exact.
  BigInt trace_of_square() const;

  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

/// Dense symmetric real matrix, row-major. Input to the Jacobi solver.
class RealSymMatrix {
 public:
  RealSymMatrix() = default;
  explicit RealSymMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}
  explicit RealSymMatrix(const IntSymMatrix& m);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t r, std::size_t t) const { return entries_[r * n_ + t]; }
  double& at(std::size_t r, std::size_t t) { return entries_[r * n_ + t]; }
  void set(std::size_t r, std::size_t t, double value) { at(r, t) = value, at(t, r) = value; }

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// Integer polynomial, coefficients stored degree-descending. The zero polynomial has no coefficients.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<BigInt> descending);

  static ExactPoly constant(const BigInt& c) { return ExactPoly({c}); }
  /// x − root
  static ExactPoly linear(const BigInt& root) { return ExactPoly({1, -root}); }

  bool is_zero() const { return coefficients_.empty(); }
  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  const BigInt& leading() const { return coefficients_.front(); }
  /// Coefficient of x^power (zero when above the degree).
  BigInt coefficient(std::size_t power) const;

  BigInt evaluate(const BigInt& x) const;
  long double evaluate(long double x) const;
  ExactPoly derivative() const;
  ExactPoly pow(std::size_t e) const;

  /// Exact quotient by (x − root), or nullopt when root is not a root.
  std::optional<ExactPoly> divide_by_root(const BigInt& root) const;
  std::size_t root_multiplicity(const BigInt& root) const;

  std::vector<std::string> to_decimal_strings() const;
  std::string to_string() const;

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const BigInt& k, const ExactPoly& p);
  friend ExactPoly operator-(const ExactPoly& p) { return BigInt(-1) * p; }
  friend bool operator==(const ExactPoly&, const ExactPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> coefficients_;
};

struct EigenGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Eigenvalues sorted descending, grouped into clusters of numerically equal values.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<EigenGroup> groups;
  double tolerance = kDefaultGroupingTolerance;
};

/// Cyclic-by-row Jacobi. Sweeps until ‖offdiag‖_F ≤ tol·(1 + ‖M‖_F); throws
/// InvariantViolation after 100 sweeps. Result sorted descending.
std::vector<double> jacobi_eigenvalues(const RealSymMatrix& m, double tol = kDefaultJacobiTolerance);
std::vector<double> jacobi_eigenvalues(const IntSymMatrix& m, double tol = kDefaultJacobiTolerance);

/// det(xI − M) by the Faddeev–LeVerrier recurrence in exact integer arithmetic.
ExactPoly char_poly_exact(const IntSymMatrix& m);

/// Greedy clustering of a descending list; a value joins the current group while its
/// distance to the group mean is at most tol·(1 + |value|).
Spectrum group_multiplicities(std::span<const double> descending, double tol = kDefaultGroupingTolerance);

/// Largest |a_i − b_i| over two equally long lists (both sorted the same way).
double max_deviation(std::span<const double> a, std::span<const double> b);

/// All roots of a polynomial whose roots are all real, descending, with multiplicity.
/// Multiple roots are split off exactly through gcd(p, p'); simple roots are bracketed by
/// the critical points and bisected. Throws InvariantViolation when p is not real-rooted.
std::vector<double> real_roots(const ExactPoly& p);

/// The integer root multiset (descending) iff p splits into integer linear factors.
/// Candidates come from `approximate_roots` when given, else from real_roots(p); each is
/// rounded and confirmed by exact deflation.
std::optional<std::vector<std::int64_t>> integer_roots(const ExactPoly& p,
                                                       std::span<const double> approximate_roots = {});

}  // namespace dseidel
