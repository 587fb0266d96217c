#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <sstream>

#include "dseidel/errors.hpp"
#include "dseidel/exact_linalg.hpp"

namespace dseidel {

using Rational = boost::multiprecision::cpp_rational;

ExactPoly::ExactPoly(std::vector<BigInt> descending) : coefficients_(std::move(descending)) { normalize(); }

void ExactPoly::normalize() {
  auto first = std::find_if(coefficients_.begin(), coefficients_.end(), [](const BigInt& c) { return c != 0; });
  coefficients_.erase(coefficients_.begin(), first);
}

BigInt ExactPoly::coefficient(std::size_t power) const {
  if (coefficients_.empty() || power > degree()) return 0;
  return coefficients_[degree() - power];
}

BigInt ExactPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (const auto& c : coefficients_) acc = acc * x + c;
  return acc;
}

long double ExactPoly::evaluate(long double x) const {
  long double acc = 0;
  for (const auto& c : coefficients_) acc = acc * x + c.convert_to<long double>();
  return acc;
}

ExactPoly ExactPoly::derivative() const {
  std::vector<BigInt> out;
  const std::size_t d = degree();
  for (std::size_t i = 0; i + 1 < coefficients_.size(); ++i) out.push_back(coefficients_[i] * BigInt(d - i));
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::pow(std::size_t e) const {
  ExactPoly result = constant(1);
  for (std::size_t i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::optional<ExactPoly> ExactPoly::divide_by_root(const BigInt& root) const {
  if (coefficients_.empty()) return ExactPoly();
  std::vector<BigInt> quotient;
  quotient.reserve(coefficients_.size());
  BigInt acc = 0;
  for (const auto& c : coefficients_) {
    acc = acc * root + c;
    quotient.push_back(acc);
  }
  if (quotient.back() != 0) return std::nullopt;
  quotient.pop_back();
  return ExactPoly(std::move(quotient));
}

std::size_t ExactPoly::root_multiplicity(const BigInt& root) const {
  if (coefficients_.empty()) return 0;
  std::size_t mult = 0;
  ExactPoly current = *this;
  while (current.degree() > 0) {
    auto next = current.divide_by_root(root);
    if (!next) break;
    current = std::move(*next);
    ++mult;
  }
  return mult;
}

std::vector<std::string> ExactPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c.str());
  if (out.empty()) out.push_back("0");
  return out;
}

std::string ExactPoly::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  const std::size_t d = degree();
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    const std::size_t power = d - i;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || power == 0) os << mag;
    if (power >= 1) os << "x";
    if (power >= 2) os << "^" << power;
    first = false;
  }
  return os.str();
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  const std::size_t len = std::max(a.coefficients_.size(), b.coefficients_.size());
  std::vector<BigInt> out(len, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[len - a.coefficients_.size() + i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[len - b.coefficients_.size() + i] += b.coefficients_[i];
  return ExactPoly(std::move(out));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return a + BigInt(-1) * b; }

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return ExactPoly();
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return ExactPoly(std::move(out));
}

ExactPoly operator*(const BigInt& k, const ExactPoly& p) {
  std::vector<BigInt> out = p.coefficients_;
  for (auto& c : out) c *= k;
  return ExactPoly(std::move(out));
}

namespace {

// Rational polynomial, degree-descending, no leading zeros.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  auto first = std::find_if(p.begin(), p.end(), [](const Rational& c) { return c != 0; });
  p.erase(p.begin(), first);
}

RatPoly to_rational(const ExactPoly& p) { return RatPoly(p.coefficients().begin(), p.coefficients().end()); }

// Remainder of a / b (b nonzero).
RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.front() / b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
    trim(a);
  }
  return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
  RatPoly q;
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.front() / b.front();
    q.push_back(factor);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
  }
  trim(a);
  if (!a.empty()) throw InvariantViolation("polynomial quotient is not exact");
  return q;
}

RatPoly monic(RatPoly p) {
  const Rational lead = p.front();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  const std::size_t d = p.size() - 1;
  for (std::size_t i = 0; i < d; ++i) out.push_back(p[i] * Rational(d - i));
  trim(out);
  return out;
}

long double eval(const std::vector<long double>& p, long double x) {
  long double acc = 0;
  for (long double c : p) acc = acc * x + c;
  return acc;
}

// Roots of a squarefree real-rooted polynomial, ascending. Roots of p' separate roots of p.
std::vector<long double> simple_roots(const RatPoly& p) {
  const std::size_t degree = p.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {static_cast<long double>((-p[1] / p[0]).convert_to<long double>())};

  std::vector<long double> coeffs;
  for (const auto& c : p) coeffs.push_back(c.convert_to<long double>());
  long double bound = 0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) bound = std::max(bound, std::fabs(coeffs[i] / coeffs[0]));
  bound += 1;

  std::vector<long double> marks{-bound};
  for (long double c : simple_roots(derivative(p))) marks.push_back(c);
  marks.push_back(bound);

  std::vector<long double> roots;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    long double lo = marks[i];
    long double hi = marks[i + 1];
    long double flo = eval(coeffs, lo);
    long double fhi = eval(coeffs, hi);
    if (flo == 0) {
      if (roots.empty() || roots.back() != lo) roots.push_back(lo);
      continue;
    }
    if (fhi == 0) {
      roots.push_back(hi);
      continue;
    }
    if ((flo < 0) == (fhi < 0)) continue;
    for (int iter = 0; iter < 200; ++iter) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid == lo || mid == hi) break;
      const long double fmid = eval(coeffs, mid);
      if (fmid == 0) {
        lo = hi = mid;
        break;
      }
      if ((fmid < 0) == (flo < 0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(lo + (hi - lo) / 2);
  }
  if (roots.size() != degree) throw InvariantViolation("polynomial is not real-rooted");
  return roots;
}

// p = (p / gcd(p, p')) · gcd(p, p'): squarefree part carries each root once, the gcd the rest.
std::vector<long double> all_real_roots(const RatPoly& p) {
  if (p.size() <= 1) return {};
  const RatPoly g = gcd(p, derivative(p));
  const RatPoly squarefree = quotient(p, g);
  auto roots = simple_roots(squarefree);
  auto repeated = all_real_roots(g);
  roots.insert(roots.end(), repeated.begin(), repeated.end());
  return roots;
}

}  // namespace

std::vector<double> real_roots(const ExactPoly& p) {
  if (p.is_zero()) throw InvariantViolation("zero polynomial has no finite root set");
  const auto roots = all_real_roots(to_rational(p));
  std::vector<double> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<std::vector<std::int64_t>> integer_roots(const ExactPoly& p, std::span<const double> approximate_roots) {
  std::vector<double> candidates;
  if (approximate_roots.empty()) {
    candidates = real_roots(p);
  } else {
    candidates.assign(approximate_roots.begin(), approximate_roots.end());
  }
  ExactPoly rest = p;
  std::vector<std::int64_t> roots;
  for (double c : candidates) {
    if (!std::isfinite(c)) return std::nullopt;
    const auto z = static_cast<std::int64_t>(std::llround(c));
    auto next = rest.divide_by_root(BigInt(z));
    if (!next) return std::nullopt;
    rest = std::move(*next);
    roots.push_back(z);
  }
  if (rest.degree() != 0) return std::nullopt;
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace dseidel
