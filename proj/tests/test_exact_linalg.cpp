#include <doctest.h>

#include <cmath>
#include <random>

#include "dseidel/errors.hpp"
#include "dseidel/exact_linalg.hpp"
#include "dseidel/seidel.hpp"
#include "fixtures.hpp"

using namespace dseidel;
using dseidel::testing::shifted_determinant;

namespace {

ExactPoly poly(std::initializer_list<long long> descending) {
  std::vector<BigInt> c;
  for (auto v : descending) c.emplace_back(v);
  return ExactPoly(std::move(c));
}

IntSymMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntSymMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t t = r; t < rows.size(); ++t) m.set(r, t, rows[r][t]);
  }
  return m;
}

}  // namespace

TEST_SUITE("exact-linalg") {
  TEST_CASE("polynomial arithmetic") {
    const auto p = ExactPoly::linear(3) * ExactPoly::linear(-1);
    CHECK(p == poly({1, -2, -3}));
    CHECK(p.derivative() == poly({2, -2}));
    CHECK(p.evaluate(BigInt(3)) == 0);
    CHECK(p.coefficient(0) == -3);
    CHECK(p.coefficient(7) == 0);
    CHECK(ExactPoly::linear(2).pow(3) == poly({1, -6, 12, -8}));
    CHECK((p - p).is_zero());
    CHECK(p.divide_by_root(BigInt(3)) == ExactPoly::linear(-1));
    CHECK_FALSE(p.divide_by_root(BigInt(2)));
    CHECK((ExactPoly::linear(3).pow(4) * p).root_multiplicity(BigInt(3)) == 5);
    CHECK(ExactPoly().to_decimal_strings() == std::vector<std::string>{"0"});
  }

  TEST_CASE("jacobi on fixed matrices") {
    const auto k4 = jacobi_eigenvalues(distance_seidel_matrix(complete_graph(4)));
    REQUIRE(k4.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(k4[i] - 1.0) < 1e-10);
    CHECK(std::fabs(k4[3] + 3.0) < 1e-10);

    const auto p3 = jacobi_eigenvalues(from_rows({{0, -1, -3}, {-1, 0, -1}, {-3, -1, 0}}));
    CHECK(std::fabs(p3[0] - 3.0) < 1e-10);
    CHECK(std::fabs(p3[1] - (-3.0 + std::sqrt(17.0)) / 2) < 1e-10);
    CHECK(std::fabs(p3[2] - (-3.0 - std::sqrt(17.0)) / 2) < 1e-10);

    const auto zero = jacobi_eigenvalues(IntSymMatrix(3));
    CHECK(zero == std::vector<double>{0.0, 0.0, 0.0});
  }

  TEST_CASE("characteristic polynomial of small matrices") {
    CHECK(char_poly_exact(from_rows({{0, -1}, {-1, 0}})) == poly({1, 0, -1}));
    CHECK(char_poly_exact(from_rows({{0, -1, -3}, {-1, 0, -1}, {-3, -1, 0}})) == poly({1, 0, -11, 6}));
    const auto c4 = ExactPoly::linear(3).pow(2) * ExactPoly::linear(-1) * ExactPoly::linear(-5);
    CHECK(char_poly_exact(distance_seidel_matrix(cycle_graph(4))) == c4);
    CHECK(char_poly_exact(IntSymMatrix(0)) == poly({1}));
  }

  TEST_CASE("characteristic polynomial agrees with Bareiss determinants") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t n = 1; n <= 9; ++n) {
      IntSymMatrix m(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t t = r; t < n; ++t) m.set(r, t, entry(rng));
      }
      const auto p = char_poly_exact(m);
      REQUIRE(p.degree() == n);
      for (long long x = -3; x <= static_cast<long long>(n); ++x) CHECK(p.evaluate(BigInt(x)) == shifted_determinant(m, x));
    }
  }

  TEST_CASE("characteristic polynomial survives 128-bit overflow") {
    IntSymMatrix m(6);
    const BigInt big("1000000000000000");
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t t = r; t < 6; ++t) m.set(r, t, big * static_cast<long long>(r + 2 * t + 1));
    }
    const auto p = char_poly_exact(m);
    for (long long x : {-2, 0, 1, 5}) CHECK(p.evaluate(BigInt(x)) == shifted_determinant(m, x));
  }

  TEST_CASE("distance Seidel polynomials of the n=6 catalog match Bareiss at n+1 points") {
    for (const auto& g : enumerate_connected_graphs(6)) {
      const auto m = distance_seidel_matrix(g);
      const auto p = char_poly_exact(m);
      for (long long x = -3; x <= 3; ++x) CHECK(p.evaluate(BigInt(x)) == shifted_determinant(m, x));
    }
  }

  TEST_CASE("grouping") {
    const std::vector<double> a{3.0000000001, 2.9999999999, -6};
    const auto ga = group_multiplicities(a);
    REQUIRE(ga.groups.size() == 2);
    CHECK(ga.groups[0].multiplicity == 2);
    CHECK(ga.groups[0].value == doctest::Approx(3.0));
    CHECK(ga.groups[1].multiplicity == 1);

    const std::vector<double> pet{5, 5, 5, 5, 5, -1, -1, -1, -1, -21};
    const auto gp = group_multiplicities(pet);
    REQUIRE(gp.groups.size() == 3);
    CHECK(gp.groups[0].multiplicity == 5);
    CHECK(gp.groups[1].multiplicity == 4);
    CHECK(gp.groups[2].multiplicity == 1);
    CHECK(gp.groups[2].value == -21);
  }

  TEST_CASE("max deviation") {
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{1, 2.5, 3};
    const std::vector<double> c{1, 2};
    CHECK(max_deviation(a, b) == doctest::Approx(0.5));
    CHECK(std::isinf(max_deviation(a, c)));
  }

  TEST_CASE("real roots") {
    const auto r = real_roots(poly({1, 0, -11, 6}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(3.0));
    CHECK(r[1] == doctest::Approx((-3 + std::sqrt(17.0)) / 2));
    CHECK(r[2] == doctest::Approx((-3 - std::sqrt(17.0)) / 2));

    const auto repeated = real_roots(ExactPoly::linear(3).pow(4) * poly({1, 0, -2}));
    REQUIRE(repeated.size() == 6);
    CHECK(repeated[0] == doctest::Approx(3.0));
    CHECK(repeated[3] == doctest::Approx(3.0));
    CHECK(repeated[4] == doctest::Approx(std::sqrt(2.0)));
    CHECK(repeated[5] == doctest::Approx(-std::sqrt(2.0)));

    CHECK_THROWS_AS(real_roots(poly({1, 0, 1})), InvariantViolation);
  }

  TEST_CASE("integer roots") {
    CHECK(integer_roots(poly({1, 0, -1})) == std::vector<std::int64_t>{1, -1});
    const auto c4 = ExactPoly::linear(3).pow(2) * ExactPoly::linear(-1) * ExactPoly::linear(-5);
    CHECK(integer_roots(c4) == std::vector<std::int64_t>{3, 3, -1, -5});
    CHECK_FALSE(integer_roots(poly({1, 0, -11, 6})));
    const std::vector<double> hints{3.0000001, 2.9999999, -0.9999, -5.0002};
    CHECK(integer_roots(c4, hints) == std::vector<std::int64_t>{3, 3, -1, -5});
  }
}
