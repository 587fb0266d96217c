#include <doctest.h>

#include <cmath>
#include <string>

#include "dseidel/bounds.hpp"
#include "dseidel/errors.hpp"
#include "fixtures.hpp"

using namespace dseidel;

namespace {

const BoundRecord& find(const BoundsReport& r, const std::string& name) {
  for (const auto& b : r.bounds) {
    if (b.name == name) return b;
  }
  FAIL("missing record " << name);
  return r.bounds.front();
}

bool has_prefix(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("K22 degree lower bound is tight") {
    const auto r = evaluate_bounds(cycle_graph(4));
    const auto& rec = find(r, "radius-degree-lower");
    CHECK(rec.hypothesis_ok);
    CHECK(rec.lower.value() == doctest::Approx(5.0));
    CHECK(rec.observed == doctest::Approx(5.0));
    CHECK(rec.equality);
    CHECK(rec.equality_expected == true);
  }

  TEST_CASE("K4 row sum bounds are tight") {
    const auto r = evaluate_bounds(complete_graph(4));
    CHECK(find(r, "radius-rowsum-upper").upper.value() == doctest::Approx(3.0));
    CHECK(find(r, "radius-rowsum-upper").equality);
    CHECK(find(r, "radius-rowsum-lower").equality);
    CHECK(r.row_sums == std::vector<std::int64_t>{3, 3, 3, 3});
  }

  TEST_CASE("K23 bipartite bound") {
    const auto r = evaluate_bounds(complete_bipartite_graph(2, 3));
    const auto& rec = find(r, "radius-bipartite-lower");
    CHECK(rec.hypothesis_ok);
    CHECK(rec.lower.value() == doctest::Approx((9 + std::sqrt(33.0)) / 2));
    CHECK(rec.observed == doctest::Approx((9 + std::sqrt(33.0)) / 2));
    CHECK(rec.equality);
  }

  TEST_CASE("Petersen energy identity") {
    const auto r = evaluate_bounds(petersen_graph());
    CHECK(r.a_plus == 5);
    CHECK(r.distance_energy == doctest::Approx(30.0));
    const auto& rec = find(r, "energy-transmission-identity");
    CHECK(rec.observed == doctest::Approx(50.0));
    CHECK(rec.lower.value() == doctest::Approx(50.0));
    CHECK(rec.satisfied);
  }

  TEST_CASE("K2 McClelland pair collapses") {
    const auto r = evaluate_bounds(complete_graph(2));
    const auto& rec = find(r, "energy-mcclelland");
    CHECK(rec.lower.value() == doctest::Approx(2.0));
    CHECK(rec.upper.value() == doctest::Approx(2.0));
    CHECK(rec.observed == doctest::Approx(2.0));
    CHECK(r.t_sum == 1);
    CHECK(r.det_abs == 1);
  }

  TEST_CASE("interlacing hypotheses") {
    const auto c5 = evaluate_bounds(cycle_graph(5));
    int checked = 0;
    for (const auto& b : c5.bounds) {
      if (has_prefix(b.name, "interlacing-")) {
        CHECK(b.hypothesis_ok);
        CHECK(b.satisfied);
        ++checked;
      }
    }
    CHECK(checked == 10);

    const auto p4 = evaluate_bounds(path_graph(4));
    for (const auto& b : p4.bounds) {
      if (has_prefix(b.name, "interlacing-adjacency")) CHECK_FALSE(b.hypothesis_ok);
      if (has_prefix(b.name, "interlacing-distance")) CHECK(b.satisfied);
    }
  }

  TEST_CASE("half energy equality tracks a single negative eigenvalue") {
    for (const auto& g : enumerate_connected_graphs(5)) {
      const auto r = evaluate_bounds(g);
      const auto& rec = find(r, "energy-half");
      CHECK(rec.satisfied);
      CHECK_FALSE(rec.equality_mismatch());
    }
  }

  TEST_CASE("no violations for order up to six") {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (const auto& g : enumerate_connected_graphs(n)) CHECK(evaluate_bounds(g).violations().empty());
    }
  }

  TEST_CASE("determinant power") {
    CHECK(det_power(BigInt(16), 4) == doctest::Approx(4.0));
    const BigInt huge = BigInt(10) * BigInt("1" + std::string(400, '0'));
    CHECK(std::isfinite(det_power(huge, 200)));
    CHECK(det_power(huge, 200) == doctest::Approx(std::pow(10.0, 401.0 * 2 / 200)));
  }

  TEST_CASE("determinant sign") {
    const auto r = evaluate_bounds(cycle_graph(4));
    CHECK(r.det == 45);
  }

  TEST_CASE("order one is rejected") {
    CHECK_THROWS_AS(evaluate_bounds(complete_graph(1)), InvalidParameters);
  }

  TEST_CASE("edge deletion increases energy") {
    const auto r22 = check_kab_edge_deletion(2, 2);
    CHECK(r22.energy_before == doctest::Approx(12.0));
    CHECK(std::fabs(r22.energy_after - 14.94) < 0.01);
    CHECK(r22.increased);
    CHECK(std::fabs(check_kab_edge_deletion(3, 3).energy_after - 25.6) < 0.05);
    for (std::size_t b = 2; b <= 12; ++b) {
      CHECK(check_kab_edge_deletion(2, b).increased);
      if (b >= 3) CHECK(check_kab_edge_deletion(3, b).increased);
    }
  }
}
