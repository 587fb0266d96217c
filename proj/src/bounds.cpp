#include "dseidel/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>

#include "dseidel/closed_forms.hpp"
#include "dseidel/errors.hpp"

namespace dseidel {

namespace {

constexpr double kTol = kHypothesisTolerance;

double slack(double reference) { return kTol * (1.0 + std::fabs(reference)); }
bool at_most(double a, double b) { return a <= b + slack(b); }
bool near(double a, double b) { return std::fabs(a - b) <= slack(b); }

// True when v lies strictly inside (lo, hi) by more than the tolerance.
bool strictly_inside(double v, double lo, double hi) { return v > lo + kTol && v < hi - kTol; }

BoundRecord upper_record(std::string name, double observed, double upper) {
  BoundRecord r;
  r.name = std::move(name);
  r.observed = observed;
  r.upper = upper;
  r.satisfied = at_most(observed, upper);
  r.equality = near(observed, upper);
  return r;
}

BoundRecord lower_record(std::string name, double observed, double lower) {
  BoundRecord r;
  r.name = std::move(name);
  r.observed = observed;
  r.lower = lower;
  r.satisfied = at_most(lower, observed);
  r.equality = near(observed, lower);
  return r;
}

BoundRecord sandwich_record(std::string name, double observed, double lower, double upper) {
  BoundRecord r;
  r.name = std::move(name);
  r.observed = observed;
  r.lower = lower;
  r.upper = upper;
  r.satisfied = at_most(lower, observed) && at_most(observed, upper);
  r.equality = near(observed, lower) || near(observed, upper);
  return r;
}

bool equal_row_sums(const BoundsContext& ctx) {
  return std::all_of(ctx.row_sums.begin(), ctx.row_sums.end(), [&](auto s) { return s == ctx.row_sums.front(); });
}

bool regular_small_diameter(const BoundsContext& ctx) { return is_regular(ctx.graph) && ctx.invariants.diameter <= 2; }

double rms_row_sum(const BoundsContext& ctx) {
  double acc = 0;
  for (auto s : ctx.row_sums) acc += static_cast<double>(s) * static_cast<double>(s);
  return std::sqrt(acc / static_cast<double>(ctx.row_sums.size()));
}

double degree_product(const BoundsContext& ctx) {
  const auto n = static_cast<double>(ctx.graph.order());
  const auto d1 = static_cast<double>(ctx.invariants.max_degree);
  const auto d2 = static_cast<double>(ctx.invariants.second_max_degree);
  return (3 * n - 2 * d1 - 3) * (3 * n - 2 * d2 - 3);
}

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

BoundsContext make_bounds_context(const Graph& g, double grouping_tol) {
  if (g.order() < 2) throw InvalidParameters("bounds need a graph of order at least 2");
  BoundsContext ctx{g, all_pairs_distances(g), {}, {}, {}, {}, {}, 0, 0};
  const std::size_t n = g.order();
  ctx.invariants = graph_invariants(g, ctx.dist);
  const auto ds_matrix = distance_seidel_matrix(ctx.dist);
  ctx.ds = summarize_matrix(ds_matrix, grouping_tol);
  ctx.ds.m = g.size();
  ctx.distance = summarize_matrix(distance_matrix(ctx.dist), grouping_tol);
  ctx.adjacency = jacobi_eigenvalues(adjacency_matrix(g));
  ctx.row_sums.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < n; ++t) {
      if (r == t) continue;
      const auto d = static_cast<std::int64_t>(ctx.dist.at(r, t));
      ctx.row_sums[r] += 2 * d - 1;
      if (r < t) ctx.t_sum += (1 - 2 * d) * (1 - 2 * d);
    }
  }
  const BigInt constant = ctx.ds.char_poly.coefficient(0);
  ctx.det = n % 2 == 0 ? constant : BigInt(-constant);
  return ctx;
}

std::vector<BoundRecord> radius_bounds(const BoundsContext& ctx) {
  std::vector<BoundRecord> out;
  const std::size_t n = ctx.graph.order();
  const double rho = ctx.ds.radius;
  const auto nn = static_cast<double>(n);

  double weighted = 0;
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (r == t) continue;
      acc += (2.0 * ctx.dist.at(r, t) - 1) *
             std::sqrt(static_cast<double>(ctx.row_sums[t]) / static_cast<double>(ctx.row_sums[r]));
    }
    weighted = std::max(weighted, acc);
  }
  auto rowsum_upper = upper_record("radius-rowsum-upper", rho, weighted);
  rowsum_upper.equality_expected = equal_row_sums(ctx);
  out.push_back(rowsum_upper);

  auto rowsum_lower = lower_record("radius-rowsum-lower", rho, rms_row_sum(ctx));
  rowsum_lower.equality_expected = equal_row_sums(ctx);
  out.push_back(rowsum_lower);

  const double alpha = std::sqrt(degree_product(ctx));
  auto degree_lower = lower_record("radius-degree-lower", rho, alpha);
  degree_lower.equality_expected = regular_small_diameter(ctx);
  out.push_back(degree_lower);

  const auto w = static_cast<double>(ctx.invariants.diameter);
  auto f = [&](double delta) { return -2 * delta * (w - 1) + w * (1 - w) + 2 * nn * w - nn - 1; };
  const double beta_sq = f(static_cast<double>(ctx.invariants.min_degree)) *
                         f(static_cast<double>(ctx.invariants.second_min_degree));
  const double beta = std::sqrt(std::max(0.0, beta_sq));
  auto degree_upper = upper_record("radius-degree-upper", rho, beta);
  degree_upper.hypothesis_ok = beta_sq >= 0;
  degree_upper.equality_expected = regular_small_diameter(ctx);
  out.push_back(degree_upper);

  auto sandwich = sandwich_record("radius-degree-sandwich", rho, alpha, beta);
  sandwich.hypothesis_ok = beta_sq >= 0;
  out.push_back(sandwich);

  // Bipartite lower bound; P is the colour class of vertex 0.
  BoundRecord bip;
  bip.name = "radius-bipartite-lower";
  bip.observed = rho;
  bip.hypothesis_ok = false;
  if (auto side = bipartition(ctx.graph)) {
    double p = 0, q = 0, delta_p = 0, delta_q = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto d = static_cast<double>(ctx.graph.degree(v));
      if ((*side)[v] == 0) {
        p += 1;
        delta_p = std::max(delta_p, d);
      } else {
        q += 1;
        delta_q = std::max(delta_q, d);
      }
    }
    const double arg = 9 * nn * nn - 36 * p * q + 4 * (5 * p - 4 * delta_q) * (5 * q - 4 * delta_p);
    if (arg >= 0) {
      bip = lower_record("radius-bipartite-lower", rho, (3 * nn - 6 + std::sqrt(arg)) / 2);
      if (ctx.graph.size() == static_cast<std::size_t>(p * q)) bip.equality_expected = true;
    }
  }
  out.push_back(bip);
  return out;
}

std::vector<BoundRecord> energy_bounds(const BoundsContext& ctx) {
  std::vector<BoundRecord> out;
  const std::size_t n = ctx.graph.order();
  const auto nn = static_cast<double>(n);
  const double energy = ctx.ds.energy;
  const auto& d = ctx.distance.spectrum.eigenvalues;

  auto half = upper_record("energy-half", ctx.ds.radius, energy / 2);
  half.equality_expected = ctx.ds.a_minus == 1;
  out.push_back(half);

  BoundRecord identity;
  {
    const double value = 2.0 * (static_cast<double>(ctx.distance.a_plus) - nn + ctx.distance.energy);
    identity = sandwich_record("energy-transmission-identity", energy, value, value);
    bool ok = ctx.invariants.transmission_regular.has_value();
    for (std::size_t r = 1; r < d.size(); ++r) ok = ok && !strictly_inside(d[r], -1.0, 0.0);
    identity.hypothesis_ok = ok;
    identity.equality_expected = true;
  }
  out.push_back(identity);

  {
    auto rec = lower_record("energy-distance-lower", energy,
                            2 * ctx.distance.energy - 2 * static_cast<double>(ctx.distance.a_minus));
    bool ok = true;
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (r < ctx.distance.a_plus) {
        ok = ok && d[r] >= (nn - 1) / 2 - kTol;
      } else {
        ok = ok && !strictly_inside(d[r], -0.5, 0.0);
      }
    }
    rec.hypothesis_ok = ok;
    out.push_back(rec);
  }

  auto rms = lower_record("energy-rowsum-lower", energy, 2 * rms_row_sum(ctx));
  rms.equality_expected = equal_row_sums(ctx) && ctx.ds.a_minus == 1;
  out.push_back(rms);

  out.push_back(lower_record("energy-degree-lower", energy, 2 * std::sqrt(degree_product(ctx))));

  const double t = ctx.t_sum.convert_to<double>();
  const double dp = det_power(abs(ctx.det), n);
  out.push_back(
      sandwich_record("energy-mcclelland", energy, std::sqrt(2 * t + nn * (nn - 1) * dp), std::sqrt(2 * nn * t)));

  const auto m = static_cast<double>(ctx.graph.size());
  auto diam2 = sandwich_record("energy-diameter2-mcclelland", energy,
                               std::sqrt(9 * nn * nn - 9 * nn - 16 * m + nn * (nn - 1) * dp),
                               std::sqrt(std::max(0.0, 9 * nn * nn * nn - 9 * nn * nn - 16 * m * nn)));
  diam2.hypothesis_ok = ctx.invariants.diameter <= 2;
  out.push_back(diam2);
  return out;
}

std::vector<BoundRecord> interlacing_checks(const BoundsContext& ctx) {
  std::vector<BoundRecord> out;
  const std::size_t n = ctx.graph.order();
  const auto nn = static_cast<double>(n);
  const auto& ds = ctx.ds.spectrum.eigenvalues;
  const auto& d = ctx.distance.spectrum.eigenvalues;
  const bool small_diameter = ctx.invariants.diameter <= 2;
  for (std::size_t r = 0; r < n; ++r) {
    auto rec = sandwich_record("interlacing-adjacency[" + std::to_string(r + 1) + "]", ds[r],
                               3 - 3 * nn + 2 * ctx.adjacency[r], 3 + 2 * ctx.adjacency[r]);
    rec.hypothesis_ok = small_diameter;
    out.push_back(rec);
  }
  for (std::size_t t = 0; t < n; ++t) {
    const double partner = d[n - 1 - t];
    auto rec = sandwich_record("interlacing-distance[" + std::to_string(t + 1) + "]", ds[t], -1 - 2 * partner,
                               nn - 1 - 2 * partner);
    out.push_back(rec);
  }
  return out;
}

double det_power(const BigInt& det_abs, std::size_t n) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (det_abs == 0 || n == 0) return 0.0;
  const Float x(det_abs);
  return static_cast<double>(exp(log(x) * 2 / Float(n)));
}

std::vector<const BoundRecord*> BoundsReport::violations() const {
  std::vector<const BoundRecord*> out;
  for (const auto& b : bounds) {
    if (b.violated() || b.equality_mismatch()) out.push_back(&b);
  }
  return out;
}

BoundsReport evaluate_bounds(const Graph& g, double grouping_tol) {
  const auto ctx = make_bounds_context(g, grouping_tol);
  BoundsReport out;
  for (auto&& slice : {radius_bounds(ctx), energy_bounds(ctx), interlacing_checks(ctx)}) {
    out.bounds.insert(out.bounds.end(), slice.begin(), slice.end());
  }
  out.row_sums = ctx.row_sums;
  out.t_sum = ctx.t_sum;
  out.a_plus = ctx.distance.a_plus;
  out.a_minus = ctx.distance.a_minus;
  out.distance_energy = ctx.distance.energy;
  out.det = ctx.det;
  out.det_abs = abs(ctx.det);
  return out;
}

EdgeDeletionRecord check_kab_edge_deletion(std::size_t a, std::size_t b) {
  if (a < 2 || b < 2) throw InvalidParameters("edge deletion: a, b >= 2 required");
  EdgeDeletionRecord out{a, b, 0, 0, false};
  out.energy_before = spectral_summary(complete_bipartite_graph(a, b)).energy;
  out.energy_after =
      spectral_summary(build_family_graph(make_family(Family::CompleteBipartiteMinusEdge, {a, b}))).energy;
  out.increased = out.energy_after > out.energy_before;
  return out;
}

Json to_json(const BoundRecord& r) {
  Json out{{"name", r.name}};
  if (r.lower) out["lower"] = json_number(*r.lower);
  if (r.upper) out["upper"] = json_number(*r.upper);
  out["observed"] = json_number(r.observed);
  out["satisfied"] = r.satisfied;
  out["equality"] = r.equality;
  if (r.equality_expected) out["equalityExpected"] = *r.equality_expected;
  out["hypothesisOk"] = r.hypothesis_ok;
  return out;
}

Json to_json(const BoundsReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  return Json{{"bounds", bounds},
              {"scalars",
               {{"rowSums", r.row_sums},
                {"T", big_json(r.t_sum)},
                {"aPlus", r.a_plus},
                {"aMinus", r.a_minus},
                {"distanceEnergy", json_number(r.distance_energy)},
                {"det", big_json(r.det)},
                {"detAbs", big_json(r.det_abs)}}}};
}

Json to_json(const EdgeDeletionRecord& r) {
  return Json{{"a", r.a},
              {"b", r.b},
              {"energyBefore", json_number(r.energy_before)},
              {"energyAfter", json_number(r.energy_after)},
              {"increased", r.increased}};
}

}  // namespace dseidel
