#include "dseidel/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "dseidel/errors.hpp"
#include "dseidel/seidel.hpp"

namespace dseidel {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  std::size_t arity;  // 0: variable (multipartite)
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Complete, "kn", 1},
    {Family::CompleteMinusEdge, "kn-e", 1},
    {Family::CompleteBipartite, "kab", 2},
    {Family::Star, "star", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Wheel, "wheel", 1},
    {Family::CompleteSplit, "split", 2},
    {Family::Friendship, "friendship", 1},
    {Family::BalancedMultipartite, "balanced", 2},
    {Family::CocktailParty, "cocktail", 1},
    {Family::CompleteMultipartite, "multipartite", 0},
    {Family::CompleteBipartiteMinusEdge, "kab-e", 2},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw InvalidParameters("unknown family");
}

void require(bool ok, const FamilySpec& spec, const char* what) {
  if (!ok) throw InvalidParameters(family_name(spec.family) + ": " + what);
}

// (−b ± √disc)/2 for x² + bx + c with disc = b² − 4c supplied directly.
void push_quadratic(std::vector<double>& out, double minus_b, double disc) {
  const double root = std::sqrt(std::max(0.0, disc));
  out.push_back((minus_b + root) / 2);
  out.push_back((minus_b - root) / 2);
}

void push_repeated(std::vector<double>& out, double value, std::size_t mult) { out.insert(out.end(), mult, value); }

// Symmetrised equitable quotient of D^S(K_{n_1..n_q}): diagonal 3 − 3n_r, off-diagonal −√(n_r n_t).
std::vector<double> multipartite_quotient_eigenvalues(std::span<const std::size_t> parts) {
  const std::size_t q = parts.size();
  RealSymMatrix m(q);
  for (std::size_t r = 0; r < q; ++r) {
    m.at(r, r) = 3.0 - 3.0 * static_cast<double>(parts[r]);
    for (std::size_t t = r + 1; t < q; ++t) m.set(r, t, -std::sqrt(static_cast<double>(parts[r] * parts[t])));
  }
  return jacobi_eigenvalues(m);
}

std::vector<double> closed_form_values(const FamilySpec& spec) {
  const auto& p = spec.params;
  std::vector<double> out;
  switch (spec.family) {
    case Family::Complete: {
      const double n = p[0];
      push_repeated(out, 1.0, p[0] - 1);
      out.push_back(1.0 - n);
      break;
    }
    case Family::CompleteMinusEdge: {
      const double n = p[0];
      out.push_back(3.0);
      push_repeated(out, 1.0, p[0] - 3);
      push_quadratic(out, -n, n * n - 4 * n + 20);
      break;
    }
    case Family::CompleteBipartite: {
      const double a = p[0], b = p[1];
      push_repeated(out, 3.0, p[0] + p[1] - 2);
      push_quadratic(out, 3 * (2 - a - b), 9 * a * a + 9 * b * b - 14 * a * b);
      break;
    }
    case Family::Star: {
      const double n = p[0];
      push_repeated(out, 3.0, p[0] - 2);
      push_quadratic(out, 6 - 3 * n, 9 * n * n - 32 * n + 32);
      break;
    }
    case Family::Cycle:
      return cycle_spectrum(p[0]).eigenvalues;
    case Family::Wheel: {
      const double n = p[0];
      for (std::size_t t = 1; t + 2 <= p[0]; ++t) {
        out.push_back(3 + 4 * std::cos(2 * std::numbers::pi * static_cast<double>(t) / (n - 1)));
      }
      push_quadratic(out, 10 - 3 * n, 9 * n * n - 56 * n + 96);
      break;
    }
    case Family::CompleteSplit: {
      const double n = p[0], s = p[1];
      push_repeated(out, 1.0, p[1] - 1);
      push_repeated(out, 3.0, p[0] - p[1] - 1);
      push_quadratic(out, 2 * s - 3 * n + 4, 12 * s * s + 9 * n * n + 16 * s - 12 * n - 20 * n * s + 4);
      break;
    }
    case Family::Friendship: {
      const double n = p[0];
      push_repeated(out, 1.0, p[0]);
      push_repeated(out, 5.0, p[0] - 1);
      push_quadratic(out, 5 - 6 * n, 36 * n * n - 52 * n + 25);
      break;
    }
    case Family::BalancedMultipartite: {
      const double n = p[0], q = p[1];
      push_repeated(out, 3.0, p[1] * (p[0] - 1));
      push_repeated(out, 3 - 2 * n, p[1] - 1);
      out.push_back(3 - n * (q + 2));
      break;
    }
    case Family::CocktailParty: {
      const double n = p[0];
      push_repeated(out, 3.0, p[0]);
      push_repeated(out, -1.0, p[0] - 1);
      out.push_back(-1 - 2 * n);
      break;
    }
    case Family::CompleteMultipartite: {
      const std::size_t n = std::accumulate(p.begin(), p.end(), std::size_t{0});
      push_repeated(out, 3.0, n - p.size());
      for (double v : multipartite_quotient_eigenvalues(p)) out.push_back(v);
      break;
    }
    case Family::CompleteBipartiteMinusEdge:
      return real_roots(charpoly_kab_minus_edge(p[0], p[1]));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ExactPoly x_plus(long c) { return ExactPoly::linear(BigInt(-c)); }

}  // namespace

FamilySpec make_family(Family family, std::vector<std::size_t> params) {
  FamilySpec spec{family, std::move(params)};
  const auto& fi = info(family);
  const auto& p = spec.params;
  if (fi.arity != 0) {
    require(p.size() == fi.arity, spec, fi.arity == 1 ? "expects one parameter" : "expects two parameters");
  }
  switch (family) {
    case Family::Complete:
      require(p[0] >= 1, spec, "n >= 1 required");
      break;
    case Family::CompleteMinusEdge:
      require(p[0] >= 3, spec, "n >= 3 required");
      break;
    case Family::CompleteBipartite:
      require(p[0] >= 1 && p[1] >= 1, spec, "a, b >= 1 required");
      break;
    case Family::Star:
      require(p[0] >= 2, spec, "n >= 2 required");
      break;
    case Family::Cycle:
      require(p[0] >= 3, spec, "n >= 3 required");
      break;
    case Family::Wheel:
      require(p[0] >= 4, spec, "n >= 4 required");
      break;
    case Family::CompleteSplit:
      require(p[1] >= 1 && p[1] + 1 <= p[0], spec, "1 <= p <= n-1 required");
      break;
    case Family::Friendship:
      require(p[0] >= 1, spec, "n >= 1 required");
      break;
    case Family::BalancedMultipartite:
      require(p[0] >= 1 && p[1] >= 2, spec, "n >= 1 and q >= 2 required");
      break;
    case Family::CocktailParty:
      require(p[0] >= 2, spec, "n >= 2 required");
      break;
    case Family::CompleteMultipartite:
      require(p.size() >= 2, spec, "at least two parts required");
      require(std::all_of(p.begin(), p.end(), [](auto s) { return s >= 1; }), spec, "parts must be nonempty");
      break;
    case Family::CompleteBipartiteMinusEdge:
      require(p[0] >= 2 && p[1] >= 2, spec, "a, b >= 2 required");
      break;
  }
  return spec;
}

FamilySpec parse_family(std::string_view name, std::vector<std::size_t> params) {
  for (const auto& fi : kFamilies) {
    if (name == fi.name) return make_family(fi.family, std::move(params));
  }
  throw InvalidParameters("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family family) { return info(family).name; }

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& fi : kFamilies) out.push_back(fi.family);
  return out;
}

std::size_t family_order(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::CompleteBipartite:
    case Family::CompleteBipartiteMinusEdge:
      return p[0] + p[1];
    case Family::Friendship:
      return 2 * p[0] + 1;
    case Family::BalancedMultipartite:
      return p[0] * p[1];
    case Family::CocktailParty:
      return 2 * p[0];
    case Family::CompleteMultipartite:
      return std::accumulate(p.begin(), p.end(), std::size_t{0});
    default:
      return p[0];
  }
}

Graph build_family_graph(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Complete:
      return complete_graph(p[0]);
    case Family::CompleteMinusEdge: {
      auto edges = complete_graph(p[0]).edges();
      edges.erase(edges.begin());  // (0, 1)
      return Graph(p[0], edges);
    }
    case Family::CompleteBipartite:
      return complete_bipartite_graph(p[0], p[1]);
    case Family::Star:
      return complete_bipartite_graph(1, p[0] - 1);
    case Family::Cycle:
      return cycle_graph(p[0]);
    case Family::Wheel: {
      // Hub is vertex n−1.
      const std::size_t rim = p[0] - 1;
      auto edges = cycle_graph(rim).edges();
      for (Vertex v = 0; v < rim; ++v) edges.emplace_back(v, static_cast<Vertex>(rim));
      return Graph(p[0], edges);
    }
    case Family::CompleteSplit: {
      std::vector<std::size_t> parts(p[1], 1);
      parts.push_back(p[0] - p[1]);
      return complete_multipartite_graph(parts);
    }
    case Family::Friendship: {
      // Centre is vertex 0; triangle i uses 2i+1, 2i+2.
      std::vector<Edge> edges;
      for (Vertex i = 0; i < p[0]; ++i) {
        edges.emplace_back(0, 2 * i + 1);
        edges.emplace_back(0, 2 * i + 2);
        edges.emplace_back(2 * i + 1, 2 * i + 2);
      }
      return Graph(2 * p[0] + 1, edges);
    }
    case Family::BalancedMultipartite: {
      const std::vector<std::size_t> parts(p[1], p[0]);
      return complete_multipartite_graph(parts);
    }
    case Family::CocktailParty: {
      const std::vector<std::size_t> parts(p[0], 2);
      return complete_multipartite_graph(parts);
    }
    case Family::CompleteMultipartite:
      return complete_multipartite_graph(p);
    case Family::CompleteBipartiteMinusEdge: {
      auto edges = complete_bipartite_graph(p[0], p[1]).edges();
      std::erase(edges, Edge{0, static_cast<Vertex>(p[0])});
      return Graph(p[0] + p[1], edges);
    }
  }
  throw InvalidParameters("unknown family");
}

Spectrum closed_form_spectrum(const FamilySpec& spec, double grouping_tol) {
  return group_multiplicities(closed_form_values(spec), grouping_tol);
}

Spectrum cycle_spectrum(std::size_t n, double grouping_tol) {
  if (n < 3) throw InvalidParameters("cycle: n >= 3 required");
  std::vector<double> out;
  const double transmission = static_cast<double>(n * n / 4);
  out.push_back(static_cast<double>(n) - 1 - 2 * transmission);
  for (std::size_t j = 1; j < n; ++j) {
    double mu = 0;
    for (std::size_t k = 1; k < n; ++k) {
      const double angle = 2 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      mu += static_cast<double>(std::min(k, n - k)) * std::cos(angle);
    }
    out.push_back(-1 - 2 * mu);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return group_multiplicities(out, grouping_tol);
}

ExactPoly charpoly_complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.size() < 2 || std::any_of(parts.begin(), parts.end(), [](auto s) { return s == 0; })) {
    throw InvalidParameters("complete multipartite: at least two nonempty parts required");
  }
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  ExactPoly product = ExactPoly::constant(1);
  for (auto s : parts) product = product * x_plus(2 * static_cast<long>(s) - 3);
  ExactPoly sum;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    ExactPoly term = ExactPoly::constant(BigInt(parts[r]));
    for (std::size_t t = 0; t < parts.size(); ++t) {
      if (t != r) term = term * x_plus(2 * static_cast<long>(parts[t]) - 3);
    }
    sum = sum + term;
  }
  return ExactPoly::linear(3).pow(n - parts.size()) * (product + sum);
}

ExactPoly printed_charpoly_complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.size() < 2) throw InvalidParameters("complete multipartite: at least two parts required");
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  ExactPoly product = ExactPoly::constant(1);
  for (auto s : parts) product = product * x_plus(4 * static_cast<long>(s) - 3);
  ExactPoly sum;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    ExactPoly term = ExactPoly::constant(BigInt(parts[r]));
    for (std::size_t t = 0; t < parts.size(); ++t) {
      if (t != r) term = term * x_plus(4 * static_cast<long>(parts[t]) - 3);
    }
    sum = sum + term;
  }
  return ExactPoly::linear(3).pow(n - parts.size()) * (product - sum);
}

ExactPoly charpoly_kab_minus_edge(std::size_t a_in, std::size_t b_in) {
  if (a_in < 2 || b_in < 2) throw InvalidParameters("kab-e: a, b >= 2 required");
  const BigInt a = a_in, b = b_in;
  // Quartic as usually written: −x⁴ + c3 x³ + c2 x² + c1 x + c0, times (−1)^{a+b}(x−3)^{a+b−4}.
  const BigInt c3 = 12 - 3 * a - 3 * b;
  const BigInt c2 = -30 + 27 * a + 27 * b - 8 * a * b;
  const BigInt c1 = -132 - 33 * a - 33 * b + 48 * a * b;
  const BigInt c0 = 551 - 191 * a - 191 * b + 56 * a * b;
  const ExactPoly quartic({1, -c3, -c2, -c1, -c0});
  return ExactPoly::linear(3).pow(a_in + b_in - 4) * quartic;
}

std::optional<Spectrum> transmission_regular_spectrum(const Graph& g, double grouping_tol) {
  const auto dist = all_pairs_distances(g);
  const auto inv = graph_invariants(g, dist);
  if (!inv.transmission_regular) return std::nullopt;
  const auto n = static_cast<double>(g.order());
  const auto k = static_cast<double>(*inv.transmission_regular);
  const auto d = jacobi_eigenvalues(distance_matrix(dist));
  std::vector<double> out{n - 1 - 2 * k};
  for (std::size_t r = 1; r < d.size(); ++r) out.push_back(-1 - 2 * d[r]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return group_multiplicities(out, grouping_tol);
}

double closed_form_energy(const FamilySpec& spec) {
  double e = 0;
  for (double v : closed_form_values(spec)) e += std::fabs(v);
  return e;
}

std::optional<double> printed_energy(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Complete:
      return 2.0 * p[0] - 2;
    case Family::CompleteMinusEdge:
      return 2.0 * p[0];
    case Family::CompleteBipartite:
      if (p[0] < 2 || p[1] < 2) return std::nullopt;
      return 6.0 * (p[0] + p[1] - 2);
    case Family::Star: {
      const double n = p[0];
      return 3 * n - 6 + std::sqrt(9 * n * n - 32 * n + 32);
    }
    case Family::BalancedMultipartite:
      return 3.0 * p[1] * (p[0] - 1);
    case Family::Friendship: {
      const double n = p[0];
      return 6 * n - 5 + std::sqrt(36 * n * n - 52 * n + 25);
    }
    case Family::CompleteSplit: {
      const double n = p[0], s = p[1];
      return 2 * s - 3 * n + 4 - std::sqrt(12 * s * s + 9 * n * n + 16 * s - 12 * n - 20 * n * s + 4);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace dseidel
