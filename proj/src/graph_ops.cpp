#include "dseidel/graph_ops.hpp"

#include <algorithm>
#include <functional>

#include "dseidel/errors.hpp"
#include "dseidel/seidel.hpp"

namespace dseidel {

Graph join(const Graph& g1, const Graph& g2) {
  auto edges = disjoint_union(g1, g2).edges();
  const auto n1 = static_cast<Vertex>(g1.order());
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, n1 + v);
  }
  return Graph(g1.order() + g2.order(), edges);
}

Graph join_union(const Graph& g0, const Graph& g1, const Graph& g2) { return join(g0, disjoint_union(g1, g2)); }

namespace {

// Two layers of G; `cross` adds v–u′ and v′–u for every edge uv, `rungs` adds v–v′.
Graph two_layers(const Graph& g, bool cross, bool rungs) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + n, v + n);
    if (cross) {
      edges.emplace_back(u, v + n);
      edges.emplace_back(u + n, v);
    }
  }
  if (rungs) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  }
  return Graph(2 * g.order(), edges);
}

std::vector<double> adjacency_eigenvalues(const Graph& g) { return jacobi_eigenvalues(adjacency_matrix(g)); }

std::size_t max_degree(const Graph& g) {
  std::size_t k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k = std::max(k, g.degree(v));
  return k;
}

// 3 + 2λ for every adjacency eigenvalue except the largest.
void push_non_perron(PredictedSpectrum& out, const Graph& g, const std::string& source) {
  const auto lambda = adjacency_eigenvalues(g);
  for (std::size_t t = 1; t < lambda.size(); ++t) out.values.push_back({3 + 2 * lambda[t], source});
}

}  // namespace

Graph double_graph(const Graph& g) { return two_layers(g, true, false); }
Graph prism(const Graph& g) { return two_layers(g, false, true); }
Graph lex_k2(const Graph& g) { return two_layers(g, true, true); }

Graph edc(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  return Graph(2 * g.order(), edges);
}

std::vector<double> PredictedSpectrum::sorted() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

PredictedSpectrum predict_join_spectrum(const Graph& g1, const Graph& g2) {
  PredictedSpectrum out;
  out.hypothesis_ok = is_regular(g1) && is_regular(g2) && g1.order() > 0 && g2.order() > 0;
  push_non_perron(out, g1, "3+2*lambda(G1)");
  push_non_perron(out, g2, "3+2*lambda(G2)");
  const double n1 = g1.order(), n2 = g2.order();
  const double k1 = max_degree(g1), k2 = max_degree(g2);
  const double b = 3 * n1 + 3 * n2 - 2 * k1 - 2 * k2 - 6;
  const double disc = (3 * n1 - 3 * n2 - 2 * k1 + 2 * k2) * (3 * n1 - 3 * n2 - 2 * k1 + 2 * k2) + 4 * n1 * n2;
  out.values.push_back({(-b + std::sqrt(disc)) / 2, "quotient root"});
  out.values.push_back({(-b - std::sqrt(disc)) / 2, "quotient root"});
  return out;
}

PredictedSpectrum predict_join_union_spectrum(const Graph& g0, const Graph& g1, const Graph& g2) {
  PredictedSpectrum out;
  out.hypothesis_ok = is_regular(g0) && is_regular(g1) && is_regular(g2) && g0.order() > 0 && g1.order() > 0 &&
                      g2.order() > 0;
  push_non_perron(out, g0, "3+2*lambda(G0)");
  push_non_perron(out, g1, "3+2*lambda(G1)");
  push_non_perron(out, g2, "3+2*lambda(G2)");

  const BigInt n0 = g0.order(), n1 = g1.order(), n2 = g2.order();
  const BigInt k0 = max_degree(g0), k1 = max_degree(g1), k2 = max_degree(g2);
  // The quotient matrix is not symmetric, so its eigenvalues come from the exact cubic.
  const BigInt m[3][3] = {{3 - 3 * n0 + 2 * k0, -n1, -n2},
                          {-n0, 3 - 3 * n1 + 2 * k1, -3 * n2},
                          {-n0, -3 * n1, 3 - 3 * n2 + 2 * k2}};
  const BigInt trace = m[0][0] + m[1][1] + m[2][2];
  const BigInt minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                        (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  const BigInt det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  for (double r : real_roots(ExactPoly({1, -trace, minors, -det}))) out.values.push_back({r, "quotient root"});
  return out;
}

PredictedSpectrum predict_double_spectrum(const Graph& g) {
  PredictedSpectrum out;
  const auto ds = jacobi_eigenvalues(distance_seidel_matrix(g));
  out.hypothesis_ok = g.order() >= 2;
  for (double v : ds) out.values.push_back({2 * v - 3, "2*dS-3"});
  for (std::size_t i = 0; i < g.order(); ++i) out.values.push_back({3.0, "3"});
  return out;
}

PredictedSpectrum predict_prism_spectrum(const Graph& g) {
  PredictedSpectrum out;
  const auto dist = all_pairs_distances(g);
  out.hypothesis_ok = graph_invariants(g, dist).transmission_regular.has_value();
  const auto n = static_cast<double>(g.order());
  for (double v : jacobi_eigenvalues(distance_matrix(dist))) out.values.push_back({-1 - 4 * v, "-1-4*d"});
  out.values.push_back({2 * n - 1, "2n-1"});
  for (std::size_t i = 1; i < g.order(); ++i) out.values.push_back({-1.0, "-1"});
  return out;
}

PredictedSpectrum predict_lex_spectrum(const Graph& g) {
  PredictedSpectrum out;
  const auto ds = jacobi_eigenvalues(distance_seidel_matrix(g));
  out.hypothesis_ok = true;
  for (double v : ds) out.values.push_back({2 * v - 1, "2*dS-1"});
  for (std::size_t i = 0; i < g.order(); ++i) out.values.push_back({1.0, "1"});
  return out;
}

PredictedSpectrum predict_edc_spectrum(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  PredictedSpectrum out;
  const auto inv = graph_invariants(g);
  out.hypothesis_ok = is_regular(g) && inv.diameter <= 2;
  const auto n = static_cast<double>(g.order());
  const auto k = static_cast<double>(max_degree(g));
  const auto lambda = adjacency_eigenvalues(g);
  out.values.push_back({-8 * n + 4 * k + 7, "-8n+4k+7"});
  out.values.push_back({2 * n - 4 * k - 1, "2n-4k-1"});
  for (std::size_t r = 1; r < lambda.size(); ++r) {
    out.values.push_back({7 + 4 * lambda[r], "7+4*lambda"});
    out.values.push_back({-1 - 4 * lambda[r], "-1-4*lambda"});
  }
  return out;
}

PredictionCheck check_prediction(const PredictedSpectrum& predicted, const Graph& constructed, double tol) {
  PredictionCheck out;
  out.predicted = predicted.sorted();
  out.numeric = jacobi_eigenvalues(distance_seidel_matrix(constructed));
  out.max_deviation = max_deviation(out.predicted, out.numeric);
  out.agrees = out.max_deviation <= tol;
  return out;
}

std::size_t operation_arity(std::string_view op) {
  if (op == "join") return 2;
  if (op == "join-union") return 3;
  if (op == "double" || op == "prism" || op == "lex-k2" || op == "edc") return 1;
  throw InvalidParameters("unknown operation '" + std::string(op) + "'");
}

namespace {

void require_arity(std::string_view op, std::span<const Graph> inputs) {
  const auto want = operation_arity(op);
  if (inputs.size() != want) {
    throw InvalidParameters("operation '" + std::string(op) + "' takes " + std::to_string(want) + " input graph(s), got " +
                            std::to_string(inputs.size()));
  }
}

}  // namespace

Graph apply_operation(std::string_view op, std::span<const Graph> inputs) {
  require_arity(op, inputs);
  if (op == "join") return join(inputs[0], inputs[1]);
  if (op == "join-union") return join_union(inputs[0], inputs[1], inputs[2]);
  if (op == "double") return double_graph(inputs[0]);
  if (op == "prism") return prism(inputs[0]);
  if (op == "lex-k2") return lex_k2(inputs[0]);
  return edc(inputs[0]);
}

PredictedSpectrum predict_operation(std::string_view op, std::span<const Graph> inputs) {
  require_arity(op, inputs);
  if (op == "join") return predict_join_spectrum(inputs[0], inputs[1]);
  if (op == "join-union") return predict_join_union_spectrum(inputs[0], inputs[1], inputs[2]);
  if (op == "double") return predict_double_spectrum(inputs[0]);
  if (op == "prism") return predict_prism_spectrum(inputs[0]);
  if (op == "lex-k2") return predict_lex_spectrum(inputs[0]);
  return predict_edc_spectrum(inputs[0]);
}

Json to_json(const PredictedSpectrum& p, const PredictionCheck& check) {
  Json predicted = Json::array();
  auto values = p.values;
  std::stable_sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
  for (const auto& v : values) predicted.push_back({{"value", json_number(v.value)}, {"source", v.source}});
  Json numeric = Json::array();
  for (double v : check.numeric) numeric.push_back(json_number(v));
  return Json{{"hypothesisOk", p.hypothesis_ok},
              {"predicted", predicted},
              {"numeric", numeric},
              {"maxDeviation", json_number(check.max_deviation)},
              {"agrees", check.agrees}};
}

}  // namespace dseidel
