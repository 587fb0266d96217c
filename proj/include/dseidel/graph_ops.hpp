#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dseidel/graph.hpp"
#include "dseidel/json_io.hpp"

namespace dseidel {

// Vertex order of every result: first operand block then second (join), G0 | G1 | G2
// (join_union), originals then primed copies (double, prism, lex), v-side then u-side (edc).
Graph join(const Graph& g1, const Graph& g2);
Graph join_union(const Graph& g0, const Graph& g1, const Graph& g2);
/// v_r′ is adjacent to N(v_r); v_r and v_r′ are not adjacent.
Graph double_graph(const Graph& g);
Graph prism(const Graph& g);   // G × K_2
Graph lex_k2(const Graph& g);  // G[K_2]
/// Bipartite graph with biadjacency A + I.
Graph edc(const Graph& g);

struct PredictedValue {
  double value = 0.0;
  std::string source;  // which clause of the prediction produced the value
};

struct PredictedSpectrum {
  std::vector<PredictedValue> values;
  bool hypothesis_ok = false;

  std::vector<double> sorted() const;  // descending
};

// Predictions are always produced; hypothesis_ok records whether the inputs meet the
// theorem's assumptions. Non-regular inputs use their maximum degree as k.
PredictedSpectrum predict_join_spectrum(const Graph& g1, const Graph& g2);
PredictedSpectrum predict_join_union_spectrum(const Graph& g0, const Graph& g1, const Graph& g2);
PredictedSpectrum predict_double_spectrum(const Graph& g);
PredictedSpectrum predict_prism_spectrum(const Graph& g);
PredictedSpectrum predict_lex_spectrum(const Graph& g);
PredictedSpectrum predict_edc_spectrum(const Graph& g);

inline constexpr double kPredictionTolerance = 1e-6;

struct PredictionCheck {
  std::vector<double> predicted;  // descending
  std::vector<double> numeric;    // descending
  double max_deviation = 0.0;
  bool agrees = false;  // max_deviation ≤ tol
};

/// Compares a prediction with the D^S eigenvalues of the constructed graph.
PredictionCheck check_prediction(const PredictedSpectrum& predicted, const Graph& constructed,
                                 double tol = kPredictionTolerance);

/// CLI op names: join, join-union, double, prism, lex-k2, edc.
std::size_t operation_arity(std::string_view op);
Graph apply_operation(std::string_view op, std::span<const Graph> inputs);
PredictedSpectrum predict_operation(std::string_view op, std::span<const Graph> inputs);

Json to_json(const PredictedSpectrum& p, const PredictionCheck& check);

}  // namespace dseidel
