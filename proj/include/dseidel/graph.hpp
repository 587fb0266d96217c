#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dseidel {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Duplicate edges collapse; self-loops and out-of-range
/// endpoints are rejected with InvalidParameters.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Row-major n×n matrix of shortest-path lengths.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> d;

  std::uint32_t at(std::size_t r, std::size_t t) const { return d[r * n + t]; }
};

struct GraphInvariants {
  std::uint32_t diameter = 0;
  std::vector<std::uint64_t> transmissions;
  std::uint64_t wiener = 0;
  // Over vertices: a regular graph has max_degree == second_max_degree.
  std::size_t max_degree = 0;
  std::size_t second_max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t second_min_degree = 0;
  std::optional<std::uint64_t> transmission_regular;
};

struct MultipartiteParts {
  std::vector<std::size_t> parts;  // descending
  bool complete_graph = false;     // every part has size 1
};

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);

bool is_connected(const Graph& g);
DistanceMatrix all_pairs_distances(const Graph& g);
GraphInvariants graph_invariants(const Graph& g, const DistanceMatrix& dist);
GraphInvariants graph_invariants(const Graph& g);
std::optional<MultipartiteParts> is_complete_multipartite(const Graph& g);

bool is_regular(const Graph& g);
/// Two-colouring of a connected graph, or nullopt when an odd cycle exists.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Named graphs used throughout the fixtures.
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_multipartite_graph(std::span<const std::size_t> parts);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();

/// Canonical relabelling: two graphs are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);

/// All graphs of order n up to isomorphism (n ≤ 8), in canonical form, sorted by graph6.
std::vector<Graph> enumerate_graphs(std::size_t n);
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

}  // namespace dseidel
