#include "dseidel/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "dseidel/errors.hpp"

namespace dseidel {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidParameters("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has a vertex out of range for n = " + std::to_string(n));
    }
    if (u == v) throw InvalidParameters("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void bfs_from(const Graph& g, Vertex source, std::span<std::uint32_t> dist) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<std::uint32_t> dist(g.order());
  bfs_from(g, 0, dist);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreached; });
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix out{n, std::vector<std::uint32_t>(n * n)};
  for (Vertex s = 0; s < n; ++s) {
    std::span<std::uint32_t> row(out.d.data() + s * n, n);
    bfs_from(g, s, row);
    if (std::any_of(row.begin(), row.end(), [](auto d) { return d == kUnreached; })) {
      throw DisconnectedGraph();
    }
  }
  return out;
}

GraphInvariants graph_invariants(const Graph& g, const DistanceMatrix& dist) {
  const std::size_t n = g.order();
  GraphInvariants inv;
  inv.transmissions.assign(n, 0);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < n; ++t) {
      inv.transmissions[r] += dist.at(r, t);
      inv.diameter = std::max(inv.diameter, dist.at(r, t));
    }
    total += inv.transmissions[r];
  }
  inv.wiener = total / 2;

  std::vector<std::size_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  if (n >= 1) {
    inv.min_degree = degrees.front();
    inv.max_degree = degrees.back();
    inv.second_min_degree = n >= 2 ? degrees[1] : degrees.front();
    inv.second_max_degree = n >= 2 ? degrees[n - 2] : degrees.back();
  }
  if (n >= 1 && std::all_of(inv.transmissions.begin(), inv.transmissions.end(),
                            [&](auto tr) { return tr == inv.transmissions.front(); })) {
    inv.transmission_regular = inv.transmissions.front();
  }
  return inv;
}

GraphInvariants graph_invariants(const Graph& g) { return graph_invariants(g, all_pairs_distances(g)); }

std::optional<MultipartiteParts> is_complete_multipartite(const Graph& g) {
  // G is complete multipartite iff non-adjacency is an equivalence relation,
  // i.e. the complement is a disjoint union of cliques.
  const std::size_t n = g.order();
  std::vector<int> part(n, -1);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (Vertex u = v; u < n; ++u) {
      if (u == v || !g.adjacent(u, v)) {
        if (part[u] >= 0) return std::nullopt;
        part[u] = id;
        ++sizes.back();
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((part[u] == part[v]) == g.adjacent(u, v)) return std::nullopt;
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  MultipartiteParts out;
  out.complete_graph = sizes.front() == 1;
  out.parts = std::move(sizes);
  return out;
}

bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> side(n, 2);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == 2) {
          side[v] = static_cast<std::uint8_t>(1 - side[u]);
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameters("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_multipartite_graph(std::span<const std::size_t> parts) {
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<std::size_t> owner;
  owner.reserve(n);
  for (std::size_t p = 0; p < parts.size(); ++p) owner.insert(owner.end(), parts[p], p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (owner[u] != owner[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  const std::size_t parts[] = {a, b};
  return complete_multipartite_graph(parts);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges);
}

}  // namespace dseidel
