#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "dseidel/errors.hpp"
#include "dseidel/graph.hpp"

namespace dseidel {

namespace {

constexpr std::size_t kMaxCanonicalOrder = 64;
constexpr std::size_t kMaxEnumerationOrder = 8;

using Rows = std::vector<std::uint64_t>;

Rows rows_of(const Graph& g) {
  Rows rows(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return rows;
}

// Stable colouring by iterated neighbour-colour multisets (1-dimensional Weisfeiler-Leman).
std::vector<std::size_t> refined_colours(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      signature[v].first = colour[v];
      for (std::size_t u = 0; u < n; ++u) {
        if ((rows[v] >> u) & 1) signature[v].second.push_back(colour[u]);
      }
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (rank.size() == classes) return colour;
    classes = rank.size();
  }
}

// Branch-and-bound search for the relabelling whose column-major upper triangle is
// lexicographically largest, restricted to orders that list colour classes in sequence.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Rows& rows) : rows_(rows), n_(rows.size()) {
    const auto colour = refined_colours(rows);
    cell_of_position_.reserve(n_);
    std::vector<std::size_t> order(n_);
    for (std::size_t v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return colour[a] < colour[b]; });
    for (std::size_t p = 0; p < n_; ++p) cell_of_position_.push_back(colour[order[p]]);
    colour_ = colour;
    perm_.assign(n_, 0);
    best_perm_.assign(n_, 0);
    best_.assign(n_, 0);
    used_.assign(n_, false);
  }

  std::vector<std::size_t> run() {
    search(0);
    return best_perm_;
  }

 private:
  std::uint64_t column(std::size_t p, std::size_t v) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < p; ++i) code = (code << 1) | ((rows_[perm_[i]] >> v) & 1);
    return code;
  }

  void search(std::size_t p) {
    if (p == n_) {
      best_perm_ = perm_;
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != cell_of_position_[p]) continue;
      const std::uint64_t col = column(p, v);
      if (p < valid_) {
        if (col < best_[p]) continue;
        if (col > best_[p]) valid_ = p;
      }
      if (p == valid_) {
        best_[p] = col;
        valid_ = p + 1;
      }
      perm_[p] = v;
      used_[v] = true;
      search(p + 1);
      used_[v] = false;
    }
  }

  const Rows& rows_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> cell_of_position_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> best_perm_;
  std::vector<std::uint64_t> best_;
  std::vector<bool> used_;
  std::size_t valid_ = 0;
};

Rows canonical_rows(const Rows& rows) {
  const std::size_t n = rows.size();
  const auto perm = CanonicalSearch(rows).run();
  Rows out(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if ((rows[perm[p]] >> perm[q]) & 1) out[p] |= std::uint64_t{1} << q;
    }
  }
  return out;
}

Graph graph_of(const Rows& rows) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < rows.size(); ++u) {
    for (Vertex v = u + 1; v < rows.size(); ++v) {
      if ((rows[u] >> v) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(rows.size(), edges);
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw InvalidParameters("canonical_form supports at most 64 vertices");
  return graph_of(canonical_rows(rows_of(g)));
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumerationOrder) throw InvalidParameters("built-in enumeration supports n <= 8");
  // Every graph on n vertices is a graph on n-1 vertices plus one vertex with some neighbourhood.
  std::set<Rows> level{Rows{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<Rows> next;
    for (const auto& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Rows rows = base;
        rows.push_back(mask);
        for (std::size_t u = 0; u + 1 < k; ++u) {
          if ((mask >> u) & 1) rows[u] |= std::uint64_t{1} << (k - 1);
        }
        next.insert(canonical_rows(rows));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& rows : level) out.push_back(graph_of(rows));
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return encode_graph6(a) < encode_graph6(b); });
  return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  auto all = enumerate_graphs(n);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

}  // namespace dseidel
