#include <charconv>
#include <string>

#include "dseidel/errors.hpp"
#include "dseidel/graph.hpp"

namespace dseidel {

namespace {

constexpr std::size_t kMaxGraph6Order = 258047;

std::string_view trim_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: character " + std::to_string(c) + " at offset " + std::to_string(pos) +
                     " is outside 63..126");
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
      throw ParseError("graph6: orders above 258047 are not supported");
    }
    if (text.size() < 4) throw ParseError("graph6: truncated 18-bit order header");
    n = (std::size_t(sextet(text, 1)) << 12) | (std::size_t(sextet(text, 2)) << 6) | std::size_t(sextet(text, 3));
    if (n < 63) throw ParseError("graph6: long order header used for n < 63");
    pos = 4;
  } else {
    n = static_cast<std::size_t>(sextet(text, 0));
    pos = 1;
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw ParseError("graph6: truncated bit stream (expected " + std::to_string(bytes) + " bytes, got " +
                     std::to_string(text.size() - pos) + ")");
  }
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing characters after bit stream");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (std::size_t b = pos; b < text.size(); ++b) sextet(text, b);
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw InvalidParameters("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": unparsable token '" + std::string(token) +
                     "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (!n) {
      if (tokens.size() != 1) throw ParseError("edge list line " + std::to_string(line_no) + ": expected vertex count");
      n = parse_index(tokens[0], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    const auto u = parse_index(tokens[0], line_no);
    const auto v = parse_index(tokens[1], line_no);
    if (u >= *n || v >= *n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError("edge list: missing vertex count");
  return Graph(*n, edges);
}

}  // namespace dseidel
