#include "idforest/graph_io.hpp"

#include <charconv>
#include <vector>

#include "idforest/errors.hpp"

namespace idforest {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    throw SizeLimitError("graph6 encoding", 258047, static_cast<int>(n));
  }

  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.size() <= base) throw ParseError("empty graph6 string", base);

  auto value_at = [&](std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
    return static_cast<int>(c) - kBias;
  };

  std::size_t pos = base;
  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graphs above 258047 vertices are not supported", pos);
    }
    if (text.size() < pos + 4) throw ParseError("truncated graph6 size field", text.size());
    for (int k = 1; k <= 3; ++k) n = (n << 6) | value_at(pos + k);
    pos += 4;
  } else {
    n = value_at(pos);
    pos += 1;
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(need),
                     std::min(text.size(), pos + need));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = value_at(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph from_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r')) {
      ++pos;
    }
  };
  auto read_int = [&](const char* what) {
    skip_space();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) throw ParseError(std::string("expected ") + what, pos);
    const std::size_t start = pos;
    pos = static_cast<std::size_t>(ptr - text.data());
    if (value > 1'000'000) throw ParseError(std::string(what) + " too large", start);
    return static_cast<int>(value);
  };

  const int n = read_int("vertex count");
  const int m = read_int("edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const std::size_t at = pos;
    const int u = read_int("edge endpoint");
    const int v = read_int("edge endpoint");
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
    if (u == v) throw ParseError("self-loop", at);
    edges.emplace_back(u, v);
  }
  skip_space();
  if (pos != text.size()) throw ParseError("trailing content after edge list", pos);
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace idforest
