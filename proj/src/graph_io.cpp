#include "orpath/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace orpath {

namespace {

constexpr int kBias = 63;  // printable offset, '?' .. '~'

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

int decode_byte(unsigned char c) {
  if (c < 63 || c > 126) raise(Errc::malformed_graph6, "illegal graph6 byte " + std::to_string(int(c)));
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::string_view s = trim(line);
  if (s.empty()) raise(Errc::malformed_graph6, "empty graph6 line");
  std::size_t pos = 0;
  long long n = 0;
  if (s[0] != '~') {
    n = decode_byte(static_cast<unsigned char>(s[0]));
    pos = 1;
  } else if (s.size() >= 4 && s[1] != '~') {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(static_cast<unsigned char>(s[i]));
    pos = 4;
  } else if (s.size() >= 8) {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | decode_byte(static_cast<unsigned char>(s[i]));
    pos = 8;
  } else {
    raise(Errc::malformed_graph6, "truncated graph6 size field");
  }
  if (n < 1 || n > kMaxVertices) raise(Errc::malformed_graph6, "graph6 order out of range: " + std::to_string(n));

  long long pair_bits = n * (n - 1) / 2;
  std::size_t expect = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (s.size() - pos != expect)
    raise(Errc::malformed_graph6, "bad graph6 length: got " + std::to_string(s.size() - pos) + " data bytes, want " +
                                      std::to_string(expect));

  GraphBuilder b(static_cast<int>(n));
  long long bit = 0;
  int cur = 0, left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (left == 0) {
        cur = decode_byte(static_cast<unsigned char>(s[pos++]));
        left = 6;
      }
      if (cur & (1 << (left - 1))) b.add_edge(i, j);
      --left;
    }
  }
  if (left > 0 && (cur & ((1 << left) - 1)) != 0)
    raise(Errc::malformed_graph6, "nonzero padding bits");
  return b.build();
}

std::string write_graph6(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int cur = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(cur + kBias));
        cur = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((cur << (6 - used)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m)) raise(Errc::bad_parameter, "edge list needs an \"n m\" header");
  if (n < 1 || n > kMaxVertices) raise(Errc::bad_parameter, "edge list order out of range");
  GraphBuilder b(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) raise(Errc::bad_parameter, "edge list ended after " + std::to_string(e) + " edges");
    b.add_edge(u, v);
  }
  return b.build();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    g.for_each_neighbor(v, [&](int u) {
      if (v < u) out << v << ' ' << u << '\n';
    });
  return out.str();
}

Graph read_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::graph6) return parse_graph6(text);
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  std::string_view s = trim(text);
  std::size_t sp = s.find(' ');
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0])) && sp != std::string_view::npos)
    return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace orpath
