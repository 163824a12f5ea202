#pragma once
// graph6 codec (nauty's ASCII format) plus the plain edge-list text format.
//
// Layout: N(n) is byte n+63 for n <= 62, else byte 126 followed by three
// 6-bit groups of n (big-endian), each +63. R(x) packs the upper-triangle
// adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ... into
// 6-bit groups, most significant bit first, zero padded, each +63.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "regsurf/errors.hpp"
#include "regsurf/graph.hpp"

namespace regsurf {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view line) {
  std::string_view s = line;
  long base = 0;
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header) {
    s.remove_prefix(kGraph6Header.size());
    base = static_cast<long>(kGraph6Header.size());
  }
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw parse_error("graph6: empty line");

  auto byte_at = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw parse_error("graph6: byte out of range 63..126", base + static_cast<long>(i));
    return c - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (byte_at(0) < 63) {
    n = byte_at(0);
    pos = 1;
  } else {
    // 126 prefix: three 6-bit groups
    if (s.size() < 4) throw parse_error("graph6: truncated multi-byte size", base);
    if (byte_at(1) == 63)
      throw parse_error("graph6: size forms beyond 258047 vertices are not supported", base + 1);
    n = (static_cast<long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  }
  if (n > Bits128::capacity)
    throw parse_error("graph6: vertex count " + std::to_string(n) + " exceeds the 128 cap", base);

  long nbits = n * (n - 1) / 2;
  long nbytes = (nbits + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(pos) != nbytes)
    throw parse_error("graph6: body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                          std::to_string(nbytes),
                      base + static_cast<long>(pos));

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (long k = 0; k < nbytes; ++k) {
    int x = byte_at(pos + k);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool on = (x >> b) & 1;
      if (bit >= nbits) {
        if (on)
          throw parse_error("graph6: nonzero padding bit", base + static_cast<long>(pos + k));
        continue;
      }
      if (on) {
        // bit index -> column-order pair (i, j)
        long t = bit;
        long j = 1;
        while (t >= j) {
          t -= j;
          ++j;
        }
        g.add_edge(static_cast<int>(t), static_cast<int>(j));
      }
    }
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  long n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

/// All graphs from a stream of graph6 lines; blank lines are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

/// Edge-list text format: first line "n", then one "u v" pair per line,
/// 0-indexed.
inline Graph parse_edge_list(std::istream& in) {
  int n = -1;
  if (!(in >> n) || n < 0) throw parse_error("edge list: missing or negative vertex count");
  if (n > Bits128::capacity) throw parse_error("edge list: vertex count exceeds the 128 cap");
  Graph g(n);
  long u, v;
  while (in >> u) {
    if (!(in >> v)) throw parse_error("edge list: dangling endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("edge list: endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
    if (u == v) throw parse_error("edge list: loop at " + std::to_string(u));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.size() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace regsurf
