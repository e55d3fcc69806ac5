#pragma once

// Edge-list and graph6 text formats.
//
// Edge list: first non-blank line "n <count>", then one "u v" pair of 0-based
// vertex indices per line. Blank lines and lines starting with '#' are ignored.
//
// graph6: one byte 63+n (n <= 62), then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
// emitted as 63+group, zero-padded to a multiple of 6 bits.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "irreg/error.hpp"
#include "irreg/graph.hpp"

namespace irreg {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_index(std::string_view s, std::size_t& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace detail

inline Graph parse_edgelist(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split_fields(line);
    if (fields.size() != 2) throw parse_error("expected two fields", line_no);
    if (!have_header) {
      if (fields[0] != "n" || !detail::parse_index(fields[1], n))
        throw parse_error("expected header \"n <count>\"", line_no);
      if (n == 0) throw parse_error("vertex count must be at least 1", line_no);
      have_header = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (!detail::parse_index(fields[0], u) || !detail::parse_index(fields[1], v))
      throw parse_error("vertex indices must be non-negative integers", line_no);
    if (u >= n || v >= n)
      throw range_error("line " + std::to_string(line_no) + ": vertex index out of range for n = " +
                        std::to_string(n));
    if (u == v)
      throw validity_error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                           std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (!have_header) throw parse_error("missing header \"n <count>\"");
  return Graph(n, edges);
}

inline std::string emit_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline constexpr std::size_t graph6_max_order = 62;

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw encoding_error("empty graph6 string");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw encoding_error("graph6 byte " + std::to_string(b) + " outside [63,126]");
  }
  const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
  if (n > graph6_max_order) throw encoding_error("graph6 orders above 62 are not supported");
  if (n == 0) throw encoding_error("graph6 order 0 is not representable as a Graph");
  const std::uint64_t bits = Graph::pair_count(n);
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - 1 != bytes)
    throw encoding_error("graph6 length error: expected " + std::to_string(bytes) +
                         " data bytes for n = " + std::to_string(n) + ", got " +
                         std::to_string(text.size() - 1));
  std::vector<edge> edges;
  std::uint64_t k = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i, ++k) {
      const unsigned group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) throw domain_error("graph6 emission supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  unsigned group = 0;
  int filled = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

/// One graph per non-blank line.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const encoding_error& e) {
      throw encoding_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace irreg
