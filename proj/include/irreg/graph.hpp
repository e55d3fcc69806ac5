#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irreg/error.hpp"

namespace irreg {

using vertex = std::size_t;
using edge = std::pair<vertex, vertex>;

/// Simple undirected graph on vertices {0..n-1} stored as bit-packed adjacency rows.
///
/// The relation is kept symmetric with an empty diagonal by construction; there is
/// no way to build a Graph holding a self-loop or a one-sided edge. Connectivity is
/// not enforced (see is_connected).
class Graph {
 public:
  Graph() : Graph(1) {}

  /// Edgeless graph of order n.
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
    if (n == 0) throw domain_error("graph order must be at least 1");
  }

  /// Throws range_error on an endpoint >= n and validity_error on a self-loop.
  /// Repeated edges collapse.
  Graph(std::size_t n, std::span<const edge> edges) : Graph(n) {
    for (auto [u, v] : edges) set(u, v);
  }
  Graph(std::size_t n, std::initializer_list<edge> edges)
      : Graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

  /// Bit b of `mask` is the b-th pair of the upper triangle in column order
  /// (0,1),(0,2),(1,2),(0,3),... which is also the graph6 bit order.
  static Graph from_upper_triangle(std::size_t n, std::uint64_t mask) {
    if (pair_count(n) > 64) throw domain_error("bitmask construction needs n <= 11");
    Graph g(n);
    std::size_t b = 0;
    for (vertex j = 1; j < n; ++j)
      for (vertex i = 0; i < j; ++i, ++b)
        if ((mask >> b) & 1U) g.link(i, j);
    return g;
  }

  /// Number of upper-triangle pairs, n(n-1)/2.
  static constexpr std::uint64_t pair_count(std::size_t n) noexcept {
    return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  }

  std::size_t order() const noexcept { return n_; }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  bool adjacent(vertex u, vertex v) const {
    check(u);
    check(v);
    return (row(u)[v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(vertex v) const {
    check(v);
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(n_);
    for (vertex v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
  }

  std::vector<vertex> neighbors(vertex v) const {
    std::vector<vertex> out;
    for (vertex u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    for (vertex u = 0; u < n_; ++u)
      for (vertex v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::span<const std::uint64_t> row(vertex v) const {
    return {bits_.data() + v * words_, words_};
  }

  Graph without_edge(vertex u, vertex v) const {
    Graph g = *this;
    g.check(u);
    g.check(v);
    g.unlink(u, v);
    return g;
  }

  Graph with_edge(vertex u, vertex v) const {
    Graph g = *this;
    g.set(u, v);
    return g;
  }

  /// Graph on the same vertices where vertex v is renamed to perm[v].
  Graph relabeled(std::span<const vertex> perm) const {
    if (perm.size() != n_) throw domain_error("permutation size does not match graph order");
    Graph g(n_);
    for (auto [u, v] : edges()) g.set(perm[u], perm[v]);
    return g;
  }

  Graph complement() const {
    Graph g(n_);
    for (vertex u = 0; u < n_; ++u)
      for (vertex v = u + 1; v < n_; ++v)
        if (!adjacent(u, v)) g.link(u, v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(vertex v) const {
    if (v >= n_)
      throw range_error("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(n_));
  }
  void set(vertex u, vertex v) {
    check(u);
    check(v);
    if (u == v) throw validity_error("self-loop at vertex " + std::to_string(u));
    link(u, v);
  }
  void link(vertex u, vertex v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  void unlink(vertex u, vertex v) {
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// True iff a single sweep from vertex 0 reaches every vertex.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> seen(words, 0), frontier(words, 0), next(words);
  seen[0] = frontier[0] = 1;
  std::size_t reached = 1;
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      for (auto bits = frontier[w]; bits != 0; bits &= bits - 1) {
        const vertex v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        auto r = g.row(v);
        for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    bool grew = false;
    for (std::size_t w = 0; w < words; ++w) {
      frontier[w] = next[w] & ~seen[w];
      if (frontier[w] != 0) {
        grew = true;
        seen[w] |= frontier[w];
        reached += static_cast<std::size_t>(std::popcount(frontier[w]));
      }
    }
    if (!grew) break;
  }
  return reached == n;
}

/// Degrees sorted non-increasing, d_1 >= d_2 >= ... >= d_n, with the multiplicity view
/// n_i = number of vertices of degree i.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw domain_error("degree sequence must be non-empty");
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
    for (auto d : degrees_) ++multiplicities_[d];
  }

  std::size_t order() const noexcept { return degrees_.size(); }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }
  std::size_t operator[](std::size_t i) const { return degrees_.at(i); }
  const std::map<std::size_t, std::size_t>& multiplicities() const noexcept {
    return multiplicities_;
  }

  std::size_t max_degree() const noexcept { return degrees_.front(); }
  std::size_t min_degree() const noexcept { return degrees_.back(); }
  std::size_t degree_sum() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
  }
  /// m = half the degree sum; only meaningful for sequences taken from a graph.
  std::size_t edge_count() const noexcept { return degree_sum() / 2; }
  std::size_t distinct_count() const noexcept { return multiplicities_.size(); }
  bool is_regular() const noexcept { return multiplicities_.size() == 1; }

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.degrees_ == b.degrees_;
  }

 private:
  std::vector<std::size_t> degrees_;
  std::map<std::size_t, std::size_t> multiplicities_;
};

inline DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g.degrees()); }

enum class DifferenceKind {
  B,   ///< |d_i - d_j| off the diagonal (symmetric)
  B1,  ///< d_i - d_j (antisymmetric)
  B2,  ///< (d_i - d_j)^2 (symmetric)
};

/// Degree-difference matrix over vertices relabeled into non-increasing degree order.
struct DegreeDifferenceMatrix {
  DifferenceKind kind;
  std::size_t n;
  std::vector<long long> entries;  ///< row-major n x n
  std::vector<vertex> order;       ///< order[i] = original label of sorted position i

  long long at(std::size_t i, std::size_t j) const { return entries.at(i * n + j); }

  long long upper_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += at(i, j);
    return s;
  }
};

inline DegreeDifferenceMatrix degree_difference_matrix(const Graph& g, DifferenceKind kind) {
  const std::size_t n = g.order();
  const auto deg = g.degrees();
  DegreeDifferenceMatrix m{kind, n, std::vector<long long>(n * n, 0), std::vector<vertex>(n)};
  std::iota(m.order.begin(), m.order.end(), vertex{0});
  std::stable_sort(m.order.begin(), m.order.end(),
                   [&](vertex a, vertex b) { return deg[a] > deg[b]; });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long long diff = static_cast<long long>(deg[m.order[i]]) -
                             static_cast<long long>(deg[m.order[j]]);
      long long& e = m.entries[i * n + j];
      switch (kind) {
        case DifferenceKind::B: e = i < j ? diff : (i > j ? -diff : 0); break;
        case DifferenceKind::B1: e = diff; break;
        case DifferenceKind::B2: e = diff * diff; break;
      }
    }
  }
  return m;
}

}  // namespace irreg
