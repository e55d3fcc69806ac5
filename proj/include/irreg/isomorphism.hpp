#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "irreg/error.hpp"
#include "irreg/graph.hpp"

namespace irreg {

namespace detail {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::size_t> dg, dh;
  std::vector<vertex> order;  // g-vertices in assignment order
  std::vector<vertex> map;    // g-vertex -> h-vertex
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const vertex u = order[depth];
    for (vertex x = 0; x < h.order(); ++x) {
      if (used[x] || dh[x] != dg[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const vertex w = order[k];
        ok = g.adjacent(u, w) == h.adjacent(x, map[w]);
      }
      if (!ok) continue;
      map[u] = x;
      used[x] = true;
      if (extend(depth + 1)) return true;
      used[x] = false;
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking search for a degree-preserving bijection mapping edges onto edges.
/// Exponential in the worst case; intended for n <= 8.
inline bool is_isomorphic_to(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw domain_error("isomorphism test needs graphs of equal order");
  if (g.size() != h.size()) return false;
  detail::IsoSearch s{g, h, g.degrees(), h.degrees(), {}, {}, {}};
  {
    auto a = s.dg, b = s.dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  const std::size_t n = g.order();
  // Rare degrees first shrinks the candidate lists early.
  std::vector<std::size_t> freq(n, 0);
  for (auto d : s.dg) ++freq[d];
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), vertex{0});
  std::stable_sort(s.order.begin(), s.order.end(), [&](vertex a, vertex b) {
    if (freq[s.dg[a]] != freq[s.dg[b]]) return freq[s.dg[a]] < freq[s.dg[b]];
    return s.dg[a] > s.dg[b];
  });
  s.map.assign(n, 0);
  s.used.assign(n, false);
  return s.extend(0);
}

/// Isomorphism classes in first-seen order, each with the number of members added.
class IsomorphismClasses {
 public:
  /// Returns true if g opened a new class.
  bool add(const Graph& g, std::uint64_t count = 1) {
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (reps_[i].order() == g.order() && is_isomorphic_to(reps_[i], g)) {
        counts_[i] += count;
        return false;
      }
    }
    reps_.push_back(g);
    counts_.push_back(count);
    return true;
  }

  /// Appends `later`'s classes after this one's, folding isomorphic ones together.
  void merge(const IsomorphismClasses& later) {
    for (std::size_t i = 0; i < later.reps_.size(); ++i) add(later.reps_[i], later.counts_[i]);
  }

  void clear() {
    reps_.clear();
    counts_.clear();
  }

  std::size_t size() const noexcept { return reps_.size(); }
  bool empty() const noexcept { return reps_.empty(); }
  const std::vector<Graph>& representatives() const noexcept { return reps_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  }

 private:
  std::vector<Graph> reps_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace irreg
