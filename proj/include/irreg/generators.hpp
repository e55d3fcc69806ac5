#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irreg/error.hpp"
#include "irreg/graph.hpp"

namespace irreg {

/// SplitMix64 (Steele, Lea, Flood). Output i is mix(seed + (i+1) * golden_gamma), so any
/// position in the stream is addressable and split() yields an independent stream.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi]; modulo bias is negligible at the ranges used here.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + (*this)() % (hi - lo + 1);
  }

  SplitMix64 split() noexcept { return SplitMix64((*this)()); }

 private:
  std::uint64_t state_;
};

/// Connected antiregular graph A_n: on labels 1..n, i ~ j iff i + j > n.
/// Degrees are {1, ..., n-1} with floor(n/2) repeated once.
inline Graph antiregular(std::size_t n) {
  if (n < 2) throw domain_error("antiregular graph needs n >= 2");
  std::vector<edge> e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (i + j > n) e.emplace_back(i - 1, j - 1);
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<edge> e;
  for (vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw domain_error("cycle needs n >= 3");
  std::vector<edge> e;
  for (vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

inline Graph complete(std::size_t n) { return Graph(n).complement(); }

/// K_{1,n-1} centred at vertex 0.
inline Graph star(std::size_t n) {
  std::vector<edge> e;
  for (vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

/// Clique on vertices 0..k-1 joined completely to an independent set on k..n-1.
inline Graph complete_split(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) throw domain_error("complete split graph needs 1 <= k <= n-1");
  std::vector<edge> e;
  for (vertex u = 0; u < k; ++u)
    for (vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

/// K_n with the edge (n-2, n-1) removed.
inline Graph complete_minus_edge(std::size_t n) {
  if (n < 2) throw domain_error("K_n - e needs n >= 2");
  return complete(n).without_edge(n - 2, n - 1);
}

/// Erdos-Renyi G(n, p): pairs visited in lexicographic order, one SplitMix64 draw each.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("gnp probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<edge> e;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.emplace_back(u, v);
  return Graph(n, e);
}

enum class Family { antiregular, path, cycle, complete, star, complete_split, complete_minus_edge, gnp };

inline constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::antiregular: return "antiregular";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_split: return "complete_split";
    case Family::complete_minus_edge: return "complete_minus_edge";
    case Family::gnp: return "gnp";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::antiregular, Family::path, Family::cycle, Family::complete, Family::star,
                 Family::complete_split, Family::complete_minus_edge, Family::gnp})
    if (family_name(f) == s) return f;
  return std::nullopt;
}

struct FamilySpec {
  Family family = Family::path;
  std::size_t n = 1;
  std::size_t k = 1;  ///< clique size, complete_split only
  double p = 0.5;     ///< gnp only
  std::uint64_t seed = 0;
};

inline Graph family(const FamilySpec& spec) {
  if (spec.n < 1) throw domain_error("family order must be at least 1");
  switch (spec.family) {
    case Family::antiregular: return antiregular(spec.n);
    case Family::path: return path(spec.n);
    case Family::cycle: return cycle(spec.n);
    case Family::complete: return complete(spec.n);
    case Family::star: return star(spec.n);
    case Family::complete_split: return complete_split(spec.n, spec.k);
    case Family::complete_minus_edge: return complete_minus_edge(spec.n);
    case Family::gnp: return gnp(spec.n, spec.p, spec.seed);
  }
  throw domain_error("unknown family");
}

}  // namespace irreg
