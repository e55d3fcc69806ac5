#pragma once

// Test-only reference computations. Each one works from the raw adjacency (or a closed
// form) and shares no code path with the library routine it is compared against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "irreg/generators.hpp"
#include "irreg/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency_matrix(const irreg::Graph& g) {
  const auto n = g.order();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1.0 : 0.0;
  return a;
}

/// Cyclic Jacobi rotations; returns all eigenvalues of a symmetric matrix, sorted descending.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

inline double largest_eigenvalue(const irreg::Graph& g) {
  return jacobi_eigenvalues(adjacency_matrix(g)).front();
}

/// Warshall transitive closure: connected iff vertex 0 reaches everything.
inline bool connected_by_closure(const irreg::Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) r[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  return std::all_of(r[0].begin(), r[0].end(), [](char c) { return c != 0; });
}

/// Degrees counted straight off the adjacency relation.
inline std::vector<long long> raw_degrees(const irreg::Graph& g) {
  std::vector<long long> d(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) d[i] += g.adjacent(i, j) ? 1 : 0;
  return d;
}

/// Sum of |d_u - d_v| over unordered vertex pairs, in label order.
inline long long pair_irregularity(const irreg::Graph& g) {
  const auto d = raw_degrees(g);
  long long s = 0;
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = u + 1; v < d.size(); ++v) s += std::llabs(d[u] - d[v]);
  return s;
}

/// Number of unordered pairs with equal degree, by direct pair enumeration.
inline long long equal_degree_pairs(const irreg::Graph& g) {
  const auto d = raw_degrees(g);
  long long s = 0;
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = u + 1; v < d.size(); ++v) s += d[u] == d[v] ? 1 : 0;
  return s;
}

/// Connected labeled graphs via c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2).
inline std::vector<long long> connected_labeled_counts(std::size_t max_n) {
  auto pow2 = [](std::size_t e) { return 1LL << e; };
  auto pairs = [](std::size_t n) { return n * (n - 1) / 2; };
  std::vector<std::vector<long long>> binom(max_n + 1, std::vector<long long>(max_n + 1, 0));
  for (std::size_t i = 0; i <= max_n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::vector<long long> c(max_n + 1, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    long long v = pow2(pairs(n));
    for (std::size_t k = 1; k < n; ++k) v -= binom[n - 1][k - 1] * c[k] * pow2(pairs(n - k));
    c[n] = v;
  }
  return c;
}

/// Connected graphs from a seeded G(n, p) stream with n in [lo, hi]; deterministic.
inline std::vector<irreg::Graph> random_connected_graphs(std::size_t count, std::size_t lo,
                                                         std::size_t hi, std::uint64_t seed) {
  irreg::SplitMix64 rng(seed);
  std::vector<irreg::Graph> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(rng.between(lo, hi));
    const double p = 0.15 + 0.7 * rng.uniform();
    auto g = irreg::gnp(n, p, rng());
    if (irreg::is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Random permutation of 0..n-1 (Fisher-Yates).
inline std::vector<irreg::vertex> random_permutation(std::size_t n, irreg::SplitMix64& rng) {
  std::vector<irreg::vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.between(0, i - 1)]);
  return p;
}

}  // namespace oracle
