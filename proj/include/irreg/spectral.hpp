#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "irreg/error.hpp"
#include "irreg/graph.hpp"

namespace irreg {

struct SpectralOptions {
  double tolerance = 1e-10;
  long max_iterations = 100000;
};

struct SpectralResult {
  double lambda1 = 0.0;
  long iterations = 0;
  double residual = 0.0;  ///< ||A v - lambda1 v||_inf for the unit Perron estimate v
};

namespace detail {

// Power iteration on A + I from the all-ones vector. Stops once both the Rayleigh
// quotient change and the euclidean residual are within tolerance.
inline SpectralResult shifted_power_iteration(const Graph& g, const SpectralOptions& opt) {
  if (!(opt.tolerance > 0.0)) throw domain_error("spectral tolerance must be positive");
  const std::size_t n = g.order();
  std::vector<std::vector<vertex>> adj(n);
  for (vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n);
  double theta_prev = std::numeric_limits<double>::infinity();
  SpectralResult res;
  for (long it = 1; it <= opt.max_iterations; ++it) {
    for (vertex i = 0; i < n; ++i) {
      double s = v[i];
      for (vertex j : adj[i]) s += v[j];
      w[i] = s;
    }
    double theta = 0.0;
    for (vertex i = 0; i < n; ++i) theta += v[i] * w[i];
    double r2 = 0.0, rinf = 0.0, norm = 0.0;
    for (vertex i = 0; i < n; ++i) {
      const double r = w[i] - theta * v[i];
      r2 += r * r;
      rinf = std::max(rinf, std::abs(r));
      norm += w[i] * w[i];
    }
    res = {theta - 1.0, it, rinf};
    if (std::abs(theta - theta_prev) <= opt.tolerance && std::sqrt(r2) <= opt.tolerance)
      return res;
    theta_prev = theta;
    norm = std::sqrt(norm);
    for (vertex i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  throw convergence_error("power iteration did not converge within " +
                              std::to_string(opt.max_iterations) + " iterations",
                          res.lambda1, res.iterations);
}

}  // namespace detail

/// Largest adjacency eigenvalue of a connected graph.
inline SpectralResult lambda1(const Graph& g, const SpectralOptions& opt = {}) {
  if (!is_connected(g)) throw domain_error("lambda1 requires a connected graph");
  return detail::shifted_power_iteration(g, opt);
}

/// Collatz-Sinogowitz index, lambda1 - 2m/n.
inline double cs_index(const Graph& g, const SpectralOptions& opt = {}) {
  const double avg = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
  return lambda1(g, opt).lambda1 - avg;
}

/// Randic index, sum over edges of 1/sqrt(d_u d_v).
inline double randic(const Graph& g) {
  const auto deg = g.degrees();
  for (vertex v = 0; v < g.order(); ++v)
    if (deg[v] == 0)
      throw domain_error("Randic index undefined: vertex " + std::to_string(v) + " is isolated");
  double r = 0.0;
  for (auto [u, v] : g.edges())
    r += 1.0 / std::sqrt(static_cast<double>(deg[u]) * static_cast<double>(deg[v]));
  return r;
}

/// Normalized heterogeneity index (n - 2R) / (n - 2 sqrt(n-1)), defined for n >= 3.
inline double rho(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw domain_error("normalized heterogeneity index needs n >= 3");
  const double nd = static_cast<double>(n);
  return (nd - 2.0 * randic(g)) / (nd - 2.0 * std::sqrt(nd - 1.0));
}

}  // namespace irreg
