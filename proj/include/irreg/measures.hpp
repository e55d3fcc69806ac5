#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irreg/error.hpp"
#include "irreg/graph.hpp"
#include "irreg/spectral.hpp"

namespace irreg {

/// N_k = number of unordered vertex pairs whose degrees differ by exactly k.
/// Only k with N_k > 0 are stored.
struct NkSpectrum {
  std::size_t n = 0;
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t at(std::size_t k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto [k, c] : counts) s += c;
    return s;
  }
  /// Sum of k * N_k, which is the total irregularity.
  std::uint64_t weighted_sum() const {
    std::uint64_t s = 0;
    for (auto [k, c] : counts) s += k * c;
    return s;
  }
  /// Sum of N_k over k >= 1.
  std::uint64_t unequal_pairs() const { return total() - at(0); }

  friend bool operator==(const NkSpectrum&, const NkSpectrum&) = default;
};

inline NkSpectrum nk_spectrum(const DegreeSequence& d) {
  const std::size_t n = d.order();
  if (n < 2) throw domain_error("N_k spectrum needs at least two vertices");
  NkSpectrum s{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ++s.counts[d[i] - d[j]];
  return s;
}

/// Total irregularity via the rank-weighted form sum_i (n+1-2i) d_i on the sorted sequence.
inline std::uint64_t irr_t(const DegreeSequence& d) {
  const auto n = static_cast<long long>(d.order());
  long long s = 0;
  for (long long i = 1; i <= n; ++i)
    s += (n + 1 - 2 * i) * static_cast<long long>(d[static_cast<std::size_t>(i - 1)]);
  return static_cast<std::uint64_t>(s);
}

/// Sum over unordered pairs of |d_u - d_v|.
inline std::uint64_t irr_t_pairwise(const DegreeSequence& d) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < d.order(); ++i)
    for (std::size_t j = i + 1; j < d.order(); ++j) s += d[i] - d[j];
  return s;
}

/// 2m(n+1) - 2 sum_i i d_i.
inline std::uint64_t irr_t_index_form(const DegreeSequence& d) {
  const auto n = static_cast<long long>(d.order());
  long long weighted = 0;
  for (long long i = 1; i <= n; ++i)
    weighted += i * static_cast<long long>(d[static_cast<std::size_t>(i - 1)]);
  const auto two_m = static_cast<long long>(d.degree_sum());
  return static_cast<std::uint64_t>(two_m * (n + 1) - 2 * weighted);
}

/// Equal-degree pairs, sum over occurring degrees of n_i (n_i - 1) / 2 (degree 0 included).
inline std::uint64_t n0(const DegreeSequence& d) {
  std::uint64_t s = 0;
  for (auto [deg, count] : d.multiplicities()) s += std::uint64_t{count} * (count - 1) / 2;
  return s;
}

inline double ira_from_n0(std::size_t n, std::uint64_t n0_value) {
  if (n < 2) throw domain_error("IRA needs n >= 2");
  if (n0_value == 0) throw domain_error("IRA undefined for N_0 = 0");
  return static_cast<double>(Graph::pair_count(n)) / static_cast<double>(n0_value) - 1.0;
}

inline double irb_from_n0(std::size_t n, std::uint64_t n0_value) {
  if (n < 2) throw domain_error("IRB needs n >= 2");
  const double nd = static_cast<double>(n);
  return 1.0 - 2.0 * static_cast<double>(n0_value) / (nd * (nd - 1.0));
}

/// IRA = n(n-1) / (2 N_0) - 1.
inline double ira(const DegreeSequence& d) { return ira_from_n0(d.order(), n0(d)); }

/// IRB = 1 - 2 N_0 / (n(n-1)).
inline double irb(const DegreeSequence& d) { return irb_from_n0(d.order(), n0(d)); }

/// IRA as (sum_{k>=1} N_k) / N_0.
inline double ira_from_spectrum(const NkSpectrum& s) {
  if (s.at(0) == 0) throw domain_error("IRA undefined for N_0 = 0");
  return static_cast<double>(s.unequal_pairs()) / static_cast<double>(s.at(0));
}

/// IRB as 2 / (n(n-1)) * sum_{k>=1} N_k.
inline double irb_from_spectrum(const NkSpectrum& s) {
  const double nd = static_cast<double>(s.n);
  return 2.0 * static_cast<double>(s.unequal_pairs()) / (nd * (nd - 1.0));
}

/// Graph Gini index irr_t / (2mn).
inline double gini(const DegreeSequence& d) {
  const std::size_t m = d.edge_count();
  if (m == 0) throw domain_error("Gini index undefined for an edgeless graph (zero mean degree)");
  return static_cast<double>(irr_t(d)) /
         (2.0 * static_cast<double>(m) * static_cast<double>(d.order()));
}

/// 1 - (1 / 2mn) sum_i (2i - 1) d_i.
inline double gini_rank_form(const DegreeSequence& d) {
  const std::size_t m = d.edge_count();
  if (m == 0) throw domain_error("Gini index undefined for an edgeless graph (zero mean degree)");
  double s = 0.0;
  for (std::size_t i = 1; i <= d.order(); ++i)
    s += static_cast<double>(2 * i - 1) * static_cast<double>(d[i - 1]);
  return 1.0 - s / (2.0 * static_cast<double>(m) * static_cast<double>(d.order()));
}

namespace detail {
inline std::vector<double> sorted_nonneg(std::span<const double> y) {
  if (y.empty()) throw domain_error("Gini index of an empty sequence");
  std::vector<double> v(y.begin(), y.end());
  double sum = 0.0;
  for (double x : v) {
    if (!(x >= 0.0)) throw domain_error("Gini index needs non-negative values");
    sum += x;
  }
  if (sum == 0.0) throw domain_error("Gini index undefined for zero mean");
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}
}  // namespace detail

/// Gini coefficient of a non-negative sequence, (1 / (2 n^2 mu)) sum_i sum_j |y_i - y_j|.
inline double gini_sequence(std::span<const double> y) {
  const auto v = detail::sorted_nonneg(y);
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  double s = 0.0;
  for (double a : v)
    for (double b : v) s += std::abs(a - b);
  return s / (2.0 * n * n * mean);
}

/// 1 - (1 / (n^2 mu)) sum_i (2i - 1) y_i with y sorted non-increasing.
inline double gini_sequence_rank_form(std::span<const double> y) {
  const auto v = detail::sorted_nonneg(y);
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  double s = 0.0;
  for (std::size_t i = 1; i <= v.size(); ++i) s += static_cast<double>(2 * i - 1) * v[i - 1];
  return 1.0 - s / (n * n * mean);
}

inline double variance(const DegreeSequence& d) {
  const double n = static_cast<double>(d.order());
  const double avg = static_cast<double>(d.degree_sum()) / n;
  double s = 0.0;
  for (auto x : d.degrees()) s += (static_cast<double>(x) - avg) * (static_cast<double>(x) - avg);
  return s / n;
}

inline double discrepancy(const DegreeSequence& d) {
  const double n = static_cast<double>(d.order());
  const double avg = static_cast<double>(d.degree_sum()) / n;
  double s = 0.0;
  for (auto x : d.degrees()) s += std::abs(static_cast<double>(x) - avg);
  return s / n;
}

/// S = n * Disc, the sum of absolute deviations from the average degree.
inline double degree_deviation(const DegreeSequence& d) {
  const double avg = static_cast<double>(d.degree_sum()) / static_cast<double>(d.order());
  double s = 0.0;
  for (auto x : d.degrees()) s += std::abs(static_cast<double>(x) - avg);
  return s;
}

inline std::uint64_t albertson(const Graph& g) {
  const auto deg = g.degrees();
  std::uint64_t s = 0;
  for (auto [u, v] : g.edges()) s += deg[u] > deg[v] ? deg[u] - deg[v] : deg[v] - deg[u];
  return s;
}

inline std::uint64_t sigma(const Graph& g) {
  const auto deg = g.degrees();
  std::uint64_t s = 0;
  for (auto [u, v] : g.edges()) {
    const std::uint64_t diff = deg[u] > deg[v] ? deg[u] - deg[v] : deg[v] - deg[u];
    s += diff * diff;
  }
  return s;
}

inline std::size_t degree_set_size(const DegreeSequence& d) { return d.distinct_count(); }

struct MeasureOptions {
  bool spectral = true;
  SpectralOptions spectral_options{};
  /// Leave gini unset for m = 0 instead of throwing.
  bool allow_edgeless = false;
};

/// Every measure for one graph. Optional members are unset when the measure is not
/// defined (rho for n < 3 or an isolated vertex, gini for m = 0) or not requested.
struct MeasureReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t degree_set_size = 0;
  std::uint64_t irr_t = 0;
  std::uint64_t albertson = 0;
  std::uint64_t sigma = 0;
  std::uint64_t n0 = 0;
  double ira = 0.0;
  double irb = 0.0;
  std::optional<double> gini;
  std::optional<double> cs;
  double var = 0.0;
  double disc = 0.0;
  double s = 0.0;
  std::optional<double> rho;
  bool connected = true;

  std::size_t degset_minus_1() const { return degree_set_size - 1; }
  bool regular() const { return degree_set_size == 1; }
};

/// Degree-only part of the report plus A and sigma; no spectral work.
inline MeasureReport degree_measures(const Graph& g, const DegreeSequence& d,
                                     bool allow_edgeless = false) {
  if (g.order() < 2) throw domain_error("measures need n >= 2");
  MeasureReport r;
  r.n = d.order();
  r.m = d.edge_count();
  r.max_degree = d.max_degree();
  r.min_degree = d.min_degree();
  r.degree_set_size = degree_set_size(d);
  r.irr_t = irr_t(d);
  r.albertson = albertson(g);
  r.sigma = sigma(g);
  r.n0 = n0(d);
  r.ira = ira_from_n0(r.n, r.n0);
  r.irb = irb_from_n0(r.n, r.n0);
  if (r.m > 0 || !allow_edgeless) r.gini = gini(d);
  r.var = variance(d);
  r.disc = discrepancy(d);
  r.s = degree_deviation(d);
  return r;
}

/// Throws domain_error for n < 2, and for m = 0 unless opt.allow_edgeless.
/// Spectral measures on a disconnected graph are still evaluated (with connected = false).
inline MeasureReport compute_all(const Graph& g, const MeasureOptions& opt = {}) {
  const auto d = degree_sequence(g);
  MeasureReport r = degree_measures(g, d, opt.allow_edgeless);
  r.connected = is_connected(g);
  if (opt.spectral) {
    const double avg = 2.0 * static_cast<double>(r.m) / static_cast<double>(r.n);
    r.cs = detail::shifted_power_iteration(g, opt.spectral_options).lambda1 - avg;
    if (r.n >= 3 && r.min_degree >= 1) r.rho = rho(g);
  }
  return r;
}

/// Half-away-from-zero rounding to a fixed number of decimals.
inline double round_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(x * scale) / scale;
}

/// Names accepted by measure_value, in CSV column order.
inline constexpr std::array<std::string_view, 14> csv_columns = {
    "n", "m", "irr_t", "degset_minus_1", "cs", "albertson", "sigma",
    "var", "s", "gini", "rho", "n0", "ira", "irb"};

inline constexpr std::array<std::string_view, 5> extra_measure_names = {
    "max_degree", "min_degree", "degree_set_size", "disc", "connected"};

inline bool is_measure_name(std::string_view name) {
  for (auto c : csv_columns)
    if (c == name) return true;
  for (auto c : extra_measure_names)
    if (c == name) return true;
  return false;
}

inline bool is_integer_measure(std::string_view name) {
  for (std::string_view c : {"n", "m", "irr_t", "degset_minus_1", "albertson", "sigma", "n0",
                             "max_degree", "min_degree", "degree_set_size", "connected"})
    if (c == name) return true;
  return false;
}

/// Value of a named field; unset when the measure is unavailable for this report.
inline std::optional<double> measure_value(const MeasureReport& r, std::string_view name) {
  auto u = [](auto x) { return std::optional<double>(static_cast<double>(x)); };
  if (name == "n") return u(r.n);
  if (name == "m") return u(r.m);
  if (name == "max_degree") return u(r.max_degree);
  if (name == "min_degree") return u(r.min_degree);
  if (name == "degree_set_size") return u(r.degree_set_size);
  if (name == "degset_minus_1") return u(r.degset_minus_1());
  if (name == "irr_t") return u(r.irr_t);
  if (name == "albertson") return u(r.albertson);
  if (name == "sigma") return u(r.sigma);
  if (name == "n0") return u(r.n0);
  if (name == "ira") return r.ira;
  if (name == "irb") return r.irb;
  if (name == "gini") return r.gini;
  if (name == "cs") return r.cs;
  if (name == "var") return r.var;
  if (name == "disc") return r.disc;
  if (name == "s") return r.s;
  if (name == "rho") return r.rho;
  if (name == "connected") return u(r.connected ? 1 : 0);
  throw domain_error("unknown measure '" + std::string(name) + "'");
}

}  // namespace irreg
