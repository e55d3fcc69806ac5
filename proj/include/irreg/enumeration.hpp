#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "irreg/error.hpp"
#include "irreg/graph.hpp"
#include "irreg/isomorphism.hpp"
#include "irreg/measures.hpp"

namespace irreg {

/// Composable filter over MeasureReport fields.
class Predicate {
 public:
  using function_type = std::function<bool(const MeasureReport&)>;

  Predicate() = default;
  Predicate(function_type f) : f_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

  bool operator()(const MeasureReport& r) const { return !f_ || f_(r); }
  bool trivial() const noexcept { return !f_; }

  friend Predicate operator&&(Predicate a, Predicate b) {
    return Predicate([a = std::move(a), b = std::move(b)](const MeasureReport& r) {
      return a(r) && b(r);
    });
  }
  friend Predicate operator||(Predicate a, Predicate b) {
    return Predicate([a = std::move(a), b = std::move(b)](const MeasureReport& r) {
      return a(r) || b(r);
    });
  }
  friend Predicate operator!(Predicate a) {
    return Predicate([a = std::move(a)](const MeasureReport& r) { return !a(r); });
  }

  /// `name` equals `value` within `tol`. An unavailable measure never matches.
  static Predicate equals(std::string name, double value, double tol = 0.0) {
    if (!is_measure_name(name)) throw domain_error("unknown measure '" + name + "'");
    return Predicate([name = std::move(name), value, tol](const MeasureReport& r) {
      auto v = measure_value(r, name);
      return v && std::abs(*v - value) <= tol;
    });
  }
  static Predicate at_least(std::string name, double value) {
    if (!is_measure_name(name)) throw domain_error("unknown measure '" + name + "'");
    return Predicate([name = std::move(name), value](const MeasureReport& r) {
      auto v = measure_value(r, name);
      return v && *v >= value;
    });
  }
  static Predicate at_most(std::string name, double value) {
    if (!is_measure_name(name)) throw domain_error("unknown measure '" + name + "'");
    return Predicate([name = std::move(name), value](const MeasureReport& r) {
      auto v = measure_value(r, name);
      return v && *v <= value;
    });
  }

 private:
  function_type f_;
};

inline constexpr std::size_t enumeration_max_order = 8;
inline constexpr std::size_t enumeration_spectral_max_order = 6;

struct EnumerationTask {
  std::size_t n = 3;
  bool connected_only = true;
  Predicate predicate{};
  bool spectral = false;
  /// Lifts the n <= 6 default cap on spectral enumeration (the hard cap of 8 stays).
  bool spectral_above_cap = false;
  SpectralOptions spectral_options{};
};

inline void validate(const EnumerationTask& task) {
  if (task.n < 1 || task.n > enumeration_max_order)
    throw domain_error("enumeration order " + std::to_string(task.n) + " outside [1, " +
                       std::to_string(enumeration_max_order) + "]");
  if (task.spectral && !task.spectral_above_cap && task.n > enumeration_spectral_max_order)
    throw domain_error("spectral enumeration is capped at n <= " +
                       std::to_string(enumeration_spectral_max_order));
}

/// Size of the labeled search space, 2^(n(n-1)/2).
inline std::uint64_t search_space_size(std::size_t n) {
  return std::uint64_t{1} << Graph::pair_count(n);
}

/// Visits every labeled graph whose bitmask lies in [lo, hi) and passes the task's
/// filters, in bitmask order. The visitor is called as visit(mask, graph, report).
/// For n = 1 there are no measures; the report is default-initialised apart from n.
template <class Visitor>
std::uint64_t enumerate_range(const EnumerationTask& task, std::uint64_t lo, std::uint64_t hi,
                              Visitor&& visit) {
  validate(task);
  MeasureOptions opt{task.spectral, task.spectral_options, true};
  std::uint64_t yielded = 0;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const Graph g = Graph::from_upper_triangle(task.n, mask);
    const bool conn = is_connected(g);
    if (task.connected_only && !conn) continue;
    MeasureReport r;
    if (task.n >= 2) {
      r = compute_all(g, opt);
    } else {
      r.n = 1;
      r.degree_set_size = 1;
    }
    if (!task.predicate(r)) continue;
    ++yielded;
    visit(mask, g, r);
  }
  return yielded;
}

/// Every labeled graph exactly once, filtered, in bitmask order.
template <class Visitor>
std::uint64_t enumerate(const EnumerationTask& task, Visitor&& visit) {
  validate(task);
  return enumerate_range(task, 0, search_space_size(task.n), std::forward<Visitor>(visit));
}

struct EnumeratedGraph {
  std::uint64_t mask;
  Graph graph;
  MeasureReport report;
};

/// Materialised enumeration; meant for n <= 6.
inline std::vector<EnumeratedGraph> enumerate_all(const EnumerationTask& task) {
  std::vector<EnumeratedGraph> out;
  enumerate(task, [&](std::uint64_t mask, const Graph& g, const MeasureReport& r) {
    out.push_back({mask, g, r});
  });
  return out;
}

/// Isomorphism-class representatives of the filtered graphs, first in bitmask order.
inline IsomorphismClasses isomorphism_classes(const EnumerationTask& task) {
  IsomorphismClasses classes;
  enumerate(task, [&](std::uint64_t, const Graph& g, const MeasureReport&) { classes.add(g); });
  return classes;
}

struct ParallelOptions {
  unsigned threads = 0;  ///< 0 = hardware concurrency
  std::size_t chunks = 64;
};

/// Splits the bitmask space into contiguous chunks, folds each chunk into its own
/// accumulator (make() -> Acc; acc.observe(mask, graph, report)), then merges the
/// chunk accumulators in range order (acc.merge(std::move(later))). The result does
/// not depend on the thread count.
template <class Acc, class Make>
Acc parallel_reduce(const EnumerationTask& task, Make&& make, ParallelOptions popt = {}) {
  validate(task);
  const std::uint64_t total = search_space_size(task.n);
  const std::uint64_t chunks = std::clamp<std::uint64_t>(popt.chunks, 1, total);
  std::vector<std::uint64_t> bounds(chunks + 1);
  for (std::uint64_t c = 0; c <= chunks; ++c) bounds[c] = total * c / chunks;

  std::vector<Acc> partial;
  partial.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) partial.push_back(make());

  unsigned threads = popt.threads != 0 ? popt.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
        Acc& acc = partial[c];
        enumerate_range(task, bounds[c], bounds[c + 1],
                        [&](std::uint64_t mask, const Graph& g, const MeasureReport& r) {
                          acc.observe(mask, g, r);
                        });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Acc result = std::move(partial[0]);
  for (std::uint64_t c = 1; c < chunks; ++c) result.merge(std::move(partial[c]));
  return result;
}

}  // namespace irreg
