#pragma once

// Exhaustive checks of the bounds, equality characterizations and identities satisfied
// by N_0, IRA, IRB and irr_t, over every connected labeled graph of a given order.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "irreg/enumeration.hpp"
#include "irreg/error.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph.hpp"
#include "irreg/io.hpp"
#include "irreg/isomorphism.hpp"
#include "irreg/measures.hpp"

namespace irreg {

struct VerificationReport {
  std::string claim_id;
  std::size_t n = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> witnesses;        ///< graph6
  std::vector<std::string> witness_labels;   ///< parallel to witnesses
  std::map<std::string, std::int64_t> stats;
  std::vector<std::string> notes;            ///< first few violations, findings
  bool passed = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline constexpr std::array<std::string_view, 10> claim_ids = {
    "lemma_n0",         "prop_bounds",      "lemma_delta",     "prop_lower",
    "prop_bidegreed",   "cor_edge_deleted", "problem1_ira_irb", "irrt_not_unique",
    "eq2_identity",     "sec3_identities"};

inline constexpr std::string_view table_match_id = "table_match";
inline constexpr std::size_t verification_min_order = 3;

inline bool is_claim_id(std::string_view id) {
  return id == table_match_id ||
         std::find(claim_ids.begin(), claim_ids.end(), id) != claim_ids.end();
}

namespace detail {

inline constexpr std::size_t max_recorded_notes = 8;

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::size_t count_degree(const Graph& g, std::size_t d) {
  std::size_t c = 0;
  for (vertex v = 0; v < g.order(); ++v) c += g.degree(v) == d ? 1 : 0;
  return c;
}

class ClaimChecker {
 public:
  ClaimChecker(std::string id, std::size_t n) : id_(std::move(id)), n_(n) {}
  virtual ~ClaimChecker() = default;

  virtual void observe(std::uint64_t mask, const Graph& g, const MeasureReport& r) = 0;
  virtual void merge(ClaimChecker& later) = 0;
  virtual std::unique_ptr<ClaimChecker> fresh() const = 0;
  virtual VerificationReport finish() {
    VerificationReport rep = base();
    rep.passed = rep.violations == 0;
    return rep;
  }

 protected:
  VerificationReport base() const {
    VerificationReport rep;
    rep.claim_id = id_;
    rep.n = n_;
    rep.graphs_checked = checked_;
    rep.violations = violations_;
    rep.notes = notes_;
    return rep;
  }
  void violation(const Graph& g, const std::string& what) {
    ++violations_;
    if (notes_.size() < max_recorded_notes) notes_.push_back(emit_graph6(g) + ": " + what);
  }
  void merge_base(const ClaimChecker& later) {
    checked_ += later.checked_;
    violations_ += later.violations_;
    for (const auto& s : later.notes_)
      if (notes_.size() < max_recorded_notes) notes_.push_back(s);
  }
  static void add_witnesses(VerificationReport& rep, const IsomorphismClasses& classes,
                            const std::string& label) {
    for (const auto& g : classes.representatives()) {
      rep.witnesses.push_back(emit_graph6(g));
      rep.witness_labels.push_back(label);
    }
  }
  std::size_t pairs() const { return static_cast<std::size_t>(Graph::pair_count(n_)); }

  std::string id_;
  std::size_t n_;
  std::uint64_t checked_ = 0;
  std::uint64_t violations_ = 0;
  std::vector<std::string> notes_;
};

template <class Derived>
class CheckerBase : public ClaimChecker {
 public:
  using ClaimChecker::ClaimChecker;
  std::unique_ptr<ClaimChecker> fresh() const override {
    return std::make_unique<Derived>(n_);
  }
  void merge(ClaimChecker& later) override {
    auto& other = static_cast<Derived&>(later);
    merge_base(other);
    static_cast<Derived*>(this)->merge_state(other);
  }
};

// Shared test "is g isomorphic to A_n": only graphs with A_n's degree sequence can be.
class AntiregularProbe {
 public:
  explicit AntiregularProbe(std::size_t n)
      : target_(antiregular(n)), degrees_(degree_sequence(target_)) {}
  bool matches(const Graph& g) const {
    return degree_sequence(g) == degrees_ && is_isomorphic_to(g, target_);
  }
  /// Cheap rejection through the report: A_n has N_0 = 1 and n-1 distinct degrees.
  bool matches(const Graph& g, const MeasureReport& r) const {
    return r.n0 == 1 && r.degree_set_size + 1 == g.order() && matches(g);
  }

 private:
  Graph target_;
  DegreeSequence degrees_;
};

// N_0 >= 1, with N_0 = 1 exactly on graphs isomorphic to A_n.
class LemmaN0 final : public CheckerBase<LemmaN0> {
 public:
  explicit LemmaN0(std::size_t n) : CheckerBase("lemma_n0", n), probe_(n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    ++checked_;
    if (r.n0 < 1) violation(g, "N_0 = 0");
    const bool is_an = probe_.matches(g, r);
    if ((r.n0 == 1) != is_an)
      violation(g, "N_0 = " + std::to_string(r.n0) + (is_an ? " on A_n" : " on a non-antiregular graph"));
    if (r.n0 == 1) equality_.add(g);
  }
  void merge_state(LemmaN0& o) { equality_.merge(o.equality_); }
  VerificationReport finish() override {
    auto rep = base();
    if (equality_.empty()) {
      ++rep.violations;
      rep.notes.push_back("no graph attains N_0 = 1");
    }
    add_witnesses(rep, equality_, "n0=1");
    rep.stats["labeled_equality_graphs"] = static_cast<std::int64_t>(equality_.total());
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  AntiregularProbe probe_;
  IsomorphismClasses equality_;
};

// 0 <= IRA <= C-1, 0 <= IRB <= 1 - 2/(n(n-1)); left equality iff regular, right iff antiregular.
class PropBounds final : public CheckerBase<PropBounds> {
 public:
  explicit PropBounds(std::size_t n) : CheckerBase("prop_bounds", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    ++checked_;
    const double nd = static_cast<double>(n_);
    const double ira_max = static_cast<double>(pairs()) - 1.0;
    const double irb_max = 1.0 - 2.0 / (nd * (nd - 1.0));
    const bool regular = r.degree_set_size == 1;
    const bool anti = r.degree_set_size == n_ - 1;
    if (r.ira < 0.0 || r.ira > ira_max) violation(g, "IRA out of bounds");
    if (r.irb < 0.0 || r.irb > irb_max) violation(g, "IRB out of bounds");
    if ((r.ira == 0.0) != regular) violation(g, "IRA = 0 does not match regularity");
    if ((r.irb == 0.0) != regular) violation(g, "IRB = 0 does not match regularity");
    if ((r.ira == ira_max) != anti) violation(g, "IRA upper equality does not match antiregularity");
    if ((r.irb == irb_max) != anti) violation(g, "IRB upper equality does not match antiregularity");
    regular_ += regular ? 1 : 0;
    anti_ += anti ? 1 : 0;
  }
  void merge_state(PropBounds& o) {
    regular_ += o.regular_;
    anti_ += o.anti_;
  }
  VerificationReport finish() override {
    auto rep = base();
    rep.stats["labeled_regular"] = static_cast<std::int64_t>(regular_);
    rep.stats["labeled_antiregular"] = static_cast<std::int64_t>(anti_);
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  std::uint64_t regular_ = 0;
  std::uint64_t anti_ = 0;
};

// Nonregular: N_0 <= C - Delta, equality iff bidegreed with a unique vertex of degree n-1.
class LemmaDelta final : public CheckerBase<LemmaDelta> {
 public:
  explicit LemmaDelta(std::size_t n) : CheckerBase("lemma_delta", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    if (r.regular()) return;
    ++checked_;
    const std::uint64_t bound = pairs() - r.max_degree;
    if (r.n0 > bound) violation(g, "N_0 exceeds C - Delta");
    const bool characterized = r.degree_set_size == 2 && count_degree(g, n_ - 1) == 1;
    if ((r.n0 == bound) != characterized)
      violation(g, "equality case does not match the bidegreed/unique-universal-vertex condition");
    if (r.n0 == bound) equality_.add(g);
  }
  void merge_state(LemmaDelta& o) { equality_.merge(o.equality_); }
  VerificationReport finish() override {
    auto rep = base();
    add_witnesses(rep, equality_, "equality");
    rep.stats["labeled_equality_graphs"] = static_cast<std::int64_t>(equality_.total());
    if (equality_.empty()) {
      ++rep.violations;
      rep.notes.push_back("equality never attained");
    }
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  IsomorphismClasses equality_;
};

// Nonregular: IRA >= 2D/(n(n-1)-2D), IRB >= 2D/(n(n-1)), same equality case as LemmaDelta.
class PropLower final : public CheckerBase<PropLower> {
 public:
  explicit PropLower(std::size_t n) : CheckerBase("prop_lower", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    if (r.regular()) return;
    ++checked_;
    const double nn1 = static_cast<double>(n_) * static_cast<double>(n_ - 1);
    const double delta = static_cast<double>(r.max_degree);
    const double ira_lo = 2.0 * delta / (nn1 - 2.0 * delta);
    const double irb_lo = 2.0 * delta / nn1;
    constexpr double rel = 1e-12;
    const bool ira_eq = close_rel(r.ira, ira_lo, rel);
    const bool irb_eq = close_rel(r.irb, irb_lo, rel);
    if (r.ira < ira_lo && !ira_eq) violation(g, "IRA below its lower bound");
    if (r.irb < irb_lo && !irb_eq) violation(g, "IRB below its lower bound");
    const bool characterized = r.degree_set_size == 2 && count_degree(g, n_ - 1) == 1;
    if (ira_eq != characterized) violation(g, "IRA equality case mismatch");
    if (irb_eq != characterized) violation(g, "IRB equality case mismatch");
    if (ira_eq) equality_.add(g);
  }
  void merge_state(PropLower& o) { equality_.merge(o.equality_); }
  VerificationReport finish() override {
    auto rep = base();
    add_witnesses(rep, equality_, "equality");
    rep.stats["labeled_equality_graphs"] = static_cast<std::int64_t>(equality_.total());
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  IsomorphismClasses equality_;
};

// Bidegreed H1, H2 with n_Delta(H1) = n_Delta(H2) or n_delta(H1) = n_Delta(H2) share IRA and IRB.
class PropBidegreed final : public CheckerBase<PropBidegreed> {
 public:
  explicit PropBidegreed(std::size_t n) : CheckerBase("prop_bidegreed", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    if (r.degree_set_size != 2) return;
    ++checked_;
    const std::size_t n_max = count_degree(g, r.max_degree);
    combos_.emplace(n_max, r.n0, r.ira, r.irb);
  }
  void merge_state(PropBidegreed& o) { combos_.insert(o.combos_.begin(), o.combos_.end()); }
  VerificationReport finish() override {
    auto rep = base();
    std::uint64_t compared = 0;
    for (const auto& a : combos_) {
      for (const auto& b : combos_) {
        const std::size_t a_max = std::get<0>(a), b_max = std::get<0>(b);
        if (a_max != b_max && n_ - a_max != b_max) continue;
        ++compared;
        if (std::get<2>(a) != std::get<2>(b) || std::get<3>(a) != std::get<3>(b)) {
          ++rep.violations;
          if (rep.notes.size() < max_recorded_notes)
            rep.notes.push_back("n_Delta " + std::to_string(a_max) + " vs " +
                                std::to_string(b_max) + ": IRA/IRB differ");
        }
      }
    }
    rep.stats["distinct_combinations"] = static_cast<std::int64_t>(combos_.size());
    rep.stats["combination_pairs_compared"] = static_cast<std::int64_t>(compared);
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  std::set<std::tuple<std::size_t, std::uint64_t, double, double>> combos_;
};

// Every connected H - e with H regular has the same IRA and IRB.
class CorEdgeDeleted final : public CheckerBase<CorEdgeDeleted> {
 public:
  explicit CorEdgeDeleted(std::size_t n) : CheckerBase("cor_edge_deleted", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    if (!r.regular() || r.m == 0) return;
    ++checked_;
    for (auto [u, v] : g.edges()) {
      Graph h = g.without_edge(u, v);
      if (!is_connected(h)) continue;
      ++deletions_;
      const auto d = degree_sequence(h);
      Value val{n0(d), ira(d), irb(d)};
      if (!first_) {
        first_ = val;
        first_witness_ = emit_graph6(h);
      } else if (*first_ != val) {
        violation(h, "IRA/IRB differ from the first edge-deleted regular graph");
      }
    }
  }
  void merge_state(CorEdgeDeleted& o) {
    deletions_ += o.deletions_;
    if (!o.first_) return;
    if (!first_) {
      first_ = o.first_;
      first_witness_ = o.first_witness_;
    } else if (*first_ != *o.first_) {
      ++violations_;
      if (notes_.size() < max_recorded_notes)
        notes_.push_back(o.first_witness_ + ": IRA/IRB differ across chunks");
    }
  }
  VerificationReport finish() override {
    auto rep = base();
    rep.stats["edge_deletions"] = static_cast<std::int64_t>(deletions_);
    if (first_) {
      rep.witnesses.push_back(first_witness_);
      rep.witness_labels.push_back("H-e");
      rep.stats["n0"] = static_cast<std::int64_t>(std::get<0>(*first_));
    }
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  using Value = std::tuple<std::uint64_t, double, double>;
  std::uint64_t deletions_ = 0;
  std::optional<Value> first_;
  std::string first_witness_;
};

// Problem 1 chain for IRA and IRB: minimum 0 exactly on regular graphs, maximum exactly on A_n.
class Problem1 final : public CheckerBase<Problem1> {
 public:
  explicit Problem1(std::size_t n) : CheckerBase("problem1_ira_irb", n), probe_(n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    ++checked_;
    const double nd = static_cast<double>(n_);
    const double ira_max = static_cast<double>(pairs()) - 1.0;
    const double irb_max = 1.0 - 2.0 / (nd * (nd - 1.0));
    const bool is_an = probe_.matches(g, r);
    if ((r.ira == 0.0) != r.regular()) violation(g, "IRA minimum does not match regularity");
    if ((r.irb == 0.0) != r.regular()) violation(g, "IRB minimum does not match regularity");
    if ((r.ira == ira_max) != is_an) violation(g, "IRA maximum does not match A_n");
    if ((r.irb == irb_max) != is_an) violation(g, "IRB maximum does not match A_n");
    if (r.ira < 0.0 || r.ira > ira_max || r.irb < 0.0 || r.irb > irb_max)
      violation(g, "value outside [0, maximum]");
    lo_ira_ = std::min(lo_ira_, r.ira);
    hi_ira_ = std::max(hi_ira_, r.ira);
    lo_irb_ = std::min(lo_irb_, r.irb);
    hi_irb_ = std::max(hi_irb_, r.irb);
    if (is_an) maximizers_.add(g);
    if (r.regular()) minimizers_.add(g);
  }
  void merge_state(Problem1& o) {
    lo_ira_ = std::min(lo_ira_, o.lo_ira_);
    hi_ira_ = std::max(hi_ira_, o.hi_ira_);
    lo_irb_ = std::min(lo_irb_, o.lo_irb_);
    hi_irb_ = std::max(hi_irb_, o.hi_irb_);
    maximizers_.merge(o.maximizers_);
    minimizers_.merge(o.minimizers_);
  }
  VerificationReport finish() override {
    auto rep = base();
    const double nd = static_cast<double>(n_);
    if (checked_ > 0) {
      if (lo_ira_ != 0.0 || lo_irb_ != 0.0) {
        ++rep.violations;
        rep.notes.push_back("minimum 0 not attained");
      }
      if (hi_ira_ != static_cast<double>(pairs()) - 1.0 || hi_irb_ != 1.0 - 2.0 / (nd * (nd - 1.0))) {
        ++rep.violations;
        rep.notes.push_back("maximum not attained");
      }
    }
    add_witnesses(rep, maximizers_, "max");
    add_witnesses(rep, minimizers_, "min");
    rep.stats["labeled_maximizers"] = static_cast<std::int64_t>(maximizers_.total());
    rep.stats["labeled_minimizers"] = static_cast<std::int64_t>(minimizers_.total());
    rep.stats["minimizer_classes"] = static_cast<std::int64_t>(minimizers_.size());
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  AntiregularProbe probe_;
  double lo_ira_ = std::numeric_limits<double>::infinity(), hi_ira_ = -1.0;
  double lo_irb_ = std::numeric_limits<double>::infinity(), hi_irb_ = -1.0;
  IsomorphismClasses maximizers_, minimizers_;
};

// Existence probe: is irr_t's maximum attained by some graph other than A_n?
class IrrtNotUnique final : public CheckerBase<IrrtNotUnique> {
 public:
  explicit IrrtNotUnique(std::size_t n) : CheckerBase("irrt_not_unique", n), probe_(n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    ++checked_;
    if (r.irr_t > best_) {
      best_ = r.irr_t;
      maximizers_.clear();
    }
    if (r.irr_t == best_) maximizers_.add(g);
  }
  void merge_state(IrrtNotUnique& o) {
    if (o.checked_ == 0) return;
    if (o.best_ > best_) {
      best_ = o.best_;
      maximizers_ = o.maximizers_;
    } else if (o.best_ == best_) {
      maximizers_.merge(o.maximizers_);
    }
  }
  VerificationReport finish() override {
    auto rep = base();
    std::int64_t others = 0;
    for (const auto& g : maximizers_.representatives()) {
      const bool is_an = probe_.matches(g);
      others += is_an ? 0 : 1;
      rep.witnesses.push_back(emit_graph6(g));
      rep.witness_labels.push_back(is_an ? "antiregular" : "non-antiregular");
    }
    rep.stats["max_irr_t"] = static_cast<std::int64_t>(best_);
    rep.stats["maximizer_classes"] = static_cast<std::int64_t>(maximizers_.size());
    rep.stats["non_antiregular_maximizer_classes"] = others;
    rep.stats["labeled_maximizers"] = static_cast<std::int64_t>(maximizers_.total());
    rep.notes.push_back(others > 0 ? "max irr_t is also attained by non-antiregular graphs"
                                   : "max irr_t is attained only by A_n");
    rep.passed = rep.violations == 0;
    return rep;
  }

 private:
  AntiregularProbe probe_;
  std::uint64_t best_ = 0;
  IsomorphismClasses maximizers_;
};

// sum_k N_k = n(n-1)/2 and sum_k k N_k = irr_t.
class Eq2Identity final : public CheckerBase<Eq2Identity> {
 public:
  explicit Eq2Identity(std::size_t n) : CheckerBase("eq2_identity", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    ++checked_;
    const auto d = degree_sequence(g);
    const auto s = nk_spectrum(d);
    if (s.total() != pairs()) violation(g, "sum of N_k differs from n(n-1)/2");
    if (s.weighted_sum() != irr_t_pairwise(d)) violation(g, "sum of k N_k differs from irr_t");
    if (s.at(0) != r.n0) violation(g, "N_0 multiplicity formula differs from the spectrum");
  }
  void merge_state(Eq2Identity&) {}
};

// The four irr_t forms and both Gini forms agree.
class Sec3Identities final : public CheckerBase<Sec3Identities> {
 public:
  explicit Sec3Identities(std::size_t n) : CheckerBase("sec3_identities", n) {}
  void observe(std::uint64_t, const Graph& g, const MeasureReport& r) override {
    ++checked_;
    const auto d = degree_sequence(g);
    const auto pairwise = irr_t_pairwise(d);
    if (irr_t(d) != pairwise || irr_t_index_form(d) != pairwise ||
        nk_spectrum(d).weighted_sum() != pairwise || r.irr_t != pairwise)
      violation(g, "irr_t forms disagree");
    if (r.m == 0) return;
    const double z = gini(d);
    const double two_mn = 2.0 * static_cast<double>(r.m) * static_cast<double>(r.n);
    if (std::abs(two_mn * z - static_cast<double>(pairwise)) > 1e-9)
      violation(g, "2mn * gini differs from irr_t");
    if (!close_rel(z, gini_rank_form(d), 1e-12)) violation(g, "Gini forms disagree");
    std::vector<double> y(d.degrees().begin(), d.degrees().end());
    const double zs = gini_sequence(y);
    if (!close_rel(zs, gini_sequence_rank_form(y), 1e-12))
      violation(g, "sequence Gini forms disagree");
    if (!close_rel(zs, z, 1e-12)) violation(g, "sequence Gini differs from graph Gini");
  }
  void merge_state(Sec3Identities&) {}
};

inline std::unique_ptr<ClaimChecker> make_checker(std::string_view id, std::size_t n) {
  if (id == "lemma_n0") return std::make_unique<LemmaN0>(n);
  if (id == "prop_bounds") return std::make_unique<PropBounds>(n);
  if (id == "lemma_delta") return std::make_unique<LemmaDelta>(n);
  if (id == "prop_lower") return std::make_unique<PropLower>(n);
  if (id == "prop_bidegreed") return std::make_unique<PropBidegreed>(n);
  if (id == "cor_edge_deleted") return std::make_unique<CorEdgeDeleted>(n);
  if (id == "problem1_ira_irb") return std::make_unique<Problem1>(n);
  if (id == "irrt_not_unique") return std::make_unique<IrrtNotUnique>(n);
  if (id == "eq2_identity") return std::make_unique<Eq2Identity>(n);
  if (id == "sec3_identities") return std::make_unique<Sec3Identities>(n);
  throw domain_error("unknown claim '" + std::string(id) + "'");
}

// One accumulator per chunk holding every requested checker.
class CheckerSet {
 public:
  CheckerSet() = default;
  CheckerSet(const std::vector<std::string>& ids, std::size_t n) {
    for (const auto& id : ids) checkers_.push_back(make_checker(id, n));
  }
  CheckerSet fresh() const {
    CheckerSet s;
    for (const auto& c : checkers_) s.checkers_.push_back(c->fresh());
    return s;
  }
  void observe(std::uint64_t mask, const Graph& g, const MeasureReport& r) {
    for (auto& c : checkers_) c->observe(mask, g, r);
  }
  void merge(CheckerSet&& later) {
    for (std::size_t i = 0; i < checkers_.size(); ++i) checkers_[i]->merge(*later.checkers_[i]);
  }
  std::vector<VerificationReport> finish() {
    std::vector<VerificationReport> out;
    for (auto& c : checkers_) out.push_back(c->finish());
    return out;
  }

 private:
  std::vector<std::unique_ptr<ClaimChecker>> checkers_;
};

inline void check_order(std::size_t n) {
  if (n < verification_min_order || n > enumeration_max_order)
    throw domain_error("verification order " + std::to_string(n) + " outside [" +
                       std::to_string(verification_min_order) + ", " +
                       std::to_string(enumeration_max_order) + "]");
}

}  // namespace detail

struct VerifyOptions {
  ParallelOptions parallel{};
};

/// Runs several degree-level claims over one shared exhaustive pass of the connected
/// labeled n-vertex graphs. Reports come back in the order of `ids`.
inline std::vector<VerificationReport> verify_claims(const std::vector<std::string>& ids,
                                                      std::size_t n,
                                                      const VerifyOptions& opt = {}) {
  for (const auto& id : ids)
    if (!is_claim_id(id) || id == table_match_id)
      throw domain_error("unknown claim '" + id + "'");
  detail::check_order(n);
  EnumerationTask task;
  task.n = n;
  task.connected_only = true;
  task.spectral = false;
  const detail::CheckerSet proto(ids, n);
  auto merged = parallel_reduce<detail::CheckerSet>(task, [&] { return proto.fresh(); },
                                                    opt.parallel);
  return merged.finish();
}

inline VerificationReport verify_claim(const std::string& id, std::size_t n,
                                       const VerifyOptions& opt = {}) {
  return verify_claims({id}, n, opt).front();
}

/// One row of reference values for graphs sharing a total irregularity.
struct TableRow {
  std::string label;
  std::size_t m = 0;
  std::uint64_t irr_t = 0;
  std::size_t degset_minus_1 = 0;
  double cs = 0.0;
  std::uint64_t albertson = 0;
  std::uint64_t sigma = 0;
  double var = 0.0;
  double s = 0.0;
  double gini = 0.0;
  double rho = 0.0;
  std::uint64_t n0 = 0;
  double ira = 0.0;
  double irb = 0.0;
};

/// The four 6-vertex graphs with irr_t = 26: G1 (= A_6), G2, G3, G4.
inline std::vector<TableRow> equal_irrt_reference_rows() {
  return {
      {"G1", 9, 26, 4, 0.404, 16, 40, 1.667, 6.000, 0.241, 0.304, 1, 14.00, 0.933},
      {"G2", 7, 26, 3, 0.481, 18, 56, 1.889, 6.667, 0.310, 0.522, 2, 6.50, 0.867},
      {"G3", 8, 26, 3, 0.435, 20, 56, 1.889, 7.333, 0.271, 0.419, 3, 4.00, 0.800},
      {"G4", 8, 26, 2, 0.510, 14, 44, 1.889, 6.667, 0.271, 0.433, 4, 2.75, 0.733},
  };
}

struct TableTolerances {
  double value = 0.0005;     ///< Var, S, gini, IRA, IRB
  double spectral = 0.001;   ///< CS, rho
};

/// Integer columns of the row match exactly.
inline bool matches_exact_columns(const MeasureReport& r, const TableRow& row) {
  return r.m == row.m && r.irr_t == row.irr_t && r.degset_minus_1() == row.degset_minus_1 &&
         r.albertson == row.albertson && r.sigma == row.sigma && r.n0 == row.n0;
}

/// Every column of the row matches at the given tolerances; spectral columns must be present.
inline bool matches_row(const MeasureReport& r, const TableRow& row, const TableTolerances& tol = {}) {
  auto near = [](double a, double b, double t) { return std::abs(a - b) <= t; };
  return matches_exact_columns(r, row) && near(r.var, row.var, tol.value) &&
         near(r.s, row.s, tol.value) && r.gini && near(*r.gini, row.gini, tol.value) &&
         near(r.ira, row.ira, tol.value) && near(r.irb, row.irb, tol.value) && r.cs &&
         near(*r.cs, row.cs, tol.spectral) && r.rho && near(*r.rho, row.rho, tol.spectral);
}

/// For each row, the first connected n-vertex graph (in bitmask order) matching every
/// column. Spectral measures are evaluated only for graphs matching the exact columns.
inline VerificationReport table_match(std::size_t n, const std::vector<TableRow>& rows,
                                      const TableTolerances& tol = {},
                                      const SpectralOptions& spectral = {}) {
  detail::check_order(n);
  if (n > enumeration_spectral_max_order)
    throw domain_error("table_match is capped at n <= " +
                       std::to_string(enumeration_spectral_max_order));
  EnumerationTask task;
  task.n = n;
  std::vector<std::optional<std::string>> found(rows.size());
  std::uint64_t candidates = 0;
  const std::uint64_t checked = enumerate(task, [&](std::uint64_t, const Graph& g,
                                                    const MeasureReport& base) {
    bool any = false;
    for (std::size_t i = 0; i < rows.size(); ++i)
      any = any || (!found[i] && matches_exact_columns(base, rows[i]));
    if (!any) return;
    ++candidates;
    MeasureReport r = base;
    r.cs = lambda1(g, spectral).lambda1 - 2.0 * static_cast<double>(r.m) / static_cast<double>(r.n);
    r.rho = rho(g);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!found[i] && matches_row(r, rows[i], tol)) found[i] = emit_graph6(g);
  });
  VerificationReport rep;
  rep.claim_id = std::string(table_match_id);
  rep.n = n;
  rep.graphs_checked = checked;
  rep.stats["spectral_candidates"] = static_cast<std::int64_t>(candidates);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (found[i]) {
      rep.witnesses.push_back(*found[i]);
      rep.witness_labels.push_back(rows[i].label);
    } else {
      ++rep.violations;
      rep.notes.push_back("row " + rows[i].label + " has no matching graph");
    }
  }
  rep.passed = rep.violations == 0;
  return rep;
}

}  // namespace irreg
