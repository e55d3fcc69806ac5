#pragma once

// JSON, CSV and plain-text renderings of MeasureReport, NkSpectrum and VerificationReport.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "irreg/measures.hpp"
#include "irreg/verification.hpp"

namespace irreg {

/// Fixed-point rendering after half-away-from-zero rounding; "NA" when unset.
inline std::string format_value(std::optional<double> v, int decimals = 3) {
  if (!v) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, round_to(*v, decimals));
  return buf;
}

/// Integer-valued fields print without decimals, the rest at `decimals`.
inline std::string format_measure(const MeasureReport& r, std::string_view name, int decimals = 3) {
  const auto v = measure_value(r, name);
  if (v && is_integer_measure(name)) return std::to_string(static_cast<long long>(*v));
  return format_value(v, decimals);
}

inline nlohmann::ordered_json to_json(const MeasureReport& r) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["max_degree"] = r.max_degree;
  j["min_degree"] = r.min_degree;
  j["degree_set_size"] = r.degree_set_size;
  j["degset_minus_1"] = r.degset_minus_1();
  j["irr_t"] = r.irr_t;
  j["albertson"] = r.albertson;
  j["sigma"] = r.sigma;
  j["n0"] = r.n0;
  j["ira"] = r.ira;
  j["irb"] = r.irb;
  j["gini"] = opt(r.gini);
  j["cs"] = opt(r.cs);
  j["var"] = r.var;
  j["disc"] = r.disc;
  j["s"] = r.s;
  j["rho"] = opt(r.rho);
  j["connected"] = r.connected;
  return j;
}

/// Selected fields only, real values rounded to `decimals`.
inline nlohmann::ordered_json to_json(const MeasureReport& r, const std::vector<std::string>& fields,
                                      int decimals = 3) {
  nlohmann::ordered_json j;
  for (const auto& f : fields) {
    const auto v = measure_value(r, f);
    if (!v)
      j[f] = nullptr;
    else if (f == "connected")
      j[f] = r.connected;
    else if (is_integer_measure(f))
      j[f] = static_cast<long long>(*v);
    else
      j[f] = round_to(*v, decimals);
  }
  return j;
}

inline std::vector<std::string> default_csv_fields() {
  return {csv_columns.begin(), csv_columns.end()};
}

inline std::string csv_header(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
  return out;
}

inline std::string csv_row(const MeasureReport& r, const std::vector<std::string>& fields,
                           int decimals = 3) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i)
    out += (i ? "," : "") + format_measure(r, fields[i], decimals);
  return out;
}

inline nlohmann::ordered_json to_json(const NkSpectrum& s) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (auto [k, c] : s.counts) counts[std::to_string(k)] = c;
  return {{"n", s.n}, {"counts", counts}};
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["n"] = r.n;
  j["graphs_checked"] = r.graphs_checked;
  j["violations"] = r.violations;
  j["passed"] = r.passed;
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    w.push_back({{"graph6", r.witnesses[i]},
                 {"label", i < r.witness_labels.size() ? r.witness_labels[i] : ""}});
  j["witnesses"] = w;
  nlohmann::ordered_json st = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.stats) st[k] = v;
  j["stats"] = st;
  j["notes"] = r.notes;
  return j;
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.claim_id << " n=" << r.n
      << " graphs=" << r.graphs_checked << " violations=" << r.violations << '\n';
  for (const auto& [k, v] : r.stats) out << "  " << k << " = " << v << '\n';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    out << "  witness " << (i < r.witness_labels.size() ? r.witness_labels[i] : "") << ' '
        << r.witnesses[i] << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  return out.str();
}

}  // namespace irreg
