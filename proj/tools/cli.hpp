#pragma once

// Command-line front end: compute, rank, spectrum, generate, verify.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irreg/irreg.hpp"

namespace irreg::cli {

enum class Subcommand { compute, rank, generate, verify, spectrum };
enum class InputFormat { edgelist, graph6 };
enum class OutputFormat { json, csv, text };

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_failed_claims = 2;

struct CliConfig {
  Subcommand subcommand = Subcommand::compute;
  std::vector<std::string> inputs;
  InputFormat format = InputFormat::graph6;
  std::vector<std::string> measures;  // empty = all CSV columns
  OutputFormat output = OutputFormat::text;
  double tolerance = 1e-10;
  long max_iterations = 100000;
  int decimals = 3;
  bool spectral = true;
  // generate
  std::size_t n = 6;
  Family family = Family::antiregular;
  std::size_t k = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  // rank
  std::string by;
  // verify
  std::vector<std::string> claims;
  std::vector<std::size_t> orders;
  unsigned threads = 0;
};

/// Thrown for invalid command lines; `code` is the process exit status to use.
struct usage_error : error {
  usage_error(const std::string& what, int code) : error(what), code(code) {}
  int code;
};

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    auto t = std::string(detail::trim(item));
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

/// "7", "3-7" or "3,5,6".
inline std::vector<std::size_t> parse_orders(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& part : split_list(s)) {
    const auto dash = part.find('-');
    std::size_t lo = 0, hi = 0;
    const bool ok = dash == std::string::npos
                        ? detail::parse_index(part, lo) && (hi = lo, true)
                        : detail::parse_index(std::string_view(part).substr(0, dash), lo) &&
                              detail::parse_index(std::string_view(part).substr(dash + 1), hi);
    if (!ok || lo > hi) throw usage_error("invalid --n value '" + part + "'", exit_error);
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw usage_error("--n needs at least one order", exit_error);
  return out;
}

/// Parses argv into a config. Help requests throw usage_error with code 0 after printing.
inline CliConfig parse_args(int argc, const char* const* argv, std::ostream& out) {
  CliConfig cfg;
  CLI::App app{"Graph irregularity measures: IRA, IRB and classical indices"};
  app.require_subcommand(1, 1);

  std::string format = "graph6", output = "text", measures = "all", claims = "all", orders = "3";
  std::string family = "antiregular";

  auto add_input = [&](CLI::App* sc) {
    sc->add_option("inputs", cfg.inputs, "Input files ('-' reads stdin)")->default_val("-");
    sc->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
  };
  auto add_spectral = [&](CLI::App* sc) {
    sc->add_option("--tolerance", cfg.tolerance, "Power-iteration tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sc->add_option("--max-iterations", cfg.max_iterations, "Power-iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sc, std::vector<std::string> allowed) {
    sc->add_option("--output", output, "Output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
    sc->add_option("--decimals", cfg.decimals, "Decimals for real values")
        ->check(CLI::Range(0, 15))
        ->capture_default_str();
  };

  auto* compute = app.add_subcommand("compute", "Measure report per input graph");
  add_input(compute);
  add_spectral(compute);
  add_output(compute, {"json", "csv", "text"});
  compute->add_option("--measures", measures, "Comma-separated measure names or 'all'")
      ->capture_default_str();
  compute->add_flag("--spectral,!--no-spectral", cfg.spectral, "Compute cs and rho");

  auto* rank = app.add_subcommand("rank", "Order graphs by a measure, descending, ties grouped");
  add_input(rank);
  add_spectral(rank);
  add_output(rank, {"json", "text"});
  rank->add_option("--by", cfg.by, "Measure to rank by")->required();

  auto* spectrum = app.add_subcommand("spectrum", "N_k counts per input graph");
  add_input(spectrum);
  add_output(spectrum, {"json", "text"});

  auto* generate = app.add_subcommand("generate", "Emit a named graph family");
  generate->add_option("--family", family, "Family name")
      ->check(CLI::IsMember({"antiregular", "path", "cycle", "complete", "star", "complete_split",
                             "complete_minus_edge", "gnp"}))
      ->capture_default_str();
  generate->add_option("--n", cfg.n, "Order")->capture_default_str();
  generate->add_option("--k", cfg.k, "Clique size (complete_split)")->capture_default_str();
  generate->add_option("--p", cfg.p, "Edge probability (gnp)")->capture_default_str();
  generate->add_option("--seed", cfg.seed, "SplitMix64 seed (gnp)")->capture_default_str();
  generate->add_option("--format", format, "Output graph format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Exhaustively check claims over connected graphs");
  verify->add_option("--claims", claims, "Comma-separated claim ids or 'all'")
      ->capture_default_str();
  verify->add_option("--n", orders, "Order, range a-b, or list")->capture_default_str();
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  verify->add_flag("--spectral,!--no-spectral", cfg.spectral,
                   "Allow spectral claims (table_match)");
  add_spectral(verify);
  add_output(verify, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    throw usage_error("help", exit_ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    throw usage_error("help", exit_ok);
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what(), exit_error);
  }

  if (*compute) cfg.subcommand = Subcommand::compute;
  if (*rank) cfg.subcommand = Subcommand::rank;
  if (*spectrum) cfg.subcommand = Subcommand::spectrum;
  if (*generate) cfg.subcommand = Subcommand::generate;
  if (*verify) cfg.subcommand = Subcommand::verify;

  cfg.format = format == "edgelist" ? InputFormat::edgelist : InputFormat::graph6;
  cfg.output = output == "json" ? OutputFormat::json
               : output == "csv" ? OutputFormat::csv
                                 : OutputFormat::text;
  cfg.family = *parse_family(family);

  if (measures != "all") {
    cfg.measures = split_list(measures);
    for (const auto& m : cfg.measures)
      if (!is_measure_name(m)) throw usage_error("unknown measure '" + m + "'", exit_error);
  }
  if (cfg.subcommand == Subcommand::rank && !is_measure_name(cfg.by))
    throw usage_error("unknown measure '" + cfg.by + "'", exit_error);
  if (cfg.subcommand == Subcommand::verify) {
    if (claims == "all") {
      cfg.claims.assign(claim_ids.begin(), claim_ids.end());
    } else {
      cfg.claims = split_list(claims);
      for (const auto& c : cfg.claims)
        if (!is_claim_id(c)) throw usage_error("unknown claim '" + c + "'", exit_error);
    }
    cfg.orders = parse_orders(orders);
  }
  return cfg;
}

struct NamedGraph {
  std::string label;
  Graph graph;
};

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<NamedGraph> read_inputs(const CliConfig& cfg, std::istream& in) {
  std::vector<NamedGraph> out;
  for (const auto& path : cfg.inputs) {
    std::string text;
    if (path == "-") {
      text = read_all(in);
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw error("cannot read '" + path + "'");
      text = read_all(file);
    }
    if (cfg.format == InputFormat::edgelist) {
      try {
        out.push_back({path, parse_edgelist(text)});
      } catch (const error& e) {
        throw error(path + ": " + e.what());
      }
      continue;
    }
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      const auto line = detail::trim(std::string_view(text).substr(pos, eol - pos));
      pos = eol + 1;
      ++line_no;
      if (line.empty()) continue;
      try {
        out.push_back({path + ":" + std::to_string(line_no), parse_graph6(line)});
      } catch (const error& e) {
        throw error(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (out.empty()) throw error("no input graphs");
  return out;
}

inline MeasureOptions measure_options(const CliConfig& cfg) {
  return {cfg.spectral, {cfg.tolerance, cfg.max_iterations}, false};
}

inline int run_compute(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const auto graphs = read_inputs(cfg, in);
  const auto fields = cfg.measures.empty() ? default_csv_fields() : cfg.measures;
  std::vector<MeasureReport> reports;
  for (const auto& ng : graphs) {
    try {
      reports.push_back(compute_all(ng.graph, measure_options(cfg)));
    } catch (const error& e) {
      throw error(ng.label + ": " + e.what());
    }
  }
  switch (cfg.output) {
    case OutputFormat::csv:
      out << csv_header(fields) << '\n';
      for (const auto& r : reports) out << csv_row(r, fields, cfg.decimals) << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        nlohmann::ordered_json j;
        j["graph"] = graphs[i].label;
        j.update(to_json(reports[i], fields, cfg.decimals));
        arr.push_back(j);
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::text: {
      std::size_t label_w = 5;
      for (const auto& g : graphs) label_w = std::max(label_w, g.label.size());
      out << std::left << std::setw(static_cast<int>(label_w)) << "graph";
      for (const auto& f : fields) out << "  " << std::right << std::setw(10) << f;
      out << '\n';
      for (std::size_t i = 0; i < reports.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(label_w)) << graphs[i].label;
        for (const auto& f : fields)
          out << "  " << std::right << std::setw(10) << format_measure(reports[i], f, cfg.decimals);
        out << '\n';
      }
      break;
    }
  }
  return exit_ok;
}

/// Values within 1e-9 (relative, floor 1) rank as tied; degree-based measures are exact.
inline bool tied(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

inline int run_rank(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const auto graphs = read_inputs(cfg, in);
  auto opt = measure_options(cfg);
  opt.spectral = cfg.by == "cs";
  struct Entry {
    std::size_t index;
    double value;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    MeasureReport r;
    try {
      r = compute_all(graphs[i].graph, opt);
      if (cfg.by == "rho" && !r.rho) r.rho = rho(graphs[i].graph);
    } catch (const error& e) {
      throw error(graphs[i].label + ": " + e.what());
    }
    const auto v = measure_value(r, cfg.by);
    if (!v) throw error(graphs[i].label + ": measure '" + cfg.by + "' unavailable");
    entries.push_back({i, *v});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.value > b.value && !tied(a.value, b.value); });

  // Group consecutive tied entries; rank = 1 + number of graphs ranked strictly above.
  struct Group {
    std::size_t rank;
    double value;
    std::vector<std::size_t> members;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (groups.empty() || !tied(groups.back().value, entries[i].value))
      groups.push_back({i + 1, entries[i].value, {}});
    groups.back().members.push_back(entries[i].index);
  }
  const bool integral = is_integer_measure(cfg.by);
  auto fmt = [&](double v) {
    return integral ? std::to_string(static_cast<long long>(v)) : format_value(v, cfg.decimals);
  };

  std::size_t tie_groups = 0;
  for (const auto& g : groups) tie_groups += g.members.size() > 1 ? 1 : 0;

  if (cfg.output == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["by"] = cfg.by;
    j["tie_groups"] = tie_groups;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& g : groups) {
      nlohmann::ordered_json e;
      e["rank"] = g.rank;
      e["value"] = integral ? nlohmann::ordered_json(static_cast<long long>(g.value))
                            : nlohmann::ordered_json(round_to(g.value, cfg.decimals));
      e["tie"] = g.members.size() > 1;
      nlohmann::ordered_json names = nlohmann::ordered_json::array();
      for (auto idx : g.members) names.push_back(graphs[idx].label);
      e["graphs"] = names;
      arr.push_back(e);
    }
    j["groups"] = arr;
    out << j.dump(2) << '\n';
    return exit_ok;
  }

  out << "rank  " << std::setw(10) << cfg.by << "  graph\n";
  for (const auto& g : groups) {
    const std::string r = std::to_string(g.rank) + (g.members.size() > 1 ? "=" : "");
    for (auto idx : g.members)
      out << std::left << std::setw(4) << r << "  " << std::right << std::setw(10) << fmt(g.value)
          << "  " << graphs[idx].label << '\n';
  }
  if (tie_groups == 0) {
    out << "ties: none\n";
  } else {
    for (const auto& g : groups)
      if (g.members.size() > 1)
        out << "tie: " << g.members.size() << " graphs share " << cfg.by << " = " << fmt(g.value)
            << " at rank " << g.rank << '\n';
  }
  return exit_ok;
}

inline int run_spectrum(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  const auto graphs = read_inputs(cfg, in);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& ng : graphs) {
    NkSpectrum s;
    try {
      s = nk_spectrum(degree_sequence(ng.graph));
    } catch (const error& e) {
      throw error(ng.label + ": " + e.what());
    }
    if (cfg.output == OutputFormat::json) {
      auto j = to_json(s);
      j["graph"] = ng.label;
      arr.push_back(j);
      continue;
    }
    out << ng.label << " n=" << s.n << " pairs=" << s.total() << " irr_t=" << s.weighted_sum()
        << '\n';
    for (auto [k, c] : s.counts) out << "  N_" << k << " = " << c << '\n';
  }
  if (cfg.output == OutputFormat::json) out << arr.dump(2) << '\n';
  return exit_ok;
}

inline int run_generate(const CliConfig& cfg, std::ostream& out) {
  const Graph g = family({cfg.family, cfg.n, cfg.k, cfg.p, cfg.seed});
  out << (cfg.format == InputFormat::edgelist ? emit_edgelist(g) : emit_graph6(g) + "\n");
  return exit_ok;
}

inline int exit_status(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return exit_failed_claims;
  return exit_ok;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
  const bool table = std::find(cfg.claims.begin(), cfg.claims.end(), table_match_id) != cfg.claims.end();
  if (table && !cfg.spectral) throw error("table_match needs spectral measures (drop --no-spectral)");
  std::vector<std::string> degree_claims;
  for (const auto& c : cfg.claims)
    if (c != table_match_id) degree_claims.push_back(c);
  for (auto n : cfg.orders) {
    if (n < verification_min_order || n > enumeration_max_order)
      throw error("verification order " + std::to_string(n) + " outside [3, 8]");
    if (table && n != 6) throw error("table_match is defined for n = 6 only");
  }

  std::vector<VerificationReport> reports;
  VerifyOptions vopt;
  vopt.parallel.threads = cfg.threads;
  for (auto n : cfg.orders) {
    std::vector<VerificationReport> batch;
    if (!degree_claims.empty()) batch = verify_claims(degree_claims, n, vopt);
    std::size_t next = 0;
    for (const auto& c : cfg.claims) {
      if (c == table_match_id)
        reports.push_back(table_match(n, equal_irrt_reference_rows(), {},
                                      {cfg.tolerance, cfg.max_iterations}));
      else
        reports.push_back(batch[next++]);
    }
  }
  const int status = exit_status(reports);
  if (cfg.output == OutputFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << to_text(r);
    out << (status == exit_ok ? "all claims passed\n" : "some claims FAILED\n");
  }
  return status;
}

inline int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.subcommand) {
      case Subcommand::compute: return run_compute(cfg, in, out);
      case Subcommand::rank: return run_rank(cfg, in, out);
      case Subcommand::spectrum: return run_spectrum(cfg, in, out);
      case Subcommand::generate: return run_generate(cfg, out);
      case Subcommand::verify: return run_verify(cfg, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

/// Full driver: parse, then run. Returns the process exit status.
inline int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const usage_error& e) {
    if (e.code != exit_ok) err << "error: " << e.what() << '\n';
    return e.code;
  }
  return run(cfg, in, out, err);
}

}  // namespace irreg::cli
