// Finds 6-vertex graphs sharing irr_t = 26 with A_6 and shows how N_0 separates them.

#include <iomanip>
#include <iostream>

#include "irreg/irreg.hpp"

int main() {
  using namespace irreg;

  const auto table = table_match(6, equal_irrt_reference_rows());
  std::cout << "row  graph6   m  irr_t  N_0     IRA    IRB     CS    rho\n";
  for (std::size_t i = 0; i < table.witnesses.size(); ++i) {
    const Graph g = parse_graph6(table.witnesses[i]);
    const auto r = compute_all(g);
    std::cout << std::left << std::setw(5) << table.witness_labels[i] << std::setw(6)
              << table.witnesses[i] << std::right << std::setw(4) << r.m << std::setw(7) << r.irr_t
              << std::setw(5) << r.n0 << std::setw(8) << format_value(r.ira) << std::setw(7)
              << format_value(r.irb) << std::setw(7) << format_value(r.cs) << std::setw(7)
              << format_value(r.rho) << '\n';
  }

  // Every isomorphism class of connected 6-vertex graphs at the maximum irr_t.
  EnumerationTask task;
  task.n = 6;
  task.predicate = Predicate::equals("irr_t", 26);
  const auto classes = isomorphism_classes(task);
  std::cout << classes.size() << " non-isomorphic connected graphs have irr_t = 26\n";
  return 0;
}
