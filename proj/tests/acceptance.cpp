// Runs the small-grid suite and prints one line per acceptance criterion.
#include <fstream>
#include <iostream>

#include "klr/suite.hpp"

int main(int argc, char** argv) {
  klr::SuiteOptions options;
  const auto report = klr::run_small_grid(options, &std::cerr);
  for (const auto& c : report.criteria)
    std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
  for (const auto& c : report.criteria)
    if (!c.passed) std::cout << "  detail " << c.id << ": " << c.detail.dump() << "\n";
  for (const auto& o : report.observations)
    if (o["kind"] == "nh23_remark" || o["kind"] == "findings") std::cout << "  observation: " << o.dump() << "\n";
  if (argc > 1) {
    std::ofstream out(argv[1]);
    for (const auto& line : report.lines()) out << line.dump() << "\n";
  }
  return report.passed() ? 0 : 1;
}
