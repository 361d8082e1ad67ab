// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when all of them pass.

#include "acceptance.hpp"

#include <iostream>
#include <thread>

int main() {
  linset::app::AcceptanceOptions opts;
  opts.workers = std::max(1u, std::thread::hardware_concurrency());
  const auto summary = linset::app::run_acceptance(opts);
  if (summary.invalid_config) {
    std::cout << "invalid-config: " << summary.error << "\n";
    return 2;
  }
  unsigned passed = 0;
  for (const auto& r : summary.results) {
    std::cout << linset::app::format_result(r) << "\n";
    passed += r.pass;
  }
  std::cout << passed << "/" << summary.results.size() << " criteria passed\n";
  return summary.all_passed() ? 0 : 1;
}
