// Acceptance runner: one pass/fail line per criterion plus a JSON summary.
// Exits nonzero if any criterion fails.

#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>

#include "specham/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 12345;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: specham_acceptance [--seed N]\n";
      return 2;
    }
  }
  auto summary = specham::acceptance::run_all(seed, std::cout);
  std::cout << specham::acceptance::summary_json(summary) << "\n";
  return summary.all_passed() ? 0 : 1;
}
