// Usage: idealis_golden CLI GOLDEN_DIR [CASE...]; all cases when none given.

#include "golden.hpp"

#include <iostream>

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: idealis_golden CLI GOLDEN_DIR [CASE...]\n";
    return 1;
  }
  const std::string cli = argv[1];
  const std::string dir = argv[2];
  std::vector<std::string> names(argv + 3, argv + argc);
  if (names.empty()) names = idealis::golden::case_names(dir);
  int failures = 0;
  for (const auto& name : names) {
    const auto o = idealis::golden::run_case(cli, dir, name);
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.detail << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
