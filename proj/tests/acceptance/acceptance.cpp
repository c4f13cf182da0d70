// One PASS/FAIL line per acceptance criterion.
// Usage: idealis_acceptance CLI GOLDEN_DIR [SEED]

#include "golden.hpp"

#include "idealis/suites.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

// `check --suite all` must finish within this many seconds.
constexpr double kCheckAllLimit = 60.0;

void print(const idealis::verify::Criterion& c) {
  std::printf("%s %2d  %s  [%s; %.2f s]\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.detail.c_str(),
              c.seconds);
  std::fflush(stdout);
}

idealis::verify::Criterion cli_stability(const std::string& cli, const std::string& dir) {
  using clock = std::chrono::steady_clock;
  idealis::verify::Criterion c{11, "CLI golden files for every subcommand; check --suite all --seed 7 under 60 s", true,
                               {}, 0};
  const auto start = clock::now();
  std::size_t cases = 0;
  std::size_t failed = 0;
  for (const auto& name : idealis::golden::case_names(dir)) {
    ++cases;
    const auto o = idealis::golden::run_case(cli, dir, name);
    if (!o.pass && failed++ == 0) c.detail = o.detail;
  }
  const auto check_start = clock::now();
  const auto check = idealis::golden::run(cli, dir, {"check", "--suite", "all", "--seed", "7"});
  const double check_seconds = std::chrono::duration<double>(clock::now() - check_start).count();
  c.seconds = std::chrono::duration<double>(clock::now() - start).count();

  c.pass = cases > 0 && failed == 0 && check.exit == 0 && check_seconds < kCheckAllLimit;
  std::string summary = std::to_string(cases - failed) + "/" + std::to_string(cases) + " golden cases; check all exit " +
                        std::to_string(check.exit) + " in " + std::to_string(check_seconds) + " s";
  c.detail = c.detail.empty() ? summary : summary + "; first failure " + c.detail;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: idealis_acceptance CLI GOLDEN_DIR [SEED]\n";
    return 1;
  }
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 7;
  bool all = true;
  for (const auto& c : idealis::verify::run_criteria(seed, print)) all = all && c.pass;
  const auto c11 = cli_stability(argv[1], argv[2]);
  print(c11);
  all = all && c11.pass;
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
