#pragma once

// Seeded property suites over every module, and the acceptance criteria
// built from them.

#include <cstddef>
#include <deque>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace idealis::verify {

struct Property {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0 && passed > 0; }

  template <class Describe>
  bool check(bool good, Describe&& describe) {
    if (good) {
      ++passed;
    } else {
      if (failed++ == 0) first_failure = describe();
    }
    return good;
  }
};

struct SuiteReport {
  std::string suite;
  std::deque<Property> properties;  // stable references for add()
  double seconds = 0;

  bool ok() const;
  Property& add(std::string name);
};

/// Registered suite names, in run order ("all" is not listed).
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws UnknownSuite.
std::vector<SuiteReport> run_check(std::string_view suite, std::uint64_t seed);

struct Criterion {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Acceptance criteria 1-10 (criterion 11 needs the CLI binary and lives in
/// the acceptance driver).
std::vector<Criterion> run_criteria(std::uint64_t seed, const std::function<void(const Criterion&)>& on_done = {});

}  // namespace idealis::verify
