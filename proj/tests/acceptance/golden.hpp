#pragma once

// Golden CLI cases: <name>.json holds {"args": [...], "exit": code} and
// <name>.out the exact expected standard output. Commands run from the
// golden directory so @inputs/... arguments resolve.

#include <string>
#include <vector>

namespace idealis::golden {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::string> case_names(const std::string& dir);
Outcome run_case(const std::string& cli, const std::string& dir, const std::string& name);

struct Command {
  int exit = -1;
  std::string out;
};
/// Runs cli with args from `cwd`, capturing standard output.
Command run(const std::string& cli, const std::string& cwd, const std::vector<std::string>& args);

}  // namespace idealis::golden
