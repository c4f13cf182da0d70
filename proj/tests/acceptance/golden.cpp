#include "golden.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace idealis::golden {

namespace fs = std::filesystem;

namespace {

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<std::string> case_names(const std::string& dir) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

Command run(const std::string& cli, const std::string& cwd, const std::vector<std::string>& args) {
  std::string cmd = "cd " + quote(cwd) + " && " + quote(fs::absolute(cli).string());
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Command c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Outcome run_case(const std::string& cli, const std::string& dir, const std::string& name) {
  const auto want = nlohmann::json::parse(slurp(fs::path(dir) / (name + ".json")));
  const std::string expected = slurp(fs::path(dir) / (name + ".out"));
  const Command got = run(cli, dir, want.at("args").get<std::vector<std::string>>());
  const int exit = want.at("exit").get<int>();
  if (got.exit != exit) {
    return {false, name + ": exit " + std::to_string(got.exit) + ", expected " + std::to_string(exit)};
  }
  if (got.out != expected) return {false, name + ": output differs: " + got.out};
  return {true, name};
}

}  // namespace idealis::golden
