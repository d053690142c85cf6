#pragma once

// Helpers shared by the test binaries: spawning the CLI with captured
// streams and building raw bit patterns from string literals.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "nsg/bitvec.hpp"

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_and_remove(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  in.close();
  std::error_code ec;
  std::filesystem::remove(path, ec);
  return buffer.str();
}

/// Runs `bin args` through the shell with stdout/stderr captured.
/// `env_prefix` may carry VAR=value assignments.
inline CliResult run_cli(const std::string& bin, const std::string& args,
                         const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string tag =
      std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto tmp = std::filesystem::temp_directory_path();
  const auto out_path = tmp / ("nsg_test_out_" + tag);
  const auto err_path = tmp / ("nsg_test_err_" + tag);

  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += "'" + bin + "' " + args + " >'" + out_path.string() + "' 2>'" +
         err_path.string() + "'";
  const int rc = std::system(cmd.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = read_and_remove(out_path);
  result.err = read_and_remove(err_path);
  return result;
}

inline const char* cli_bin_from_env() { return std::getenv("NSG_CLI_BIN"); }

/// BitVec of size |s| + 1 with bit i taken from character i - 1.
inline nsg::BitVec bits_of(const std::string& s) {
  nsg::BitVec b(static_cast<int>(s.size()) + 1);
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    if (s[static_cast<std::size_t>(i - 1)] == '1') b.set(i);
  }
  return b;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}
