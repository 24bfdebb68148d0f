#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace stacky::testing {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the built CLI with the given argument string, capturing stdout
// (stderr merged in on request).
inline CliResult run_cli_at(const std::string& binary, const std::string& args,
                            bool merge_stderr = false) {
  std::string command = binary + " " + args;
  command += merge_stderr ? " 2>&1" : " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

} // namespace stacky::testing
