#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command, captures stdout (stderr only if the command
// redirects it), and decodes the exit status.
inline RunResult run(const std::string& command) {
  RunResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace testutil
