#pragma once

#include <string>
#include <vector>

namespace hyperhorn {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  bool launch_failed = false;
  std::string out;
  std::string err;
  double seconds = 0;
};

// Runs argv[0] with the given arguments, capturing stdout/stderr. The child
// gets its own process group, which is killed when the timeout expires.
ProcessResult run_process(const std::vector<std::string>& argv, double timeout_seconds);

}  // namespace hyperhorn
