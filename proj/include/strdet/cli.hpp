#pragma once

// Command dispatch shared by the executable and the tests. run() never
// prints; the caller writes `out` once.

#include <cstddef>
#include <string>

namespace strdet {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,         // bad arguments, I/O errors, oracle guard exceeded
  exit_invalid = 2,       // parse error or failed validation
  exit_disagreement = 3,  // engine and oracle disagree, or an oracle check failed
};

struct RunConfig {
  std::string command;  // validate classify ideals determiners oracle check export-dot gen-example
  std::string input;    // path, "-" for stdin
  bool json = false;
  std::size_t max_strings = 400;  // oracle guard on the number of indecomposables
  bool with_ar = false;           // export-dot: emit the AR quiver instead of the quiver

  // gen-example
  std::string family;  // six zigzag fork fork-single lambda linear dn
  int size = 0;        // lambda level, or vertex count for linear and dn
  std::string orientation;
};

struct RunResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& config);

// Reads all of `path`, or stdin for "-". Throws std::runtime_error.
std::string read_input(const std::string& path);

}  // namespace strdet
