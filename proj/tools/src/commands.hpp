#pragma once

// The command-line driver as a function, so tests can run it in-process.

#include <string>
#include <vector>

#include "config.hpp"

namespace alcovekit::cli {

struct CliResult {
  int exit_code = 0;  // 0 all checks passed, 1 a check failed, 2 usage or scale error
  std::string out;
  std::string err;
};

// args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args, const Config& cfg);

}  // namespace alcovekit::cli
