#pragma once

#include <string>
#include <vector>

namespace mhg {

/// Entry point for the mhyperg command line; returns the process exit code
/// (0 pass, 1 check failure, 2 usage error).
int run_cli(const std::vector<std::string>& args);

}  // namespace mhg
