#pragma once

#include <string>
#include <vector>

namespace prime {

// Exit codes: 0 success, 2 partial run (per-instance failures/timeouts),
// 3 configuration error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace prime
