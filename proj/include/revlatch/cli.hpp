#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revlatch {

/// Runs one toolkit command (args exclude the program name) and returns the
/// process exit status: 0 success or verdict-true, 1 usage or input error,
/// 2 check failed, 3 capacity exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace revlatch
