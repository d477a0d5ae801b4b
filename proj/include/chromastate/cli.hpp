#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chromastate {

/// Runs the command-line front end. `args` excludes the program name.
/// Exit codes: 0 success, 1 internal/verification failure, 2 input error,
/// 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace chromastate
