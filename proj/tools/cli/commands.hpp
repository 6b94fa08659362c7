#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace niho::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,
    kExitMismatch = 2,
    kExitBudget = 3,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace niho::cli
