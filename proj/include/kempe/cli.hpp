#pragma once

#include <string>
#include <vector>

namespace kempe {

// Runs one CLI invocation (args exclude the program name) writing to the
// given streams. Exit codes: 0 success, 1 verification/internal failure,
// 2 usage or format error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kempe
