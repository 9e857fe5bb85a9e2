#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcn::cli {

// Runs the command line given by args (without the program name), writing
// data to out and diagnostics/progress to err. Returns the process exit
// code: 0 success, 1 failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hcn::cli
