#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnpoly::cli {

// Parses one invocation (without the program name) and executes it, writing
// the report to the configured output and diagnostics to err. Returns 0 on
// success and 2 on any failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hnpoly::cli
