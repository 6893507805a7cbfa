#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqnet::cli {

/// Runs the `tqnet` command line. `args` excludes the program name.
/// Results go to `out`, diagnostics and timings to `err`. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace tqnet::cli
