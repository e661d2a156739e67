#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proplab::cli
{
    // Process exit codes.
    inline constexpr int exit_ok          = 0;
    inline constexpr int exit_failure     = 1;
    inline constexpr int exit_usage       = 2;
    inline constexpr int exit_range       = 3;
    inline constexpr int exit_no_coverage = 4;

    inline constexpr int schema_version = 1;

    /// Runs `propagation-lab` with `args` (program name excluded).
    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
}
