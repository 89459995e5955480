#pragma once

#include <iosfwd>
#include <string>

namespace prs
{
    namespace exit_code
    {
        /// predicate holds, or the value was computed exactly
        inline constexpr int holds = 0;
        inline constexpr int fails = 1;
        /// undecided within budget, or only sampled evidence
        inline constexpr int unknown = 2;
        inline constexpr int usage = 64;
        /// internal consistency check tripped
        inline constexpr int internal = 70;
    }

    auto tool_version() -> std::string;

    /// The `prsat` command line. Reports go to `out`, diagnostics to `err`.
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}
