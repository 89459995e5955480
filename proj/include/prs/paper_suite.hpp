#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace prs
{
    enum class RowStatus
    {
        pass,
        fail,
        evidence_only
    };

    auto to_string(RowStatus status) -> std::string;

    struct SuiteRow
    {
        std::string id;
        std::string claim;
        std::string expected;
        std::string computed;
        RowStatus status = RowStatus::fail;
        double elapsed_ms = 0.0;
        std::string note;
    };

    enum class Profile
    {
        /// every exact decision capped at 60 s
        quick,
        /// every exact decision capped at 30 min
        full
    };

    auto parse_profile(std::string_view text) -> Profile;

    struct SuiteOptions
    {
        Profile profile = Profile::quick;
        int threads = 1;
        /// seed for the randomised property checks
        unsigned long long seed = 20240601;
        /// called after each row completes
        std::function<void(const SuiteRow &)> on_row;
        /// run only rows whose id is listed (all when empty)
        std::vector<std::string> only;
    };

    /// Every reproducible claim, one row each. Exceptions inside a row become a failed row.
    auto run_paper_suite(const SuiteOptions & options = {}) -> std::vector<SuiteRow>;

    auto suite_row_ids() -> std::vector<std::string>;

    auto format_row(const SuiteRow & row) -> std::string;
}
