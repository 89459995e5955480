#pragma once

#include <prs/enumerate.hpp>
#include <prs/graph.hpp>
#include <prs/saturation.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prs
{
    struct LevelScan
    {
        int edges = 0;
        /// isomorphism classes at this level
        std::uint64_t classes = 0;
        /// classes actually tested (a success ends the scan of its level)
        std::uint64_t tested = 0;
        std::uint64_t unknown = 0;
    };

    struct ExtremalResult
    {
        SaturationKind kind = SaturationKind::prsat;
        int n = 0;
        /// smallest edge count carrying a saturated graph; absent if no level has one
        std::optional<int> value;
        /// the saturated graph with least graph6 form at that level
        std::optional<Graph> witness;
        std::vector<LevelScan> scanned;
        /// false if some class below the value (or anywhere, when there is no value)
        /// was left undecided, or if a level could not be scanned
        bool exact = true;
        /// level at which enumeration ran out of budget
        std::optional<int> partial_level;
        std::string reason;
    };

    struct ExtremalOptions
    {
        /// per-decision budget; budget.threads is the number of classes scanned concurrently
        Budget budget;
        EnumerationOptions enumeration;
        /// largest n accepted; <= 0 selects 7 for prsat and 8 otherwise
        int max_order = 0;
    };

    /// Scans m = 0, 1, ... over enumerate_graphs(n, m), testing every class
    /// with the predicate of `kind`. Classes with isolated vertices are included.
    auto exact_number(SaturationKind kind, int n, const Graph & h, const ExtremalOptions & options = {}) -> ExtremalResult;

    /// Serial reference for the above.
    auto exact_number_serial(SaturationKind kind, int n, const Graph & h, const ExtremalOptions & options = {})
        -> ExtremalResult;

    /// Classical saturation number for a family: no member in G, some member in every G + e.
    auto exact_family_sat(int n, std::span<const Graph> family, const ExtremalOptions & options = {}) -> ExtremalResult;

    auto default_max_order(SaturationKind kind) -> int;
}
