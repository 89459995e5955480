#pragma once

#include <prs/graph.hpp>

#include <cstdint>
#include <vector>

namespace prs
{
    struct EnumerationOptions
    {
        int max_order = 10;
        /// Labelled edge sets examined before giving up.
        std::uint64_t max_labelled = 1'000'000'000;
        /// Memory cap on distinct isomorphism classes held at once.
        std::size_t max_classes = 5'000'000;
        int threads = 1;
    };

    /// One canonical representative per isomorphism class of graphs with n
    /// vertices and m edges, sorted by graph6 string.
    ///
    /// Every labelled m-subset of the C(n,2) vertex pairs is canonicalised and
    /// deduplicated. With threads > 1 the subsets are partitioned by their
    /// lowest pair position and scanned under OpenMP; the output is identical
    /// to the serial scan. Throws BudgetError (partial = classes seen) when a
    /// cap is hit.
    auto enumerate_graphs(int n, int m, const EnumerationOptions & options = {}) -> std::vector<Graph>;

    /// Single-threaded reference scan, kept for cross-checking the parallel path.
    auto enumerate_graphs_serial(int n, int m, const EnumerationOptions & options = {}) -> std::vector<Graph>;

    auto binomial(int n, int k) -> std::uint64_t;
}
