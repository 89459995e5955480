#pragma once

#include <prs/colouring.hpp>
#include <prs/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace prs
{
    enum class MembershipStatus
    {
        member,
        non_member,
        unknown
    };

    enum class SearchMode
    {
        exact,
        sampled
    };

    auto to_string(MembershipStatus status) -> std::string;
    auto to_string(SearchMode mode) -> std::string;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        double elapsed_ms = 0.0;
        std::uint64_t trials = 0;
    };

    struct Budget
    {
        /// search-tree nodes per decision
        std::uint64_t nodes = 100'000'000;
        /// wall clock per decision; <= 0 means no cap
        double seconds = 3600.0;
        std::size_t copy_cap = default_copy_cap;
        int threads = 1;
        EdgeOrder order = EdgeOrder::greedy_coverage;
        /// reject a colour when some copy left with one uncoloured edge can no longer repeat a colour
        bool lookahead = true;
    };

    /// Is G in F*(H)? `member` means every proper colouring of G has a rainbow H.
    struct MembershipVerdict
    {
        MembershipStatus status = MembershipStatus::unknown;
        /// present iff status is non_member: a proper colouring with no rainbow copy of H
        std::optional<EdgeColouring> certificate;
        SearchMode mode = SearchMode::exact;
        SearchStats stats;
        std::string reason;
    };

    /// Exhaustive search over proper colourings in normal form, pruning any
    /// branch in which a fully coloured copy of H is rainbow. The copies of H
    /// are listed once and indexed by edge, so each assignment only inspects
    /// copies through the edge just coloured.
    ///
    /// With budget.threads > 1 the tree is cut at a shallow depth and the
    /// subtrees are searched under OpenMP. The lowest subtree (in serial DFS
    /// order) holding a solution wins, so verdict and certificate match the
    /// serial search whenever neither runs out of budget.
    auto find_rainbow_free_colouring(const Graph & g, const Graph & h, const Budget & budget = {}) -> MembershipVerdict;

    /// Serial reference for the above, ignoring budget.threads.
    auto find_rainbow_free_colouring_serial(const Graph & g, const Graph & h, const Budget & budget = {}) -> MembershipVerdict;

    /// Random proper colourings (random edge order; colour c chosen with weight
    /// |E_c| + 1 among feasible colours, a fresh colour with weight 1). A
    /// rainbow-free sample yields non_member with its certificate; otherwise
    /// the answer is unknown. Never returns member.
    auto sample_membership(const Graph & g, const Graph & h, std::uint64_t trials, std::uint64_t seed) -> MembershipVerdict;
}
