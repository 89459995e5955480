#pragma once

#include <prs/enumerate.hpp>
#include <prs/graph.hpp>
#include <prs/membership.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace prs
{
    struct RamseyResult
    {
        /// least n with K_n in F*(H), when every smaller n was decided exactly
        std::optional<int> value;
        /// a member K_n found after some undecided smaller n
        std::optional<int> upper_bound;
        int searched_up_to = 0;
        std::map<int, MembershipVerdict> per_n;
    };

    /// Decides K_n for n = |V(H)| .. n_max, stopping at the first member.
    /// Larger n are not checked: a member K_n stays a member in every K_{n'} above it.
    auto rainbow_ramsey_p3(const Graph & h, int n_max, const Budget & budget = {}) -> RamseyResult;

    struct MinimalFamily
    {
        /// canonical representatives, sorted by graph6
        std::vector<Graph> members;
        int max_order = 0;
        int max_edges = 0;
        /// no membership decision within the bounds was left open
        bool complete_up_to_bounds = true;
        /// classes whose membership stayed unknown
        std::vector<Graph> undecided;
        /// classes examined, and how many of them lie in F*(H)
        std::uint64_t examined = 0;
        std::uint64_t family_size = 0;
    };

    /// Minimal elements of F*(H) among graphs without isolated vertices on at
    /// most max_order vertices and max_edges edges.
    ///
    /// Classes are visited by increasing edge count. A class containing an
    /// already-found member is itself a member (supergraph closure) and is not
    /// minimal, so it is not searched; every other class gets an exact decision
    /// and, if it is a member, is minimal since all its proper subgraphs were
    /// visited before it. budget.threads decides classes of one level concurrently.
    auto minimal_members(const Graph & h, int max_order, int max_edges, const Budget & budget = {},
        const EnumerationOptions & enumeration = {}) -> MinimalFamily;

    /// Certified upper bounds (u(W), d(W) at that u) from an exact member W of F*(H).
    /// Throws PreconditionError unless W is decided a member exactly.
    auto family_params_from_witness(const Graph & h, const Graph & w, const Budget & budget = {})
        -> std::pair<int, std::optional<int>>;
}
