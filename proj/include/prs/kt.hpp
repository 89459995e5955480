#pragma once

#include <prs/graph.hpp>
#include <prs/membership.hpp>

#include <cstdint>
#include <optional>

namespace prs
{
    /// Parameters of the linear saturation upper bound for a graph family.
    struct KtParams
    {
        int u = 0;
        int d = 1;
        int n = 0;
    };

    /// |V(G)| - alpha(G) - 1.
    auto kt_u(const Graph & g) -> int;

    /// Least |N(x) & S| over independent sets S of size |V(G)| - u - 1 and
    /// vertices x outside S. Absent when no such pair exists.
    auto kt_d(const Graph & g, int u) -> std::optional<int>;

    /// u n + floor((d - 1)(n - u) / 2) - C(u + 1, 2); requires n >= u.
    auto kt_bound(const KtParams & p) -> std::int64_t;

    /// Starts from K_u + empty(n - u) and adds, in lexicographic order, every
    /// non-edge e for which G + e still has a rainbow-H-free proper colouring.
    /// One pass suffices: a rejected e stays rejected as G grows, because
    /// membership is closed under supergraphs. The result is checked to be
    /// properly rainbow H-saturated before it is returned.
    ///
    /// Throws PreconditionError if the start graph is already a member, and
    /// BudgetError if any decision comes back unknown.
    auto greedy_kt_saturate(const Graph & h, int n, int u, const Budget & budget = {}) -> Graph;
}
