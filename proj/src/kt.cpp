#include <prs/errors.hpp>
#include <prs/independence.hpp>
#include <prs/kt.hpp>
#include <prs/saturation.hpp>

#include <algorithm>
#include <bit>

namespace prs
{
    auto kt_u(const Graph & g) -> int
    {
        return g.order() - independence_number(g) - 1;
    }

    auto kt_d(const Graph & g, int u) -> std::optional<int>
    {
        int size = g.order() - u - 1;
        if (size < 0 || size > g.order())
            return std::nullopt;
        std::optional<int> best;
        for_each_independent_set(g, size, [&](Row s) {
            Row outside = g.all_vertices() & ~s;
            while (outside) {
                int x = std::countr_zero(outside);
                outside &= outside - 1;
                int hits = std::popcount(g.row(x) & s);
                if (! best || hits < *best)
                    best = hits;
            }
            return ! best || *best > 0;
        });
        return best;
    }

    auto kt_bound(const KtParams & p) -> std::int64_t
    {
        if (p.n < p.u)
            throw PreconditionError("kt_bound needs n >= u (n = " + std::to_string(p.n) + ", u = " + std::to_string(p.u) + ")");
        std::int64_t u = p.u, d = p.d, n = p.n;
        std::int64_t spread = (d - 1) * (n - u);
        // floor division, valid for negative d - 1 too
        std::int64_t half = spread >= 0 ? spread / 2 : -((-spread + 1) / 2);
        return u * n + half - (u + 1) * u / 2;
    }

    auto greedy_kt_saturate(const Graph & h, int n, int u, const Budget & budget) -> Graph
    {
        if (u < 0 || u > n)
            throw PreconditionError("greedy_kt_saturate needs 0 <= u <= n");
        Graph g = join(complete_graph(u), empty_graph(n - u));

        auto start = find_rainbow_free_colouring(g, h, budget);
        if (start.status == MembershipStatus::member)
            throw PreconditionError("K_u + empty(n - u) already forces a rainbow copy of the pattern");
        if (start.status == MembershipStatus::unknown)
            throw BudgetError("greedy_kt_saturate: start graph undecided: " + start.reason, 0);
        EdgeColouring certificate = *start.certificate;

        std::uint64_t added = 0;
        for (auto e : g.non_edges()) {
            Graph plus = add_edge(g, e.u, e.v);
            auto v = find_rainbow_free_colouring(plus, h, budget);
            if (v.status == MembershipStatus::unknown)
                throw BudgetError("greedy_kt_saturate: undecided at edge " + std::to_string(e.u) + "-" + std::to_string(e.v), added);
            if (v.status == MembershipStatus::non_member) {
                g = std::move(plus);
                certificate = *v.certificate;
                ++added;
            }
        }

        SaturationOptions options;
        options.budget = budget;
        options.short_circuit = true;
        auto report = is_properly_rainbow_saturated(g, h, options, certificate);
        if (report.holds == Holds::unknown)
            throw BudgetError("greedy_kt_saturate: post-check undecided", added);
        if (report.holds != Holds::yes)
            throw std::logic_error("greedy_kt_saturate: result failed the saturation post-check");
        return g;
    }
}
