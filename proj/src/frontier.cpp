#include <prs/canonical.hpp>
#include <prs/copies.hpp>
#include <prs/errors.hpp>
#include <prs/frontier.hpp>
#include <prs/kt.hpp>

#include <algorithm>

#include <omp.h>

namespace prs
{
    auto rainbow_ramsey_p3(const Graph & h, int n_max, const Budget & budget) -> RamseyResult
    {
        if (n_max > max_vertices)
            throw CapacityError("rainbow_ramsey_p3: n_max above " + std::to_string(max_vertices));
        RamseyResult result;
        bool undecided = false;
        for (int n = std::max(h.order(), 1); n <= n_max; ++n) {
            auto verdict = find_rainbow_free_colouring(complete_graph(n), h, budget);
            result.searched_up_to = n;
            auto status = verdict.status;
            result.per_n.emplace(n, std::move(verdict));
            if (status == MembershipStatus::unknown)
                undecided = true;
            else if (status == MembershipStatus::member) {
                if (undecided)
                    result.upper_bound = n;
                else
                    result.value = n;
                break;
            }
        }
        return result;
    }

    auto minimal_members(const Graph & h, int max_order, int max_edges, const Budget & budget,
        const EnumerationOptions & enumeration) -> MinimalFamily
    {
        if (max_order < 1 || max_order > enumeration.max_order)
            throw PreconditionError("minimal_members needs 1 <= max_order <= " + std::to_string(enumeration.max_order));
        MinimalFamily family;
        family.max_order = max_order;
        family.max_edges = max_edges;

        Budget inner = budget;
        inner.threads = 1;
        EnumerationOptions scan = enumeration;
        scan.threads = budget.threads;

        std::vector<Graph> found;
        int top = std::min(max_edges, max_order * (max_order - 1) / 2);
        for (int m = 1; m <= top; ++m) {
            std::vector<Graph> level;
            for (int n = 2; n <= std::min(max_order, 2 * m); ++n) {
                if (m > n * (n - 1) / 2)
                    continue;
                for (auto & g : enumerate_graphs(n, m, scan))
                    if (isolated_count(g) == 0)
                        level.push_back(std::move(g));
            }

            long count = static_cast<long>(level.size());
            std::vector<MembershipStatus> status(count, MembershipStatus::non_member);
            std::vector<char> minimal(count, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(budget.threads, 1))
            for (long i = 0; i < count; ++i) {
                bool above = std::any_of(found.begin(), found.end(),
                    [&](const Graph & f) { return contains_subgraph(level[i], f, true); });
                if (above) {
                    status[i] = MembershipStatus::member;
                    continue;
                }
                status[i] = find_rainbow_free_colouring_serial(level[i], h, inner).status;
                minimal[i] = status[i] == MembershipStatus::member;
            }

            for (long i = 0; i < count; ++i) {
                ++family.examined;
                if (status[i] == MembershipStatus::member)
                    ++family.family_size;
                if (status[i] == MembershipStatus::unknown) {
                    family.complete_up_to_bounds = false;
                    family.undecided.push_back(level[i]);
                }
                if (minimal[i])
                    found.push_back(level[i]);
            }
        }

        std::vector<std::pair<std::string, Graph>> keyed;
        for (auto & g : found)
            keyed.emplace_back(to_graph6(g), g);
        std::sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
        for (auto & [key, g] : keyed)
            family.members.push_back(g);
        return family;
    }

    auto family_params_from_witness(const Graph & h, const Graph & w, const Budget & budget) -> std::pair<int, std::optional<int>>
    {
        auto verdict = find_rainbow_free_colouring(w, h, budget);
        if (verdict.status != MembershipStatus::member)
            throw PreconditionError("witness is not an exact member of F*(H): " + to_string(verdict.status));
        int u = kt_u(w);
        return {u, kt_d(w, u)};
    }
}
