#include <prs/independence.hpp>

namespace prs
{
    namespace
    {
        struct MisSearch
        {
            const Graph & g;
            int best = 0;
            Row best_set = 0;

            void expand(Row chosen, int size, Row candidates)
            {
                if (size + std::popcount(candidates) <= best)
                    return;

                int branch = -1, branch_degree = -1;
                Row scan = candidates;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    int d = std::popcount(g.row(v) & candidates);
                    if (d > branch_degree) {
                        branch = v;
                        branch_degree = d;
                    }
                }

                if (branch_degree <= 0) {
                    // candidates are pairwise non-adjacent
                    best = size + std::popcount(candidates);
                    best_set = chosen | candidates;
                    return;
                }

                Row bit = Row{1} << branch;
                expand(chosen | bit, size + 1, candidates & ~bit & ~g.row(branch));
                expand(chosen, size, candidates & ~bit);
            }
        };

        void independent_sets(const Graph & g, int size, Row chosen, int count, Row candidates, int from,
            const std::function<bool(Row)> & visit, bool & stop)
        {
            if (stop)
                return;
            if (count == size) {
                if (! visit(chosen))
                    stop = true;
                return;
            }
            Row available = candidates & ~((Row{1} << from) - 1);
            if (std::popcount(available) < size - count)
                return;
            while (available && ! stop) {
                int v = std::countr_zero(available);
                available &= available - 1;
                independent_sets(g, size, chosen | (Row{1} << v), count + 1, candidates & ~g.row(v) & ~(Row{1} << v), v + 1, visit,
                    stop);
                if (std::popcount(available) < size - count)
                    return;
            }
        }
    }

    auto maximum_independent_set(const Graph & g) -> Row
    {
        MisSearch search{g};
        search.expand(0, 0, g.all_vertices());
        return search.best_set;
    }

    auto independence_number(const Graph & g) -> int
    {
        return std::popcount(maximum_independent_set(g));
    }

    auto clique_number(const Graph & g) -> int
    {
        std::vector<Row> rows(g.order());
        for (int v = 0; v < g.order(); ++v)
            rows[v] = ~g.row(v) & g.all_vertices() & ~(Row{1} << v);
        return independence_number(Graph::from_rows(g.order(), rows));
    }

    void for_each_independent_set(const Graph & g, int size, const std::function<bool(Row)> & visit)
    {
        if (size < 0 || size > g.order())
            return;
        bool stop = false;
        independent_sets(g, size, 0, 0, g.all_vertices(), 0, visit, stop);
    }
}
