#include <prs/canonical.hpp>
#include <prs/enumerate.hpp>
#include <prs/errors.hpp>

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include <omp.h>

namespace prs
{
    auto binomial(int n, int k) -> std::uint64_t
    {
        if (k < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        std::uint64_t r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        return r;
    }

    namespace
    {
        struct PairTable
        {
            explicit PairTable(int n)
            {
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        pairs.push_back({i, j});
            }

            std::vector<Edge> pairs;
        };

        void check_request(int n, int m, const EnumerationOptions & options)
        {
            if (n < 0 || n > options.max_order || n > 11)
                throw PreconditionError("enumerate_graphs: order " + std::to_string(n) + " exceeds the enumeration limit of "
                    + std::to_string(std::min(options.max_order, 11)));
            if (m < 0 || m > n * (n - 1) / 2)
                throw PreconditionError("enumerate_graphs: edge count out of range");
        }

        /// Scans every m-subset whose lowest chosen pair is `first`, adding canonical keys to `seen`.
        /// Returns false once the shared labelled counter passes its cap.
        auto scan_prefix(int n, int m, int first, const PairTable & table, std::unordered_set<std::uint64_t> & seen,
            std::atomic<std::uint64_t> & labelled, const EnumerationOptions & options) -> bool
        {
            int total = static_cast<int>(table.pairs.size());
            int width = total - first - 1;
            int rest = m - 1;
            if (rest > width)
                return true;

            std::vector<Row> rows(n);
            auto visit = [&](std::uint64_t mask) {
                std::fill(rows.begin(), rows.end(), 0);
                auto [a, b] = table.pairs[first];
                rows[a] |= Row{1} << b;
                rows[b] |= Row{1} << a;
                while (mask) {
                    int bit = std::countr_zero(mask);
                    mask &= mask - 1;
                    auto [u, v] = table.pairs[first + 1 + bit];
                    rows[u] |= Row{1} << v;
                    rows[v] |= Row{1} << u;
                }
                seen.insert(canonical_key(n, rows));
            };

            std::uint64_t local = 0;
            auto account = [&]() {
                if (++local == 4096) {
                    local = 0;
                    if (labelled.fetch_add(4096) + 4096 > options.max_labelled)
                        return false;
                }
                return true;
            };

            if (rest == 0) {
                visit(0);
                labelled.fetch_add(1);
                return labelled.load() <= options.max_labelled;
            }

            std::uint64_t mask = (std::uint64_t{1} << rest) - 1;
            std::uint64_t limit = std::uint64_t{1} << width;
            while (mask < limit) {
                visit(mask);
                if (! account() || seen.size() > options.max_classes)
                    return false;
                std::uint64_t c = mask & (~mask + 1);
                std::uint64_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
            labelled.fetch_add(local);
            return labelled.load() <= options.max_labelled;
        }

        auto finish(int n, std::unordered_set<std::uint64_t> & seen) -> std::vector<Graph>
        {
            std::vector<std::uint64_t> keys(seen.begin(), seen.end());
            std::sort(keys.begin(), keys.end());
            std::vector<Graph> result;
            result.reserve(keys.size());
            for (auto key : keys)
                result.push_back(graph_from_key(n, key));
            return result;
        }

        void budget_error(const std::unordered_set<std::uint64_t> & seen)
        {
            throw BudgetError("enumerate_graphs: budget exceeded after " + std::to_string(seen.size()) + " classes", seen.size());
        }
    }

    auto enumerate_graphs_serial(int n, int m, const EnumerationOptions & options) -> std::vector<Graph>
    {
        check_request(n, m, options);
        std::unordered_set<std::uint64_t> seen;
        if (m == 0) {
            seen.insert(0);
            return finish(n, seen);
        }
        PairTable table(n);
        std::atomic<std::uint64_t> labelled{0};
        int total = static_cast<int>(table.pairs.size());
        for (int first = 0; first <= total - m; ++first)
            if (! scan_prefix(n, m, first, table, seen, labelled, options))
                budget_error(seen);
        return finish(n, seen);
    }

    auto enumerate_graphs(int n, int m, const EnumerationOptions & options) -> std::vector<Graph>
    {
        if (options.threads <= 1)
            return enumerate_graphs_serial(n, m, options);

        check_request(n, m, options);
        if (m == 0)
            return enumerate_graphs_serial(n, m, options);

        PairTable table(n);
        std::atomic<std::uint64_t> labelled{0};
        std::atomic<bool> exceeded{false};
        int total = static_cast<int>(table.pairs.size());
        std::unordered_set<std::uint64_t> merged;

#pragma omp parallel num_threads(options.threads)
        {
            std::unordered_set<std::uint64_t> seen;
#pragma omp for schedule(dynamic, 1)
            for (int first = 0; first <= total - m; ++first) {
                if (exceeded.load(std::memory_order_relaxed))
                    continue;
                if (! scan_prefix(n, m, first, table, seen, labelled, options))
                    exceeded = true;
            }
#pragma omp critical
            merged.insert(seen.begin(), seen.end());
        }

        if (exceeded || merged.size() > options.max_classes)
            budget_error(merged);
        return finish(n, merged);
    }
}
