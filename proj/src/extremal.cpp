#include <prs/errors.hpp>
#include <prs/extremal.hpp>

#include <atomic>
#include <functional>
#include <limits>

#include <omp.h>

namespace prs
{
    namespace
    {
        using Predicate = std::function<Holds(const Graph &)>;

        void check_order(SaturationKind kind, int n, const ExtremalOptions & options)
        {
            int cap = options.max_order > 0 ? options.max_order : default_max_order(kind);
            if (n < 1 || n > cap)
                throw PreconditionError("exact " + to_string(kind) + " scans need 1 <= n <= " + std::to_string(cap) + ", got "
                    + std::to_string(n));
        }

        /// Index of the first class that holds, or -1; fills `level` counts.
        auto scan_level(const std::vector<Graph> & classes, const Predicate & test, int threads, LevelScan & level) -> long
        {
            long count = static_cast<long>(classes.size());
            level.classes = classes.size();
            if (threads <= 1) {
                for (long i = 0; i < count; ++i) {
                    ++level.tested;
                    Holds h = test(classes[i]);
                    if (h == Holds::yes)
                        return i;
                    if (h == Holds::unknown)
                        ++level.unknown;
                }
                return -1;
            }

            std::vector<Holds> outcome(count, Holds::no);
            std::atomic<long> best{std::numeric_limits<long>::max()};
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
            for (long i = 0; i < count; ++i) {
                if (best.load() < i)
                    continue;
                outcome[i] = test(classes[i]);
                if (outcome[i] == Holds::yes) {
                    long seen = best.load();
                    while (i < seen && ! best.compare_exchange_weak(seen, i)) {
                    }
                }
            }

            // report exactly what the serial scan would have seen
            long winner = best.load();
            long stop = winner == std::numeric_limits<long>::max() ? count : winner + 1;
            for (long i = 0; i < stop; ++i) {
                ++level.tested;
                if (outcome[i] == Holds::unknown)
                    ++level.unknown;
            }
            return winner == std::numeric_limits<long>::max() ? -1 : winner;
        }

        auto scan(SaturationKind kind, int n, const Predicate & test, const ExtremalOptions & options, int threads)
            -> ExtremalResult
        {
            ExtremalResult result;
            result.kind = kind;
            result.n = n;
            EnumerationOptions enumeration = options.enumeration;
            enumeration.threads = threads;
            int top = n * (n - 1) / 2;
            for (int m = 0; m <= top; ++m) {
                std::vector<Graph> classes;
                try {
                    classes = threads > 1 ? enumerate_graphs(n, m, enumeration) : enumerate_graphs_serial(n, m, enumeration);
                }
                catch (const BudgetError & e) {
                    result.exact = false;
                    result.partial_level = m;
                    result.reason = std::string("enumeration stopped: ") + e.what();
                    return result;
                }

                LevelScan level;
                level.edges = m;
                long found = scan_level(classes, test, threads, level);
                result.scanned.push_back(level);
                if (found >= 0) {
                    result.value = m;
                    result.witness = classes[found];
                    return result;
                }
                if (level.unknown > 0) {
                    result.exact = false;
                    if (result.reason.empty())
                        result.reason = "undecided classes at " + std::to_string(m) + " edges; the value is a lower bound";
                }
            }
            return result;
        }

        auto predicate_for(SaturationKind kind, const Graph & h, const Budget & budget) -> Predicate
        {
            SaturationOptions options;
            options.budget = budget;
            options.budget.threads = 1;
            options.short_circuit = true;
            return [kind, h, options](const Graph & g) { return check_saturation(kind, g, h, options).holds; };
        }
    }

    auto default_max_order(SaturationKind kind) -> int
    {
        return kind == SaturationKind::prsat ? 7 : 8;
    }

    auto exact_number(SaturationKind kind, int n, const Graph & h, const ExtremalOptions & options) -> ExtremalResult
    {
        check_order(kind, n, options);
        return scan(kind, n, predicate_for(kind, h, options.budget), options, options.budget.threads);
    }

    auto exact_number_serial(SaturationKind kind, int n, const Graph & h, const ExtremalOptions & options) -> ExtremalResult
    {
        check_order(kind, n, options);
        return scan(kind, n, predicate_for(kind, h, options.budget), options, 1);
    }

    auto exact_family_sat(int n, std::span<const Graph> family, const ExtremalOptions & options) -> ExtremalResult
    {
        check_order(SaturationKind::sat, n, options);
        std::vector<Graph> members(family.begin(), family.end());
        auto test = [members](const Graph & g) { return is_family_saturated(g, members).holds; };
        return scan(SaturationKind::sat, n, test, options, options.budget.threads);
    }
}
