#include <prs/errors.hpp>
#include <prs/membership.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

#include <omp.h>

namespace prs
{
    auto to_string(MembershipStatus status) -> std::string
    {
        switch (status) {
        case MembershipStatus::member: return "member";
        case MembershipStatus::non_member: return "non_member";
        case MembershipStatus::unknown: return "unknown";
        }
        return "unknown";
    }

    auto to_string(SearchMode mode) -> std::string
    {
        return mode == SearchMode::exact ? "exact" : "sampled";
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto elapsed_ms(Clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }

        /// Immutable description of one search, shared by all workers.
        struct SearchModel
        {
            SearchModel(const Graph & g, const std::vector<Copy> & copies, const Budget & budget) :
                n(g.order()),
                m(g.size()),
                words((g.size() + 64) / 64),
                order(backtrack_order(g, budget.order, copies)),
                lookahead(budget.lookahead)
            {
                for (auto [u, v] : g.edges()) {
                    eu.push_back(u);
                    ev.push_back(v);
                }
                std::vector<std::vector<int>> per_edge(m);
                for (std::size_t c = 0; c < copies.size(); ++c) {
                    copy_start.push_back(static_cast<int>(copy_edges.size()));
                    for (int e : copies[c].edge_set) {
                        copy_edges.push_back(e);
                        per_edge[e].push_back(static_cast<int>(c));
                    }
                }
                copy_start.push_back(static_cast<int>(copy_edges.size()));
                for (int e = 0; e < m; ++e) {
                    edge_copy_start.push_back(static_cast<int>(edge_copies.size()));
                    edge_copies.insert(edge_copies.end(), per_edge[e].begin(), per_edge[e].end());
                }
                edge_copy_start.push_back(static_cast<int>(edge_copies.size()));
            }

            auto copy_count() const -> int { return static_cast<int>(copy_start.size()) - 1; }
            auto copy_size(int c) const -> int { return copy_start[c + 1] - copy_start[c]; }

            int n, m, words;
            std::vector<int> eu, ev;
            std::vector<int> order;
            std::vector<int> copy_start, copy_edges;
            std::vector<int> edge_copy_start, edge_copies;
            bool lookahead;
        };

        struct SharedBudget
        {
            std::uint64_t node_limit;
            Clock::time_point deadline;
            bool has_deadline;
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<bool> exhausted{false};
            /// Lowest subtree index known to hold a solution.
            std::atomic<long> winner{std::numeric_limits<long>::max()};
        };

        enum class Outcome
        {
            found,
            exhausted,
            out_of_budget,
            cancelled
        };

        class Worker
        {
        public:
            Worker(const SearchModel & model, SharedBudget & shared, long item = -1) :
                _model(model),
                _shared(shared),
                _item(item),
                _vmask(static_cast<std::size_t>(model.n) * model.words, 0),
                _colour(model.m, -1),
                _filled(model.copy_count(), 0),
                _stamp(model.m + 2, 0)
            {
            }

            /// Re-applies a prefix of colours (one per order position).
            auto replay(const std::vector<int> & prefix) -> int
            {
                int used = 0;
                for (std::size_t d = 0; d < prefix.size(); ++d) {
                    if (! assign(_model.order[d], prefix[d]))
                        throw std::logic_error("replayed prefix is inconsistent");
                    used = std::max(used, prefix[d] + 1);
                }
                return used;
            }

            auto dfs(int depth, int used) -> Outcome
            {
                if (! tick())
                    return _cancelled ? Outcome::cancelled : Outcome::out_of_budget;
                if (depth == _model.m)
                    return Outcome::found;
                int e = _model.order[depth];
                int limit = std::min(used, _model.m - 1);
                for (int c = 0; c <= limit; ++c) {
                    if (blocked(_model.eu[e], c) || blocked(_model.ev[e], c))
                        continue;
                    if (! assign(e, c))
                        continue;
                    Outcome r = dfs(depth + 1, std::max(used, c + 1));
                    if (r == Outcome::found)
                        return r;
                    unassign(e);
                    if (r != Outcome::exhausted)
                        return r;
                }
                return Outcome::exhausted;
            }

            /// Children of the current node (at `depth`) that survive pruning, in colour order.
            auto children(int depth, int used) -> std::vector<int>
            {
                std::vector<int> result;
                int e = _model.order[depth];
                int limit = std::min(used, _model.m - 1);
                for (int c = 0; c <= limit; ++c) {
                    if (blocked(_model.eu[e], c) || blocked(_model.ev[e], c))
                        continue;
                    if (! assign(e, c))
                        continue;
                    unassign(e);
                    result.push_back(c);
                }
                return result;
            }

            auto colours() const -> const std::vector<int> & { return _colour; }

            void flush()
            {
                _shared.nodes.fetch_add(_local);
                _local = 0;
            }

        private:
            auto blocked(int v, int c) const -> bool { return (_vmask[v * _model.words + c / 64] >> (c % 64)) & 1U; }
            void toggle(int v, int c) { _vmask[v * _model.words + c / 64] ^= std::uint64_t{1} << (c % 64); }

            auto tick() -> bool
            {
                if (++_local < std::min<std::uint64_t>(1024, std::max<std::uint64_t>(1, _shared.node_limit)))
                    return true;
                auto total = _shared.nodes.fetch_add(_local) + _local;
                _local = 0;
                if (_item >= 0 && _shared.winner.load(std::memory_order_relaxed) < _item) {
                    _cancelled = true;
                    return false;
                }
                if (_shared.exhausted.load(std::memory_order_relaxed))
                    return false;
                if (total > _shared.node_limit || (_shared.has_deadline && Clock::now() > _shared.deadline)) {
                    _shared.exhausted = true;
                    return false;
                }
                return true;
            }

            auto rainbow(int copy) -> bool
            {
                ++_stamp_value;
                for (int i = _model.copy_start[copy]; i < _model.copy_start[copy + 1]; ++i) {
                    int c = _colour[_model.copy_edges[i]];
                    if (_stamp[c] == _stamp_value)
                        return false;
                    _stamp[c] = _stamp_value;
                }
                return true;
            }

            /// The single uncoloured edge of `copy` must still be able to repeat one of its colours.
            auto can_still_repeat(int copy) -> bool
            {
                int open = -1;
                ++_stamp_value;
                for (int i = _model.copy_start[copy]; i < _model.copy_start[copy + 1]; ++i) {
                    int f = _model.copy_edges[i];
                    int c = _colour[f];
                    if (c < 0) {
                        open = f;
                        continue;
                    }
                    if (_stamp[c] == _stamp_value)
                        return true;
                    _stamp[c] = _stamp_value;
                }
                for (int i = _model.copy_start[copy]; i < _model.copy_start[copy + 1]; ++i) {
                    int f = _model.copy_edges[i];
                    if (f == open)
                        continue;
                    int c = _colour[f];
                    if (! blocked(_model.eu[open], c) && ! blocked(_model.ev[open], c))
                        return true;
                }
                return false;
            }

            auto assign(int e, int c) -> bool
            {
                _colour[e] = c;
                toggle(_model.eu[e], c);
                toggle(_model.ev[e], c);
                int begin = _model.edge_copy_start[e], end = _model.edge_copy_start[e + 1];
                for (int i = begin; i < end; ++i)
                    ++_filled[_model.edge_copies[i]];

                bool ok = true;
                for (int i = begin; i < end && ok; ++i) {
                    int k = _model.edge_copies[i];
                    int size = _model.copy_size(k);
                    if (_filled[k] == size)
                        ok = ! rainbow(k);
                }
                if (ok && _model.lookahead)
                    ok = lookahead_ok(e);
                if (! ok)
                    unassign(e);
                return ok;
            }

            /// Copies through e that now have one open edge must still be able to repeat a colour there.
            auto lookahead_ok(int e) -> bool
            {
                int begin = _model.edge_copy_start[e], end = _model.edge_copy_start[e + 1];
                for (int i = begin; i < end; ++i) {
                    int k = _model.edge_copies[i];
                    if (_filled[k] == _model.copy_size(k) - 1 && ! can_still_repeat(k))
                        return false;
                }
                return true;
            }

            void unassign(int e)
            {
                int c = _colour[e];
                int begin = _model.edge_copy_start[e], end = _model.edge_copy_start[e + 1];
                for (int i = begin; i < end; ++i)
                    --_filled[_model.edge_copies[i]];
                toggle(_model.eu[e], c);
                toggle(_model.ev[e], c);
                _colour[e] = -1;
            }

            const SearchModel & _model;
            SharedBudget & _shared;
            long _item;
            std::vector<std::uint64_t> _vmask;
            std::vector<int> _colour;
            std::vector<int> _filled;
            std::vector<std::uint64_t> _stamp;
            std::uint64_t _stamp_value = 0;
            std::uint64_t _local = 0;
            bool _cancelled = false;
        };

        struct Prepared
        {
            std::vector<Copy> copies;
            std::optional<MembershipVerdict> early;
        };

        auto prepare(const Graph & g, const Graph & h, const Budget & budget, Clock::time_point start) -> Prepared
        {
            Prepared p;
            try {
                p.copies = subgraph_copies(g, h, budget.copy_cap);
            }
            catch (const BudgetError & e) {
                MembershipVerdict v;
                v.status = MembershipStatus::unknown;
                v.reason = std::string("copy cap exceeded: ") + e.what();
                v.stats.elapsed_ms = elapsed_ms(start);
                p.early = v;
                return p;
            }
            for (const auto & copy : p.copies)
                if (copy.edge_set.empty()) {
                    MembershipVerdict v;
                    v.status = MembershipStatus::member;
                    v.reason = "pattern has no edges, so every colouring contains it";
                    v.stats.elapsed_ms = elapsed_ms(start);
                    p.early = v;
                    return p;
                }
            return p;
        }

        auto make_shared_budget(const Budget & budget, Clock::time_point start) -> std::unique_ptr<SharedBudget>
        {
            auto shared = std::make_unique<SharedBudget>();
            shared->node_limit = budget.nodes;
            shared->has_deadline = budget.seconds > 0;
            shared->deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.seconds));
            return shared;
        }

        auto found_verdict(const Graph & g, const Graph & h, const std::vector<int> & colours) -> MembershipVerdict
        {
            MembershipVerdict v;
            v.status = MembershipStatus::non_member;
            v.certificate = normalized(EdgeColouring{colours});
            if (! is_proper(g, *v.certificate) || has_rainbow(g, *v.certificate, h))
                throw std::logic_error("rainbow-free search produced an invalid certificate");
            return v;
        }
    }

    auto find_rainbow_free_colouring_serial(const Graph & g, const Graph & h, const Budget & budget) -> MembershipVerdict
    {
        auto start = Clock::now();
        auto prepared = prepare(g, h, budget, start);
        if (prepared.early)
            return *prepared.early;

        SearchModel model(g, prepared.copies, budget);
        auto shared = make_shared_budget(budget, start);
        Worker worker(model, *shared);
        Outcome outcome = worker.dfs(0, 0);
        worker.flush();

        MembershipVerdict v;
        if (outcome == Outcome::found)
            v = found_verdict(g, h, worker.colours());
        else if (outcome == Outcome::exhausted)
            v.status = MembershipStatus::member;
        else {
            v.status = MembershipStatus::unknown;
            v.reason = "search budget exhausted";
        }
        v.stats.nodes = shared->nodes.load();
        v.stats.elapsed_ms = elapsed_ms(start);
        return v;
    }

    auto find_rainbow_free_colouring(const Graph & g, const Graph & h, const Budget & budget) -> MembershipVerdict
    {
        if (budget.threads <= 1 || g.size() < 4)
            return find_rainbow_free_colouring_serial(g, h, budget);

        auto start = Clock::now();
        auto prepared = prepare(g, h, budget, start);
        if (prepared.early)
            return *prepared.early;

        SearchModel model(g, prepared.copies, budget);
        auto shared = make_shared_budget(budget, start);

        // Cut the tree level by level until there is enough work to spread.
        struct Item
        {
            std::vector<int> prefix;
            int used;
        };
        std::vector<Item> frontier{{{}, 0}};
        std::size_t target = static_cast<std::size_t>(budget.threads) * 16;
        int depth = 0;
        while (depth < model.m && frontier.size() < target && ! frontier.empty()) {
            std::vector<Item> next;
            for (const auto & item : frontier) {
                Worker w(model, *shared);
                w.replay(item.prefix);
                for (int c : w.children(depth, item.used)) {
                    auto prefix = item.prefix;
                    prefix.push_back(c);
                    next.push_back({std::move(prefix), std::max(item.used, c + 1)});
                }
            }
            shared->nodes += next.size();
            frontier = std::move(next);
            ++depth;
        }

        MembershipVerdict v;
        std::vector<Outcome> outcomes(frontier.size(), Outcome::exhausted);
        std::vector<std::vector<int>> solutions(frontier.size());
        long items = static_cast<long>(frontier.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(budget.threads)
        for (long i = 0; i < items; ++i) {
            if (shared->winner.load() < i) {
                outcomes[i] = Outcome::cancelled;
                continue;
            }
            Worker w(model, *shared, i);
            int used = w.replay(frontier[i].prefix);
            outcomes[i] = w.dfs(depth, used);
            w.flush();
            if (outcomes[i] == Outcome::found) {
                solutions[i] = w.colours();
                long seen = shared->winner.load();
                while (i < seen && ! shared->winner.compare_exchange_weak(seen, i)) {
                }
            }
        }

        bool incomplete = false;
        for (long i = 0; i < items; ++i) {
            if (outcomes[i] == Outcome::found) {
                v = found_verdict(g, h, solutions[i]);
                break;
            }
            if (outcomes[i] == Outcome::out_of_budget)
                incomplete = true;
        }
        if (v.status != MembershipStatus::non_member) {
            if (incomplete || shared->exhausted) {
                v.status = MembershipStatus::unknown;
                v.reason = "search budget exhausted";
            }
            else
                v.status = MembershipStatus::member;
        }
        v.stats.nodes = shared->nodes.load();
        v.stats.elapsed_ms = elapsed_ms(start);
        return v;
    }

    auto sample_membership(const Graph & g, const Graph & h, std::uint64_t trials, std::uint64_t seed) -> MembershipVerdict
    {
        if (trials < 1)
            throw PreconditionError("sample_membership needs at least one trial");
        auto start = Clock::now();
        std::mt19937_64 rng(seed);
        int m = g.size();
        std::vector<int> order(m);
        std::vector<int> colour(m);
        std::vector<int> class_size;
        std::vector<std::vector<char>> at_vertex(g.order());
        std::vector<int> feasible;
        std::vector<double> weights;

        MembershipVerdict v;
        v.mode = SearchMode::sampled;
        for (std::uint64_t t = 0; t < trials; ++t) {
            ++v.stats.trials;
            for (int e = 0; e < m; ++e)
                order[e] = e;
            std::shuffle(order.begin(), order.end(), rng);
            class_size.clear();
            for (auto & row : at_vertex)
                row.assign(m + 1, 0);

            for (int e : order) {
                auto [a, b] = g.edge(e);
                feasible.clear();
                weights.clear();
                for (int c = 0; c < static_cast<int>(class_size.size()); ++c)
                    if (! at_vertex[a][c] && ! at_vertex[b][c]) {
                        feasible.push_back(c);
                        weights.push_back(class_size[c] + 1.0);
                    }
                feasible.push_back(static_cast<int>(class_size.size()));
                weights.push_back(1.0);
                std::discrete_distribution<int> pick(weights.begin(), weights.end());
                int c = feasible[pick(rng)];
                if (c == static_cast<int>(class_size.size()))
                    class_size.push_back(0);
                ++class_size[c];
                colour[e] = c;
                at_vertex[a][c] = at_vertex[b][c] = 1;
            }

            EdgeColouring candidate = normalized(EdgeColouring{colour});
            if (! has_rainbow(g, candidate, h)) {
                v.status = MembershipStatus::non_member;
                v.certificate = candidate;
                v.stats.elapsed_ms = elapsed_ms(start);
                return v;
            }
        }
        v.status = MembershipStatus::unknown;
        v.reason = "no rainbow-free colouring among " + std::to_string(trials) + " samples";
        v.stats.elapsed_ms = elapsed_ms(start);
        return v;
    }
}
