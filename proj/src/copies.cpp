#include <prs/copies.hpp>
#include <prs/errors.hpp>

#include <algorithm>
#include <unordered_set>

namespace prs
{
    namespace
    {
        struct StrippedPattern
        {
            explicit StrippedPattern(const Graph & pattern)
            {
                for (int v = 0; v < pattern.order(); ++v) {
                    if (pattern.row(v) != 0)
                        original.push_back(v);
                    else
                        ++isolated;
                }
                graph = strip_isolated(pattern);
            }

            Graph graph;
            std::vector<int> original;
            int isolated = 0;
        };

        class Embedder
        {
        public:
            Embedder(const Graph & host, const Graph & pattern, const EmbeddingVisitor & visit) :
                _host(host),
                _pattern(pattern),
                _visit(visit),
                _map(pattern.order(), -1)
            {
            }

            /// Search with the given pattern vertices already mapped to the given host vertices.
            auto run(std::span<const int> seeds, std::span<const int> images) -> bool
            {
                std::fill(_map.begin(), _map.end(), -1);
                _used = 0;
                for (std::size_t i = 0; i < seeds.size(); ++i) {
                    _map[seeds[i]] = images[i];
                    _used |= Row{1} << images[i];
                }
                build_order(seeds);
                return extend(static_cast<int>(seeds.size()));
            }

        private:
            void build_order(std::span<const int> seeds)
            {
                int k = _pattern.order();
                _order.assign(seeds.begin(), seeds.end());
                Row placed = 0;
                for (int s : seeds)
                    placed |= Row{1} << s;
                while (static_cast<int>(_order.size()) < k) {
                    int best = -1, best_links = -1, best_degree = -1;
                    for (int v = 0; v < k; ++v) {
                        if ((placed >> v) & 1U)
                            continue;
                        int links = std::popcount(_pattern.row(v) & placed);
                        int degree = _pattern.degree(v);
                        if (links > best_links || (links == best_links && degree > best_degree)) {
                            best = v;
                            best_links = links;
                            best_degree = degree;
                        }
                    }
                    _order.push_back(best);
                    placed |= Row{1} << best;
                }
                _earlier.assign(k, {});
                for (int t = 0; t < k; ++t)
                    for (int s = 0; s < t; ++s)
                        if (_pattern.adjacent(_order[t], _order[s]))
                            _earlier[t].push_back(_order[s]);
            }

            auto extend(int t) -> bool
            {
                if (t == _pattern.order())
                    return _visit(_map);
                int p = _order[t];
                Row candidates = _host.all_vertices() & ~_used;
                for (int q : _earlier[t])
                    candidates &= _host.row(_map[q]);
                int need = _pattern.degree(p);
                while (candidates) {
                    int c = std::countr_zero(candidates);
                    candidates &= candidates - 1;
                    if (_host.degree(c) < need)
                        continue;
                    _map[p] = c;
                    _used |= Row{1} << c;
                    bool go_on = extend(t + 1);
                    _used &= ~(Row{1} << c);
                    _map[p] = -1;
                    if (! go_on)
                        return false;
                }
                return true;
            }

            const Graph & _host;
            const Graph & _pattern;
            const EmbeddingVisitor & _visit;
            std::vector<int> _map;
            Row _used = 0;
            std::vector<int> _order;
            std::vector<std::vector<int>> _earlier;
        };

        struct VectorHash
        {
            auto operator()(const std::vector<int> & v) const -> std::size_t
            {
                std::size_t h = 1469598103934665603ULL;
                for (int x : v) {
                    h ^= static_cast<std::size_t>(x);
                    h *= 1099511628211ULL;
                }
                return h;
            }
        };
    }

    auto for_each_embedding(const Graph & host, const Graph & pattern, const EmbeddingVisitor & visit, std::optional<Edge> through)
        -> bool
    {
        StrippedPattern stripped(pattern);
        const Graph & p = stripped.graph;
        if (host.order() - p.order() < stripped.isolated || p.order() > host.order())
            return true;

        Embedder embedder(host, p, visit);
        if (! through)
            return embedder.run({}, {});

        auto [x, y] = *through;
        if (! host.adjacent(x, y))
            return true;
        for (auto [a, b] : p.edges()) {
            for (int flip = 0; flip < 2; ++flip) {
                int pa = flip ? b : a, pb = flip ? a : b;
                if (host.degree(x) < p.degree(pa) || host.degree(y) < p.degree(pb))
                    continue;
                int seeds[2] = {pa, pb};
                int images[2] = {x, y};
                if (! embedder.run(seeds, images))
                    return false;
            }
        }
        return true;
    }

    auto make_copy(const Graph & host, const Graph & pattern, std::span<const int> stripped_map) -> Copy
    {
        StrippedPattern stripped(pattern);
        Copy copy;
        copy.vertex_map.assign(pattern.order(), -1);
        Row used = 0;
        for (std::size_t i = 0; i < stripped.original.size(); ++i) {
            copy.vertex_map[stripped.original[i]] = stripped_map[i];
            used |= Row{1} << stripped_map[i];
        }
        int spare = 0;
        for (int v = 0; v < pattern.order(); ++v) {
            if (copy.vertex_map[v] != -1)
                continue;
            while ((used >> spare) & 1U)
                ++spare;
            copy.vertex_map[v] = spare++;
        }
        for (auto [a, b] : stripped.graph.edges())
            copy.edge_set.push_back(host.edge_index(stripped_map[a], stripped_map[b]));
        std::sort(copy.edge_set.begin(), copy.edge_set.end());
        return copy;
    }

    auto subgraph_copies(const Graph & host, const Graph & pattern, std::size_t cap) -> std::vector<Copy>
    {
        StrippedPattern stripped(pattern);
        std::vector<Copy> copies;
        std::unordered_set<std::vector<int>, VectorHash> seen;
        std::vector<int> key;
        for_each_embedding(host, pattern, [&](std::span<const int> map) {
            key.clear();
            for (auto [a, b] : stripped.graph.edges())
                key.push_back(host.edge_index(map[a], map[b]));
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) {
                copies.push_back(make_copy(host, pattern, map));
                if (copies.size() > cap)
                    throw BudgetError("subgraph_copies: more than " + std::to_string(cap) + " copies", copies.size());
            }
            return true;
        });
        std::stable_sort(copies.begin(), copies.end(), [](const Copy & a, const Copy & b) { return a.edge_set < b.edge_set; });
        return copies;
    }

    auto contains_subgraph(const Graph & host, const Graph & pattern, bool ignore_isolated) -> bool
    {
        if (ignore_isolated)
            return contains_subgraph(strip_isolated(host), strip_isolated(pattern), false);
        if (pattern.size() > host.size() || pattern.order() > host.order())
            return false;
        bool found = false;
        for_each_embedding(host, pattern, [&](std::span<const int>) {
            found = true;
            return false;
        });
        return found;
    }

    auto contains_subgraph_through(const Graph & host, const Graph & pattern, Edge e) -> bool
    {
        return find_copy_through(host, pattern, e).has_value();
    }

    auto find_copy_through(const Graph & host, const Graph & pattern, Edge e) -> std::optional<Copy>
    {
        std::optional<Copy> found;
        for_each_embedding(
            host, pattern,
            [&](std::span<const int> map) {
                found = make_copy(host, pattern, map);
                return false;
            },
            e);
        return found;
    }

    auto find_copy(const Graph & host, const Graph & pattern) -> std::optional<Copy>
    {
        std::optional<Copy> found;
        for_each_embedding(host, pattern, [&](std::span<const int> map) {
            found = make_copy(host, pattern, map);
            return false;
        });
        return found;
    }
}
