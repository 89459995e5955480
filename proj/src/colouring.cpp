#include <prs/colouring.hpp>
#include <prs/errors.hpp>

#include <algorithm>
#include <map>

namespace prs
{
    auto normalized(const EdgeColouring & colouring) -> EdgeColouring
    {
        std::map<int, int> rename;
        EdgeColouring result;
        result.colours.reserve(colouring.colours.size());
        for (int c : colouring.colours) {
            auto [it, fresh] = rename.try_emplace(c, static_cast<int>(rename.size()));
            result.colours.push_back(it->second);
        }
        return result;
    }

    auto is_normalized(const EdgeColouring & colouring) -> bool
    {
        int next = 0;
        for (int c : colouring.colours) {
            if (c > next || c < 0)
                return false;
            if (c == next)
                ++next;
        }
        return true;
    }

    auto colour_count(const EdgeColouring & colouring) -> int
    {
        std::vector<int> sorted = colouring.colours;
        std::sort(sorted.begin(), sorted.end());
        return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    auto is_proper(const Graph & g, const EdgeColouring & colouring) -> bool
    {
        if (static_cast<int>(colouring.colours.size()) != g.size())
            throw ShapeError("colouring has " + std::to_string(colouring.colours.size()) + " entries for "
                + std::to_string(g.size()) + " edges");
        std::vector<std::vector<int>> seen(g.order());
        for (int e = 0; e < g.size(); ++e) {
            auto [u, v] = g.edge(e);
            int c = colouring.colours[e];
            for (int w : {u, v}) {
                if (std::find(seen[w].begin(), seen[w].end(), c) != seen[w].end())
                    return false;
                seen[w].push_back(c);
            }
        }
        return true;
    }

    auto has_rainbow(const Graph & g, const EdgeColouring & colouring, const Graph & h) -> std::optional<Copy>
    {
        if (static_cast<int>(colouring.colours.size()) != g.size())
            throw ShapeError("colouring has " + std::to_string(colouring.colours.size()) + " entries for "
                + std::to_string(g.size()) + " edges");
        Graph stripped = strip_isolated(h);
        std::optional<Copy> found;
        std::vector<int> colours;
        for_each_embedding(g, h, [&](std::span<const int> map) {
            colours.clear();
            for (auto [a, b] : stripped.edges())
                colours.push_back(colouring.colours[g.edge_index(map[a], map[b])]);
            std::sort(colours.begin(), colours.end());
            if (std::adjacent_find(colours.begin(), colours.end()) != colours.end())
                return true;
            found = make_copy(g, h, map);
            return false;
        });
        return found;
    }

    auto backtrack_order(const Graph & g, EdgeOrder order, std::span<const Copy> copies) -> std::vector<int>
    {
        int m = g.size();
        std::vector<int> result;
        result.reserve(m);
        if (order == EdgeOrder::lexicographic) {
            for (int e = 0; e < m; ++e)
                result.push_back(e);
            return result;
        }

        std::vector<std::vector<int>> copies_of(m);
        for (std::size_t c = 0; c < copies.size(); ++c)
            for (int e : copies[c].edge_set)
                copies_of[e].push_back(static_cast<int>(c));

        std::vector<int> filled(copies.size(), 0);
        std::vector<int> vertex_hits(g.order(), 0);
        std::vector<char> placed(m, 0);
        for (int step = 0; step < m; ++step) {
            int best = -1;
            long best_adjacency = -1, best_coverage = -1;
            for (int e = 0; e < m; ++e) {
                if (placed[e])
                    continue;
                auto [u, v] = g.edge(e);
                long adjacency = vertex_hits[u] + vertex_hits[v];
                long coverage = 0;
                for (int c : copies_of[e])
                    coverage += static_cast<long>(filled[c]) * filled[c];
                if (adjacency > best_adjacency || (adjacency == best_adjacency && coverage > best_coverage)) {
                    best = e;
                    best_adjacency = adjacency;
                    best_coverage = coverage;
                }
            }
            placed[best] = 1;
            result.push_back(best);
            auto [u, v] = g.edge(best);
            ++vertex_hits[u];
            ++vertex_hits[v];
            for (int c : copies_of[best])
                ++filled[c];
        }
        return result;
    }

    namespace
    {
        class ProperEnumerator
        {
        public:
            ProperEnumerator(const Graph & g, std::vector<int> order, const std::function<bool(const EdgeColouring &)> & visit,
                std::uint64_t budget) :
                _g(g),
                _order(std::move(order)),
                _visit(visit),
                _budget(budget),
                _words((g.size() + 64) / 64),
                _vmask(static_cast<std::size_t>(g.order()) * _words, 0),
                _colour(g.size(), -1)
            {
            }

            auto run() -> ColouringCount
            {
                expand(0, 0);
                return {_visited, ! _stopped};
            }

        private:
            auto blocked(int v, int c) const -> bool { return (_vmask[v * _words + c / 64] >> (c % 64)) & 1U; }
            void toggle(int v, int c) { _vmask[v * _words + c / 64] ^= std::uint64_t{1} << (c % 64); }

            void expand(int depth, int used)
            {
                if (_stopped)
                    return;
                if (++_nodes > _budget) {
                    _stopped = true;
                    return;
                }
                if (depth == _g.size()) {
                    ++_visited;
                    if (! _visit(normalized(EdgeColouring{_colour})))
                        _stopped = true;
                    return;
                }
                int e = _order[depth];
                auto [u, v] = _g.edge(e);
                for (int c = 0; c <= used && ! _stopped; ++c) {
                    if (blocked(u, c) || blocked(v, c))
                        continue;
                    _colour[e] = c;
                    toggle(u, c);
                    toggle(v, c);
                    expand(depth + 1, std::max(used, c + 1));
                    toggle(u, c);
                    toggle(v, c);
                    _colour[e] = -1;
                }
            }

            const Graph & _g;
            std::vector<int> _order;
            const std::function<bool(const EdgeColouring &)> & _visit;
            std::uint64_t _budget;
            int _words;
            std::vector<std::uint64_t> _vmask;
            std::vector<int> _colour;
            std::uint64_t _nodes = 0;
            std::uint64_t _visited = 0;
            bool _stopped = false;
        };
    }

    auto enumerate_proper_colourings(const Graph & g, const std::function<bool(const EdgeColouring &)> & visit,
        std::uint64_t node_budget, EdgeOrder order) -> ColouringCount
    {
        ProperEnumerator enumerator(g, backtrack_order(g, order), visit, node_budget);
        return enumerator.run();
    }

    auto certificate_to_json(const Graph & g, const EdgeColouring & colouring) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json j;
        j["edges"] = nlohmann::ordered_json::array();
        for (auto [u, v] : g.edges())
            j["edges"].push_back({u, v});
        j["colours"] = colouring.colours;
        return j;
    }

    auto certificate_from_json(const nlohmann::json & j, int order) -> std::pair<Graph, EdgeColouring>
    {
        if (! j.contains("edges") || ! j.contains("colours") || ! j["edges"].is_array() || ! j["colours"].is_array())
            throw PreconditionError("certificate JSON needs \"edges\" and \"colours\" arrays");
        auto edge_json = j["edges"];
        auto colour_json = j["colours"];
        if (edge_json.size() != colour_json.size())
            throw ShapeError("certificate has " + std::to_string(edge_json.size()) + " edges but "
                + std::to_string(colour_json.size()) + " colours");
        std::vector<Edge> edges;
        int needed = 0;
        for (const auto & pair : edge_json) {
            int u = pair.at(0).get<int>(), v = pair.at(1).get<int>();
            edges.push_back({std::min(u, v), std::max(u, v)});
            needed = std::max(needed, std::max(u, v) + 1);
        }
        Graph g(order < 0 ? needed : order, edges);
        if (g.size() != static_cast<int>(edges.size()))
            throw PreconditionError("certificate lists a repeated edge");
        EdgeColouring colouring;
        colouring.colours.assign(g.size(), -1);
        for (std::size_t i = 0; i < edges.size(); ++i)
            colouring.colours[g.edge_index(edges[i].u, edges[i].v)] = colour_json[i].get<int>();
        return {g, colouring};
    }
}
