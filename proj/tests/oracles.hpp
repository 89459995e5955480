#pragma once

// Slow, obviously-correct reference computations. These deliberately share no
// code with the library beyond the Graph container's accessors.

#include <prs/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle
{
    using prs::Edge;
    using prs::Graph;

    inline auto edge_list(const Graph & g) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                if (g.adjacent(a, b))
                    out.push_back({a, b});
        return out;
    }

    inline auto make_graph(int n, const std::vector<Edge> & edges) -> Graph
    {
        return Graph(n, edges);
    }

    /// Calls visit(perm) for every permutation of 0..n-1.
    inline void for_each_permutation(int n, const std::function<void(const std::vector<int> &)> & visit)
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do
            visit(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    /// Lexicographically largest adjacency string over all relabellings.
    inline auto brute_canonical(const Graph & g) -> std::vector<bool>
    {
        int n = g.order();
        std::vector<bool> best;
        for_each_permutation(n, [&](const std::vector<int> & p) {
            std::vector<bool> key;
            for (int b = 1; b < n; ++b)
                for (int a = 0; a < b; ++a)
                    key.push_back(g.adjacent(p[a], p[b]));
            if (key > best)
                best = key;
        });
        return best;
    }

    inline auto brute_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order() || edge_list(a).size() != edge_list(b).size())
            return false;
        return brute_canonical(a) == brute_canonical(b);
    }

    /// All labelled graphs on n vertices with m edges (m < 0 for any m).
    inline auto labelled_graphs(int n, int m = -1) -> std::vector<Graph>
    {
        std::vector<Edge> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pairs.push_back({a, b});
        std::vector<Graph> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            if (m >= 0 && std::popcount(mask) != m)
                continue;
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1U)
                    edges.push_back(pairs[i]);
            out.push_back(Graph(n, edges));
        }
        return out;
    }

    /// Number of isomorphism classes among all labelled graphs on n vertices with m edges.
    inline auto class_count(int n, int m = -1) -> std::size_t
    {
        std::set<std::vector<bool>> seen;
        for (auto & g : labelled_graphs(n, m))
            seen.insert(brute_canonical(g));
        return seen.size();
    }

    /// Every injective map of pattern vertices into host vertices preserving edges.
    inline void for_each_injection(const Graph & host, const Graph & pattern,
        const std::function<void(const std::vector<int> &)> & visit)
    {
        int k = pattern.order(), n = host.order();
        if (k > n)
            return;
        std::vector<int> map(k, -1);
        std::vector<bool> used(n, false);
        std::function<void(int)> go = [&](int i) {
            if (i == k) {
                for (auto [a, b] : edge_list(pattern))
                    if (! host.adjacent(map[a], map[b]))
                        return;
                visit(map);
                return;
            }
            for (int v = 0; v < n; ++v)
                if (! used[v]) {
                    used[v] = true;
                    map[i] = v;
                    go(i + 1);
                    used[v] = false;
                }
        };
        go(0);
    }

    inline auto image_edges(const Graph & pattern, const std::vector<int> & map) -> std::set<std::pair<int, int>>
    {
        std::set<std::pair<int, int>> out;
        for (auto [a, b] : edge_list(pattern))
            out.insert({std::min(map[a], map[b]), std::max(map[a], map[b])});
        return out;
    }

    /// Distinct edge sets of copies of pattern in host.
    inline auto copy_edge_sets(const Graph & host, const Graph & pattern) -> std::set<std::set<std::pair<int, int>>>
    {
        std::set<std::set<std::pair<int, int>>> out;
        for_each_injection(host, pattern, [&](const std::vector<int> & map) { out.insert(image_edges(pattern, map)); });
        return out;
    }

    inline auto contains(const Graph & host, const Graph & pattern) -> bool
    {
        return ! copy_edge_sets(host, pattern).empty() || (edge_list(pattern).empty() && pattern.order() <= host.order());
    }

    inline auto contains_through(const Graph & host, const Graph & pattern, Edge e) -> bool
    {
        for (auto & s : copy_edge_sets(host, pattern))
            if (s.contains({e.u, e.v}))
                return true;
        return false;
    }

    /// colour of each edge of `host`, keyed by (u, v) with u < v
    using Colouring = std::map<std::pair<int, int>, int>;

    inline auto rainbow_copy_exists(const Graph & host, const Colouring & phi, const Graph & pattern) -> bool
    {
        if (edge_list(pattern).empty())
            return pattern.order() <= host.order();
        for (auto & s : copy_edge_sets(host, pattern)) {
            std::set<int> colours;
            for (auto & e : s)
                colours.insert(phi.at(e));
            if (colours.size() == s.size())
                return true;
        }
        return false;
    }

    /// Every proper colouring in restricted-growth form over the lexicographic edge list.
    inline void for_each_proper_colouring(const Graph & g, const std::function<void(const Colouring &)> & visit)
    {
        auto edges = edge_list(g);
        std::vector<int> colour(edges.size(), -1);
        std::function<void(std::size_t, int)> go = [&](std::size_t i, int used) {
            if (i == edges.size()) {
                for (std::size_t a = 0; a < edges.size(); ++a)
                    for (std::size_t b = a + 1; b < edges.size(); ++b) {
                        bool touch = edges[a].u == edges[b].u || edges[a].u == edges[b].v || edges[a].v == edges[b].u
                            || edges[a].v == edges[b].v;
                        if (touch && colour[a] == colour[b])
                            return;
                    }
                Colouring phi;
                for (std::size_t a = 0; a < edges.size(); ++a)
                    phi[{edges[a].u, edges[a].v}] = colour[a];
                visit(phi);
                return;
            }
            for (int c = 0; c <= used; ++c) {
                colour[i] = c;
                go(i + 1, std::max(used, c + 1));
            }
        };
        go(0, 0);
    }

    inline auto proper_colouring_count(const Graph & g) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_proper_colouring(g, [&](const Colouring &) { ++count; });
        return count;
    }

    /// Is g in F*(h): every proper colouring has a rainbow copy.
    inline auto member(const Graph & g, const Graph & h) -> bool
    {
        bool all = true;
        for_each_proper_colouring(g, [&](const Colouring & phi) {
            if (all && ! rainbow_copy_exists(g, phi, h))
                all = false;
        });
        return all;
    }

    inline auto non_edges(const Graph & g) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                if (! g.adjacent(a, b))
                    out.push_back({a, b});
        return out;
    }

    inline auto plus(const Graph & g, Edge e) -> Graph
    {
        auto edges = edge_list(g);
        edges.push_back(e);
        return Graph(g.order(), edges);
    }

    inline auto prsat_holds(const Graph & g, const Graph & h) -> bool
    {
        if (member(g, h))
            return false;
        for (auto e : non_edges(g))
            if (! member(plus(g, e), h))
                return false;
        return true;
    }

    inline auto sat_holds(const Graph & g, const Graph & h) -> bool
    {
        if (contains(g, h))
            return false;
        for (auto e : non_edges(g))
            if (! contains(plus(g, e), h))
                return false;
        return true;
    }

    inline auto ssat_holds(const Graph & g, const Graph & h) -> bool
    {
        for (auto e : non_edges(g))
            if (! contains_through(plus(g, e), h, e))
                return false;
        return true;
    }

    /// Weak saturation by searching over orderings of the missing edges,
    /// memoised on the current edge set.
    inline auto wsat_holds(const Graph & g, const Graph & h) -> bool
    {
        if (contains(g, h))
            return false;
        std::set<std::vector<Edge>> dead;
        std::function<bool(const Graph &)> go = [&](const Graph & cur) {
            auto missing = non_edges(cur);
            if (missing.empty())
                return true;
            if (dead.contains(missing))
                return false;
            for (auto e : missing) {
                Graph next = plus(cur, e);
                if (contains_through(next, h, e) && go(next))
                    return true;
            }
            dead.insert(missing);
            return false;
        };
        return go(g);
    }

    /// Minimum edge count of a graph on n vertices satisfying `holds`, by labelled brute force.
    inline auto min_edges(int n, const std::function<bool(const Graph &)> & holds) -> int
    {
        int top = n * (n - 1) / 2;
        for (int m = 0; m <= top; ++m) {
            std::set<std::vector<bool>> tried;
            for (auto & g : labelled_graphs(n, m)) {
                if (! tried.insert(brute_canonical(g)).second)
                    continue;
                if (holds(g))
                    return m;
            }
        }
        return -1;
    }

    inline auto independence_number(const Graph & g) -> int
    {
        int n = g.order(), best = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    if (((mask >> a) & 1U) && ((mask >> b) & 1U) && g.adjacent(a, b))
                        ok = false;
            if (ok)
                best = std::max(best, std::popcount(mask));
        }
        return best;
    }

    /// Number of set partitions of {1..m}, counted by recursion on the block of the last element.
    inline auto set_partitions(int m) -> std::uint64_t
    {
        // S(m, k) Stirling numbers of the second kind, summed
        std::vector<std::vector<std::uint64_t>> s(m + 1, std::vector<std::uint64_t>(m + 1, 0));
        s[0][0] = 1;
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= i; ++k)
                s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
        std::uint64_t total = 0;
        for (int k = 0; k <= m; ++k)
            total += s[m][k];
        return total;
    }

    inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.push_back({a, b});
        return Graph(n, edges);
    }

    inline auto random_permutation(std::mt19937_64 & rng, int n) -> std::vector<int>
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    /// perm[v] is the new label of v
    inline auto relabelled(const Graph & g, const std::vector<int> & perm) -> Graph
    {
        std::vector<Edge> edges;
        for (auto [a, b] : edge_list(g))
            edges.push_back({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])});
        return Graph(g.order(), edges);
    }
}
