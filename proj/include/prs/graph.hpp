#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prs
{
    using Row = std::uint64_t;

    inline constexpr int max_vertices = 62;

    struct Edge
    {
        int u;
        int v;

        auto operator<=>(const Edge &) const = default;
    };

    /// Simple undirected graph on at most 62 vertices, stored as adjacency bit rows.
    ///
    /// Values are immutable once built. The edge list is kept sorted
    /// lexicographically by (u, v) with u < v, and edge indices refer to
    /// positions in that list.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);
        Graph(int n, std::span<const Edge> edges);

        static auto from_rows(int n, std::span<const Row> rows) -> Graph;

        auto order() const -> int { return _n; }
        auto size() const -> int { return static_cast<int>(_edges.size()); }

        auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1U; }
        auto row(int v) const -> Row { return _adj[v]; }
        auto rows() const -> std::span<const Row> { return _adj; }
        auto degree(int v) const -> int { return std::popcount(_adj[v]); }
        auto all_vertices() const -> Row { return _n == 64 ? ~Row{0} : (Row{1} << _n) - 1; }

        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto edge(int index) const -> Edge { return _edges[index]; }

        /// Position of uv in edges(), or -1 when uv is not an edge.
        auto edge_index(int u, int v) const -> int;

        auto non_edges() const -> std::vector<Edge>;

        auto operator==(const Graph & other) const -> bool { return _n == other._n && _adj == other._adj; }

    private:
        void rebuild_edges();

        int _n = 0;
        std::vector<Row> _adj;
        std::vector<Edge> _edges;
        std::vector<int> _index;
    };

    enum class StandardKind
    {
        complete,
        empty,
        path,
        cycle,
        star,
        complete_bipartite
    };

    /// Named building blocks.
    ///
    ///  - complete(n), empty(n): vertices 0..n-1.
    ///  - path(n): n vertices, edges i ~ i+1.
    ///  - cycle(n): path(n) plus 0 ~ n-1, n >= 3.
    ///  - star(k): K_{1,k}, centre 0, leaves 1..k.
    ///  - complete_bipartite(a, b): parts 0..a-1 and a..a+b-1.
    auto standard_graph(StandardKind kind, std::span<const int> params) -> Graph;

    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;

    /// Vertices of `b` are shifted past those of `a`.
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
    auto join(const Graph & a, const Graph & b) -> Graph;
    auto complement(const Graph & g) -> Graph;
    auto add_edge(const Graph & g, int u, int v) -> Graph;
    auto delete_edge(const Graph & g, int u, int v) -> Graph;

    /// Drops degree-0 vertices, keeping the survivors in their original relative order.
    auto strip_isolated(const Graph & g) -> Graph;
    auto isolated_count(const Graph & g) -> int;

    /// `perm[v]` is the new label of vertex v.
    auto relabel(const Graph & g, std::span<const int> perm) -> Graph;

    /// graph6, without header. Bit-exact with the published format for n <= 62.
    auto to_graph6(const Graph & g) -> std::string;

    /// Accepts an optional ">>graph6<<" header and trailing newline.
    auto from_graph6(std::string_view text) -> Graph;

    /// Plain "n m" header followed by m lines "u v". Lines starting with '#' are ignored.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto to_edge_list(const Graph & g) -> std::string;
}
