#include <prs/errors.hpp>
#include <prs/graph.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace prs
{
    namespace
    {
        void check_capacity(int n)
        {
            if (n < 0)
                throw PreconditionError("negative vertex count " + std::to_string(n));
            if (n > max_vertices)
                throw CapacityError("graph with " + std::to_string(n) + " vertices exceeds the " + std::to_string(max_vertices)
                    + "-vertex limit");
        }

        void check_vertex(int n, int v)
        {
            if (v < 0 || v >= n)
                throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
        }
    }

    Graph::Graph(int n) :
        _n(n)
    {
        check_capacity(n);
        _adj.assign(n, 0);
        rebuild_edges();
    }

    Graph::Graph(int n, std::span<const Edge> edges) :
        _n(n)
    {
        check_capacity(n);
        _adj.assign(n, 0);
        for (auto [u, v] : edges) {
            check_vertex(n, u);
            check_vertex(n, v);
            if (u == v)
                throw PreconditionError("self-loop at vertex " + std::to_string(u));
            _adj[u] |= Row{1} << v;
            _adj[v] |= Row{1} << u;
        }
        rebuild_edges();
    }

    auto Graph::from_rows(int n, std::span<const Row> rows) -> Graph
    {
        check_capacity(n);
        Graph g;
        g._n = n;
        g._adj.assign(rows.begin(), rows.begin() + n);
        for (int v = 0; v < n; ++v)
            g._adj[v] &= ~(Row{1} << v) & g.all_vertices();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) != g.adjacent(v, u))
                    throw PreconditionError("asymmetric adjacency rows");
        g.rebuild_edges();
        return g;
    }

    void Graph::rebuild_edges()
    {
        _edges.clear();
        _index.assign(static_cast<std::size_t>(_n) * _n, -1);
        for (int u = 0; u < _n; ++u) {
            Row above = _adj[u] & ~((Row{2} << u) - 1);
            while (above) {
                int v = std::countr_zero(above);
                above &= above - 1;
                _index[u * _n + v] = _index[v * _n + u] = static_cast<int>(_edges.size());
                _edges.push_back({u, v});
            }
        }
    }

    auto Graph::edge_index(int u, int v) const -> int
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            return -1;
        return _index[u * _n + v];
    }

    auto Graph::non_edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0; u < _n; ++u)
            for (int v = u + 1; v < _n; ++v)
                if (! adjacent(u, v))
                    result.push_back({u, v});
        return result;
    }

    auto complete_graph(int n) -> Graph
    {
        check_capacity(n);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return Graph(n, edges);
    }

    auto empty_graph(int n) -> Graph { return Graph(n); }

    auto path_graph(int n) -> Graph
    {
        check_capacity(n);
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return Graph(n, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw PreconditionError("cycle needs at least 3 vertices");
        check_capacity(n);
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        edges.push_back({0, n - 1});
        return Graph(n, edges);
    }

    auto star_graph(int leaves) -> Graph
    {
        if (leaves < 0)
            throw PreconditionError("negative leaf count");
        check_capacity(leaves + 1);
        std::vector<Edge> edges;
        for (int v = 1; v <= leaves; ++v)
            edges.push_back({0, v});
        return Graph(leaves + 1, edges);
    }

    auto complete_bipartite_graph(int a, int b) -> Graph
    {
        if (a < 0 || b < 0)
            throw PreconditionError("negative part size");
        check_capacity(a + b);
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v)
                edges.push_back({u, v});
        return Graph(a + b, edges);
    }

    auto standard_graph(StandardKind kind, std::span<const int> params) -> Graph
    {
        auto want = [&](std::size_t count) {
            if (params.size() != count)
                throw PreconditionError("wrong number of parameters for standard graph");
        };
        switch (kind) {
        case StandardKind::complete: want(1); return complete_graph(params[0]);
        case StandardKind::empty: want(1); return empty_graph(params[0]);
        case StandardKind::path: want(1); return path_graph(params[0]);
        case StandardKind::cycle: want(1); return cycle_graph(params[0]);
        case StandardKind::star: want(1); return star_graph(params[0]);
        case StandardKind::complete_bipartite: want(2); return complete_bipartite_graph(params[0], params[1]);
        }
        throw PreconditionError("unknown standard graph kind");
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        check_capacity(a.order() + b.order());
        std::vector<Edge> edges = a.edges();
        for (auto [u, v] : b.edges())
            edges.push_back({u + a.order(), v + a.order()});
        return Graph(a.order() + b.order(), edges);
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        auto g = disjoint_union(a, b);
        std::vector<Edge> edges = g.edges();
        for (int u = 0; u < a.order(); ++u)
            for (int v = 0; v < b.order(); ++v)
                edges.push_back({u, v + a.order()});
        return Graph(g.order(), edges);
    }

    auto complement(const Graph & g) -> Graph
    {
        std::vector<Row> rows(g.order());
        for (int v = 0; v < g.order(); ++v)
            rows[v] = ~g.row(v) & g.all_vertices() & ~(Row{1} << v);
        return Graph::from_rows(g.order(), rows);
    }

    auto add_edge(const Graph & g, int u, int v) -> Graph
    {
        check_vertex(g.order(), u);
        check_vertex(g.order(), v);
        if (u == v || g.adjacent(u, v))
            throw PreconditionError("add_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} is not a non-edge");
        std::vector<Row> rows(g.rows().begin(), g.rows().end());
        rows[u] |= Row{1} << v;
        rows[v] |= Row{1} << u;
        return Graph::from_rows(g.order(), rows);
    }

    auto delete_edge(const Graph & g, int u, int v) -> Graph
    {
        check_vertex(g.order(), u);
        check_vertex(g.order(), v);
        if (! g.adjacent(u, v))
            throw PreconditionError("delete_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
        std::vector<Row> rows(g.rows().begin(), g.rows().end());
        rows[u] &= ~(Row{1} << v);
        rows[v] &= ~(Row{1} << u);
        return Graph::from_rows(g.order(), rows);
    }

    auto isolated_count(const Graph & g) -> int
    {
        int count = 0;
        for (int v = 0; v < g.order(); ++v)
            count += g.row(v) == 0;
        return count;
    }

    auto strip_isolated(const Graph & g) -> Graph
    {
        std::vector<int> label(g.order(), -1);
        int next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (g.row(v) != 0)
                label[v] = next++;
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.push_back({label[u], label[v]});
        return Graph(next, edges);
    }

    auto relabel(const Graph & g, std::span<const int> perm) -> Graph
    {
        if (static_cast<int>(perm.size()) != g.order())
            throw PreconditionError("relabel: permutation size mismatch");
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.push_back({perm[u], perm[v]});
        return Graph(g.order(), edges);
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        std::string out;
        out.push_back(static_cast<char>(63 + g.order()));
        int acc = 0, bits = 0;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(static_cast<char>(63 + acc));
                    acc = bits = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
        return out;
    }

    auto from_graph6(std::string_view text) -> Graph
    {
        std::size_t base = 0;
        constexpr std::string_view header = ">>graph6<<";
        if (text.starts_with(header))
            base = header.size();
        std::string_view body = text.substr(base);
        while (! body.empty() && (body.back() == '\n' || body.back() == '\r'))
            body.remove_suffix(1);

        if (body.empty())
            throw FormatError("empty graph6 string", base);
        for (std::size_t i = 0; i < body.size(); ++i) {
            auto c = static_cast<unsigned char>(body[i]);
            if (c < 63 || c > 126)
                throw FormatError("graph6 byte outside 63..126", base + i);
        }
        int n = static_cast<unsigned char>(body[0]) - 63;
        if (n == 63)
            throw FormatError("graph6 orders above 62 are not supported", base);

        std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t expected = 1 + (pairs + 5) / 6;
        if (body.size() != expected)
            throw FormatError("graph6 length " + std::to_string(body.size()) + " does not match order " + std::to_string(n)
                    + " (expected " + std::to_string(expected) + ")",
                base + std::min(body.size(), expected));

        std::vector<Edge> edges;
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int byte = static_cast<unsigned char>(body[1 + k / 6]) - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    edges.push_back({i, j});
            }
        if (k % 6 != 0) {
            int byte = static_cast<unsigned char>(body.back()) - 63;
            if (byte & ((1 << (6 - k % 6)) - 1))
                throw FormatError("graph6 padding bits must be zero", base + body.size() - 1);
        }
        return Graph(n, edges);
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::vector<long> numbers;
        std::vector<std::size_t> offsets;
        std::size_t pos = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n')
                    ++pos;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
                ++pos;
                continue;
            }
            long value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{})
                throw FormatError("expected an integer in edge list", pos);
            offsets.push_back(pos);
            numbers.push_back(value);
            pos = static_cast<std::size_t>(ptr - text.data());
        }
        if (numbers.size() < 2)
            throw FormatError("edge list needs an \"n m\" header", text.size());
        long n = numbers[0], m = numbers[1];
        if (n < 0 || n > max_vertices)
            throw FormatError("edge list order out of range", offsets[0]);
        if (static_cast<long>(numbers.size()) != 2 + 2 * m)
            throw FormatError("edge list declares " + std::to_string(m) + " edges but has "
                    + std::to_string((numbers.size() - 2) / 2),
                offsets.back());
        std::vector<Edge> edges;
        for (long i = 0; i < m; ++i) {
            long u = numbers[2 + 2 * i], v = numbers[3 + 2 * i];
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw FormatError("bad edge in edge list", offsets[2 + 2 * i]);
            edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
        return Graph(static_cast<int>(n), edges);
    }

    auto to_edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
