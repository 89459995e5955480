#include <prs/canonical.hpp>
#include <prs/errors.hpp>

#include <algorithm>
#include <numeric>

namespace prs
{
    namespace
    {
        class Canonicaliser
        {
        public:
            Canonicaliser(int n, std::span<const Row> rows) :
                _n(n),
                _rows(rows),
                _words((n * (n - 1) / 2 + 63) / 64)
            {
                _scratch.assign(_words, 0);
            }

            void run()
            {
                std::vector<int> verts(_n);
                std::iota(verts.begin(), verts.end(), 0);
                std::vector<int> starts;
                if (_n > 0)
                    starts.push_back(0);
                refine(verts, starts);
                search(verts, starts);
            }

            std::vector<std::uint64_t> best_key;
            std::vector<int> best_order;

        private:
            auto cell_end(const std::vector<int> & starts, std::size_t c) const -> int
            {
                return c + 1 < starts.size() ? starts[c + 1] : _n;
            }

            void refine(std::vector<int> & verts, std::vector<int> & starts)
            {
                std::vector<Row> masks;
                std::vector<std::uint8_t> sig;
                std::vector<int> idx;
                bool changed = true;
                while (changed) {
                    changed = false;
                    std::size_t cells = starts.size();
                    masks.assign(cells, 0);
                    for (std::size_t c = 0; c < cells; ++c)
                        for (int p = starts[c]; p < cell_end(starts, c); ++p)
                            masks[c] |= Row{1} << verts[p];

                    for (std::size_t c = 0; c < cells && ! changed; ++c) {
                        int b = starts[c], e = cell_end(starts, c);
                        if (e - b == 1)
                            continue;
                        int len = e - b;
                        sig.assign(static_cast<std::size_t>(len) * cells, 0);
                        for (int i = 0; i < len; ++i)
                            for (std::size_t d = 0; d < cells; ++d)
                                sig[i * cells + d] = static_cast<std::uint8_t>(std::popcount(_rows[verts[b + i]] & masks[d]));
                        idx.resize(len);
                        std::iota(idx.begin(), idx.end(), 0);
                        auto less = [&](int x, int y) {
                            return std::lexicographical_compare(sig.begin() + x * cells, sig.begin() + (x + 1) * cells,
                                sig.begin() + y * cells, sig.begin() + (y + 1) * cells);
                        };
                        auto same = [&](int x, int y) {
                            return std::equal(sig.begin() + x * cells, sig.begin() + (x + 1) * cells, sig.begin() + y * cells);
                        };
                        std::sort(idx.begin(), idx.end(), less);
                        std::vector<int> new_starts;
                        for (int i = 1; i < len; ++i)
                            if (! same(idx[i - 1], idx[i]))
                                new_starts.push_back(b + i);
                        if (new_starts.empty())
                            continue;
                        std::vector<int> reordered(len);
                        for (int i = 0; i < len; ++i)
                            reordered[i] = verts[b + idx[i]];
                        std::copy(reordered.begin(), reordered.end(), verts.begin() + b);
                        starts.insert(starts.begin() + static_cast<long>(c) + 1, new_starts.begin(), new_starts.end());
                        changed = true;
                    }
                }
            }

            auto twins(int a, int b) const -> bool
            {
                Row mask = ~((Row{1} << a) | (Row{1} << b));
                return (_rows[a] & mask) == (_rows[b] & mask);
            }

            void leaf(const std::vector<int> & verts)
            {
                std::fill(_scratch.begin(), _scratch.end(), 0);
                int k = 0;
                for (int j = 1; j < _n; ++j)
                    for (int i = 0; i < j; ++i, ++k)
                        if ((_rows[verts[i]] >> verts[j]) & 1U)
                            _scratch[k / 64] |= std::uint64_t{1} << (63 - k % 64);
                if (best_order.empty() || _scratch > best_key) {
                    best_key = _scratch;
                    best_order = verts;
                }
            }

            void search(const std::vector<int> & verts, const std::vector<int> & starts)
            {
                if (static_cast<int>(starts.size()) == _n) {
                    leaf(verts);
                    return;
                }
                std::size_t c = 0;
                while (cell_end(starts, c) - starts[c] == 1)
                    ++c;
                int b = starts[c], e = cell_end(starts, c);

                std::vector<int> tried;
                for (int p = b; p < e; ++p) {
                    int w = verts[p];
                    if (std::any_of(tried.begin(), tried.end(), [&](int x) { return twins(w, x); }))
                        continue;
                    tried.push_back(w);

                    std::vector<int> child_verts = verts;
                    std::swap(child_verts[b], child_verts[p]);
                    std::sort(child_verts.begin() + b + 1, child_verts.begin() + e);
                    std::vector<int> child_starts = starts;
                    child_starts.insert(child_starts.begin() + static_cast<long>(c) + 1, b + 1);
                    refine(child_verts, child_starts);
                    search(child_verts, child_starts);
                }
            }

            int _n;
            std::span<const Row> _rows;
            int _words;
            std::vector<std::uint64_t> _scratch;
        };
    }

    auto canonical_labelling(const Graph & g) -> std::vector<int>
    {
        Canonicaliser c(g.order(), g.rows());
        c.run();
        std::vector<int> perm(g.order());
        for (int p = 0; p < g.order(); ++p)
            perm[c.best_order[p]] = p;
        return perm;
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        auto perm = canonical_labelling(g);
        return relabel(g, perm);
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        return {to_graph6(canonical_graph(g))};
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order() || a.size() != b.size())
            return false;
        return canonical_graph(a) == canonical_graph(b);
    }

    auto canonical_key(int n, std::span<const Row> rows) -> std::uint64_t
    {
        if (n > 11)
            throw PreconditionError("canonical_key supports at most 11 vertices");
        if (n < 2)
            return 0;
        Canonicaliser c(n, rows);
        c.run();
        return c.best_key[0];
    }

    auto labelled_key(int n, std::span<const Row> rows) -> std::uint64_t
    {
        if (n > 11)
            throw PreconditionError("labelled_key supports at most 11 vertices");
        std::uint64_t key = 0;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((rows[i] >> j) & 1U)
                    key |= std::uint64_t{1} << (63 - k);
        return key;
    }

    auto graph_from_key(int n, std::uint64_t key) -> Graph
    {
        if (n > 11)
            throw PreconditionError("graph_from_key supports at most 11 vertices");
        std::vector<Edge> edges;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((key >> (63 - k)) & 1U)
                    edges.push_back({i, j});
        return Graph(n, edges);
    }
}
