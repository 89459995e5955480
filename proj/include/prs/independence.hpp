#pragma once

#include <prs/graph.hpp>

#include <functional>

namespace prs
{
    /// Exact, by branch and bound over bit rows.
    auto independence_number(const Graph & g) -> int;
    auto maximum_independent_set(const Graph & g) -> Row;

    auto clique_number(const Graph & g) -> int;

    /// Visits every independent set of exactly `size` vertices (as a bit row)
    /// in increasing lexicographic order; return false to stop.
    void for_each_independent_set(const Graph & g, int size, const std::function<bool(Row)> & visit);
}
