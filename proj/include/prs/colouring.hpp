#pragma once

#include <prs/copies.hpp>
#include <prs/graph.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace prs
{
    /// Colour ids aligned with a host graph's edge list.
    struct EdgeColouring
    {
        std::vector<int> colours;

        auto operator==(const EdgeColouring &) const -> bool = default;
    };

    /// Renames colours so that first occurrences appear as 0, 1, 2, ... in edge-list order.
    auto normalized(const EdgeColouring & colouring) -> EdgeColouring;
    auto is_normalized(const EdgeColouring & colouring) -> bool;
    auto colour_count(const EdgeColouring & colouring) -> int;

    /// Throws ShapeError when the colouring length differs from g.size().
    auto is_proper(const Graph & g, const EdgeColouring & colouring) -> bool;

    /// A copy of h whose edges all get distinct colours, if one exists. Properness is not assumed.
    auto has_rainbow(const Graph & g, const EdgeColouring & colouring, const Graph & h) -> std::optional<Copy>;

    enum class EdgeOrder
    {
        /// edge_list order
        lexicographic,
        /// each next edge maximises adjacency to the edges already ordered,
        /// ties broken towards edges that push pattern copies closest to completion
        greedy_coverage
    };

    /// Pattern copies are only consulted by greedy_coverage; pass an empty span otherwise.
    auto backtrack_order(const Graph & g, EdgeOrder order, std::span<const Copy> copies = {}) -> std::vector<int>;

    struct ColouringCount
    {
        std::uint64_t visited = 0;
        bool complete = true;
    };

    /// Visits every proper colouring of g once per colour-renaming class, each
    /// presented in normal form. The search assigns edges in `order`. Stops
    /// early (complete = false) when the visitor returns false or after
    /// `node_budget` search nodes.
    auto enumerate_proper_colourings(const Graph & g, const std::function<bool(const EdgeColouring &)> & visit,
        std::uint64_t node_budget = 100'000'000, EdgeOrder order = EdgeOrder::lexicographic) -> ColouringCount;

    /// {"edges": [[u,v],...], "colours": [...]} in edge-list order.
    auto certificate_to_json(const Graph & g, const EdgeColouring & colouring) -> nlohmann::ordered_json;

    /// Returns the graph spanned by the listed edges on `order` vertices (or the
    /// smallest order that fits when order < 0) and the colouring realigned to its edge list.
    auto certificate_from_json(const nlohmann::json & j, int order = -1) -> std::pair<Graph, EdgeColouring>;
}
