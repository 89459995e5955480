#pragma once

#include <prs/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace prs
{
    inline constexpr std::size_t default_copy_cap = 1'000'000;

    /// One (not necessarily induced) copy of a pattern inside a host.
    struct Copy
    {
        /// Indexed by pattern vertex. Isolated pattern vertices take the lowest spare host vertices.
        std::vector<int> vertex_map;
        /// Sorted host edge indices covered by the copy.
        std::vector<int> edge_set;

        auto operator==(const Copy &) const -> bool = default;
    };

    /// Called with a map from stripped-pattern vertex to host vertex; return false to stop.
    using EmbeddingVisitor = std::function<bool(std::span<const int>)>;

    /// Every injective edge-preserving map of strip_isolated(pattern) into host,
    /// provided the host has room for the pattern's isolated vertices. When
    /// `through` is set, only maps whose image uses that host edge are visited.
    /// Returns false if the visitor stopped the search.
    auto for_each_embedding(const Graph & host, const Graph & pattern, const EmbeddingVisitor & visit,
        std::optional<Edge> through = std::nullopt) -> bool;

    /// All copies, deduplicated by host edge set and sorted by it. Throws
    /// BudgetError once more than `cap` distinct copies exist.
    auto subgraph_copies(const Graph & host, const Graph & pattern, std::size_t cap = default_copy_cap) -> std::vector<Copy>;

    /// With ignore_isolated, both graphs are stripped of isolated vertices first.
    auto contains_subgraph(const Graph & host, const Graph & pattern, bool ignore_isolated = false) -> bool;

    /// Does host contain a copy of pattern whose edge set includes `e`?
    auto contains_subgraph_through(const Graph & host, const Graph & pattern, Edge e) -> bool;
    auto find_copy_through(const Graph & host, const Graph & pattern, Edge e) -> std::optional<Copy>;
    auto find_copy(const Graph & host, const Graph & pattern) -> std::optional<Copy>;

    /// Builds the Copy record for a stripped-pattern embedding.
    auto make_copy(const Graph & host, const Graph & pattern, std::span<const int> stripped_map) -> Copy;
}
