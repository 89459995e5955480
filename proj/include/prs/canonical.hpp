#pragma once

#include <prs/graph.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace prs
{
    /// graph6 string of the canonical isomorph-class representative.
    struct CanonicalForm
    {
        std::string bytes;

        auto operator<=>(const CanonicalForm &) const = default;
    };

    /// `perm[v]` is the canonical label of vertex v.
    ///
    /// Individualisation-refinement: equitable partition refinement, then
    /// branching on the first non-singleton cell, skipping vertices that are
    /// twins of an already-tried vertex. The leaf whose relabelled upper
    /// triangle (in graph6 bit order) is largest wins.
    auto canonical_labelling(const Graph & g) -> std::vector<int>;

    auto canonical_graph(const Graph & g) -> Graph;
    auto canonical_form(const Graph & g) -> CanonicalForm;
    auto isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Packed canonical upper triangle for n <= 11 (C(11,2) = 55 bits), first
    /// graph6 bit in the most significant position. Used on hot enumeration paths.
    auto canonical_key(int n, std::span<const Row> rows) -> std::uint64_t;

    auto graph_from_key(int n, std::uint64_t key) -> Graph;

    /// Packs the labelled upper triangle of `rows` as canonical_key does, without relabelling.
    auto labelled_key(int n, std::span<const Row> rows) -> std::uint64_t;
}
