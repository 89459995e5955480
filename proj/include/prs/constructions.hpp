#pragma once

#include <prs/colouring.hpp>
#include <prs/graph.hpp>
#include <prs/membership.hpp>
#include <prs/saturation.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace prs
{
    enum class ConstructionId
    {
        /// K_2 + ((k-1) K_4 u K_m) on n vertices, k = ceil((n-2)/4), m = n - 4k + 2.
        /// Vertices 0, 1 are the joined pair; block i (from 0) is 2 + 4i .. 5 + 4i; the K_m block comes last.
        k4_saturated,
        /// K_3 + (K_3 u K_1): 0..2 the joined triangle, 3..5 the other triangle, 6 the lone vertex.
        k4_forcing,
        /// Clique X = 0..l-1 (l = ceil(k/2)) joined to an independent Y = l..l+y_size-1, minus the
        /// edges from vertex 1 to all of Y except its first z vertices.
        cycle_witness,
        /// K_{k,|B|} with |B| = k(k-1)(l-1) + l; part A is 0..k-1.
        bipartite_witness,
        /// K_l u empty(n - l) with l = 2 ceil(k/2) + 2; the clique is 0..l-1.
        star_union_k2,
        /// K_6 u empty(n - 6).
        k3_union_k2,
        /// Clique X = 0..m-1, and y_{i,j} = m + i(m-1) + (j-1) joined to x_i for j = 1..m-1,
        /// plus n - m^2 isolated vertices.
        matching_mk2
    };

    auto to_string(ConstructionId id) -> std::string;
    auto parse_construction_id(std::string_view text) -> ConstructionId;

    struct ConstructionSpec
    {
        ConstructionId id = ConstructionId::k4_saturated;
        /// every parameter, defaults included
        std::map<std::string, std::int64_t> params;
        std::int64_t expected_edges = 0;
        /// the pattern H the construction concerns
        Graph target;
        /// cycle_witness with y_size below 5 ceil(k/2)
        bool off_spec = false;
    };

    /// Validates parameters, fills defaults, and evaluates the closed-form edge count.
    /// Parameters: k4_saturated {n}; k4_forcing {}; cycle_witness {k, y_size};
    /// bipartite_witness {k, l}; star_union_k2 {k, n}; k3_union_k2 {n}; matching_mk2 {m, n}.
    auto make_spec(ConstructionId id, const std::map<std::string, std::int64_t> & params = {}) -> ConstructionSpec;

    /// Reads "key=value" lines ('#' starts a comment); the key "id" names the construction.
    auto parse_spec_config(std::string_view text) -> ConstructionSpec;

    /// Throws std::logic_error if the built graph's edge count differs from expected_edges.
    auto build(const ConstructionSpec & spec) -> Graph;

    /// The explicit rainbow-free proper colouring, for k4_saturated, star_union_k2,
    /// k3_union_k2 and matching_mk2; none otherwise. Normalised to restricted-growth form.
    auto canonical_colouring(const ConstructionSpec & spec) -> std::optional<EdgeColouring>;

    struct ConstructionCheck
    {
        ConstructionSpec spec;
        Graph graph;
        /// yes: saturated (saturated ids) or member (forcing ids)
        Holds holds = Holds::unknown;
        SearchMode mode = SearchMode::exact;
        /// saturated ids
        std::optional<SaturationReport> saturation;
        /// forcing ids
        std::optional<MembershipVerdict> membership;
        std::string note;
    };

    struct VerifyOptions
    {
        Budget budget;
        /// forcing graphs with more edges than this skip the exact search and are only sampled
        int exact_edge_limit = 40;
        std::uint64_t trials = 200;
        std::uint64_t seed = 1;
    };

    /// Saturated ids: the saturation check seeded with canonical_colouring.
    /// Forcing ids: exact membership when small enough, otherwise (or when the
    /// search runs out of budget) sampled evidence, which can refute but never confirm.
    auto verify(const ConstructionSpec & spec, const VerifyOptions & options = {}) -> ConstructionCheck;

    auto is_forcing(ConstructionId id) -> bool;
}
