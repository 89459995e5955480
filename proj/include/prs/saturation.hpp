#pragma once

#include <prs/copies.hpp>
#include <prs/graph.hpp>
#include <prs/membership.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prs
{
    enum class SaturationKind
    {
        prsat,
        sat,
        ssat,
        wsat
    };

    enum class Holds
    {
        yes,
        no,
        unknown
    };

    auto to_string(SaturationKind kind) -> std::string;
    auto to_string(Holds holds) -> std::string;
    auto parse_saturation_kind(std::string_view text) -> SaturationKind;

    /// Evidence gathered for one non-edge e of G.
    struct NonEdgeEvidence
    {
        Edge edge;
        /// prsat: verdict for G + e
        std::optional<MembershipVerdict> verdict;
        /// sat / ssat / wsat: the copy created by adding e, when there is one
        std::optional<Copy> copy;
        bool satisfied = false;
    };

    enum class FailedCondition
    {
        none,
        /// prsat: G has no rainbow-free proper colouring; sat / wsat: G already contains H
        base,
        non_edge
    };

    struct SaturationReport
    {
        SaturationKind kind = SaturationKind::prsat;
        Holds holds = Holds::unknown;
        /// prsat: rainbow-free proper colouring of G itself
        std::optional<EdgeColouring> base_certificate;
        std::optional<MembershipVerdict> base_verdict;
        /// sat / wsat: a copy of H already in G
        std::optional<Copy> base_copy;
        /// In lexicographic non-edge order. wsat lists the edges in closure order.
        std::vector<NonEdgeEvidence> per_nonedge;
        FailedCondition failed = FailedCondition::none;
        std::optional<Edge> failure_witness;
        std::string reason;
    };

    struct SaturationOptions
    {
        Budget budget;
        /// stop at the first failing non-edge
        bool short_circuit = true;
    };

    /// G admits a rainbow-H-free proper colouring, and G + e is in F*(H) for every non-edge e.
    ///
    /// A supplied base certificate is checked and used in place of a search.
    /// With budget.threads > 1 the non-edges are decided concurrently (each
    /// decision single-threaded); the report is identical to the serial one.
    auto is_properly_rainbow_saturated(const Graph & g, const Graph & h, const SaturationOptions & options = {},
        const std::optional<EdgeColouring> & base_certificate = std::nullopt) -> SaturationReport;

    auto is_properly_rainbow_saturated_serial(const Graph & g, const Graph & h, const SaturationOptions & options = {},
        const std::optional<EdgeColouring> & base_certificate = std::nullopt) -> SaturationReport;

    /// G is H-free and G + e contains H for every non-edge e.
    auto is_classically_saturated(const Graph & g, const Graph & h) -> SaturationReport;

    /// Family version: G contains no member, and every G + e contains some member.
    auto is_family_saturated(const Graph & g, std::span<const Graph> family) -> SaturationReport;

    /// Every non-edge e lies in some copy of H in G + e. G may contain H.
    auto is_semi_saturated(const Graph & g, const Graph & h) -> SaturationReport;

    /// G is H-free and the greedy closure (add any non-edge lying in a copy of
    /// H through it, until none is left) reaches the complete graph. Adding
    /// edges never destroys copies, so the order of additions is immaterial.
    auto is_weakly_saturated(const Graph & g, const Graph & h) -> SaturationReport;

    /// Dispatch on kind; only prsat consumes the budget.
    auto check_saturation(SaturationKind kind, const Graph & g, const Graph & h, const SaturationOptions & options = {})
        -> SaturationReport;
}
