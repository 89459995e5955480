#include <prs/errors.hpp>
#include <prs/saturation.hpp>

#include <atomic>
#include <limits>

#include <omp.h>

namespace prs
{
    auto to_string(SaturationKind kind) -> std::string
    {
        switch (kind) {
        case SaturationKind::prsat: return "prsat";
        case SaturationKind::sat: return "sat";
        case SaturationKind::ssat: return "ssat";
        case SaturationKind::wsat: return "wsat";
        }
        return "?";
    }

    auto to_string(Holds holds) -> std::string
    {
        switch (holds) {
        case Holds::yes: return "yes";
        case Holds::no: return "no";
        case Holds::unknown: return "unknown";
        }
        return "unknown";
    }

    auto parse_saturation_kind(std::string_view text) -> SaturationKind
    {
        if (text == "prsat")
            return SaturationKind::prsat;
        if (text == "sat")
            return SaturationKind::sat;
        if (text == "ssat")
            return SaturationKind::ssat;
        if (text == "wsat")
            return SaturationKind::wsat;
        throw PreconditionError("unknown saturation kind '" + std::string(text) + "'");
    }

    namespace
    {
        auto serial_budget(const Budget & budget) -> Budget
        {
            Budget b = budget;
            b.threads = 1;
            return b;
        }

        /// Decides condition (1). Returns false if the report is already settled as "no".
        auto check_base(SaturationReport & report, const Graph & g, const Graph & h, const Budget & budget,
            const std::optional<EdgeColouring> & base_certificate) -> bool
        {
            if (base_certificate) {
                if (! is_proper(g, *base_certificate))
                    throw PreconditionError("supplied base colouring is not proper");
                if (has_rainbow(g, *base_certificate, h))
                    throw PreconditionError("supplied base colouring contains a rainbow copy of the pattern");
                report.base_certificate = normalized(*base_certificate);
                return true;
            }
            auto v = find_rainbow_free_colouring(g, h, budget);
            report.base_verdict = v;
            if (v.status == MembershipStatus::member) {
                report.holds = Holds::no;
                report.failed = FailedCondition::base;
                report.reason = "every proper colouring of G already contains a rainbow copy";
                return false;
            }
            if (v.status == MembershipStatus::non_member)
                report.base_certificate = v.certificate;
            return true;
        }

        void settle(SaturationReport & report, bool unknown_seen)
        {
            if (report.holds == Holds::no)
                return;
            if (unknown_seen || (report.kind == SaturationKind::prsat && ! report.base_certificate)) {
                report.holds = Holds::unknown;
                if (report.reason.empty())
                    report.reason = "some membership decision ran out of budget";
            }
            else
                report.holds = Holds::yes;
        }

        void record_failure(SaturationReport & report, Edge e, const std::string & why)
        {
            report.holds = Holds::no;
            report.failed = FailedCondition::non_edge;
            report.failure_witness = e;
            report.reason = why;
        }
    }

    auto is_properly_rainbow_saturated_serial(const Graph & g, const Graph & h, const SaturationOptions & options,
        const std::optional<EdgeColouring> & base_certificate) -> SaturationReport
    {
        SaturationReport report;
        report.kind = SaturationKind::prsat;
        Budget budget = serial_budget(options.budget);
        if (! check_base(report, g, h, budget, base_certificate))
            return report;

        bool unknown_seen = false;
        for (auto e : g.non_edges()) {
            auto v = find_rainbow_free_colouring_serial(add_edge(g, e.u, e.v), h, budget);
            NonEdgeEvidence evidence{e, v, std::nullopt, v.status == MembershipStatus::member};
            report.per_nonedge.push_back(evidence);
            if (v.status == MembershipStatus::unknown)
                unknown_seen = true;
            else if (v.status == MembershipStatus::non_member && report.holds != Holds::no) {
                record_failure(report, e, "G + e admits a rainbow-free proper colouring");
                if (options.short_circuit)
                    return report;
            }
        }
        settle(report, unknown_seen);
        return report;
    }

    auto is_properly_rainbow_saturated(const Graph & g, const Graph & h, const SaturationOptions & options,
        const std::optional<EdgeColouring> & base_certificate) -> SaturationReport
    {
        if (options.budget.threads <= 1)
            return is_properly_rainbow_saturated_serial(g, h, options, base_certificate);

        SaturationReport report;
        report.kind = SaturationKind::prsat;
        if (! check_base(report, g, h, options.budget, base_certificate))
            return report;

        Budget budget = serial_budget(options.budget);
        auto non_edges = g.non_edges();
        long count = static_cast<long>(non_edges.size());
        std::vector<std::optional<MembershipVerdict>> verdicts(count);
        std::atomic<long> first_failure{std::numeric_limits<long>::max()};

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.budget.threads)
        for (long i = 0; i < count; ++i) {
            if (options.short_circuit && first_failure.load() < i)
                continue;
            auto e = non_edges[i];
            verdicts[i] = find_rainbow_free_colouring_serial(add_edge(g, e.u, e.v), h, budget);
            if (verdicts[i]->status == MembershipStatus::non_member) {
                long seen = first_failure.load();
                while (i < seen && ! first_failure.compare_exchange_weak(seen, i)) {
                }
            }
        }

        bool unknown_seen = false;
        for (long i = 0; i < count; ++i) {
            const auto & v = *verdicts[i];
            report.per_nonedge.push_back({non_edges[i], v, std::nullopt, v.status == MembershipStatus::member});
            if (v.status == MembershipStatus::unknown)
                unknown_seen = true;
            else if (v.status == MembershipStatus::non_member && report.holds != Holds::no) {
                record_failure(report, non_edges[i], "G + e admits a rainbow-free proper colouring");
                if (options.short_circuit)
                    return report;
            }
        }
        settle(report, unknown_seen);
        return report;
    }

    auto is_classically_saturated(const Graph & g, const Graph & h) -> SaturationReport
    {
        return is_family_saturated(g, std::span<const Graph>(&h, 1));
    }

    auto is_family_saturated(const Graph & g, std::span<const Graph> family) -> SaturationReport
    {
        SaturationReport report;
        report.kind = SaturationKind::sat;
        for (const auto & h : family)
            if (auto copy = find_copy(g, h)) {
                report.holds = Holds::no;
                report.failed = FailedCondition::base;
                report.base_copy = copy;
                report.reason = "G already contains the pattern";
                return report;
            }

        for (auto e : g.non_edges()) {
            Graph plus = add_edge(g, e.u, e.v);
            std::optional<Copy> copy;
            for (const auto & h : family)
                if ((copy = find_copy(plus, h)))
                    break;
            report.per_nonedge.push_back({e, std::nullopt, copy, copy.has_value()});
            if (! copy) {
                record_failure(report, e, "adding e creates no copy");
                return report;
            }
        }
        report.holds = Holds::yes;
        return report;
    }

    auto is_semi_saturated(const Graph & g, const Graph & h) -> SaturationReport
    {
        SaturationReport report;
        report.kind = SaturationKind::ssat;
        for (auto e : g.non_edges()) {
            auto copy = find_copy_through(add_edge(g, e.u, e.v), h, e);
            report.per_nonedge.push_back({e, std::nullopt, copy, copy.has_value()});
            if (! copy) {
                record_failure(report, e, "no copy of the pattern uses e");
                return report;
            }
        }
        report.holds = Holds::yes;
        return report;
    }

    auto is_weakly_saturated(const Graph & g, const Graph & h) -> SaturationReport
    {
        SaturationReport report;
        report.kind = SaturationKind::wsat;
        if (auto copy = find_copy(g, h)) {
            report.holds = Holds::no;
            report.failed = FailedCondition::base;
            report.base_copy = copy;
            report.reason = "G already contains the pattern";
            return report;
        }

        Graph current = g;
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto e : current.non_edges()) {
                Graph plus = add_edge(current, e.u, e.v);
                if (auto copy = find_copy_through(plus, h, e)) {
                    report.per_nonedge.push_back({e, std::nullopt, copy, true});
                    current = std::move(plus);
                    grew = true;
                }
            }
        }

        auto left = current.non_edges();
        if (! left.empty()) {
            record_failure(report, left.front(), "greedy closure stalls before the complete graph");
            return report;
        }
        report.holds = Holds::yes;
        return report;
    }

    auto check_saturation(SaturationKind kind, const Graph & g, const Graph & h, const SaturationOptions & options)
        -> SaturationReport
    {
        switch (kind) {
        case SaturationKind::prsat: return is_properly_rainbow_saturated(g, h, options);
        case SaturationKind::sat: return is_classically_saturated(g, h);
        case SaturationKind::ssat: return is_semi_saturated(g, h);
        case SaturationKind::wsat: return is_weakly_saturated(g, h);
        }
        throw PreconditionError("unknown saturation kind");
    }
}
