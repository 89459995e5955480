#include <prs/constructions.hpp>
#include <prs/errors.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace prs
{
    namespace
    {
        auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t
        {
            return (a + b - 1) / b;
        }

        auto choose2(std::int64_t x) -> std::int64_t
        {
            return x * (x - 1) / 2;
        }

        /// Colour of edge ab in the round-robin 1-factorisation of K_l, l even.
        auto round_robin(int a, int b, int l) -> int
        {
            int r = l - 1;
            if (a > b)
                std::swap(a, b);
            if (b == r)
                return (2 * a) % r;
            return (a + b) % r;
        }

        auto cycle_z(std::int64_t k) -> std::int64_t
        {
            if (k == 8)
                return 5;
            return k % 2 == 1 ? 1 : 2;
        }

        void require(bool ok, const std::string & message)
        {
            if (! ok)
                throw PreconditionError(message);
        }

        auto get(const ConstructionSpec & spec, const std::string & key) -> int
        {
            return static_cast<int>(spec.params.at(key));
        }

        auto matching(int m) -> Graph
        {
            Graph g = empty_graph(0);
            for (int i = 0; i < m; ++i)
                g = disjoint_union(g, complete_graph(2));
            return g;
        }

        void check_total(std::int64_t vertices, const std::string & what)
        {
            if (vertices > max_vertices)
                throw CapacityError(what + " would have " + std::to_string(vertices) + " vertices, more than "
                    + std::to_string(max_vertices));
        }
    }

    auto to_string(ConstructionId id) -> std::string
    {
        switch (id) {
        case ConstructionId::k4_saturated: return "k4_saturated";
        case ConstructionId::k4_forcing: return "k4_forcing";
        case ConstructionId::cycle_witness: return "cycle_witness";
        case ConstructionId::bipartite_witness: return "bipartite_witness";
        case ConstructionId::star_union_k2: return "star_union_k2";
        case ConstructionId::k3_union_k2: return "k3_union_k2";
        case ConstructionId::matching_mk2: return "matching_mk2";
        }
        return "?";
    }

    auto parse_construction_id(std::string_view text) -> ConstructionId
    {
        for (auto id : {ConstructionId::k4_saturated, ConstructionId::k4_forcing, ConstructionId::cycle_witness,
                 ConstructionId::bipartite_witness, ConstructionId::star_union_k2, ConstructionId::k3_union_k2,
                 ConstructionId::matching_mk2})
            if (to_string(id) == text)
                return id;
        throw PreconditionError("unknown construction '" + std::string(text) + "'");
    }

    auto is_forcing(ConstructionId id) -> bool
    {
        return id == ConstructionId::k4_forcing || id == ConstructionId::cycle_witness || id == ConstructionId::bipartite_witness;
    }

    auto make_spec(ConstructionId id, const std::map<std::string, std::int64_t> & params) -> ConstructionSpec
    {
        ConstructionSpec spec;
        spec.id = id;
        auto name = to_string(id);

        std::set<std::string> allowed;
        switch (id) {
        case ConstructionId::k4_saturated: allowed = {"n"}; break;
        case ConstructionId::k4_forcing: break;
        case ConstructionId::cycle_witness: allowed = {"k", "y_size"}; break;
        case ConstructionId::bipartite_witness: allowed = {"k", "l"}; break;
        case ConstructionId::star_union_k2: allowed = {"k", "n"}; break;
        case ConstructionId::k3_union_k2: allowed = {"n"}; break;
        case ConstructionId::matching_mk2: allowed = {"m", "n"}; break;
        }
        for (auto & [key, value] : params)
            require(allowed.contains(key), name + " takes no parameter '" + key + "'");

        auto param = [&](const std::string & key, std::optional<std::int64_t> fallback) -> std::int64_t {
            auto it = params.find(key);
            if (it != params.end())
                return spec.params[key] = it->second;
            require(fallback.has_value(), name + " needs parameter '" + key + "'");
            return spec.params[key] = *fallback;
        };

        switch (id) {
        case ConstructionId::k4_saturated: {
            auto n = param("n", 6);
            require(n >= 6, "k4_saturated needs n >= 6");
            check_total(n, name);
            auto k = ceil_div(n - 2, 4);
            spec.expected_edges = (7 * n + (n - 4 * k) * (n - 4 * k) - 16) / 2;
            spec.target = complete_graph(4);
            break;
        }
        case ConstructionId::k4_forcing:
            spec.expected_edges = 3 + 3 + 3 * 4;
            spec.target = complete_graph(4);
            break;
        case ConstructionId::cycle_witness: {
            auto k = param("k", std::nullopt);
            require(k >= 7, "cycle_witness needs k >= 7");
            check_total(k, name);
            auto l = ceil_div(k, 2);
            auto y = param("y_size", 5 * l);
            auto z = cycle_z(k);
            require(y >= z, "cycle_witness needs y_size >= z = " + std::to_string(z));
            check_total(l + y, name);
            spec.off_spec = y < 5 * l;
            spec.expected_edges = choose2(l) + (l - 1) * y + z;
            spec.target = cycle_graph(static_cast<int>(k));
            break;
        }
        case ConstructionId::bipartite_witness: {
            auto k = param("k", std::nullopt);
            auto l = param("l", std::nullopt);
            require(l >= k && k >= 2, "bipartite_witness needs l >= k >= 2");
            check_total(k + l, name);
            auto b = k * (k - 1) * (l - 1) + l;
            check_total(k + b, name);
            spec.expected_edges = k * b;
            spec.target = complete_bipartite_graph(static_cast<int>(k), static_cast<int>(l));
            break;
        }
        case ConstructionId::star_union_k2: {
            auto k = param("k", std::nullopt);
            require(k >= 1, "star_union_k2 needs k >= 1");
            check_total(k + 3, name);
            auto l = 2 * ceil_div(k, 2) + 2;
            auto n = param("n", l);
            require(n >= l, "star_union_k2 needs n >= 2 ceil(k/2) + 2 = " + std::to_string(l));
            check_total(n, name);
            spec.expected_edges = choose2(l);
            spec.target = disjoint_union(star_graph(static_cast<int>(k)), complete_graph(2));
            break;
        }
        case ConstructionId::k3_union_k2: {
            auto n = param("n", 6);
            require(n >= 6, "k3_union_k2 needs n >= 6");
            check_total(n, name);
            spec.expected_edges = 15;
            spec.target = disjoint_union(complete_graph(3), complete_graph(2));
            break;
        }
        case ConstructionId::matching_mk2: {
            auto m = param("m", std::nullopt);
            require(m >= 3, "matching_mk2 needs m >= 3");
            check_total(m, name);
            auto n = param("n", m * m);
            require(n >= m * m, "matching_mk2 needs n >= m^2 = " + std::to_string(m * m));
            check_total(n, name);
            spec.expected_edges = 3 * choose2(m);
            spec.target = matching(static_cast<int>(m));
            break;
        }
        }
        return spec;
    }

    auto parse_spec_config(std::string_view text) -> ConstructionSpec
    {
        std::optional<ConstructionId> id;
        std::map<std::string, std::int64_t> params;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            line = trim(line);
            if (line.empty())
                continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw PreconditionError("expected key=value, got '" + line + "'");
            auto key = trim(line.substr(0, eq));
            auto value = trim(line.substr(eq + 1));
            if (key == "id")
                id = parse_construction_id(value);
            else {
                try {
                    std::size_t used = 0;
                    params[key] = std::stoll(value, &used);
                    if (used != value.size())
                        throw std::invalid_argument(value);
                }
                catch (const std::logic_error &) {
                    throw PreconditionError("parameter '" + key + "' needs an integer, got '" + value + "'");
                }
            }
        }
        if (! id)
            throw PreconditionError("construction config has no id line");
        return make_spec(*id, params);
    }

    auto build(const ConstructionSpec & spec) -> Graph
    {
        Graph g;
        switch (spec.id) {
        case ConstructionId::k4_saturated: {
            int n = get(spec, "n");
            int k = static_cast<int>(ceil_div(n - 2, 4));
            int m = n - 4 * k + 2;
            Graph rest = empty_graph(0);
            for (int i = 0; i < k - 1; ++i)
                rest = disjoint_union(rest, complete_graph(4));
            rest = disjoint_union(rest, complete_graph(m));
            g = join(complete_graph(2), rest);
            break;
        }
        case ConstructionId::k4_forcing:
            g = join(complete_graph(3), disjoint_union(complete_graph(3), empty_graph(1)));
            break;
        case ConstructionId::cycle_witness: {
            int k = get(spec, "k"), y = get(spec, "y_size");
            int l = static_cast<int>(ceil_div(k, 2));
            int z = static_cast<int>(cycle_z(k));
            g = join(complete_graph(l), empty_graph(y));
            for (int j = z; j < y; ++j)
                g = delete_edge(g, 1, l + j);
            break;
        }
        case ConstructionId::bipartite_witness: {
            int k = get(spec, "k"), l = get(spec, "l");
            g = complete_bipartite_graph(k, k * (k - 1) * (l - 1) + l);
            break;
        }
        case ConstructionId::star_union_k2: {
            int k = get(spec, "k"), n = get(spec, "n");
            int l = 2 * static_cast<int>(ceil_div(k, 2)) + 2;
            g = disjoint_union(complete_graph(l), empty_graph(n - l));
            break;
        }
        case ConstructionId::k3_union_k2:
            g = disjoint_union(complete_graph(6), empty_graph(get(spec, "n") - 6));
            break;
        case ConstructionId::matching_mk2: {
            int m = get(spec, "m"), n = get(spec, "n");
            std::vector<Edge> edges;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    edges.push_back({a, b});
            for (int i = 0; i < m; ++i)
                for (int j = 1; j < m; ++j)
                    edges.push_back({i, m + i * (m - 1) + (j - 1)});
            g = Graph(n, edges);
            break;
        }
        }
        if (g.size() != spec.expected_edges)
            throw std::logic_error(to_string(spec.id) + ": built " + std::to_string(g.size()) + " edges, closed form says "
                + std::to_string(spec.expected_edges));
        return g;
    }

    auto canonical_colouring(const ConstructionSpec & spec) -> std::optional<EdgeColouring>
    {
        Graph g = build(spec);
        EdgeColouring phi;
        phi.colours.assign(g.size(), -1);

        switch (spec.id) {
        case ConstructionId::k4_saturated: {
            // block i sits with the pair {0, 1} inside a K_6, coloured by the round-robin
            // factorisation; the factor through 01 becomes colour 0, the rest get
            // block-private colours 5i + 1 .. 5i + 4
            auto local = [](int v, int block) { return v < 2 ? v : v - 2 - 4 * block + 2; };
            auto block_of = [](int v) { return (v - 2) / 4; };
            int through = round_robin(0, 1, 6);
            for (int e = 0; e < g.size(); ++e) {
                auto [a, b] = g.edge(e);
                if (a == 0 && b == 1) {
                    phi.colours[e] = 0;
                    continue;
                }
                int block = block_of(b);
                int f = round_robin(local(a, block), local(b, block), 6);
                int rank = f < through ? f + 1 : f;
                phi.colours[e] = f == through ? 0 : 5 * block + rank;
            }
            break;
        }
        case ConstructionId::star_union_k2:
        case ConstructionId::k3_union_k2: {
            int l = spec.id == ConstructionId::k3_union_k2 ? 6 : 2 * static_cast<int>(ceil_div(get(spec, "k"), 2)) + 2;
            for (int e = 0; e < g.size(); ++e) {
                auto [a, b] = g.edge(e);
                phi.colours[e] = round_robin(a, b, l);
            }
            break;
        }
        case ConstructionId::matching_mk2: {
            int m = get(spec, "m");
            int fresh = m - 1;
            for (int e = 0; e < g.size(); ++e) {
                auto [a, b] = g.edge(e);
                if (b < m)
                    phi.colours[e] = fresh++;
                else
                    phi.colours[e] = (b - m) % (m - 1);
            }
            break;
        }
        default: return std::nullopt;
        }

        phi = normalized(phi);
        if (! is_proper(g, phi) || has_rainbow(g, phi, spec.target))
            throw std::logic_error(to_string(spec.id) + ": explicit colouring is not rainbow-free and proper");
        return phi;
    }

    auto verify(const ConstructionSpec & spec, const VerifyOptions & options) -> ConstructionCheck
    {
        ConstructionCheck check;
        check.spec = spec;
        check.graph = build(spec);
        if (spec.off_spec)
            check.note = "y_size below 5 ceil(k/2): off-spec instance";

        if (! is_forcing(spec.id)) {
            SaturationOptions sat;
            sat.budget = options.budget;
            auto report = is_properly_rainbow_saturated(check.graph, spec.target, sat, canonical_colouring(spec));
            check.holds = report.holds;
            check.saturation = std::move(report);
            return check;
        }

        std::optional<MembershipVerdict> verdict;
        if (check.graph.size() <= options.exact_edge_limit) {
            verdict = find_rainbow_free_colouring(check.graph, spec.target, options.budget);
            if (verdict->status == MembershipStatus::unknown) {
                auto exact_reason = verdict->reason;
                verdict = sample_membership(check.graph, spec.target, options.trials, options.seed);
                if (! check.note.empty())
                    check.note += "; ";
                check.note += "exact search undecided (" + exact_reason + "), sampled instead";
            }
        }
        else
            verdict = sample_membership(check.graph, spec.target, options.trials, options.seed);

        check.mode = verdict->mode;
        switch (verdict->status) {
        case MembershipStatus::member: check.holds = Holds::yes; break;
        case MembershipStatus::non_member: check.holds = Holds::no; break;
        case MembershipStatus::unknown: check.holds = Holds::unknown; break;
        }
        check.membership = std::move(verdict);
        return check;
    }
}
