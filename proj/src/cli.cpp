#include <prs/cache.hpp>
#include <prs/canonical.hpp>
#include <prs/cli.hpp>
#include <prs/constructions.hpp>
#include <prs/errors.hpp>
#include <prs/extremal.hpp>
#include <prs/frontier.hpp>
#include <prs/membership.hpp>
#include <prs/named_graph.hpp>
#include <prs/paper_suite.hpp>
#include <prs/saturation.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#ifndef PRSAT_VERSION
#define PRSAT_VERSION "0.0.0"
#endif

using nlohmann::ordered_json;

namespace prs
{
    auto tool_version() -> std::string
    {
        return PRSAT_VERSION;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct Settings
        {
            std::uint64_t nodes = 100'000'000;
            double secs = 3600.0;
            std::optional<std::uint64_t> trials;
            std::uint64_t seed = 1;
            int threads = 1;
            std::string cache;
            bool json = false;
        };

        /// Values given on the command line, before defaults are applied.
        struct Flags
        {
            std::uint64_t nodes = 0;
            double secs = 0;
            std::uint64_t trials = 0;
            std::uint64_t seed = 0;
            int threads = 0;
            std::string cache;
            std::string config;
            bool json = false;
            CLI::Option * nodes_opt = nullptr;
            CLI::Option * secs_opt = nullptr;
            CLI::Option * trials_opt = nullptr;
            CLI::Option * seed_opt = nullptr;
            CLI::Option * threads_opt = nullptr;
            CLI::Option * cache_opt = nullptr;
        };

        class UsageError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream in(path);
            if (! in)
                throw UsageError("cannot read '" + path + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto trim(std::string s) -> std::string
        {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        }

        /// Precedence, lowest first: built-in defaults, the cache environment
        /// variable, the config file, command-line flags.
        auto resolve(const Flags & flags) -> Settings
        {
            Settings s;
            if (const char * env = std::getenv(cache_environment_variable))
                s.cache = env;

            if (! flags.config.empty()) {
                std::istringstream in(read_file(flags.config));
                std::string line;
                int number = 0;
                while (std::getline(in, line)) {
                    ++number;
                    if (auto hash = line.find('#'); hash != std::string::npos)
                        line.erase(hash);
                    line = trim(line);
                    if (line.empty())
                        continue;
                    auto eq = line.find('=');
                    if (eq == std::string::npos)
                        throw UsageError(flags.config + ":" + std::to_string(number) + ": expected key=value");
                    auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
                    try {
                        if (key == "budget_nodes")
                            s.nodes = std::stoull(value);
                        else if (key == "budget_secs")
                            s.secs = std::stod(value);
                        else if (key == "trials")
                            s.trials = std::stoull(value);
                        else if (key == "seed")
                            s.seed = std::stoull(value);
                        else if (key == "threads")
                            s.threads = std::stoi(value);
                        else if (key == "cache")
                            s.cache = value;
                        else
                            throw UsageError(flags.config + ":" + std::to_string(number) + ": unknown key '" + key + "'");
                    }
                    catch (const std::logic_error &) {
                        throw UsageError(flags.config + ":" + std::to_string(number) + ": bad value for '" + key + "'");
                    }
                }
            }

            if (flags.nodes_opt->count())
                s.nodes = flags.nodes;
            if (flags.secs_opt->count())
                s.secs = flags.secs;
            if (flags.trials_opt->count())
                s.trials = flags.trials;
            if (flags.seed_opt->count())
                s.seed = flags.seed;
            if (flags.threads_opt->count())
                s.threads = flags.threads;
            if (flags.cache_opt->count())
                s.cache = flags.cache;
            s.json = flags.json;
            if (s.threads < 1)
                throw UsageError("--threads must be at least 1");
            return s;
        }

        auto budget_of(const Settings & s) -> Budget
        {
            Budget b;
            b.nodes = s.nodes;
            b.seconds = s.secs;
            b.threads = s.threads;
            return b;
        }

        auto edge_json(Edge e) -> ordered_json
        {
            return ordered_json::array({e.u, e.v});
        }

        auto copy_json(const Copy & c) -> ordered_json
        {
            ordered_json j;
            j["vertex_map"] = c.vertex_map;
            j["edge_set"] = c.edge_set;
            return j;
        }

        auto stats_json(const SearchStats & s) -> ordered_json
        {
            ordered_json j;
            j["nodes"] = s.nodes;
            j["elapsed_ms"] = s.elapsed_ms;
            j["trials"] = s.trials;
            return j;
        }

        auto verdict_json(const MembershipVerdict & v) -> ordered_json
        {
            ordered_json j;
            j["status"] = to_string(v.status);
            j["mode"] = to_string(v.mode);
            j["stats"] = stats_json(v.stats);
            if (! v.reason.empty())
                j["reason"] = v.reason;
            return j;
        }

        auto saturation_json(const Graph & g, const SaturationReport & r) -> ordered_json
        {
            ordered_json j;
            j["kind"] = to_string(r.kind);
            j["holds"] = to_string(r.holds);
            j["failed"] = r.failed == FailedCondition::none ? "none" : r.failed == FailedCondition::base ? "base" : "non_edge";
            if (r.failure_witness)
                j["failure_witness"] = edge_json(*r.failure_witness);
            if (r.base_certificate)
                j["base_certificate"] = certificate_to_json(g, *r.base_certificate);
            if (r.base_copy)
                j["base_copy"] = copy_json(*r.base_copy);
            ordered_json per = ordered_json::array();
            for (auto & ev : r.per_nonedge) {
                ordered_json e;
                e["edge"] = edge_json(ev.edge);
                e["satisfied"] = ev.satisfied;
                if (ev.verdict)
                    e["verdict"] = verdict_json(*ev.verdict);
                if (ev.copy)
                    e["copy"] = copy_json(*ev.copy);
                per.push_back(std::move(e));
            }
            j["per_nonedge"] = std::move(per);
            if (! r.reason.empty())
                j["reason"] = r.reason;
            return j;
        }

        /// Assembles the report in the fixed field order.
        struct Report
        {
            std::string command;
            ordered_json inputs = ordered_json::object();
            std::string verdict;
            std::string mode = "exact";
            std::optional<ordered_json> certificate;
            std::optional<ordered_json> value;
            std::optional<ordered_json> witness;
            ordered_json details = ordered_json::object();

            auto to_json(const Settings & s, double elapsed_ms) const -> ordered_json
            {
                ordered_json j;
                j["command"] = command;
                j["inputs"] = inputs;
                j["verdict"] = verdict;
                j["mode"] = mode;
                if (certificate)
                    j["certificate"] = *certificate;
                if (value)
                    j["value"] = *value;
                if (witness)
                    j["witness"] = *witness;
                if (! details.empty())
                    j["details"] = details;
                ordered_json budget;
                budget["nodes"] = s.nodes;
                budget["secs"] = s.secs;
                budget["trials"] = s.trials.value_or(0);
                j["budget"] = budget;
                j["elapsed_ms"] = elapsed_ms;
                j["version"] = tool_version();
                return j;
            }
        };

        void print_text(std::ostream & out, const ordered_json & j)
        {
            for (auto & [key, value] : j.items()) {
                if (key == "details" || key == "certificate") {
                    out << key << ": " << value.dump() << '\n';
                    continue;
                }
                if (value.is_string())
                    out << key << ": " << value.get<std::string>() << '\n';
                else
                    out << key << ": " << value.dump() << '\n';
            }
        }

        auto parse_params(const std::vector<std::string> & items) -> std::map<std::string, std::int64_t>
        {
            std::map<std::string, std::int64_t> params;
            for (auto & item : items) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw UsageError("expected key=value, got '" + item + "'");
                auto key = item.substr(0, eq), value = item.substr(eq + 1);
                try {
                    std::size_t used = 0;
                    params[key] = std::stoll(value, &used);
                    if (used != value.size())
                        throw std::invalid_argument(value);
                }
                catch (const std::logic_error &) {
                    throw UsageError("parameter '" + key + "' needs an integer, got '" + value + "'");
                }
            }
            return params;
        }

        auto spec_from(const std::string & id, const std::vector<std::string> & items, const std::string & spec_file)
            -> ConstructionSpec
        {
            if (! spec_file.empty()) {
                if (! id.empty() || ! items.empty())
                    throw UsageError("give either a spec file or an id with parameters, not both");
                return parse_spec_config(read_file(spec_file));
            }
            if (id.empty())
                throw UsageError("construction id required");
            return make_spec(parse_construction_id(id), parse_params(items));
        }

        auto spec_json(const ConstructionSpec & spec) -> ordered_json
        {
            ordered_json j;
            j["id"] = to_string(spec.id);
            ordered_json params = ordered_json::object();
            for (auto & [k, v] : spec.params)
                params[k] = v;
            j["params"] = params;
            j["expected_edges"] = spec.expected_edges;
            j["target"] = canonical_form(spec.target).bytes;
            if (spec.off_spec)
                j["off_spec"] = true;
            return j;
        }

        auto holds_exit(Holds h) -> int
        {
            switch (h) {
            case Holds::yes: return exit_code::holds;
            case Holds::no: return exit_code::fails;
            case Holds::unknown: return exit_code::unknown;
            }
            return exit_code::unknown;
        }

        /// Membership decision with cache and optional sampling fallback.
        auto decide(const Graph & g, const Graph & h, const Settings & s, Report & report, bool need_certificate)
            -> MembershipVerdict
        {
            std::unique_ptr<VerdictCache> cache;
            if (! s.cache.empty())
                cache = std::make_unique<VerdictCache>(s.cache);

            if (cache) {
                if (auto hit = cache->lookup(g, h); hit && ! (need_certificate && hit->status == MembershipStatus::non_member)) {
                    MembershipVerdict v;
                    v.status = hit->status;
                    v.mode = hit->mode;
                    v.reason = "from cache";
                    report.details["cached"] = true;
                    return v;
                }
            }

            auto v = find_rainbow_free_colouring(g, h, budget_of(s));
            if (v.status == MembershipStatus::unknown && s.trials.value_or(0) > 0) {
                auto sampled = sample_membership(g, h, *s.trials, s.seed);
                sampled.reason = v.reason + "; " + sampled.reason;
                sampled.stats.nodes = v.stats.nodes;
                v = std::move(sampled);
            }
            if (cache) {
                cache->store(g, h, {v.status, v.mode});
                report.details["cached"] = false;
            }
            return v;
        }
    }

    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Proper rainbow saturation: exact decisions, saturation numbers and constructions"};
        app.name("prsat");
        app.set_version_flag("--version", tool_version());
        app.require_subcommand(1);
        app.fallthrough();

        Flags flags;
        flags.nodes_opt = app.add_option("--budget-nodes", flags.nodes, "search nodes per decision (default 1e8)");
        flags.secs_opt = app.add_option("--budget-secs", flags.secs, "seconds per decision (default 3600; 0 = no cap)");
        flags.trials_opt = app.add_option("--trials", flags.trials, "random colourings to sample when exact search is undecided");
        flags.seed_opt = app.add_option("--seed", flags.seed, "seed for sampling (default 1)");
        flags.threads_opt = app.add_option("--threads", flags.threads, "worker threads (default 1)");
        flags.cache_opt = app.add_option("--cache", flags.cache, "verdict cache file");
        app.add_option("--config", flags.config, "key=value file overriding default budgets");
        app.add_flag("--json", flags.json, "print the report as one JSON object");

        std::string g_text, h_text, kind_text, id, spec_file, profile_text = "quick";
        std::vector<std::string> params, rows;
        int n = 0, nmax = 8, max_order = 7, max_edges = 8, order_cap = 0;
        bool all_nonedges = false;
        std::string out_prefix;

        auto * member = app.add_subcommand("member", "is G in F*(H): does every proper colouring of G hold a rainbow H?");
        member->add_option("G", g_text)->required();
        member->add_option("H", h_text)->required();

        auto * colour = app.add_subcommand("colour", "find a proper colouring of G with no rainbow H");
        colour->add_option("G", g_text)->required();
        colour->add_option("H", h_text)->required();

        auto * saturated = app.add_subcommand("saturated", "is G saturated for H");
        saturated->add_option("G", g_text)->required();
        saturated->add_option("H", h_text)->required();
        saturated->add_option("--kind", kind_text, "prsat (default), sat, ssat or wsat");
        saturated->add_flag("--all", all_nonedges, "decide every non-edge instead of stopping at the first failure");

        auto * number = app.add_subcommand("number", "exact saturation number by exhaustive scan");
        number->add_option("KIND", kind_text, "prsat, sat, ssat or wsat")->required();
        number->add_option("N", n, "vertex count")->required();
        number->add_option("H", h_text)->required();
        number->add_option("--max-order", order_cap, "raise the vertex cap (default 7 for prsat, 8 otherwise)");

        auto * construct = app.add_subcommand("construct", "build a construction and print it as graph6");
        construct->add_option("ID", id);
        construct->add_option("PARAMS", params, "key=value parameters");
        construct->add_option("--spec-file", spec_file, "key=value file with an id line");

        auto * verify_cons = app.add_subcommand("verify-construction", "verify a construction's saturation or forcing claim");
        verify_cons->add_option("ID", id);
        verify_cons->add_option("PARAMS", params, "key=value parameters");
        verify_cons->add_option("--spec-file", spec_file, "key=value file with an id line");

        auto * ramsey = app.add_subcommand("ramsey", "least n with K_n in F*(H)");
        ramsey->add_option("H", h_text)->required();
        ramsey->add_option("--nmax", nmax, "largest n to try (default 8)");

        auto * minimal = app.add_subcommand("minimal", "minimal members of F*(H) within bounds");
        minimal->add_option("H", h_text)->required();
        minimal->add_option("--max-order", max_order, "vertex bound (default 7)");
        minimal->add_option("--max-edges", max_edges, "edge bound (default 8)");
        minimal->add_option("--out", out_prefix, "also write PREFIX.g6 and PREFIX.json");

        auto * paper = app.add_subcommand("verify-paper", "run the reproduction suite");
        paper->add_option("--profile", profile_text, "quick (default) or full");
        paper->add_option("--row", rows, "run only these rows");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : exit_code::usage;
        }

        auto start = Clock::now();
        Settings settings;
        Report report;
        int code = exit_code::holds;

        try {
            settings = resolve(flags);
            Budget budget = budget_of(settings);

            if (member->parsed() || colour->parsed()) {
                bool is_member = member->parsed();
                report.command = is_member ? "member" : "colour";
                Graph g = parse_graph_argument(g_text), h = parse_graph_argument(h_text);
                report.inputs["g"] = canonical_form(g).bytes;
                report.inputs["h"] = canonical_form(h).bytes;
                auto v = decide(g, h, settings, report, ! is_member);
                report.verdict = to_string(v.status);
                report.mode = to_string(v.mode);
                if (v.certificate)
                    report.certificate = certificate_to_json(g, *v.certificate);
                report.details["stats"] = stats_json(v.stats);
                if (! v.reason.empty())
                    report.details["reason"] = v.reason;
                if (v.status == MembershipStatus::unknown)
                    code = exit_code::unknown;
                else if ((v.status == MembershipStatus::member) == is_member)
                    code = exit_code::holds;
                else
                    code = exit_code::fails;
            }
            else if (saturated->parsed()) {
                report.command = "saturated";
                Graph g = parse_graph_argument(g_text), h = parse_graph_argument(h_text);
                auto kind = kind_text.empty() ? SaturationKind::prsat : parse_saturation_kind(kind_text);
                report.inputs["g"] = canonical_form(g).bytes;
                report.inputs["h"] = canonical_form(h).bytes;
                report.inputs["kind"] = to_string(kind);
                SaturationOptions options;
                options.budget = budget;
                options.short_circuit = ! all_nonedges;
                auto r = check_saturation(kind, g, h, options);
                report.verdict = to_string(r.holds);
                if (r.base_certificate)
                    report.certificate = certificate_to_json(g, *r.base_certificate);
                report.details = saturation_json(g, r);
                code = holds_exit(r.holds);
            }
            else if (number->parsed()) {
                report.command = "number";
                auto kind = parse_saturation_kind(kind_text);
                Graph h = parse_graph_argument(h_text);
                report.inputs["kind"] = to_string(kind);
                report.inputs["n"] = n;
                report.inputs["h"] = canonical_form(h).bytes;
                ExtremalOptions options;
                options.budget = budget;
                options.max_order = order_cap;
                auto r = exact_number(kind, n, h, options);
                if (r.value)
                    report.value = *r.value;
                if (r.witness)
                    report.witness = to_graph6(*r.witness);
                ordered_json levels = ordered_json::array();
                for (auto & l : r.scanned)
                    levels.push_back({{"edges", l.edges}, {"classes", l.classes}, {"tested", l.tested}, {"unknown", l.unknown}});
                report.details["exact"] = r.exact;
                report.details["scanned"] = levels;
                if (r.partial_level)
                    report.details["partial_level"] = *r.partial_level;
                if (! r.reason.empty())
                    report.details["reason"] = r.reason;
                if (! r.exact) {
                    report.verdict = "lower_bound";
                    code = exit_code::unknown;
                }
                else if (r.value)
                    report.verdict = "computed";
                else {
                    report.verdict = "none";
                    code = exit_code::fails;
                }
            }
            else if (construct->parsed()) {
                report.command = "construct";
                auto spec = spec_from(id, params, spec_file);
                Graph g = build(spec);
                report.inputs = spec_json(spec);
                report.verdict = "built";
                report.witness = to_graph6(g);
                report.value = g.size();
                if (auto phi = canonical_colouring(spec))
                    report.certificate = certificate_to_json(g, *phi);
            }
            else if (verify_cons->parsed()) {
                report.command = "verify-construction";
                auto spec = spec_from(id, params, spec_file);
                report.inputs = spec_json(spec);
                VerifyOptions options;
                options.budget = budget;
                settings.trials = settings.trials.value_or(200);
                options.trials = *settings.trials;
                options.seed = settings.seed;
                auto check = verify(spec, options);
                report.verdict = to_string(check.holds);
                report.mode = to_string(check.mode);
                report.witness = to_graph6(check.graph);
                if (check.saturation) {
                    report.details = saturation_json(check.graph, *check.saturation);
                    if (check.saturation->base_certificate)
                        report.certificate = certificate_to_json(check.graph, *check.saturation->base_certificate);
                }
                if (check.membership) {
                    report.details["membership"] = verdict_json(*check.membership);
                    if (check.membership->certificate)
                        report.certificate = certificate_to_json(check.graph, *check.membership->certificate);
                }
                if (! check.note.empty())
                    report.details["note"] = check.note;
                code = holds_exit(check.holds);
            }
            else if (ramsey->parsed()) {
                report.command = "ramsey";
                Graph h = parse_graph_argument(h_text);
                report.inputs["h"] = canonical_form(h).bytes;
                report.inputs["nmax"] = nmax;
                auto r = rainbow_ramsey_p3(h, nmax, budget);
                ordered_json per = ordered_json::object();
                bool undecided = false;
                for (auto & [k, v] : r.per_n) {
                    per[std::to_string(k)] = verdict_json(v);
                    undecided = undecided || v.status == MembershipStatus::unknown;
                }
                report.details["searched_up_to"] = r.searched_up_to;
                report.details["per_n"] = per;
                if (r.upper_bound)
                    report.details["upper_bound"] = *r.upper_bound;
                if (r.value) {
                    report.value = *r.value;
                    report.verdict = "computed";
                }
                else if (undecided) {
                    report.verdict = "unknown";
                    code = exit_code::unknown;
                }
                else {
                    report.verdict = "none";
                    code = exit_code::fails;
                }
            }
            else if (minimal->parsed()) {
                report.command = "minimal";
                Graph h = parse_graph_argument(h_text);
                report.inputs["h"] = canonical_form(h).bytes;
                report.inputs["max_order"] = max_order;
                report.inputs["max_edges"] = max_edges;
                auto family = minimal_members(h, max_order, max_edges, budget);
                ordered_json manifest;
                std::vector<std::string> members, undecided;
                for (auto & g : family.members)
                    members.push_back(to_graph6(g));
                for (auto & g : family.undecided)
                    undecided.push_back(to_graph6(g));
                manifest["members"] = members;
                manifest["max_order"] = family.max_order;
                manifest["max_edges"] = family.max_edges;
                manifest["complete_up_to_bounds"] = family.complete_up_to_bounds;
                manifest["undecided"] = undecided;
                manifest["examined"] = family.examined;
                manifest["family_size"] = family.family_size;
                report.verdict = family.complete_up_to_bounds ? "complete" : "incomplete";
                report.value = members;
                report.details = manifest;
                if (! out_prefix.empty()) {
                    std::ofstream list(out_prefix + ".g6"), json(out_prefix + ".json");
                    if (! list || ! json)
                        throw UsageError("cannot write '" + out_prefix + ".g6' / '.json'");
                    for (auto & m : members)
                        list << m << '\n';
                    json << manifest.dump(2) << '\n';
                }
                code = family.complete_up_to_bounds ? exit_code::holds : exit_code::unknown;
            }
            else if (paper->parsed()) {
                report.command = "verify-paper";
                SuiteOptions options;
                options.profile = parse_profile(profile_text);
                options.threads = settings.threads;
                options.only = rows;
                report.inputs["profile"] = profile_text;
                for (auto & r : rows) {
                    auto ids = suite_row_ids();
                    if (std::find(ids.begin(), ids.end(), r) == ids.end())
                        throw UsageError("unknown row '" + r + "'");
                }
                if (! settings.json)
                    options.on_row = [&](const SuiteRow & row) { out << format_row(row) << std::endl; };
                auto result = run_paper_suite(options);
                ordered_json table = ordered_json::array();
                bool failed = false;
                for (auto & row : result) {
                    table.push_back({{"id", row.id}, {"claim", row.claim}, {"expected", row.expected},
                        {"computed", row.computed}, {"status", to_string(row.status)}, {"elapsed_ms", row.elapsed_ms},
                        {"note", row.note}});
                    failed = failed || row.status == RowStatus::fail;
                }
                report.verdict = failed ? "fail" : "pass";
                report.details["rows"] = table;
                code = failed ? exit_code::fails : exit_code::holds;
                if (! settings.json) {
                    out << "verify-paper: " << report.verdict << " (" << result.size() << " rows)" << '\n';
                    return code;
                }
            }
        }
        catch (const FormatError & e) {
            err << "prsat: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const PreconditionError & e) {
            err << "prsat: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const CapacityError & e) {
            err << "prsat: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const ShapeError & e) {
            err << "prsat: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const UsageError & e) {
            err << "prsat: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const BudgetError & e) {
            err << "prsat: " << e.what() << '\n';
            return exit_code::unknown;
        }
        catch (const std::exception & e) {
            err << "prsat: internal error: " << e.what() << '\n';
            return exit_code::internal;
        }

        double elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        auto j = report.to_json(settings, elapsed);
        if (settings.json)
            out << j.dump() << '\n';
        else
            print_text(out, j);
        return code;
    }
}
