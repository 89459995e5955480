#include <prs/cache.hpp>
#include <prs/canonical.hpp>
#include <prs/cli.hpp>
#include <prs/errors.hpp>
#include <prs/graph.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>
#include <sstream>
#include <string>
#include <vector>

using namespace prs;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        args.insert(args.begin(), "prsat");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    auto run_json(std::vector<std::string> args) -> std::pair<int, nlohmann::json>
    {
        args.push_back("--json");
        auto r = run(args);
        INFO(r.err);
        return {r.code, nlohmann::json::parse(r.out)};
    }

    struct TempDir
    {
        fs::path path;

        TempDir()
        {
            path = fs::temp_directory_path() / ("prsat-test-" + std::to_string(std::rand()) + "-" + std::to_string(::getpid()));
            fs::create_directories(path);
        }

        ~TempDir() { fs::remove_all(path); }

        auto file(const std::string & name, const std::string & contents = "") const -> std::string
        {
            auto p = path / name;
            if (! contents.empty())
                std::ofstream(p) << contents;
            return p.string();
        }
    };

    struct EnvGuard
    {
        EnvGuard(const std::string & value) { ::setenv(cache_environment_variable, value.c_str(), 1); }
        ~EnvGuard() { ::unsetenv(cache_environment_variable); }
    };
}

TEST_SUITE("cli")
{
    TEST_CASE("exit codes match verdicts")
    {
        TempDir tmp;
        auto bad_config = tmp.file("bad.conf", "budget_nodes = lots\n");
        struct Case
        {
            std::vector<std::string> args;
            int code;
        };
        std::vector<Case> matrix{
            {{"member", "K7", "K4"}, exit_code::holds},
            {{"member", "K6", "K4"}, exit_code::fails},
            {{"member", "K7", "K4", "--budget-nodes", "5"}, exit_code::unknown},
            {{"colour", "K6", "K4"}, exit_code::holds},
            {{"colour", "K4", "K3"}, exit_code::fails},
            {{"saturated", "K1,3", "K3"}, exit_code::holds},
            {{"saturated", "P4", "K3"}, exit_code::fails},
            {{"saturated", "P4", "K3", "--kind", "wsat"}, exit_code::holds},
            {{"saturated", "K6", "K4", "--budget-nodes", "3"}, exit_code::unknown},
            {{"number", "prsat", "5", "K3"}, exit_code::holds},
            {{"number", "prsat", "6", "K4", "--budget-nodes", "1"}, exit_code::unknown},
            {{"ramsey", "K4", "--nmax", "7"}, exit_code::holds},
            {{"construct", "k4_saturated", "n=7"}, exit_code::holds},
            {{"verify-construction", "k4_forcing"}, exit_code::holds},
            {{"verify-construction", "cycle_witness", "k=7", "--trials", "5"}, exit_code::unknown},
            {{"minimal", "2K2", "--max-order", "5", "--max-edges", "4"}, exit_code::holds},
            {{"member", "C~~~", "K4"}, exit_code::usage},
            {{"number", "prsat", "9", "K3"}, exit_code::usage},
            {{"construct", "k4_saturated", "n=5"}, exit_code::usage},
            {{"frobnicate"}, exit_code::usage},
            {{"member", "K4", "K3", "--config", bad_config}, exit_code::usage},
            {{"member", "K4"}, exit_code::usage},
        };
        std::set<int> seen;
        for (auto & c : matrix) {
            auto r = run(c.args);
            std::string joined;
            for (auto & a : c.args)
                joined += a + " ";
            CAPTURE(joined);
            CAPTURE(r.err);
            CHECK(r.code == c.code);
            seen.insert(r.code);
        }
        CHECK(matrix.size() >= 20);
        CHECK(seen == std::set<int>{0, 1, 2, 64});
    }

    TEST_CASE("version")
    {
        auto r = run({"--version"});
        CHECK(r.code == 0);
        CHECK(r.out.find(tool_version()) != std::string::npos);
    }

    TEST_CASE("json report schema")
    {
        auto [code, j] = run_json({"member", "K6", "K4"});
        CHECK(code == exit_code::fails);
        std::vector<std::string> keys;
        for (auto & [k, _] : j.items())
            keys.push_back(k);
        // nlohmann::json sorts keys, so compare as a set
        std::set<std::string> key_set(keys.begin(), keys.end());
        for (auto k : {"command", "inputs", "verdict", "mode", "certificate", "budget", "elapsed_ms", "version"})
            CHECK(key_set.contains(k));
        CHECK(j["command"] == "member");
        CHECK(j["inputs"]["g"] == canonical_form(complete_graph(6)).bytes);
        CHECK(j["inputs"]["h"] == canonical_form(complete_graph(4)).bytes);
        CHECK(j["verdict"] == "non_member");
        CHECK(j["mode"] == "exact");
        CHECK(j["budget"].contains("nodes"));
        CHECK(j["budget"].contains("secs"));
        CHECK(j["budget"].contains("trials"));
        CHECK(j["version"] == tool_version());
        CHECK(j["certificate"]["colours"].size() == 15);
    }

    TEST_CASE("json field order follows the schema")
    {
        auto r = run({"number", "prsat", "5", "K3", "--json"});
        auto pos = [&](const std::string & key) { return r.out.find("\"" + key + "\":"); };
        CHECK(pos("command") < pos("inputs"));
        CHECK(pos("inputs") < pos("verdict"));
        CHECK(pos("verdict") < pos("mode"));
        CHECK(pos("mode") < pos("value"));
        CHECK(pos("value") < pos("witness"));
        CHECK(pos("witness") < pos("budget"));
        CHECK(pos("budget") < pos("elapsed_ms"));
        CHECK(pos("elapsed_ms") < pos("version"));
    }

    TEST_CASE("text report")
    {
        auto r = run({"number", "prsat", "5", "K3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("command: number") != std::string::npos);
        CHECK(r.out.find("value: 4") != std::string::npos);
    }

    TEST_CASE("graph arguments from files")
    {
        TempDir tmp;
        auto g6 = tmp.file("k6.g6", ">>graph6<<E~~w\n");
        auto el = tmp.file("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        auto r = run({"member", "@" + g6, "@" + el});
        CHECK(r.code == exit_code::fails);
    }

    TEST_CASE("cache soundness")
    {
        TempDir tmp;
        auto cache = tmp.file("verdicts.txt");
        for (auto [g, h] : std::vector<std::pair<std::string, std::string>>{{"K6", "K4"}, {"K7", "K4"}, {"P4", "2K2"}, {"C5", "P4"}}) {
            CAPTURE(g);
            auto [c1, fresh] = run_json({"member", g, h, "--cache", cache});
            auto [c2, warm] = run_json({"member", g, h, "--cache", cache});
            CHECK(c1 == c2);
            CHECK(fresh["verdict"] == warm["verdict"]);
            CHECK(fresh["mode"] == warm["mode"]);
            CHECK(fresh["inputs"] == warm["inputs"]);
            CHECK(warm["details"]["cached"] == true);
        }

        // isomorphic queries hit the same record
        Graph k6 = complete_graph(6);
        auto [c3, relabelled] = run_json({"member", to_graph6(delete_edge(k6, 0, 1)), "K4", "--cache", cache});
        auto [c4, again] = run_json({"member", to_graph6(delete_edge(k6, 2, 5)), "K4", "--cache", cache});
        CHECK(c3 == c4);
        CHECK(again["details"]["cached"] == true);

        // replaying the file reproduces the store
        VerdictCache reloaded(cache);
        CHECK(reloaded.size() == 5);
        CHECK(reloaded.lookup(complete_graph(7), complete_graph(4)) == CacheRecord{MembershipStatus::member, SearchMode::exact});
    }

    TEST_CASE("cache store rules")
    {
        TempDir tmp;
        auto path = tmp.file("c.txt");
        VerdictCache cache(path);
        Graph g = complete_graph(6), h = complete_graph(4);
        CHECK(! cache.store(g, h, {MembershipStatus::unknown, SearchMode::exact}));
        CHECK(cache.store(g, h, {MembershipStatus::non_member, SearchMode::sampled}));
        CHECK(cache.store(g, h, {MembershipStatus::non_member, SearchMode::exact}));
        CHECK(! cache.store(g, h, {MembershipStatus::non_member, SearchMode::sampled}));
        CHECK(cache.lookup(relabel(g, std::vector{5, 4, 3, 2, 1, 0}), h)->mode == SearchMode::exact);
        VerdictCache again(path);
        CHECK(again.lookup(g, h) == cache.lookup(g, h));

        auto broken = tmp.file("broken.txt", "E~~w C~ maybe exact\n");
        CHECK_THROWS_AS(VerdictCache{broken}, FormatError);
    }

    TEST_CASE("environment variable, config file and flags")
    {
        TempDir tmp;
        auto env_cache = tmp.file("env.txt");
        auto flag_cache = tmp.file("flag.txt");
        auto conf = tmp.file("run.conf", "# budgets\nbudget_nodes = 12345\ntrials = 7\n");

        {
            EnvGuard guard(env_cache);
            run({"member", "K6", "K4"});
            CHECK(fs::exists(env_cache));
            run({"member", "K5", "K4", "--cache", flag_cache});
            CHECK(VerdictCache(flag_cache).size() == 1);
            CHECK(VerdictCache(env_cache).size() == 1);
        }

        auto [c1, from_conf] = run_json({"member", "K5", "K4", "--config", conf});
        CHECK(from_conf["budget"]["nodes"] == 12345);
        CHECK(from_conf["budget"]["trials"] == 7);
        auto [c2, from_flag] = run_json({"member", "K5", "K4", "--config", conf, "--budget-nodes", "999"});
        CHECK(from_flag["budget"]["nodes"] == 999);
        CHECK(from_flag["budget"]["trials"] == 7);

        auto unknown_key = tmp.file("bad.conf", "colour = red\n");
        CHECK(run({"member", "K5", "K4", "--config", unknown_key}).code == exit_code::usage);
    }

    TEST_CASE("sampling fallback")
    {
        auto [code, j] = run_json({"member", "K7", "K4", "--budget-nodes", "5", "--trials", "50", "--seed", "3"});
        CHECK(code == exit_code::unknown);
        CHECK(j["verdict"] == "unknown");
    }

    TEST_CASE("number reports its scan")
    {
        auto [code, j] = run_json({"number", "ssat", "6", "K3"});
        CHECK(code == 0);
        CHECK(j["value"] == 5);
        CHECK(j["details"]["exact"] == true);
        CHECK(j["witness"].is_string());
    }

    TEST_CASE("construct prints graph6")
    {
        auto [code, j] = run_json({"construct", "k4_saturated", "n=6"});
        CHECK(code == 0);
        REQUIRE(j["witness"].is_string());
        Graph g = from_graph6(j["witness"].get<std::string>());
        CHECK(g.size() == 15);
    }

    TEST_CASE("spec files for constructions")
    {
        TempDir tmp;
        auto spec = tmp.file("spec.conf", "id = matching_mk2\nm = 3\nn = 9\n");
        auto r = run({"verify-construction", "--spec-file", spec});
        CHECK(r.code == 0);
    }

    TEST_CASE("minimal writes its outputs")
    {
        TempDir tmp;
        auto prefix = (tmp.path / "m").string();
        auto r = run({"minimal", "P4", "--max-order", "5", "--max-edges", "5", "--out", prefix});
        CHECK(r.code == 0);
        std::ifstream in(prefix + ".g6");
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        CHECK(lines.size() == 2);
        CHECK(fs::exists(prefix + ".json"));
    }
}
