#include "oracles.hpp"

#include <prs/canonical.hpp>
#include <prs/colouring.hpp>
#include <prs/errors.hpp>
#include <prs/membership.hpp>

#include <doctest.h>

#include <random>

using namespace prs;

namespace
{
    auto matching(int m) -> Graph
    {
        Graph g = empty_graph(0);
        for (int i = 0; i < m; ++i)
            g = disjoint_union(g, complete_graph(2));
        return g;
    }

    auto two_k2() -> Graph { return matching(2); }

    auto as_oracle(const Graph & g, const EdgeColouring & c) -> oracle::Colouring
    {
        oracle::Colouring phi;
        for (int i = 0; i < g.size(); ++i)
            phi[{g.edge(i).u, g.edge(i).v}] = c.colours[i];
        return phi;
    }

    auto small_patterns() -> std::vector<Graph>
    {
        return {complete_graph(3), path_graph(3), path_graph(4), two_k2(), star_graph(3), cycle_graph(4),
            disjoint_union(complete_graph(3), complete_graph(2))};
    }
}

TEST_SUITE("colouring")
{
    TEST_CASE("normal form")
    {
        CHECK(normalized(EdgeColouring{{4, 4, 2, 7, 2}}) == EdgeColouring{{0, 0, 1, 2, 1}});
        CHECK(is_normalized(EdgeColouring{{0, 1, 0, 2}}));
        CHECK(! is_normalized(EdgeColouring{{1, 0}}));
        CHECK(colour_count(EdgeColouring{{0, 3, 3, 5}}) == 3);
    }

    TEST_CASE("properness and shape")
    {
        Graph p = path_graph(3);
        CHECK(is_proper(p, EdgeColouring{{0, 1}}));
        CHECK(! is_proper(p, EdgeColouring{{0, 0}}));
        CHECK_THROWS_AS(is_proper(p, EdgeColouring{{0}}), ShapeError);
    }

    TEST_CASE("matching colourings are counted by the Bell numbers")
    {
        std::vector<std::uint64_t> bell{1, 2, 5, 15, 52};
        for (int m = 1; m <= 5; ++m) {
            std::uint64_t count = 0;
            auto result = enumerate_proper_colourings(matching(m), [&](const EdgeColouring &) {
                ++count;
                return true;
            });
            CHECK(result.complete);
            CHECK(count == bell[m - 1]);
            CHECK(count == oracle::set_partitions(m));
        }
    }

    TEST_CASE("enumerated colourings agree with the oracle")
    {
        std::mt19937_64 rng(53);
        for (int t = 0; t < 40; ++t) {
            Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 2), 0.45);
            if (g.size() > 9)
                continue;
            for (auto order : {EdgeOrder::lexicographic, EdgeOrder::greedy_coverage}) {
                std::set<std::vector<int>> seen;
                bool all_ok = true;
                enumerate_proper_colourings(
                    g,
                    [&](const EdgeColouring & c) {
                        all_ok = all_ok && is_proper(g, c) && is_normalized(c);
                        seen.insert(c.colours);
                        return true;
                    },
                    100'000'000, order);
                CHECK(all_ok);
                CHECK(seen.size() == oracle::proper_colouring_count(g));
            }
        }
    }

    TEST_CASE("enumeration stops when asked and when over budget")
    {
        int calls = 0;
        auto r = enumerate_proper_colourings(complete_graph(5), [&](const EdgeColouring &) { return ++calls < 3; });
        CHECK(calls == 3);
        CHECK(! r.complete);
        auto capped = enumerate_proper_colourings(complete_graph(6), [](const EdgeColouring &) { return true; }, 50);
        CHECK(! capped.complete);
    }

    TEST_CASE("rainbow detection agrees with the oracle")
    {
        std::mt19937_64 rng(59);
        for (int t = 0; t < 200; ++t) {
            Graph g = oracle::random_graph(rng, 6, 0.5);
            EdgeColouring c;
            int palette = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < g.size(); ++i)
                c.colours.push_back(static_cast<int>(rng() % palette));
            for (auto & h : small_patterns()) {
                auto copy = has_rainbow(g, c, h);
                CHECK(copy.has_value() == oracle::rainbow_copy_exists(g, as_oracle(g, c), h));
                if (copy) {
                    std::set<int> colours;
                    for (int i : copy->edge_set)
                        colours.insert(c.colours[i]);
                    CHECK(colours.size() == copy->edge_set.size());
                }
            }
        }
    }

    TEST_CASE("backtrack orders are permutations of the edges")
    {
        Graph g = complete_graph(6);
        auto copies = subgraph_copies(g, complete_graph(4));
        for (auto order : {EdgeOrder::lexicographic, EdgeOrder::greedy_coverage}) {
            auto o = backtrack_order(g, order, copies);
            std::set<int> s(o.begin(), o.end());
            CHECK(s.size() == 15);
            CHECK(o.size() == 15);
        }
        auto lex = backtrack_order(g, EdgeOrder::lexicographic);
        CHECK(std::is_sorted(lex.begin(), lex.end()));
    }

    TEST_CASE("certificate json round trips")
    {
        Graph g = cycle_graph(5);
        EdgeColouring c{{0, 1, 0, 1, 2}};
        auto j = certificate_to_json(g, c);
        auto [g2, c2] = certificate_from_json(j, 5);
        CHECK(g2 == g);
        CHECK(c2 == c);
    }
}

TEST_SUITE("membership")
{
    TEST_CASE("membership agrees with the brute-force oracle")
    {
        std::mt19937_64 rng(61);
        int members = 0, non_members = 0;
        for (int t = 0; t < 60; ++t) {
            int n = 4 + static_cast<int>(rng() % 3);
            Graph g = oracle::random_graph(rng, n, 0.3 + (rng() % 60) / 100.0);
            if (g.size() > 10)
                continue;
            for (auto & h : small_patterns()) {
                bool expect = oracle::member(g, h);
                auto v = find_rainbow_free_colouring(g, h);
                CAPTURE(to_graph6(g));
                CAPTURE(to_graph6(h));
                REQUIRE(v.status != MembershipStatus::unknown);
                CHECK(v.mode == SearchMode::exact);
                CHECK((v.status == MembershipStatus::member) == expect);
                if (v.status == MembershipStatus::non_member) {
                    REQUIRE(v.certificate);
                    CHECK(is_proper(g, *v.certificate));
                    CHECK(is_normalized(*v.certificate));
                    CHECK(! has_rainbow(g, *v.certificate, h));
                    CHECK(! oracle::rainbow_copy_exists(g, as_oracle(g, *v.certificate), h));
                    ++non_members;
                }
                else {
                    CHECK(! v.certificate);
                    ++members;
                }
            }
        }
        // the generator must exercise both outcomes
        CHECK(members > 10);
        CHECK(non_members > 10);
    }

    TEST_CASE("lexicographic order and disabled lookahead give the same verdicts")
    {
        std::mt19937_64 rng(67);
        for (int t = 0; t < 40; ++t) {
            Graph g = oracle::random_graph(rng, 6, 0.6);
            for (auto & h : small_patterns()) {
                Budget plain;
                plain.order = EdgeOrder::lexicographic;
                plain.lookahead = false;
                CHECK(find_rainbow_free_colouring(g, h).status == find_rainbow_free_colouring(g, h, plain).status);
            }
        }
    }

    TEST_CASE("F* is closed under adding edges")
    {
        std::mt19937_64 rng(71);
        int premises = 0;
        for (int t = 0; t < 80; ++t) {
            Graph g = oracle::random_graph(rng, 6, 0.6);
            for (auto & h : small_patterns()) {
                if (find_rainbow_free_colouring(g, h).status != MembershipStatus::member)
                    continue;
                ++premises;
                for (auto e : g.non_edges())
                    CHECK(find_rainbow_free_colouring(add_edge(g, e.u, e.v), h).status == MembershipStatus::member);
                Graph bigger = disjoint_union(g, complete_graph(2));
                CHECK(find_rainbow_free_colouring(bigger, h).status == MembershipStatus::member);
            }
        }
        CHECK(premises > 20);
    }

    TEST_CASE("membership is invariant under relabelling")
    {
        std::mt19937_64 rng(73);
        for (int t = 0; t < 30; ++t) {
            Graph g = oracle::random_graph(rng, 7, 0.5);
            Graph r = relabel(g, oracle::random_permutation(rng, 7));
            for (auto & h : small_patterns())
                CHECK(find_rainbow_free_colouring(g, h).status == find_rainbow_free_colouring(r, h).status);
        }
    }

    TEST_CASE("known verdicts")
    {
        Graph k4 = complete_graph(4);
        auto six = find_rainbow_free_colouring(complete_graph(6), k4);
        CHECK(six.status == MembershipStatus::non_member);
        auto k3_in_k4 = find_rainbow_free_colouring(complete_graph(4), complete_graph(3));
        CHECK(k3_in_k4.status == MembershipStatus::member);
        CHECK(find_rainbow_free_colouring(complete_graph(3), complete_graph(3)).status == MembershipStatus::member);
        CHECK(find_rainbow_free_colouring(complete_graph(2), complete_graph(3)).status == MembershipStatus::non_member);
        CHECK(find_rainbow_free_colouring(path_graph(4), two_k2()).status == MembershipStatus::non_member);
        CHECK(find_rainbow_free_colouring(disjoint_union(path_graph(3), complete_graph(2)), two_k2()).status
            == MembershipStatus::member);
    }

    TEST_CASE("node budget gives unknown")
    {
        Budget tiny;
        tiny.nodes = 5;
        auto v = find_rainbow_free_colouring(complete_graph(7), complete_graph(4), tiny);
        CHECK(v.status == MembershipStatus::unknown);
        CHECK(! v.reason.empty());
    }

    TEST_CASE("sampling refutes but never confirms")
    {
        auto refuted = sample_membership(complete_graph(6), complete_graph(4), 2000, 7);
        CHECK(refuted.mode == SearchMode::sampled);
        if (refuted.status == MembershipStatus::non_member) {
            REQUIRE(refuted.certificate);
            CHECK(is_proper(complete_graph(6), *refuted.certificate));
            CHECK(! has_rainbow(complete_graph(6), *refuted.certificate, complete_graph(4)));
        }
        auto member = sample_membership(complete_graph(4), complete_graph(3), 100, 7);
        CHECK(member.status == MembershipStatus::unknown);
        CHECK(member.stats.trials == 100);
        auto a = sample_membership(complete_graph(6), complete_graph(4), 50, 99);
        auto b = sample_membership(complete_graph(6), complete_graph(4), 50, 99);
        CHECK(a.status == b.status);
        CHECK(a.certificate == b.certificate);
    }
}
