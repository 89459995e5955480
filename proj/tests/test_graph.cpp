#include "oracles.hpp"

#include <prs/errors.hpp>
#include <prs/graph.hpp>
#include <prs/named_graph.hpp>

#include <doctest.h>

#include <random>

using namespace prs;

TEST_SUITE("graph")
{
    TEST_CASE("graph6 matches the published reference strings")
    {
        CHECK(to_graph6(complete_graph(4)) == "C~");
        CHECK(to_graph6(cycle_graph(5)) == "Dhc");
        CHECK(from_graph6("C~") == complete_graph(4));
        CHECK(from_graph6("Dhc") == cycle_graph(5));
        CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));
        CHECK(to_graph6(empty_graph(0)) == "?");
        CHECK(to_graph6(empty_graph(1)) == "@");
    }

    TEST_CASE("graph6 round trips on random graphs up to 62 vertices")
    {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 300; ++t) {
            int n = static_cast<int>(rng() % 63);
            Graph g = oracle::random_graph(rng, n, (rng() % 100) / 100.0);
            CAPTURE(n);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }

    TEST_CASE("graph6 rejects malformed input with an offset")
    {
        CHECK_THROWS_AS(from_graph6(""), FormatError);
        CHECK_THROWS_AS(from_graph6("C"), FormatError);
        CHECK_THROWS_AS(from_graph6("C~~"), FormatError);
        try {
            from_graph6("C\x7f");
            FAIL("no throw");
        }
        catch (const FormatError & e) {
            CHECK(e.offset == 1);
        }
    }

    TEST_CASE("edge list format round trips")
    {
        Graph g = cycle_graph(6);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
        CHECK(parse_edge_list("# comment\n3 2\n0 1\n1 2\n") == path_graph(3));
        CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);
        CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), FormatError);
    }

    TEST_CASE("capacity is 62 vertices")
    {
        CHECK(Graph(62).order() == 62);
        CHECK_THROWS_AS(Graph(63), CapacityError);
        CHECK_THROWS_AS(disjoint_union(complete_graph(40), complete_graph(30)), CapacityError);
    }

    TEST_CASE("edge list is lexicographic and indexed")
    {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 50; ++t) {
            Graph g = oracle::random_graph(rng, 9, 0.4);
            auto expected = oracle::edge_list(g);
            REQUIRE(g.edges() == expected);
            for (int i = 0; i < g.size(); ++i)
                CHECK(g.edge_index(g.edge(i).u, g.edge(i).v) == i);
            CHECK(g.non_edges() == oracle::non_edges(g));
        }
    }

    TEST_CASE("standard graphs and operations")
    {
        CHECK(complete_graph(6).size() == 15);
        CHECK(path_graph(4).size() == 3);
        CHECK(cycle_graph(7).size() == 7);
        CHECK(star_graph(3).degree(0) == 3);
        CHECK(complete_bipartite_graph(2, 4).size() == 8);
        CHECK_THROWS_AS(cycle_graph(2), PreconditionError);

        Graph j = join(complete_graph(2), empty_graph(3));
        CHECK(j.order() == 5);
        CHECK(j.size() == 1 + 6);
        CHECK(complement(complement(j)) == j);
        CHECK(complement(complete_graph(5)) == empty_graph(5));

        Graph u = disjoint_union(complete_graph(3), empty_graph(2));
        CHECK(isolated_count(u) == 2);
        CHECK(strip_isolated(u) == complete_graph(3));

        Graph a = add_edge(empty_graph(3), 2, 0);
        CHECK(a.adjacent(0, 2));
        CHECK(delete_edge(a, 0, 2) == empty_graph(3));
        CHECK_THROWS_AS(add_edge(a, 1, 1), PreconditionError);
        CHECK_THROWS_AS(add_edge(a, 0, 2), PreconditionError);
    }

    TEST_CASE("relabel agrees with the oracle")
    {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 50; ++t) {
            Graph g = oracle::random_graph(rng, 8, 0.5);
            auto p = oracle::random_permutation(rng, 8);
            CHECK(relabel(g, p) == oracle::relabelled(g, p));
        }
    }

    TEST_CASE("named graphs")
    {
        CHECK(parse_named_graph("K4") == complete_graph(4));
        CHECK(parse_named_graph("C5") == cycle_graph(5));
        CHECK(parse_named_graph("P4") == path_graph(4));
        CHECK(parse_named_graph("E3") == empty_graph(3));
        CHECK(parse_named_graph("K2,4") == complete_bipartite_graph(2, 4));
        CHECK(parse_named_graph("2K2") == disjoint_union(complete_graph(2), complete_graph(2)));
        CHECK(parse_named_graph("K3uK2") == disjoint_union(complete_graph(3), complete_graph(2)));
        CHECK(parse_named_graph("K6uE1") == disjoint_union(complete_graph(6), empty_graph(1)));
        CHECK(parse_named_graph("K1,3uK2") == disjoint_union(star_graph(3), complete_graph(2)));

        CHECK_THROWS_AS(parse_named_graph("C2"), FormatError);
        CHECK_THROWS_AS(parse_named_graph("X4"), FormatError);
        CHECK_THROWS_AS(parse_named_graph("K4u"), FormatError);
        CHECK_THROWS_AS(parse_named_graph("K"), FormatError);
    }

    TEST_CASE("graph arguments pick the right language")
    {
        CHECK(parse_graph_argument("C~") == complete_graph(4));
        CHECK(parse_graph_argument("K4") == complete_graph(4));
        CHECK(parse_graph_argument(">>graph6<<Dhc") == cycle_graph(5));
        CHECK_THROWS_AS(parse_graph_argument("@/nonexistent/file"), PreconditionError);
    }
}
