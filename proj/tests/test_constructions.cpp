#include "oracles.hpp"

#include <prs/canonical.hpp>
#include <prs/constructions.hpp>
#include <prs/errors.hpp>
#include <prs/frontier.hpp>
#include <prs/kt.hpp>

#include <doctest.h>

#include <algorithm>

using namespace prs;

namespace
{
    auto choose2(std::int64_t x) -> std::int64_t { return x * (x - 1) / 2; }

    auto matching(int m) -> Graph
    {
        Graph g = empty_graph(0);
        for (int i = 0; i < m; ++i)
            g = disjoint_union(g, complete_graph(2));
        return g;
    }

    auto sorted_forms(const std::vector<Graph> & gs) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto & g : gs)
            out.push_back(canonical_form(g).bytes);
        std::sort(out.begin(), out.end());
        return out;
    }
}

TEST_SUITE("constructions")
{
    TEST_CASE("k4 saturated construction matches its structure for n = 6..30")
    {
        for (int n = 6; n <= 30; ++n) {
            CAPTURE(n);
            auto spec = make_spec(ConstructionId::k4_saturated, {{"n", n}});
            Graph g = build(spec);
            int k = (n - 2 + 3) / 4, m = n - 4 * k + 2;
            Graph rest = complete_graph(m);
            for (int i = 0; i < k - 1; ++i)
                rest = disjoint_union(complete_graph(4), rest);
            CHECK(g.order() == n);
            CHECK(isomorphic(g, join(complete_graph(2), rest)));
            CHECK(spec.expected_edges == g.size());
            CHECK(2 * g.size() == 7 * n + (n - 4 * k) * (n - 4 * k) - 16);
        }
    }

    TEST_CASE("edge counts over a parameter grid")
    {
        for (int k = 3; k <= 8; ++k)
            for (int n = 2 * ((k + 1) / 2) + 2; n <= 16; n += 3) {
                auto spec = make_spec(ConstructionId::star_union_k2, {{"k", k}, {"n", n}});
                CHECK(build(spec).size() == choose2(2 * ((k + 1) / 2) + 2));
            }
        for (int m = 3; m <= 6; ++m) {
            auto spec = make_spec(ConstructionId::matching_mk2, {{"m", m}, {"n", m * m + 1}});
            Graph g = build(spec);
            CHECK(g.size() == 3 * choose2(m));
            CHECK(g.order() == m * m + 1);
        }
        for (int k = 2; k <= 3; ++k)
            for (int l = k; l <= 3; ++l) {
                auto spec = make_spec(ConstructionId::bipartite_witness, {{"k", k}, {"l", l}});
                int b = k * (k - 1) * (l - 1) + l;
                CHECK(isomorphic(build(spec), complete_bipartite_graph(k, b)));
            }
        for (int k = 7; k <= 12; ++k) {
            auto spec = make_spec(ConstructionId::cycle_witness, {{"k", k}});
            Graph g = build(spec);
            std::int64_t l = (k + 1) / 2, y = 5 * l;
            std::int64_t z = k == 8 ? 5 : (k % 2 ? 1 : 2);
            CHECK(g.order() == l + y);
            CHECK(g.size() == choose2(l) + (l - 1) * y + z);
            CHECK(kt_u(g) == l - 1);
        }
        CHECK(build(make_spec(ConstructionId::k4_forcing)).size() == 18);
        CHECK(build(make_spec(ConstructionId::k3_union_k2, {{"n", 7}})).size() == 15);
    }

    TEST_CASE("parameter validation")
    {
        CHECK_THROWS_AS(make_spec(ConstructionId::k4_saturated, {{"n", 5}}), PreconditionError);
        CHECK_THROWS_AS(make_spec(ConstructionId::k4_saturated, {{"n", 63}}), CapacityError);
        CHECK_THROWS_AS(make_spec(ConstructionId::k4_saturated, {{"bogus", 1}}), PreconditionError);
        CHECK_THROWS_AS(make_spec(ConstructionId::matching_mk2, {{"m", 3}, {"n", 8}}), PreconditionError);
        CHECK_THROWS_AS(make_spec(ConstructionId::bipartite_witness, {{"k", 1000000}, {"l", 1000000}}), CapacityError);
        CHECK(make_spec(ConstructionId::cycle_witness, {{"k", 7}, {"y_size", 3}}).off_spec);
        for (auto id : {ConstructionId::k4_saturated, ConstructionId::k4_forcing, ConstructionId::cycle_witness,
                 ConstructionId::bipartite_witness, ConstructionId::star_union_k2, ConstructionId::k3_union_k2,
                 ConstructionId::matching_mk2})
            CHECK(parse_construction_id(to_string(id)) == id);
    }

    TEST_CASE("spec files")
    {
        auto spec = parse_spec_config("# k4 family\nid=k4_saturated\nn = 9\n");
        CHECK(spec.id == ConstructionId::k4_saturated);
        CHECK(spec.params.at("n") == 9);
        CHECK_THROWS_AS(parse_spec_config("n=9\n"), PreconditionError);
        CHECK_THROWS_AS(parse_spec_config("id=k4_saturated\nn\n"), PreconditionError);
    }

    TEST_CASE("explicit colourings are proper and rainbow free")
    {
        std::vector<ConstructionSpec> specs;
        for (int n = 6; n <= 14; ++n)
            specs.push_back(make_spec(ConstructionId::k4_saturated, {{"n", n}}));
        for (int k = 3; k <= 8; ++k)
            specs.push_back(make_spec(ConstructionId::star_union_k2, {{"k", k}, {"n", 2 * ((k + 1) / 2) + 3}}));
        for (int m = 3; m <= 4; ++m)
            specs.push_back(make_spec(ConstructionId::matching_mk2, {{"m", m}, {"n", m * m}}));
        specs.push_back(make_spec(ConstructionId::k3_union_k2, {{"n", 7}}));
        for (auto & spec : specs) {
            CAPTURE(to_string(spec.id));
            Graph g = build(spec);
            auto phi = canonical_colouring(spec);
            REQUIRE(phi);
            CHECK(is_proper(g, *phi));
            CHECK(is_normalized(*phi));
            CHECK(! has_rainbow(g, *phi, spec.target));
        }
        CHECK(colour_count(*canonical_colouring(make_spec(ConstructionId::k4_saturated, {{"n", 6}}))) == 5);
        CHECK(! canonical_colouring(make_spec(ConstructionId::k4_forcing)));
    }

    TEST_CASE("small constructions verify exactly")
    {
        for (auto spec : {make_spec(ConstructionId::k4_saturated, {{"n", 6}}), make_spec(ConstructionId::k3_union_k2, {{"n", 7}}),
                 make_spec(ConstructionId::matching_mk2, {{"m", 3}, {"n", 9}}),
                 make_spec(ConstructionId::star_union_k2, {{"k", 3}, {"n", 7}}), make_spec(ConstructionId::k4_forcing),
                 make_spec(ConstructionId::bipartite_witness, {{"k", 2}, {"l", 2}})}) {
            CAPTURE(to_string(spec.id));
            auto check = verify(spec);
            CHECK(check.holds == Holds::yes);
            CHECK(check.mode == SearchMode::exact);
        }
    }

    TEST_CASE("large forcing witnesses are only sampled")
    {
        VerifyOptions o;
        o.trials = 20;
        auto check = verify(make_spec(ConstructionId::cycle_witness, {{"k", 7}}), o);
        CHECK(check.mode == SearchMode::sampled);
        CHECK(check.holds != Holds::yes);
    }
}

TEST_SUITE("frontier")
{
    TEST_CASE("rainbow Ramsey numbers")
    {
        auto k3 = rainbow_ramsey_p3(complete_graph(3), 8);
        CHECK(k3.value == 3);
        auto p4 = rainbow_ramsey_p3(path_graph(4), 8);
        CHECK(p4.value == 5);
        auto k4 = rainbow_ramsey_p3(complete_graph(4), 7);
        CHECK(k4.value == 7);
        REQUIRE(k4.per_n.contains(6));
        CHECK(k4.per_n.at(6).status == MembershipStatus::non_member);
        CHECK(! rainbow_ramsey_p3(complete_graph(4), 6).value);
    }

    TEST_CASE("Ramsey values agree with the oracle")
    {
        for (auto & h : {complete_graph(3), path_graph(3), path_graph(4), matching(2), star_graph(3)}) {
            int n = h.order();
            while (! oracle::member(complete_graph(n), h))
                ++n;
            CHECK(rainbow_ramsey_p3(h, 8).value == n);
        }
    }

    TEST_CASE("minimal families")
    {
        auto p4 = minimal_members(path_graph(4), 7, 8);
        Graph t5 = Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}});
        CHECK(sorted_forms(p4.members) == sorted_forms({t5, cycle_graph(5), cycle_graph(7)}));
        CHECK(p4.complete_up_to_bounds);

        auto m2 = minimal_members(matching(2), 6, 8);
        CHECK(sorted_forms(m2.members) == sorted_forms({disjoint_union(path_graph(3), complete_graph(2))}));

        auto k3 = minimal_members(complete_graph(3), 4, 6);
        CHECK(sorted_forms(k3.members) == sorted_forms({complete_graph(3)}));
    }

    TEST_CASE("minimal families form an antichain covering every member")
    {
        Graph h = path_graph(4);
        auto fam = minimal_members(h, 6, 7);
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            for (std::size_t j = 0; j < fam.members.size(); ++j)
                if (i != j)
                    CHECK(! contains_subgraph(fam.members[i], fam.members[j], true));
        for (int n = 2; n <= 6; ++n)
            for (int m = 1; m <= std::min(7, n * (n - 1) / 2); ++m)
                for (auto & g : enumerate_graphs(n, m)) {
                    if (isolated_count(g) > 0)
                        continue;
                    bool member = oracle::member(g, h);
                    bool covered = std::any_of(fam.members.begin(), fam.members.end(),
                        [&](const Graph & w) { return contains_subgraph(g, w, true); });
                    CAPTURE(to_graph6(g));
                    CHECK(member == covered);
                }
    }

    TEST_CASE("parallel minimal family search agrees")
    {
        Budget par;
        par.threads = 4;
        auto a = minimal_members(path_graph(4), 7, 8);
        auto b = minimal_members(path_graph(4), 7, 8, par);
        CHECK(sorted_forms(a.members) == sorted_forms(b.members));
        CHECK(a.examined == b.examined);
    }

    TEST_CASE("parameters from a witness")
    {
        auto [u, d] = family_params_from_witness(cycle_graph(4), complete_bipartite_graph(2, 4));
        CHECK(u == 1);
        CHECK(d == 4);
        CHECK_THROWS_AS(family_params_from_witness(complete_graph(4), complete_graph(5)), PreconditionError);
    }
}
