#include "../oracles.hpp"
#include "../support.hpp"

#include <bdom/constructors.hpp>
#include <bdom/incidence_graph.hpp>

#include <doctest.h>

#include <random>

using namespace bdom;
using testing::vset;

TEST_CASE("graph sizes")
{
    IncidenceGraph f(fano());
    CHECK(f.vertex_count() == 14);
    CHECK(f.edge_count() == 21);
    CHECK(f.max_degree() == 3);
    CHECK(f.min_degree() == 3);

    IncidenceGraph x(fixture_8_4_3());
    CHECK(x.vertex_count() == 22);
    CHECK(x.edge_count() == 56);
    CHECK(x.point_degree() == 7);
    CHECK(x.block_degree() == 4);

    IncidenceGraph p(projective_plane(3));
    CHECK(p.vertex_count() == 26);
    CHECK(p.max_degree() == 4);
    CHECK(p.min_degree() == 4);
}

TEST_CASE("neighbours are bipartite and degree-regular")
{
    auto d = fixture_8_4_3();
    IncidenceGraph g(d);
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto nb = g.neighbours(u);
        CHECK(static_cast<int>(nb.size()) == (g.is_point_vertex(u) ? d.r() : d.k()));
        for (int w : nb)
            CHECK(g.is_point_vertex(u) != g.is_point_vertex(w));
    }
    CHECK(g.blocks_through(0).size() == 7u);
}

TEST_CASE("duplicate blocks stay separate vertices")
{
    IncidenceGraph g(double_design(fixture_8_4_3()));
    CHECK(g.vertex_count() == 36);
    CHECK(g.neighbours(g.block_vertex(0)) == g.neighbours(g.block_vertex(14)));
}

TEST_CASE("is_dominating on the fixture specimens")
{
    IncidenceGraph g(fixture_8_4_3());
    auto s2 = vset(g, {1, 2, 3}, {3, 12});
    auto s1 = vset(g, {1, 2, 4, 8}, {14});
    CHECK(is_dominating(g, s2));
    CHECK(is_dominating(g, s1));
    CHECK(is_dominating(g, VertexSet::all(g)));
    CHECK_FALSE(is_dominating(g, VertexSet::empty(g)));
    CHECK_FALSE(is_dominating(g, vset(g, {1, 2, 3}, {3})));
}

TEST_CASE("is_independent")
{
    IncidenceGraph f(fano());
    CHECK(is_independent(f, vset(f, {2, 5}, {3, 6})));
    IncidenceGraph g(fixture_8_4_3());
    CHECK_FALSE(is_independent(g, vset(g, {1, 2, 3}, {3, 12})));
    CHECK(is_independent(g, VertexSet::empty(g)));
}

TEST_CASE("girth at least 6 iff lambda = 1")
{
    CHECK(girth_at_least_6(IncidenceGraph(fano())));
    CHECK(girth_at_least_6(IncidenceGraph(projective_plane(5))));
    CHECK_FALSE(girth_at_least_6(IncidenceGraph(fixture_8_4_3())));
    for (const auto & d : {affine_plane_9(), sts_bose(15), complement(fano()), double_design(fano()),
             cyclic_design(difference_family_preset("sts13"))})
        CHECK(girth_at_least_6(IncidenceGraph(d)) == (d.lambda() == 1));
}

TEST_CASE("vertex set helpers")
{
    IncidenceGraph g(fano());
    auto s = vset(g, {2, 5}, {3, 6});
    CHECK(s.size() == 4);
    CHECK(s.vertices() == std::vector<int>{1, 4, 9, 12});
    CHECK(s.point_list() == std::vector<int>{1, 4});
    CHECK(s.block_list() == std::vector<int>{2, 5});
    CHECK(s.contains_vertex(9));
    CHECK_FALSE(s.contains_vertex(7));
    CHECK(canonical_less(vset(g, {1}, {}), vset(g, {2}, {})));
    CHECK_FALSE(canonical_less(s, s));
}

TEST_CASE("is_dominating agrees with a naive scan on random sets")
{
    std::mt19937 rng(20240611);
    for (const auto & d : {fano(), fixture_8_4_3(), projective_plane(3), sts_bose(15)}) {
        IncidenceGraph g(d);
        auto adj = oracle::adjacency(d.v(), d.block_lists());
        int n = g.vertex_count();
        std::bernoulli_distribution coin(0.35);
        for (int trial = 0; trial < 400; ++trial) {
            std::vector<char> mask(n);
            std::vector<int> ids;
            for (int u = 0; u < n; ++u)
                if ((mask[u] = coin(rng)))
                    ids.push_back(u);
            auto s = VertexSet::from_vertices(g, ids);
            REQUIRE(is_dominating(g, s) == oracle::dominates(adj, mask));
        }
    }
}
