#include "../oracles.hpp"
#include "../support.hpp"

#include <bdom/constructors.hpp>
#include <bdom/design_file.hpp>
#include <bdom/errors.hpp>
#include <bdom/exact.hpp>
#include <bdom/neatness.hpp>

#include <doctest.h>

using namespace bdom;
using testing::vset;

namespace
{
    auto points(int v, std::initializer_list<int> one_based) -> PointSet
    {
        PointSet p(v);
        for (int x : one_based)
            p.set(x - 1);
        return p;
    }

    auto throws_kind(ErrorKind kind, auto && f) -> bool
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind() == kind;
        }
        return false;
    }

    auto report_for(const Design & d, bool minimal) -> NeatnessReport
    {
        IncidenceGraph g(d);
        int gamma = gamma_bnb(g, d).value;
        auto minimum = enumerate_min_dominating(g, gamma);
        int idom = idom_exact(g, d).value;
        if (! minimal)
            return classify_neatness(d, minimum, idom);
        auto all = enumerate_minimal_dominating(g);
        return classify_neatness(d, minimum, idom, &all);
    }
}

TEST_CASE("projection")
{
    auto d = fixture_8_4_3();
    IncidenceGraph g(d);
    CHECK(project(vset(g, {1, 2, 3}, {3, 12})) == points(8, {1, 2, 3}));
    CHECK(project(vset(g, {1, 2, 4, 8}, {14})) == points(8, {1, 2, 4, 8}));
    auto blocks_only = VertexSet::all(g);
    blocks_only.points.reset();
    CHECK(project(blocks_only).none());
}

TEST_CASE("split_blocks")
{
    auto f = fano();
    auto s = split_blocks(f, points(7, {2, 5}));
    CHECK(s.disjoint == std::vector<int>{2, 5});
    CHECK(s.meeting.size() + s.disjoint.size() == 7u);
    CHECK(split_blocks(f, PointSet(7)).disjoint.size() == 7u);
    CHECK(split_blocks(f, points(7, {1, 2, 3})).disjoint.empty());
    CHECK(throws_kind(ErrorKind::invalid_input, [&] { split_blocks(f, PointSet(8)); }));
}

TEST_CASE("neat closures")
{
    auto f = fano();
    IncidenceGraph gf(f);
    CHECK(neat_closure(f, points(7, {2, 5})) == vset(gf, {2, 5}, {3, 6}));
    auto x = fixture_8_4_3();
    IncidenceGraph gx(x);
    CHECK(neat_closure(x, points(8, {1, 2, 4, 8})) == vset(gx, {1, 2, 4, 8}, {14}));
    auto full = neat_closure(x, points(8, {1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(full.points.all());
    CHECK(full.blocks.none());

    CHECK(is_neat_set(x, vset(gx, {1, 2, 4, 8}, {14})));
    CHECK_FALSE(is_neat_set(x, vset(gx, {1, 2, 3}, {3, 12})));
    CHECK(is_neat_set(f, vset(gf, {2, 5}, {3, 6})));
}

TEST_CASE("neat sets are independent")
{
    auto x = fixture_8_4_3();
    IncidenceGraph g(x);
    for (unsigned mask = 0; mask < 256; ++mask) {
        PointSet p(8, mask);
        REQUIRE(is_independent(g, neat_closure(x, p)));
    }
}

TEST_CASE("punctured-block closures")
{
    for (int q : {2, 3, 5}) {
        auto d = projective_plane(q);
        auto sets = punctured_block_sets(d);
        CHECK(static_cast<int>(sets.size()) == d.b() * d.k());
        IncidenceGraph g(d);
        for (const auto & s : sets) {
            REQUIRE(s.size() == 2 * q);
            REQUIRE(static_cast<int>(split_blocks(d, s.points).meeting.size()) == q * q + 1);
            REQUIRE(is_dominating(g, s));
        }
    }
    CHECK(throws_kind(ErrorKind::not_steiner, [] { punctured_block_sets(fixture_8_4_3()); }));
}

TEST_CASE("neatness of the (8,4,3) fixture")
{
    auto r = report_for(fixture_8_4_3(), false);
    CHECK(r.gamma == 5);
    CHECK(r.idom == 5);
    CHECK(r.minimum_sets == 442u);
    // independent subset scan: 14 sets with four points, 4 with three, 28 with two
    CHECK(r.neat_minimum_sets == 46u);
    CHECK(r.neat_by_points == std::map<int, std::size_t>{{2, 28}, {3, 4}, {4, 14}});
    CHECK(r.is_neat);
    CHECK_FALSE(r.all_minimum_neat);
    CHECK_FALSE(r.is_super_neat);
    REQUIRE(r.neat_witness);
    REQUIRE(r.non_neat_witness);
    CHECK_FALSE(is_neat_set(fixture_8_4_3(), *r.non_neat_witness));
}

TEST_CASE("the doubled fixture is not neat")
{
    auto r = report_for(double_design(fixture_8_4_3()), false);
    CHECK(r.gamma == 5);
    CHECK(r.neat_minimum_sets == 0u);
    CHECK_FALSE(r.is_neat);
    CHECK(r.idom > 5);
}

TEST_CASE("super-neatness from complete minimal enumeration")
{
    auto f = fano();
    auto r = report_for(f, true);
    CHECK(r.all_minimum_neat);
    CHECK(r.minimal_sets == 65u);
    REQUIRE(r.is_super_neat);
    // {1,2,3, 145, 246, 347} is minimal and not neat
    CHECK_FALSE(*r.is_super_neat);
    IncidenceGraph g(f);
    auto w = vset(g, {1, 2, 3}, {2, 4, 6});
    CHECK(is_dominating(g, w));
    CHECK(has_epn_property(g, w));
    CHECK_FALSE(is_neat_set(f, w));

    auto a = report_for(affine_plane_9(), true);
    CHECK(a.all_minimum_neat);
    CHECK(a.minimal_sets == 791u);
    REQUIRE(a.is_super_neat);
    CHECK_FALSE(*a.is_super_neat);
}

TEST_CASE("classify_neatness needs a complete enumeration")
{
    auto x = fixture_8_4_3();
    IncidenceGraph g(x);
    EnumerationBudget tight;
    tight.max_nodes = 5;
    auto partial = enumerate_min_dominating(g, 5, tight);
    CHECK(throws_kind(ErrorKind::incomplete_enumeration, [&] { classify_neatness(x, partial, 5); }));
}

TEST_CASE("Pasch search matches an exhaustive scan")
{
    for (const auto & d : {fano(), affine_plane_9(), sts_bose(15), cyclic_design(difference_family_preset("sts13")),
             read_design_file(BDOM_DATA_DIR "/sts13_b.txt")}) {
        auto found = find_pasch(d);
        CHECK(static_cast<int>(found.size()) == oracle::pasch_count(d.block_lists()));
        for (const auto & c : found) {
            auto again = pasch_from_blocks(d, c.blocks);
            REQUIRE(again);
            CHECK(*again == c);
        }
    }
    CHECK(find_pasch(fano()).size() == 7u);
    CHECK(find_pasch(affine_plane_9()).empty());
    CHECK(find_pasch(sts_bose(15)).empty());
    CHECK(find_pasch(cyclic_design(difference_family_preset("sts13")), 2).size() == 2u);
    CHECK(throws_kind(ErrorKind::not_sts, [] { find_pasch(fixture_8_4_3()); }));
}

TEST_CASE("Pasch trade")
{
    auto d = cyclic_design(difference_family_preset("sts13"));
    auto c = find_pasch(d, 1).at(0);
    auto t = pasch_trade(d, c);
    CHECK(classify(t).is_sts);
    CHECK_FALSE(same_block_multiset(t, d));
    CHECK(oracle::pasch_count(t.block_lists()) == 8);
    CHECK(oracle::pasch_count(d.block_lists()) == 13);

    auto image = pasch_from_blocks(t, c.blocks);
    REQUIRE(image);
    CHECK(pasch_trade(t, *image) == d);

    auto bogus = c;
    std::swap(bogus.points[0], bogus.points[5]);
    CHECK(throws_kind(ErrorKind::invalid_configuration, [&] { pasch_trade(d, bogus); }));
    CHECK_FALSE(pasch_from_blocks(d, {0, 0, 1, 2}));
}

TEST_CASE("second STS(13) file is the traded system")
{
    auto b = read_design_file(BDOM_DATA_DIR "/sts13_b.txt");
    auto d = cyclic_design(difference_family_preset("sts13"));
    CHECK(same_block_multiset(b, pasch_trade(d, find_pasch(d, 1).at(0))));
}
