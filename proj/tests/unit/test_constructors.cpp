#include "../oracles.hpp"

#include <bdom/constructors.hpp>
#include <bdom/errors.hpp>
#include <bdom/incidence_graph.hpp>
#include <bdom/neatness.hpp>

#include <doctest.h>

using namespace bdom;

namespace
{
    void check_design(const Design & d, DesignParams expected)
    {
        CHECK(d.params() == expected);
        auto c = oracle::pair_counts(d.v(), d.block_lists());
        for (int x = 0; x < d.v(); ++x)
            for (int y = x + 1; y < d.v(); ++y)
                REQUIRE(c[x][y] == d.lambda());
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
}

TEST_CASE("fano lists the seven lines")
{
    auto d = fano();
    oracle::Blocks expect{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    for (auto & b : expect)
        for (int & x : b)
            --x;
    CHECK(d.block_lists() == expect);
    check_design(d, {7, 3, 1, 7, 3});
}

TEST_CASE("projective planes")
{
    check_design(projective_plane(2), {7, 3, 1, 7, 3});
    check_design(projective_plane(3), {13, 4, 1, 13, 4});
    check_design(projective_plane(5), {31, 6, 1, 31, 6});
    CHECK(throws_kind(ErrorKind::not_prime, [] { projective_plane(4); }));
    CHECK(throws_kind(ErrorKind::not_prime, [] { projective_plane(1); }));
    for (int q : {2, 3, 5}) {
        auto d = projective_plane(q);
        CHECK(girth_at_least_6(IncidenceGraph(d)));
        for (int i = 0; i < d.b(); ++i)
            for (int j = i + 1; j < d.b(); ++j)
                REQUIRE((d.block(i) & d.block(j)).count() == 1);
    }
}

TEST_CASE("affine plane of order 3")
{
    auto d = affine_plane_9();
    CHECK(d.b() == 12);
    check_design(d, {9, 3, 1, 12, 4});
    CHECK(classify(d).is_sts);
    CHECK_FALSE(classify(d).is_symmetric);
}

TEST_CASE("Bose construction")
{
    check_design(sts_bose(9), {9, 3, 1, 12, 4});
    check_design(sts_bose(15), {15, 3, 1, 35, 7});
    check_design(sts_bose(21), {21, 3, 1, 70, 10});
    CHECK(throws_kind(ErrorKind::bad_order, [] { sts_bose(13); }));
    CHECK(throws_kind(ErrorKind::bad_order, [] { sts_bose(3); }));
    auto d = sts_bose(15);
    for (int x = 0; x < d.v(); ++x)
        CHECK(punctured_pencil_partitions(d, x));
}

TEST_CASE("difference families")
{
    auto f13 = difference_family_preset("sts13");
    auto counts = difference_counts(f13);
    for (int i = 1; i < 13; ++i)
        CHECK(counts[i] == 1);
    auto d13 = cyclic_design(f13);
    check_design(d13, {13, 3, 1, 26, 6});
    CHECK(oracle::sorted_blocks(d13.block_lists()) == oracle::sorted_blocks(oracle::develop(13, {{0, 1, 4}, {0, 2, 7}})));

    check_design(cyclic_design(difference_family_preset("sts19")), {19, 3, 1, 57, 9});
    check_design(cyclic_design(difference_family_preset("biplane11")), {11, 5, 2, 11, 5});

    DifferenceFamily bad{13, 1, {{0, 1, 3}, {0, 2, 7}}};
    CHECK(throws_kind(ErrorKind::difference_coverage_violation, [&] { cyclic_design(bad); }));
    CHECK(throws_kind(ErrorKind::invalid_input, [] { difference_family_preset("sts7"); }));
}

TEST_CASE("fixture rows")
{
    auto d = fixture_8_4_3();
    REQUIRE(d.b() == 14);
    CHECK(d.block_points(0) == std::vector<int>{0, 1, 2, 3});
    CHECK(d.block_points(13) == std::vector<int>{2, 4, 5, 6});
    check_design(d, {8, 4, 3, 14, 7});
    CHECK(classify(d).is_simple);
}

TEST_CASE("is_prime")
{
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}
