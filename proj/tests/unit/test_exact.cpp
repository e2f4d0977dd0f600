#include "../oracles.hpp"

#include <bdom/bounds.hpp>
#include <bdom/constructors.hpp>
#include <bdom/errors.hpp>
#include <bdom/exact.hpp>
#include <bdom/neatness.hpp>

#include <doctest.h>

#include <set>

using namespace bdom;

namespace
{
    auto sts13() -> Design { return cyclic_design(difference_family_preset("sts13")); }
    auto biplane11() -> Design { return cyclic_design(difference_family_preset("biplane11")); }

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

    auto as_mask(const VertexSet & s, int n) -> std::vector<char>
    {
        std::vector<char> m(n, 0);
        for (int u : s.vertices())
            m[u] = 1;
        return m;
    }
}

TEST_CASE("brute force gamma")
{
    IncidenceGraph f(fano());
    CHECK(gamma_bruteforce(f).value == 4);
    IncidenceGraph x(fixture_8_4_3());
    auto r = gamma_bruteforce(x);
    CHECK(r.value == 5);
    CHECK(is_dominating(x, r.witness));
    IncidenceGraph dd(double_design(fixture_8_4_3()));
    CHECK(throws_kind(ErrorKind::instance_too_large, [&] { gamma_bruteforce(dd); }));
    CHECK(gamma_bruteforce(dd, 36).value == 5);
}

TEST_CASE("branch and bound gamma on the table designs")
{
    struct Row
    {
        Design d;
        int gamma;
    };
    for (auto & [d, gamma] : std::vector<Row>{{fano(), 4}, {affine_plane_9(), 5}, {sts13(), 9},
             {sts_bose(15), 10}, {projective_plane(3), 6}, {projective_plane(5), 10}}) {
        IncidenceGraph g(d);
        auto r = gamma_bnb(g, d);
        CHECK(r.optimal());
        CHECK(r.value == gamma);
        CHECK(r.lower_bound == gamma);
        CHECK(r.witness.size() == gamma);
        CHECK(is_dominating(g, r.witness));
        CHECK(hat_contained(d, r.witness));
    }
}

TEST_CASE("branch and bound agrees with the naive oracle")
{
    for (const auto & d : {fano(), affine_plane_9(), fixture_8_4_3(), complement(fano())}) {
        IncidenceGraph g(d);
        CHECK(gamma_bnb(g, d).value == oracle::gamma(d.v(), d.block_lists()));
    }
}

TEST_CASE("gamma solves are deterministic")
{
    auto d = sts_bose(15);
    IncidenceGraph g(d);
    auto a = gamma_bnb(g, d);
    auto b = gamma_bnb(g, d);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("node budget gives a proven lower bound")
{
    auto d = sts_bose(15);
    IncidenceGraph g(d);
    auto r = gamma_bnb(g, d, {0, 5});
    CHECK(r.status == ProofStatus::lower_only_timeout);
    CHECK(r.lower_bound >= 9);
    CHECK(r.lower_bound <= 10);
    CHECK(r.value >= 10);
    CHECK(is_dominating(g, r.witness));
    CHECK(to_string(r.status) == "lower-only-timeout");
}

TEST_CASE("tau and beta")
{
    auto f = fano();
    auto t = tau_exact(f);
    CHECK(t.value == 3);
    CHECK(is_transversal(f, t.witness.points));
    auto b = beta_exact(f);
    CHECK(b.value == 4);
    CHECK(is_independent_point_set(f, b.witness.points));

    for (const auto & d : {affine_plane_9(), fixture_8_4_3(), complement(fano()), biplane11(), sts13()}) {
        int tau = oracle::tau(d.v(), d.block_lists());
        CHECK(tau_exact(d).value == tau);
        CHECK(beta_exact(d).value == d.v() - tau);
    }
    auto bp = complement(fano());
    CHECK(tau_exact(bp).value <= bp.k() - bp.lambda() + 1);
    for (const auto & d : {fano(), projective_plane(3), biplane11()})
        CHECK(tau_exact(d).value <= d.k());
}

TEST_CASE("beta of the cyclic STS(19) is at least 7")
{
    auto d = cyclic_design(difference_family_preset("sts19"));
    auto b = beta_exact(d, {60, 0});
    CHECK(b.value >= 7);
    CHECK(is_independent_point_set(d, b.witness.points));
}

TEST_CASE("independent domination")
{
    auto f = fano();
    IncidenceGraph gf(f);
    auto r = idom_exact(gf, f);
    CHECK(r.value == 4);
    CHECK(is_independent(gf, r.witness));
    CHECK(is_dominating(gf, r.witness));

    auto x = fixture_8_4_3();
    CHECK(idom_exact(IncidenceGraph(x), x).value == 5);
    CHECK(idom_exact(IncidenceGraph(x), x).value == oracle::idom(x.v(), x.block_lists()));
    CHECK(idom_exact(gf, f).value == oracle::idom(f.v(), f.block_lists()));

    auto dd = double_design(x);
    auto ri = idom_exact(IncidenceGraph(dd), dd);
    CHECK(ri.value > 5);
    CHECK(ri.value == oracle::idom(dd.v(), dd.block_lists()));
}

TEST_CASE("enumerate minimum dominating sets")
{
    auto f = fano();
    IncidenceGraph g(f);
    auto e = enumerate_min_dominating(g, 4);
    CHECK(e.complete);
    CHECK(e.sets.size() == 21u);
    // brute force over all C(14,4) subsets
    auto adj = oracle::adjacency(f.v(), f.block_lists());
    std::set<std::vector<int>> want, got;
    oracle::for_each_subset(14, 4, [&](const std::vector<char> & m) {
        if (oracle::dominates(adj, m)) {
            std::vector<int> ids;
            for (int u = 0; u < 14; ++u)
                if (m[u])
                    ids.push_back(u);
            want.insert(ids);
        }
        return true;
    });
    for (const auto & s : e.sets)
        got.insert(s.vertices());
    CHECK(got == want);
    CHECK(std::is_sorted(e.sets.begin(), e.sets.end(), canonical_less));

    auto x = fixture_8_4_3();
    IncidenceGraph gx(x);
    auto ex = enumerate_min_dominating(gx, 5);
    CHECK(ex.complete);
    CHECK(ex.sets.size() == 442u);
    for (const auto & s : ex.sets) {
        REQUIRE(is_dominating(gx, s));
        REQUIRE(hat_contained(x, s));
    }

    auto all = enumerate_min_dominating(g, g.vertex_count());
    CHECK(all.sets.size() == 1u);
    CHECK(enumerate_min_dominating(g, 3).sets.empty());
}

TEST_CASE("enumeration stops on its node budget")
{
    IncidenceGraph g(fixture_8_4_3());
    EnumerationBudget tight;
    tight.max_nodes = 10;
    auto e = enumerate_min_dominating(g, 5, tight);
    CHECK_FALSE(e.complete);
}

TEST_CASE("enumerate minimal dominating sets")
{
    auto f = fano();
    IncidenceGraph g(f);
    auto e = enumerate_minimal_dominating(g);
    CHECK(e.complete);
    CHECK(e.sets.size() == 65u);
    int n = g.vertex_count();
    auto adj = oracle::adjacency(f.v(), f.block_lists());
    std::size_t brute = 0;
    for (int s = 1; s <= n; ++s)
        oracle::for_each_subset(n, s, [&](const std::vector<char> & m) {
            if (! oracle::dominates(adj, m))
                return true;
            for (int u = 0; u < n; ++u)
                if (m[u]) {
                    auto less = m;
                    less[u] = 0;
                    if (oracle::dominates(adj, less))
                        return true;
                }
            ++brute;
            return true;
        });
    CHECK(e.sets.size() == brute);
    for (const auto & s : e.sets) {
        REQUIRE(is_dominating(g, s));
        for (int u : s.vertices()) {
            auto m = as_mask(s, n);
            m[u] = 0;
            REQUIRE_FALSE(oracle::dominates(adj, m));
        }
    }

    auto ag = affine_plane_9();
    auto ea = enumerate_minimal_dominating(IncidenceGraph(ag));
    CHECK(ea.complete);
    CHECK(ea.sets.size() == 791u);

    CHECK(throws_kind(ErrorKind::budget_exceeded,
        [] { enumerate_minimal_dominating(IncidenceGraph(projective_plane(3))); }));
}

TEST_CASE("EPN certificates")
{
    for (auto d : {fano(), fixture_8_4_3(), double_design(fixture_8_4_3())}) {
        IncidenceGraph g(d);
        int gamma = gamma_bnb(g, d).value;
        CHECK(epn_certificate(g, enumerate_min_dominating(g, gamma)));
    }
    IncidenceGraph g(fano());
    CHECK_FALSE(has_epn_property(g, VertexSet::all(g)));
}

TEST_CASE("instance size guard")
{
    auto d = sts_bose(81);
    IncidenceGraph g(d);
    CHECK(g.vertex_count() > 1024);
    CHECK(throws_kind(ErrorKind::instance_too_large, [&] { gamma_bnb(g, d, {1, 0}); }));
}
