#pragma once

// Structural properties checked over every built-in design.

#include <bdom/bounds.hpp>
#include <bdom/constructors.hpp>
#include <bdom/design_file.hpp>
#include <bdom/exact.hpp>
#include <bdom/neatness.hpp>

#include <map>
#include <string>
#include <vector>

namespace properties
{
    struct Outcome
    {
        std::string name;
        int checked = 0;
        std::vector<std::string> violations;
    };

    inline auto builtin_designs() -> std::vector<bdom::NamedDesign>
    {
        using namespace bdom;
        std::vector<NamedDesign> out;
        for (const char * src : {"fano", "ag9", "fixture-843", "double:fixture-843", "pg:2", "pg:3", "pg:5",
                 "sts-bose:9", "sts-bose:15", "cyclic:sts13", "cyclic:sts19", "cyclic:biplane11", "complement:fano",
                 "residual:pg:3", "derived:cyclic:biplane11"})
            out.push_back(resolve_design(src));
        out.push_back({"sts13_b", read_design_file(BDOM_DATA_DIR "/sts13_b.txt")});
        return out;
    }

    inline auto run_suite(double seconds_per_solve = 60) -> std::vector<Outcome>
    {
        using namespace bdom;
        auto designs = builtin_designs();
        Outcome a{"fractional weights sum to 1 at every vertex"};
        Outcome b{"fractional >= naive, equal iff symmetric"};
        Outcome c{"tau <= gamma <= tau + ceil((v-tau)/2), gamma <= tau + r"};
        Outcome d{"hat containment for witnesses and enumerated sets"};
        Outcome e{"punctured-block closures dominate"};
        Outcome f{"blocks through a point partition the rest"};
        Outcome g{"symmetric: blocks meet in lambda points, tau <= k-lambda+1"};
        Outcome h{"gamma(2D) >= gamma(D)"};
        std::map<std::string, int> gammas;

        for (const auto & [label, des] : designs) {
            IncidenceGraph graph(des);
            const auto & p = des.params();
            bool symmetric = p.b == p.v;

            ++a.checked;
            if (! fractional_weights_sum_to_one(graph, p))
                a.violations.push_back(label);

            ++b.checked;
            Rational naive(p.v + p.b, std::max(p.r, p.k) + 1);
            auto frac = fractional_gamma(p);
            if (frac < naive || (frac == naive) != symmetric || bound_fractional(p) < bound_naive(p))
                b.violations.push_back(label);

            SearchLimits limits{seconds_per_solve, 0};
            auto gamma = gamma_bnb(graph, des, limits);
            auto tau = tau_exact(des, limits);
            if (gamma.optimal() && tau.optimal()) {
                gammas[label] = gamma.value;
                ++c.checked;
                int t = tau.value;
                if (! (t <= gamma.value && gamma.value <= t + (p.v - t + 1) / 2 && gamma.value <= t + p.r))
                    c.violations.push_back(label);
            }

            ++d.checked;
            if (! hat_contained(des, gamma.witness))
                d.violations.push_back(label + " witness");
            if (gamma.optimal() && graph.vertex_count() <= 40) {
                auto sets = enumerate_min_dominating(graph, gamma.value);
                for (const auto & s : sets.sets) {
                    ++d.checked;
                    if (! hat_contained(des, s))
                        d.violations.push_back(label + " enumerated set");
                }
            }

            if (p.lambda == 1) {
                for (const auto & s : punctured_block_sets(des)) {
                    ++e.checked;
                    if (! is_dominating(graph, s))
                        e.violations.push_back(label);
                }
                for (int x = 0; x < p.v; ++x) {
                    ++f.checked;
                    if (! punctured_pencil_partitions(des, x))
                        f.violations.push_back(label + " point " + std::to_string(x + 1));
                }
            }

            if (symmetric) {
                for (int i = 0; i < p.b; ++i)
                    for (int j = i + 1; j < p.b; ++j) {
                        ++g.checked;
                        if (static_cast<int>((des.block(i) & des.block(j)).count()) != p.lambda)
                            g.violations.push_back(label);
                    }
                ++g.checked;
                if (! tau.optimal() || tau.value > p.k - p.lambda + 1)
                    g.violations.push_back(label + " tau");
            }
        }

        ++h.checked;
        if (! gammas.count("fixture-843") || ! gammas.count("double:fixture-843")
            || gammas["double:fixture-843"] < gammas["fixture-843"])
            h.violations.push_back("fixture pair");

        return {a, b, c, d, e, f, g, h};
    }
}
