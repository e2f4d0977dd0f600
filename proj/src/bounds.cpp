#include <bdom/bounds.hpp>
#include <bdom/errors.hpp>

#include <algorithm>
#include <string>

using std::optional;
using std::string;

namespace bdom
{
    using std::to_string;

    namespace
    {
        auto ceil_div(long long a, long long b) -> int
        {
            return static_cast<int>((a + b - 1) / b);
        }

        auto ceil_of(const Rational & x) -> int
        {
            auto q = x.numerator() / x.denominator();
            if (x.numerator() % x.denominator() != 0 && x.numerator() > 0)
                ++q;
            return static_cast<int>(q);
        }

        auto is_sts(const DesignParams & p) -> bool
        {
            return p.k == 3 && p.lambda == 1;
        }

        void finish(BoundReport & rep)
        {
            rep.best_lower = 0;
            for (const auto & e : rep.lower)
                rep.best_lower = std::max(rep.best_lower, e.value);
            rep.best_upper.reset();
            for (const auto & e : rep.upper)
                if (! rep.best_upper || e.value < *rep.best_upper)
                    rep.best_upper = e.value;
        }
    }

    auto BoundReport::find_lower(const string & name) const -> optional<int>
    {
        for (const auto & e : lower)
            if (e.name == name)
                return e.value;
        return std::nullopt;
    }

    auto BoundReport::find_upper(const string & name) const -> optional<int>
    {
        for (const auto & e : upper)
            if (e.name == name)
                return e.value;
        return std::nullopt;
    }

    auto bound_naive(const DesignParams & p) -> int
    {
        return ceil_div(static_cast<long long>(p.v) + p.b, std::max(p.r, p.k) + 1);
    }

    auto fractional_weights(const DesignParams & p) -> std::pair<Rational, Rational>
    {
        std::int64_t denom = static_cast<std::int64_t>(p.k) * p.r - 1;
        if (denom <= 0)
            throw Error(ErrorKind::invalid_input, "fractional weights need kr > 1");
        return {Rational(p.r - 1, denom), Rational(p.k - 1, denom)};
    }

    auto fractional_gamma(const DesignParams & p) -> Rational
    {
        auto [wp, wb] = fractional_weights(p);
        return wp * static_cast<std::int64_t>(p.v) + wb * static_cast<std::int64_t>(p.b);
    }

    auto bound_fractional(const DesignParams & p) -> int
    {
        return ceil_of(fractional_gamma(p));
    }

    auto bound_steiner_bol(const DesignParams & p) -> int
    {
        if (p.lambda != 1)
            throw Error(ErrorKind::not_steiner, "bound needs lambda=1");
        return ceil_div(2LL * p.v, p.k) - 1;
    }

    auto bound_girth6(const IncidenceGraph & g) -> int
    {
        if (! girth_at_least_6(g))
            throw Error(ErrorKind::girth_too_small, "incidence graph contains a 4-cycle");
        return 2 * (g.min_degree() - 1);
    }

    auto bound_struc(const DesignParams & p, int points_chosen) -> int
    {
        if (points_chosen < 0 || points_chosen > p.v)
            throw Error(ErrorKind::invalid_input, "point count out of range");
        return ceil_div(static_cast<long long>(p.v) + static_cast<long long>(points_chosen) * (p.k - 1), p.k);
    }

    auto bounds_from_tau_beta(const DesignParams & p, int tau, int beta) -> BoundReport
    {
        if (tau < 0 || beta < 0 || tau + beta != p.v)
            throw Error(ErrorKind::inconsistent_tau_beta,
                "tau=" + to_string(tau) + " and beta=" + to_string(beta) + " do not sum to v=" + to_string(p.v));
        BoundReport rep;
        rep.lower.push_back({"tau_lb", tau, "tau <= gamma"});
        rep.upper.push_back({"tau_mid", tau + (p.v - tau + 1) / 2, "transversal plus pair blocks"});
        rep.upper.push_back({"tau_plus_r", tau + p.r, "transversal plus blocks through a point"});
        rep.upper.push_back({"beta_bound", p.v - beta / 2, "v - floor(beta/2)"});
        if (p.b == p.v)
            rep.tau_upper_symmetric = p.k - p.lambda + 1;
        finish(rep);
        return rep;
    }

    auto bound_symmetric(const DesignParams & p) -> int
    {
        if (p.b != p.v)
            throw Error(ErrorKind::not_symmetric, "bound needs a symmetric design");
        return p.lambda == 1 ? 2 * (p.k - 1) : 2 * (p.k - p.lambda + 1);
    }

    auto bound_sts_sqrt(const DesignParams & p) -> int
    {
        if (! is_sts(p) || (p.v % 6 != 1 && p.v % 6 != 3))
            throw Error(ErrorKind::not_sts, "bound needs an STS");
        // smallest s >= 0 with 2 s^2 >= v
        long long s = 0;
        while (2 * s * s < p.v)
            ++s;
        return p.v - static_cast<int>(s);
    }

    auto bound_punctured_block(const Design & d) -> int
    {
        if (d.lambda() != 1)
            throw Error(ErrorKind::not_steiner, "punctured-block construction needs lambda=1");
        int best = d.v() + d.b();
        for (int j = 0; j < d.b(); ++j)
            for (int x : d.block_points(j)) {
                auto punctured = d.block(j);
                punctured.reset(x);
                int disjoint = 0;
                for (const auto & c : d.blocks())
                    if (! c.intersects(punctured))
                        ++disjoint;
                best = std::min(best, d.k() - 1 + disjoint);
            }
        return best;
    }

    auto params_report(const DesignParams & p) -> BoundReport
    {
        BoundReport rep;
        rep.lower.push_back({"naive", bound_naive(p), "always"});
        if (static_cast<long long>(p.k) * p.r > 1) {
            rep.fractional_gamma = fractional_gamma(p);
            rep.lower.push_back({"fractional", bound_fractional(p), "always"});
        }
        if (p.lambda == 1)
            rep.lower.push_back({"steiner_bol", bound_steiner_bol(p), "lambda=1"});
        rep.lower.push_back({"struc_root", bound_struc(p, 0), "always"});

        rep.upper.push_back({"all_points", p.v, "always"});
        if (p.b == p.v) {
            rep.upper.push_back({"symmetric_2k", bound_symmetric(p), "symmetric"});
            rep.tau_upper_symmetric = p.k - p.lambda + 1;
        }
        if (is_sts(p) && (p.v % 6 == 1 || p.v % 6 == 3))
            rep.upper.push_back({"sts_sqrt", bound_sts_sqrt(p), "STS"});
        if (is_sts(p) && p.v == 19)
            rep.notes.push_back(
                "literature claim gamma <= 15 for STS(19) via beta >= 7 is recorded, not asserted; "
                "the transversal construction with beta = 7 gives 16");
        rep.notes.push_back("asymptotic bounds with unspecified constants are not computable");
        finish(rep);
        return rep;
    }

    auto full_report(const Design & d, optional<int> tau, optional<int> beta) -> BoundReport
    {
        const auto & p = d.params();
        auto rep = params_report(p);
        IncidenceGraph g(d);
        if (girth_at_least_6(g))
            rep.lower.push_back({"girth6", bound_girth6(g), "no 4-cycle"});
        if (p.lambda == 1)
            rep.upper.push_back({"punctured_block", bound_punctured_block(d), "lambda=1"});
        if (tau && ! beta)
            beta = p.v - *tau;
        if (beta && ! tau)
            tau = p.v - *beta;
        if (tau) {
            auto extra = bounds_from_tau_beta(p, *tau, *beta);
            rep.lower.insert(rep.lower.end(), extra.lower.begin(), extra.lower.end());
            rep.upper.insert(rep.upper.end(), extra.upper.begin(), extra.upper.end());
        }
        finish(rep);
        return rep;
    }

    auto fractional_weights_sum_to_one(const IncidenceGraph & g, const DesignParams & p) -> bool
    {
        auto [wp, wb] = fractional_weights(p);
        for (int u = 0; u < g.vertex_count(); ++u) {
            Rational sum = g.is_point_vertex(u) ? wp : wb;
            for (int w : g.neighbours(u))
                sum += g.is_point_vertex(w) ? wp : wb;
            if (sum != Rational(1))
                return false;
        }
        return true;
    }
}
