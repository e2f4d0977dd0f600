#pragma once

#include <bdom/design.hpp>
#include <bdom/incidence_graph.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bdom
{
    using Rational = boost::rational<std::int64_t>;

    struct BoundEntry
    {
        std::string name;
        int value = 0;
        std::string condition; ///< when the bound applies, e.g. "lambda=1"
    };

    struct BoundReport
    {
        std::vector<BoundEntry> lower;
        std::vector<BoundEntry> upper;
        int best_lower = 0;
        std::optional<int> best_upper;
        std::optional<Rational> fractional_gamma;
        /// k - lambda + 1 for symmetric designs; bounds tau, not gamma.
        std::optional<int> tau_upper_symmetric;
        std::vector<std::string> notes;

        [[nodiscard]] auto find_lower(const std::string & name) const -> std::optional<int>;
        [[nodiscard]] auto find_upper(const std::string & name) const -> std::optional<int>;
    };

    /// ceil((v+b)/(Delta+1)) with Delta = max(r, k).
    auto bound_naive(const DesignParams & p) -> int;

    /// gamma* = v(r-1)/(kr-1) + b(k-1)/(kr-1), exact.
    auto fractional_gamma(const DesignParams & p) -> Rational;
    auto bound_fractional(const DesignParams & p) -> int;

    /// ceil(2v/k) - 1, Steiner designs only.
    auto bound_steiner_bol(const DesignParams & p) -> int;

    /// 2(delta - 1) for incidence graphs without 4-cycles.
    auto bound_girth6(const IncidenceGraph & g) -> int;

    /// Any dominating set containing `points_chosen` points has at least
    /// ceil((v + points_chosen(k-1))/k) vertices.
    auto bound_struc(const DesignParams & p, int points_chosen) -> int;

    /// Lower entry tau; upper entries tau + ceil((v-tau)/2), tau + r, and the
    /// same construction read through beta.
    auto bounds_from_tau_beta(const DesignParams & p, int tau, int beta) -> BoundReport;

    /// 2(k-lambda+1) for lambda > 1, 2(k-1) for lambda = 1. Symmetric only.
    auto bound_symmetric(const DesignParams & p) -> int;

    /// Largest integer x with x <= v - sqrt(v/2), i.e. 2(v-x)^2 >= v.
    auto bound_sts_sqrt(const DesignParams & p) -> int;

    /// Smallest |I_P| over punctured blocks P of a Steiner design.
    auto bound_punctured_block(const Design & d) -> int;

    /// Bounds computable from parameters alone.
    auto params_report(const DesignParams & p) -> BoundReport;

    auto full_report(const Design & d, std::optional<int> tau = std::nullopt,
        std::optional<int> beta = std::nullopt) -> BoundReport;

    /// Point weight (r-1)/(kr-1) and block weight (k-1)/(kr-1).
    auto fractional_weights(const DesignParams & p) -> std::pair<Rational, Rational>;

    /// Every closed neighbourhood of g carries total fractional weight exactly 1.
    auto fractional_weights_sum_to_one(const IncidenceGraph & g, const DesignParams & p) -> bool;
}
