#pragma once

#include <bdom/design.hpp>
#include <bdom/incidence_graph.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace bdom
{
    enum class InvariantKind
    {
        gamma,
        tau,
        beta,
        idom
    };

    enum class ProofStatus
    {
        optimal,
        lower_only_timeout
    };

    auto to_string(InvariantKind kind) -> std::string_view;
    auto to_string(ProofStatus status) -> std::string_view;

    struct SearchLimits
    {
        double seconds = 60.0;      ///< wall-clock budget; <= 0 means unlimited
        std::uint64_t max_nodes = 0; ///< 0 means unlimited
    };

    /// Outcome of an exact solve. On timeout `value` is the best witness found
    /// and `lower_bound` the best proven lower bound (for beta, the roles of
    /// the two flip: `value` is a proven-achievable size and `upper_bound`
    /// the best proven upper bound).
    struct SolveResult
    {
        InvariantKind invariant = InvariantKind::gamma;
        int value = 0;
        int lower_bound = 0;
        int upper_bound = 0;
        VertexSet witness;
        std::uint64_t nodes = 0;
        ProofStatus status = ProofStatus::optimal;

        [[nodiscard]] auto optimal() const noexcept -> bool { return status == ProofStatus::optimal; }
    };

    /// Minimum dominating set by exhaustive search over subsets of increasing
    /// size. Throws instance_too_large when v+b exceeds `vertex_cap`.
    auto gamma_bruteforce(const IncidenceGraph & g, int vertex_cap = 26) -> SolveResult;

    /// Branch and bound for gamma. Iterative deepening from the root lower
    /// bound, so a timeout still reports the deepest size proven infeasible.
    auto gamma_bnb(const IncidenceGraph & g, const Design & d, SearchLimits limits = {}) -> SolveResult;

    /// Minimum transversal: a point set meeting every block.
    auto tau_exact(const Design & d, SearchLimits limits = {}) -> SolveResult;

    /// Maximum independent point set (contains no whole block). Cross-checked
    /// against v - tau when both searches finish.
    auto beta_exact(const Design & d, SearchLimits limits = {}) -> SolveResult;

    /// Minimum independent dominating set of G_D.
    auto idom_exact(const IncidenceGraph & g, const Design & d, SearchLimits limits = {}) -> SolveResult;

    struct EnumerationBudget
    {
        int max_vertices = 0;              ///< 0 means no cap on v+b
        std::uint64_t max_nodes = 200'000'000;
        double seconds = 0;                ///< <= 0 means unlimited
    };

    struct EnumerationResult
    {
        int target_size = 0; ///< set size for minimum enumeration, 0 for minimal
        std::vector<VertexSet> sets; ///< canonical order
        bool complete = false;
        std::uint64_t nodes = 0;
    };

    /// Every dominating set with exactly `size` vertices.
    auto enumerate_min_dominating(const IncidenceGraph & g, int size, EnumerationBudget budget = {})
        -> EnumerationResult;

    inline constexpr int default_minimal_vertex_cap = 24;

    /// Every inclusion-minimal dominating set. Throws budget_exceeded when
    /// v+b exceeds the vertex cap (default 24).
    auto enumerate_minimal_dominating(const IncidenceGraph & g,
        EnumerationBudget budget = {default_minimal_vertex_cap}) -> EnumerationResult;

    /// Every member of s has an external private neighbour: a vertex outside
    /// s whose only neighbour in s is that member.
    auto has_epn_property(const IncidenceGraph & g, const VertexSet & s) -> bool;

    /// Some enumerated minimum dominating set has the EPN property.
    auto epn_certificate(const IncidenceGraph & g, const EnumerationResult & sets) -> bool;

    auto is_transversal(const Design & d, const PointSet & points) -> bool;
    auto is_independent_point_set(const Design & d, const PointSet & points) -> bool;
}
