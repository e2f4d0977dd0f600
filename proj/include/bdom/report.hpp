#pragma once

#include <bdom/bounds.hpp>
#include <bdom/design.hpp>
#include <bdom/design_file.hpp>
#include <bdom/exact.hpp>
#include <bdom/neatness.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bdom
{
    struct AnalysisOptions
    {
        bool exact = false;     ///< gamma, tau, beta
        bool enumerate = false; ///< all minimum dominating sets
        bool neat = false;      ///< idom and the neatness verdicts
        bool minimal = false;   ///< minimal enumeration for super-neatness
        SearchLimits limits{};
        EnumerationBudget minimum_budget{};
        EnumerationBudget minimal_budget{default_minimal_vertex_cap};
    };

    /// Summary of a solve, witness as 1-based points and 1-based block indices.
    struct SolveSummary
    {
        std::string invariant;
        int value = 0;
        int lower_bound = 0;
        int upper_bound = 0;
        std::string status;
        std::uint64_t nodes = 0;
        std::vector<int> witness_points;
        std::vector<int> witness_blocks;

        auto operator==(const SolveSummary &) const -> bool = default;
    };

    struct EnumerationSummary
    {
        int target_size = 0;
        std::size_t count = 0;
        bool complete = false;
        std::uint64_t nodes = 0;

        auto operator==(const EnumerationSummary &) const -> bool = default;
    };

    struct AnalysisReport
    {
        std::string source;
        DesignParams params;
        DesignClass design_class;
        BoundReport bounds;
        std::optional<SolveSummary> gamma;
        std::optional<SolveSummary> tau;
        std::optional<SolveSummary> beta;
        std::optional<SolveSummary> idom;
        std::optional<EnumerationSummary> minimum_sets;
        std::optional<EnumerationSummary> minimal_sets;
        std::optional<bool> epn_certificate;
        std::optional<NeatnessReport> neatness;
        std::vector<std::string> notes;

        /// Some solve stopped on its budget.
        [[nodiscard]] auto timed_out() const -> bool;
        /// Some enumeration stopped on its budget.
        [[nodiscard]] auto budget_hit() const -> bool;
    };

    auto summarize(const SolveResult & r) -> SolveSummary;

    auto analyze(const NamedDesign & nd, const AnalysisOptions & opts) -> AnalysisReport;

    auto to_json(const AnalysisReport & r) -> nlohmann::json;
    auto analysis_from_json(const nlohmann::json & j) -> AnalysisReport;
    auto bounds_to_json(const BoundReport & b) -> nlohmann::json;
    auto vertex_set_to_json(const VertexSet & s) -> nlohmann::json;

    /// Human-readable rendering with the bound ladder table.
    auto render_text(const AnalysisReport & r) -> std::string;
}
