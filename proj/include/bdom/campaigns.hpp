#pragma once

#include <bdom/design_file.hpp>
#include <bdom/exact.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bdom
{
    enum class Verdict
    {
        supported,
        refuted,
        not_computed
    };

    auto to_string(Verdict v) -> std::string_view;

    struct ClaimVerdict
    {
        std::string claim;
        std::string subject;
        Verdict verdict = Verdict::not_computed;
        nlohmann::json evidence;
    };

    struct CampaignReport
    {
        std::string campaign;
        std::vector<ClaimVerdict> verdicts;
    };

    struct CampaignOptions
    {
        SearchLimits limits{};
        EnumerationBudget minimal_budget{default_minimal_vertex_cap};
        std::vector<int> orders{2, 3};  ///< projective campaign
        int block = 0;                  ///< residual campaign, 0-based
        std::size_t pasch_trades = 1;   ///< configurations traded per input
    };

    /// Campaign names: sts-uniform, pasch, projective, biplane, residual,
    /// simple-neat. Inputs are analysed concurrently; verdict order follows
    /// input order.
    auto run_campaign(std::string_view name, const std::vector<NamedDesign> & inputs, const CampaignOptions & opts)
        -> CampaignReport;

    auto campaign_names() -> std::vector<std::string>;

    auto to_json(const CampaignReport & r) -> nlohmann::json;
    auto render_text(const CampaignReport & r) -> std::string;
}
