#include <bdom/campaigns.hpp>
#include <bdom/constructors.hpp>
#include <bdom/errors.hpp>
#include <bdom/neatness.hpp>
#include <bdom/report.hpp>

#include <algorithm>
#include <future>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace bdom
{
    using std::to_string;

    namespace
    {
        struct Solved
        {
            SolveResult result;
            bool verified = false;
        };

        auto solve_gamma(const Design & d, const SearchLimits & limits) -> Solved
        {
            IncidenceGraph g(d);
            auto r = gamma_bnb(g, d, limits);
            return Solved{r, is_dominating(g, r.witness)};
        }

        auto gamma_json(const Solved & s) -> json
        {
            return json{{"value", s.result.value}, {"status", to_string(s.result.status)},
                {"lowerBound", s.result.lower_bound}, {"witness", vertex_set_to_json(s.result.witness)},
                {"witnessVerified", s.verified}};
        }

        /// Runs f on every input concurrently, keeping input order.
        template <typename F>
        auto parallel_map(const vector<NamedDesign> & inputs, F && f)
        {
            using R = decltype(f(inputs.front()));
            vector<std::future<R>> futures;
            for (const auto & in : inputs)
                futures.push_back(std::async(std::launch::async, [&f, &in] { return f(in); }));
            vector<R> out;
            for (auto & fut : futures)
                out.push_back(fut.get());
            return out;
        }

        void require(bool ok, const string & message)
        {
            if (! ok)
                throw Error(ErrorKind::invalid_input, message);
        }

        auto sts_uniform(const vector<NamedDesign> & inputs, const CampaignOptions & opts) -> vector<ClaimVerdict>
        {
            for (const auto & in : inputs)
                if (! classify(in.design).is_sts)
                    throw Error(ErrorKind::not_sts, in.label + " is not a Steiner triple system");
            auto solved = parallel_map(inputs, [&](const NamedDesign & in) { return solve_gamma(in.design, opts.limits); });

            vector<int> orders;
            for (const auto & in : inputs)
                if (std::find(orders.begin(), orders.end(), in.design.v()) == orders.end())
                    orders.push_back(in.design.v());

            vector<ClaimVerdict> out;
            for (int v : orders) {
                ClaimVerdict cv{"gamma of STS(v) depends only on v", "STS(" + std::to_string(v) + ")",
                    Verdict::supported, json::object()};
                json designs = json::array();
                bool all_optimal = true;
                int lo = -1, hi = -1;
                std::size_t lo_at = 0, hi_at = 0;
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    if (inputs[i].design.v() != v)
                        continue;
                    auto entry = gamma_json(solved[i]);
                    entry["source"] = inputs[i].label;
                    designs.push_back(entry);
                    if (! solved[i].result.optimal()) {
                        all_optimal = false;
                        continue;
                    }
                    int g = solved[i].result.value;
                    if (lo < 0 || g < lo) {
                        lo = g;
                        lo_at = i;
                    }
                    if (hi < 0 || g > hi) {
                        hi = g;
                        hi_at = i;
                    }
                }
                cv.evidence["designs"] = designs;
                if (lo != hi && lo >= 0) {
                    cv.verdict = Verdict::refuted;
                    cv.evidence["witness"] = {{"smaller", inputs[lo_at].label}, {"larger", inputs[hi_at].label},
                        {"gammaSmaller", lo}, {"gammaLarger", hi}};
                }
                else if (! all_optimal)
                    cv.verdict = Verdict::not_computed;
                out.push_back(std::move(cv));
            }
            return out;
        }

        auto pasch(const vector<NamedDesign> & inputs, const CampaignOptions & opts) -> vector<ClaimVerdict>
        {
            vector<ClaimVerdict> out;
            for (const auto & in : inputs) {
                auto configs = find_pasch(in.design, opts.pasch_trades);
                if (configs.empty()) {
                    out.push_back({"gamma is invariant under a Pasch trade", in.label, Verdict::not_computed,
                        {{"reason", "no Pasch configuration found"}}});
                    continue;
                }
                vector<NamedDesign> pair{in};
                for (const auto & c : configs)
                    pair.push_back({in.label + " traded", pasch_trade(in.design, c)});
                auto solved = parallel_map(pair, [&](const NamedDesign & x) { return solve_gamma(x.design, opts.limits); });
                for (std::size_t i = 0; i < configs.size(); ++i) {
                    const auto & c = configs[i];
                    const auto & before = solved[0];
                    const auto & after = solved[i + 1];
                    json blocks = json::array();
                    for (int b : c.blocks)
                        blocks.push_back(b + 1);
                    json points = json::array();
                    for (int p : c.points)
                        points.push_back(p + 1);
                    json ev{{"configuration", {{"points", points}, {"blocks", blocks}}},
                        {"tradedValidates", true}, {"gammaBefore", gamma_json(before)},
                        {"gammaAfter", gamma_json(after)},
                        {"tradedPaschCount", find_pasch(pair[i + 1].design).size()},
                        {"originalPaschCount", find_pasch(in.design).size()}};
                    Verdict verdict = Verdict::not_computed;
                    if (before.result.optimal() && after.result.optimal())
                        verdict = before.result.value == after.result.value ? Verdict::supported : Verdict::refuted;
                    if (verdict == Verdict::refuted)
                        ev["tradedDesign"] = emit_design_file(pair[i + 1].design);
                    out.push_back({"gamma is invariant under a Pasch trade", in.label, verdict, ev});
                }
            }
            return out;
        }

        auto projective(const CampaignOptions & opts) -> vector<ClaimVerdict>
        {
            vector<NamedDesign> planes;
            for (int q : opts.orders)
                planes.push_back({"pg:" + std::to_string(q), projective_plane(q)});
            struct Outcome
            {
                Solved gamma;
                std::optional<EnumerationResult> minimal;
                string minimal_note;
            };
            auto outcomes = parallel_map(planes, [&](const NamedDesign & in) {
                Outcome o{solve_gamma(in.design, opts.limits), std::nullopt, {}};
                try {
                    o.minimal = enumerate_minimal_dominating(IncidenceGraph(in.design), opts.minimal_budget);
                }
                catch (const Error & e) {
                    if (e.kind() != ErrorKind::budget_exceeded)
                        throw;
                    o.minimal_note = e.what();
                }
                return o;
            });

            vector<ClaimVerdict> out;
            for (std::size_t i = 0; i < planes.size(); ++i) {
                int q = opts.orders[i];
                const auto & o = outcomes[i];
                json ev = gamma_json(o.gamma);
                ev["expected"] = 2 * q;
                Verdict v = Verdict::not_computed;
                if (o.gamma.result.optimal())
                    v = o.gamma.result.value == 2 * q ? Verdict::supported : Verdict::refuted;
                out.push_back({"gamma(PG(2,q)) = 2q", planes[i].label, v, ev});

                ClaimVerdict sn{"projective planes are super-neat", planes[i].label, Verdict::not_computed, json::object()};
                if (o.minimal && o.minimal->complete) {
                    sn.evidence["minimalSets"] = o.minimal->sets.size();
                    sn.verdict = Verdict::supported;
                    for (const auto & s : o.minimal->sets)
                        if (! is_neat_set(planes[i].design, s)) {
                            sn.verdict = Verdict::refuted;
                            sn.evidence["nonNeatMinimalSet"] = vertex_set_to_json(s);
                            break;
                        }
                }
                else
                    sn.evidence["reason"] = o.minimal ? string("minimal enumeration incomplete") : o.minimal_note;
                out.push_back(std::move(sn));
            }
            return out;
        }

        auto biplane(const vector<NamedDesign> & inputs, const CampaignOptions & opts) -> vector<ClaimVerdict>
        {
            for (const auto & in : inputs) {
                const auto & d = in.design;
                require(d.b() == d.v() && d.lambda() == 2 && d.k() >= 4,
                    in.label + " is not a symmetric (v,k,2)-design with k >= 4");
            }
            auto solved = parallel_map(inputs, [&](const NamedDesign & in) { return solve_gamma(in.design, opts.limits); });
            vector<ClaimVerdict> out;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                json ev = gamma_json(solved[i]);
                ev["k"] = inputs[i].design.k();
                Verdict v = Verdict::not_computed;
                if (solved[i].result.optimal())
                    v = solved[i].result.value == inputs[i].design.k() ? Verdict::supported : Verdict::refuted;
                out.push_back({"gamma of a biplane equals k", inputs[i].label, v, ev});
            }
            return out;
        }

        auto residual_campaign(const vector<NamedDesign> & inputs, const CampaignOptions & opts) -> vector<ClaimVerdict>
        {
            vector<NamedDesign> work;
            for (const auto & in : inputs) {
                work.push_back(in);
                work.push_back({in.label + " residual", residual(in.design, opts.block)});
            }
            auto solved = parallel_map(work, [&](const NamedDesign & in) { return solve_gamma(in.design, opts.limits); });
            vector<ClaimVerdict> out;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                const auto & whole = solved[2 * i];
                const auto & res = solved[2 * i + 1];
                json ev{{"gammaDesign", gamma_json(whole)}, {"gammaResidual", gamma_json(res)},
                    {"residualParams", {{"v", work[2 * i + 1].design.v()}, {"k", work[2 * i + 1].design.k()},
                                           {"lambda", work[2 * i + 1].design.lambda()}}},
                    {"removedBlock", opts.block + 1}};
                Verdict v = Verdict::not_computed;
                if (whole.result.optimal() && res.result.optimal()) {
                    ev["expectedResidual"] = whole.result.value - 1;
                    v = res.result.value == whole.result.value - 1 ? Verdict::supported : Verdict::refuted;
                }
                out.push_back({"gamma(residual) = gamma - 1", inputs[i].label, v, ev});
            }
            return out;
        }

        auto simple_neat(const vector<NamedDesign> & inputs, const CampaignOptions & opts) -> vector<ClaimVerdict>
        {
            struct Pair
            {
                Solved gamma;
                std::optional<SolveResult> idom;
            };
            auto solved = parallel_map(inputs, [&](const NamedDesign & in) {
                Pair p{solve_gamma(in.design, opts.limits), std::nullopt};
                if (classify(in.design).is_simple)
                    p.idom = idom_exact(IncidenceGraph(in.design), in.design, opts.limits);
                return p;
            });
            vector<ClaimVerdict> out;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                const auto & p = solved[i];
                ClaimVerdict cv{"simple designs are neat", inputs[i].label, Verdict::not_computed, json::object()};
                if (! p.idom) {
                    cv.evidence["reason"] = "design is not simple";
                    out.push_back(std::move(cv));
                    continue;
                }
                cv.evidence["gamma"] = gamma_json(p.gamma);
                cv.evidence["idom"] = {{"value", p.idom->value}, {"status", to_string(p.idom->status)},
                    {"witness", vertex_set_to_json(p.idom->witness)}};
                if (p.gamma.result.optimal() && p.idom->optimal())
                    cv.verdict = p.gamma.result.value == p.idom->value ? Verdict::supported : Verdict::refuted;
                out.push_back(std::move(cv));
            }
            return out;
        }
    }

    auto to_string(Verdict v) -> std::string_view
    {
        switch (v) {
            case Verdict::supported: return "supported";
            case Verdict::refuted: return "refuted";
            case Verdict::not_computed: return "not-computed";
        }
        return "unknown";
    }

    auto campaign_names() -> vector<string>
    {
        return {"sts-uniform", "pasch", "projective", "biplane", "residual", "simple-neat"};
    }

    auto run_campaign(std::string_view name, const vector<NamedDesign> & inputs, const CampaignOptions & opts)
        -> CampaignReport
    {
        CampaignReport rep{string(name), {}};
        if (name != "projective")
            require(! inputs.empty(), "campaign '" + string(name) + "' needs at least one input design");
        if (name == "sts-uniform")
            rep.verdicts = sts_uniform(inputs, opts);
        else if (name == "pasch")
            rep.verdicts = pasch(inputs, opts);
        else if (name == "projective")
            rep.verdicts = projective(opts);
        else if (name == "biplane")
            rep.verdicts = biplane(inputs, opts);
        else if (name == "residual")
            rep.verdicts = residual_campaign(inputs, opts);
        else if (name == "simple-neat")
            rep.verdicts = simple_neat(inputs, opts);
        else
            throw Error(ErrorKind::invalid_input, "unknown campaign '" + string(name) + "'");
        return rep;
    }

    auto to_json(const CampaignReport & r) -> json
    {
        json verdicts = json::array();
        for (const auto & v : r.verdicts)
            verdicts.push_back(
                {{"claim", v.claim}, {"subject", v.subject}, {"verdict", to_string(v.verdict)}, {"evidence", v.evidence}});
        return json{{"campaign", r.campaign}, {"verdicts", verdicts}};
    }

    auto render_text(const CampaignReport & r) -> string
    {
        std::ostringstream out;
        out << "campaign " << r.campaign << '\n';
        for (const auto & v : r.verdicts) {
            out << "  [" << to_string(v.verdict) << "] " << v.claim << " -- " << v.subject << '\n';
            out << "      " << v.evidence.dump() << '\n';
        }
        return out.str();
    }
}
