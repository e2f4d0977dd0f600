// Command-line front end: design generation, bounds, exact solves, neatness
// analysis and conjecture campaigns.

#include <bdom/bounds.hpp>
#include <bdom/campaigns.hpp>
#include <bdom/constructors.hpp>
#include <bdom/design_file.hpp>
#include <bdom/errors.hpp>
#include <bdom/neatness.hpp>
#include <bdom/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bdom;
using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_validation = 2,
        exit_timeout = 3,
        exit_budget = 4
    };

    struct Common
    {
        string format = "text";
        string out;
        double timeout = 60.0;
        std::uint64_t budget = 0;
    };

    void write_output(const Common & c, const string & text)
    {
        if (c.out.empty()) {
            std::cout << text;
            if (! text.empty() && text.back() != '\n')
                std::cout << '\n';
            return;
        }
        std::ofstream f(c.out);
        if (! f)
            throw Error(ErrorKind::invalid_input, "cannot write '" + c.out + "'");
        f << text;
        if (! text.empty() && text.back() != '\n')
            f << '\n';
    }

    auto limits(const Common & c) -> SearchLimits
    {
        return SearchLimits{c.timeout, c.budget};
    }

    void add_common(CLI::App * app, Common & c, bool search)
    {
        app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        app->add_option("--out", c.out, "Write output to this path");
        if (search) {
            app->add_option("--timeout", c.timeout, "Seconds per exact solve (env BDOM_TIMEOUT)");
            app->add_option("--budget", c.budget, "Node budget per search, 0 for none");
        }
    }

    auto exit_for(const AnalysisReport & r) -> int
    {
        if (r.timed_out())
            return exit_timeout;
        if (r.budget_hit())
            return exit_budget;
        return exit_ok;
    }

    auto analysis_output(const Common & c, const AnalysisReport & r) -> int
    {
        write_output(c, c.format == "json" ? to_json(r).dump(2) : render_text(r));
        return exit_for(r);
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Domination in incidence graphs of block designs"};
    app.require_subcommand(1);

    Common common;
    if (const char * env = std::getenv("BDOM_TIMEOUT")) {
        try {
            common.timeout = std::stod(env);
        }
        catch (const std::exception &) {
            std::cerr << "ignoring malformed BDOM_TIMEOUT='" << env << "'\n";
        }
    }

    // gen
    string gen_name, gen_source, gen_preset = "sts13";
    int gen_q = 2, gen_v = 9, gen_block = 1;
    auto * gen = app.add_subcommand("gen", "Write a design file");
    gen->add_option("name", gen_name,
           "fano | pg | ag9 | sts-bose | cyclic | fixture-843 | double | complement | dual | residual | derived | "
           "pasch-trade")
        ->required();
    gen->add_option("source", gen_source, "Input design (file or built-in) for transforms");
    gen->add_option("--q", gen_q, "Prime order for pg");
    gen->add_option("--v", gen_v, "Order for sts-bose");
    gen->add_option("--preset", gen_preset, "Difference family: sts13 | sts19 | biplane11");
    gen->add_option("--block", gen_block, "1-based block index for residual/derived");
    add_common(gen, common, false);

    // check
    string source;
    auto * check = app.add_subcommand("check", "Validate and classify a design");
    check->add_option("source", source, "Design file or built-in name")->required();
    add_common(check, common, false);

    // bounds
    string params_text;
    auto * bounds = app.add_subcommand("bounds", "Bound ladder for gamma");
    bounds->add_option("source", source, "Design file or built-in name");
    bounds->add_option("--params", params_text, "v,k,lambda instead of a design");
    add_common(bounds, common, false);

    // gamma
    bool bruteforce = false;
    int brute_cap = 26;
    auto * gamma = app.add_subcommand("gamma", "Exact domination number");
    gamma->add_option("source", source)->required();
    gamma->add_flag("--bruteforce", bruteforce, "Use the exhaustive oracle");
    gamma->add_option("--cap", brute_cap, "Vertex cap for --bruteforce");
    add_common(gamma, common, true);

    // tau
    auto * tau = app.add_subcommand("tau", "Transversal and independence numbers");
    tau->add_option("source", source)->required();
    add_common(tau, common, true);

    // neat
    bool minimal = false;
    int minimal_cap = default_minimal_vertex_cap;
    auto * neat = app.add_subcommand("neat", "Neat and super-neat classification");
    neat->add_option("source", source)->required();
    neat->add_flag("--minimal", minimal, "Enumerate minimal dominating sets for super-neatness");
    neat->add_option("--minimal-cap", minimal_cap, "Vertex cap for minimal enumeration");
    add_common(neat, common, true);

    // pasch
    std::size_t pasch_limit = 0;
    auto * pasch = app.add_subcommand("pasch", "List Pasch configurations of an STS");
    pasch->add_option("source", source)->required();
    pasch->add_option("--limit", pasch_limit, "Stop after this many, 0 for all");
    add_common(pasch, common, false);

    // analyze
    AnalysisOptions aopts;
    auto * analyze_cmd = app.add_subcommand("analyze", "Bounds plus optional exact analysis");
    analyze_cmd->add_option("source", source)->required();
    analyze_cmd->add_flag("--exact", aopts.exact, "Solve gamma, tau and beta");
    analyze_cmd->add_flag("--enumerate", aopts.enumerate, "Enumerate minimum dominating sets");
    analyze_cmd->add_flag("--neat", aopts.neat, "Independent domination and neatness");
    analyze_cmd->add_flag("--minimal", aopts.minimal, "Minimal enumeration for super-neatness");
    analyze_cmd->add_option("--minimal-cap", minimal_cap, "Vertex cap for minimal enumeration");
    add_common(analyze_cmd, common, true);

    // verify
    string campaign;
    vector<string> inputs;
    CampaignOptions copts;
    vector<int> orders;
    int res_block = 1;
    auto * verify = app.add_subcommand("verify", "Run a conjecture campaign");
    verify->add_option("campaign", campaign, "sts-uniform | pasch | projective | biplane | residual | simple-neat")
        ->required();
    verify->add_option("inputs", inputs, "Design files or built-in names");
    verify->add_option("--q", orders, "Orders for the projective campaign");
    verify->add_option("--block", res_block, "1-based block removed in the residual campaign");
    verify->add_option("--trades", copts.pasch_trades, "Pasch configurations traded per input");
    verify->add_option("--minimal-cap", minimal_cap, "Vertex cap for minimal enumeration");
    add_common(verify, common, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            NamedDesign nd{gen_name, fano()};
            auto input = [&]() {
                if (gen_source.empty())
                    throw Error(ErrorKind::invalid_input, "'" + gen_name + "' needs an input design");
                return resolve_design(gen_source).design;
            };
            if (gen_name == "fano")
                nd.design = fano();
            else if (gen_name == "pg")
                nd = {"PG(2," + std::to_string(gen_q) + ")", projective_plane(gen_q)};
            else if (gen_name == "ag9")
                nd.design = affine_plane_9();
            else if (gen_name == "sts-bose")
                nd = {"Bose STS(" + std::to_string(gen_v) + ")", sts_bose(gen_v)};
            else if (gen_name == "cyclic")
                nd = {"cyclic " + gen_preset, cyclic_design(difference_family_preset(gen_preset))};
            else if (gen_name == "fixture-843")
                nd.design = fixture_8_4_3();
            else if (gen_name == "double")
                nd = {"double of " + gen_source, double_design(input())};
            else if (gen_name == "complement")
                nd = {"complement of " + gen_source, complement(input())};
            else if (gen_name == "dual")
                nd = {"dual of " + gen_source, dual(input())};
            else if (gen_name == "residual")
                nd = {"residual of " + gen_source, residual(input(), gen_block - 1)};
            else if (gen_name == "derived")
                nd = {"derived of " + gen_source, derived(input(), gen_block - 1)};
            else if (gen_name == "pasch-trade")
                nd = {"Pasch trade of " + gen_source, resolve_design("pasch-trade:" + gen_source).design};
            else
                throw Error(ErrorKind::invalid_input, "unknown generator '" + gen_name + "'");
            write_output(common, emit_design_file(nd.design, nd.label));
            return exit_ok;
        }

        if (check->parsed()) {
            auto nd = resolve_design(source);
            auto cls = classify(nd.design);
            const auto & p = nd.design.params();
            json j{{"source", nd.label}, {"valid", true},
                {"params", {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"b", p.b}, {"r", p.r}}},
                {"class", {{"simple", cls.is_simple}, {"steiner", cls.is_steiner}, {"symmetric", cls.is_symmetric},
                              {"sts", cls.is_sts}}}};
            std::ostringstream text;
            text << nd.label << ": valid (" << p.v << "," << p.k << "," << p.lambda << ")-design, b=" << p.b
                 << " r=" << p.r << (cls.is_simple ? " simple" : " non-simple") << (cls.is_steiner ? " steiner" : "")
                 << (cls.is_symmetric ? " symmetric" : "") << (cls.is_sts ? " sts" : "") << '\n';
            write_output(common, common.format == "json" ? j.dump(2) : text.str());
            return exit_ok;
        }

        if (bounds->parsed()) {
            if (! params_text.empty()) {
                int v = 0, k = 0, lambda = 0;
                char c1 = 0, c2 = 0;
                std::istringstream in(params_text);
                if (! (in >> v >> c1 >> k >> c2 >> lambda) || c1 != ',' || c2 != ',')
                    throw Error(ErrorKind::invalid_input, "--params expects v,k,lambda");
                auto p = DesignParams::from(v, k, lambda);
                auto rep = params_report(p);
                AnalysisReport r;
                r.source = "params " + params_text;
                r.params = p;
                r.design_class = DesignClass{true, p.lambda == 1, p.b == p.v, p.lambda == 1 && p.k == 3};
                r.bounds = rep;
                r.notes.push_back("parameters only: design class assumed from parameters");
                return analysis_output(common, r);
            }
            if (source.empty())
                throw Error(ErrorKind::invalid_input, "bounds needs a design or --params");
            return analysis_output(common, analyze(resolve_design(source), AnalysisOptions{}));
        }

        if (gamma->parsed()) {
            auto nd = resolve_design(source);
            IncidenceGraph g(nd.design);
            auto result = bruteforce ? gamma_bruteforce(g, brute_cap) : gamma_bnb(g, nd.design, limits(common));
            auto r = analyze(nd, AnalysisOptions{});
            r.gamma = summarize(result);
            return analysis_output(common, r);
        }

        if (tau->parsed()) {
            auto nd = resolve_design(source);
            auto t = tau_exact(nd.design, limits(common));
            auto b = beta_exact(nd.design, limits(common));
            auto r = analyze(nd, AnalysisOptions{});
            r.tau = summarize(t);
            r.beta = summarize(b);
            if (t.optimal() && b.optimal())
                r.bounds = full_report(nd.design, t.value, b.value);
            return analysis_output(common, r);
        }

        if (neat->parsed()) {
            AnalysisOptions o;
            o.enumerate = o.neat = true;
            o.minimal = minimal;
            o.limits = limits(common);
            o.minimum_budget.max_nodes = common.budget ? common.budget : o.minimum_budget.max_nodes;
            o.minimal_budget.max_vertices = minimal_cap;
            return analysis_output(common, analyze(resolve_design(source), o));
        }

        if (pasch->parsed()) {
            auto nd = resolve_design(source);
            auto configs = find_pasch(nd.design, pasch_limit);
            json arr = json::array();
            std::ostringstream text;
            text << nd.label << ": " << configs.size() << " Pasch configuration(s)\n";
            for (const auto & c : configs) {
                json pts = json::array(), blks = json::array();
                for (int p : c.points)
                    pts.push_back(p + 1);
                for (int b : c.blocks)
                    blks.push_back(b + 1);
                arr.push_back({{"points", pts}, {"blocks", blks}});
                text << "  blocks " << c.blocks[0] + 1 << ' ' << c.blocks[1] + 1 << ' ' << c.blocks[2] + 1 << ' '
                     << c.blocks[3] + 1 << "  points a-f " << pts.dump() << '\n';
            }
            json j{{"source", nd.label}, {"count", configs.size()}, {"configurations", arr}};
            write_output(common, common.format == "json" ? j.dump(2) : text.str());
            return exit_ok;
        }

        if (analyze_cmd->parsed()) {
            aopts.limits = limits(common);
            if (common.budget)
                aopts.minimum_budget.max_nodes = common.budget;
            aopts.minimal_budget.max_vertices = minimal_cap;
            return analysis_output(common, analyze(resolve_design(source), aopts));
        }

        if (verify->parsed()) {
            copts.limits = limits(common);
            copts.block = res_block - 1;
            copts.minimal_budget.max_vertices = minimal_cap;
            if (! orders.empty())
                copts.orders = orders;
            vector<NamedDesign> designs;
            for (const auto & in : inputs)
                designs.push_back(resolve_design(in));
            auto rep = run_campaign(campaign, designs, copts);
            write_output(common, common.format == "json" ? to_json(rep).dump(2) : render_text(rep));
            return exit_ok;
        }
    }
    catch (const Error & e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return e.kind() == ErrorKind::budget_exceeded ? exit_budget : exit_validation;
    }
    return exit_ok;
}
