#include <bdom/errors.hpp>
#include <bdom/report.hpp>

#include <iomanip>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace bdom
{
    using std::to_string;

    namespace
    {
        auto one_based(const vector<int> & xs) -> vector<int>
        {
            auto out = xs;
            for (auto & x : out)
                ++x;
            return out;
        }

        auto vertex_set_from_json(const json & j, const DesignParams & p) -> VertexSet
        {
            VertexSet s{PointSet(p.v), PointSet(p.b)};
            for (int x : j.at("points").get<vector<int>>())
                s.points.set(x - 1);
            for (int x : j.at("blocks").get<vector<int>>())
                s.blocks.set(x - 1);
            return s;
        }

        auto solve_to_json(const SolveSummary & s) -> json
        {
            return json{{"invariant", s.invariant}, {"value", s.value}, {"lowerBound", s.lower_bound},
                {"upperBound", s.upper_bound}, {"status", s.status}, {"nodes", s.nodes},
                {"witness", {{"points", s.witness_points}, {"blocks", s.witness_blocks}}}};
        }

        auto solve_from_json(const json & j) -> SolveSummary
        {
            SolveSummary s;
            s.invariant = j.at("invariant").get<string>();
            s.value = j.at("value").get<int>();
            s.lower_bound = j.at("lowerBound").get<int>();
            s.upper_bound = j.at("upperBound").get<int>();
            s.status = j.at("status").get<string>();
            s.nodes = j.at("nodes").get<std::uint64_t>();
            s.witness_points = j.at("witness").at("points").get<vector<int>>();
            s.witness_blocks = j.at("witness").at("blocks").get<vector<int>>();
            return s;
        }

        auto enum_to_json(const EnumerationSummary & e) -> json
        {
            return json{{"targetSize", e.target_size}, {"count", e.count}, {"complete", e.complete}, {"nodes", e.nodes}};
        }

        auto enum_from_json(const json & j) -> EnumerationSummary
        {
            return EnumerationSummary{j.at("targetSize").get<int>(), j.at("count").get<std::size_t>(),
                j.at("complete").get<bool>(), j.at("nodes").get<std::uint64_t>()};
        }

        auto entries_to_json(const vector<BoundEntry> & es) -> json
        {
            json arr = json::array();
            for (const auto & e : es)
                arr.push_back({{"name", e.name}, {"value", e.value}, {"condition", e.condition}});
            return arr;
        }

        auto entries_from_json(const json & j) -> vector<BoundEntry>
        {
            vector<BoundEntry> out;
            for (const auto & e : j)
                out.push_back({e.at("name").get<string>(), e.at("value").get<int>(), e.at("condition").get<string>()});
            return out;
        }

        auto bounds_from_json(const json & j) -> BoundReport
        {
            BoundReport b;
            b.lower = entries_from_json(j.at("lower"));
            b.upper = entries_from_json(j.at("upper"));
            b.best_lower = j.at("bestLower").get<int>();
            if (! j.at("bestUpper").is_null())
                b.best_upper = j.at("bestUpper").get<int>();
            if (j.contains("fractionalGamma"))
                b.fractional_gamma = Rational(j.at("fractionalGamma").at(0).get<std::int64_t>(),
                    j.at("fractionalGamma").at(1).get<std::int64_t>());
            if (j.contains("tauUpperSymmetric"))
                b.tau_upper_symmetric = j.at("tauUpperSymmetric").get<int>();
            b.notes = j.at("notes").get<vector<string>>();
            return b;
        }

        auto neat_to_json(const NeatnessReport & n) -> json
        {
            json j{{"gamma", n.gamma}, {"idom", n.idom}, {"minimumSets", n.minimum_sets},
                {"neatMinimumSets", n.neat_minimum_sets}, {"isNeat", n.is_neat},
                {"allMinimumNeat", n.all_minimum_neat},
                {"isSuperNeat", n.is_super_neat ? json(*n.is_super_neat) : json("not-computed")}};
            if (n.minimal_sets)
                j["minimalSets"] = *n.minimal_sets;
            json by = json::object();
            for (auto [points, count] : n.neat_by_points)
                by[to_string(points)] = count;
            j["neatByPointCount"] = by;
            if (n.neat_witness)
                j["neatWitness"] = vertex_set_to_json(*n.neat_witness);
            if (n.non_neat_witness)
                j["nonNeatWitness"] = vertex_set_to_json(*n.non_neat_witness);
            if (n.non_neat_minimal_witness)
                j["nonNeatMinimalWitness"] = vertex_set_to_json(*n.non_neat_minimal_witness);
            return j;
        }

        auto neat_from_json(const json & j, const DesignParams & p) -> NeatnessReport
        {
            NeatnessReport n;
            n.gamma = j.at("gamma").get<int>();
            n.idom = j.at("idom").get<int>();
            n.minimum_sets = j.at("minimumSets").get<std::size_t>();
            n.neat_minimum_sets = j.at("neatMinimumSets").get<std::size_t>();
            n.is_neat = j.at("isNeat").get<bool>();
            n.all_minimum_neat = j.at("allMinimumNeat").get<bool>();
            for (const auto & [points, count] : j.at("neatByPointCount").items())
                n.neat_by_points[std::stoi(points)] = count.get<std::size_t>();
            if (j.at("isSuperNeat").is_boolean())
                n.is_super_neat = j.at("isSuperNeat").get<bool>();
            if (j.contains("minimalSets"))
                n.minimal_sets = j.at("minimalSets").get<std::size_t>();
            if (j.contains("neatWitness"))
                n.neat_witness = vertex_set_from_json(j.at("neatWitness"), p);
            if (j.contains("nonNeatWitness"))
                n.non_neat_witness = vertex_set_from_json(j.at("nonNeatWitness"), p);
            if (j.contains("nonNeatMinimalWitness"))
                n.non_neat_minimal_witness = vertex_set_from_json(j.at("nonNeatMinimalWitness"), p);
            return n;
        }

        template <typename T, typename F>
        void put_optional(json & j, const char * key, const optional<T> & x, F && f)
        {
            j[key] = x ? f(*x) : json(nullptr);
        }

        auto set_label(const VertexSet & s, const Design * d = nullptr) -> string
        {
            std::ostringstream out;
            out << '{';
            bool first = true;
            for (int p : s.point_list()) {
                out << (first ? "" : ", ") << p + 1;
                first = false;
            }
            for (int j : s.block_list()) {
                out << (first ? "" : ", ");
                first = false;
                if (d) {
                    out << '(';
                    auto pts = d->block_points(j);
                    for (std::size_t i = 0; i < pts.size(); ++i)
                        out << (i ? "," : "") << pts[i] + 1;
                    out << ')';
                }
                else
                    out << 'B' << j + 1;
            }
            out << '}';
            return out.str();
        }
    }

    auto AnalysisReport::timed_out() const -> bool
    {
        for (const auto * s : {&gamma, &tau, &beta, &idom})
            if (*s && (*s)->status != to_string(ProofStatus::optimal))
                return true;
        return false;
    }

    auto AnalysisReport::budget_hit() const -> bool
    {
        return (minimum_sets && ! minimum_sets->complete) || (minimal_sets && ! minimal_sets->complete);
    }

    auto summarize(const SolveResult & r) -> SolveSummary
    {
        return SolveSummary{string(to_string(r.invariant)), r.value, r.lower_bound, r.upper_bound,
            string(to_string(r.status)), r.nodes, one_based(r.witness.point_list()), one_based(r.witness.block_list())};
    }

    auto analyze(const NamedDesign & nd, const AnalysisOptions & opts) -> AnalysisReport
    {
        const auto & d = nd.design;
        IncidenceGraph g(d);
        AnalysisReport rep;
        rep.source = nd.label;
        rep.params = d.params();
        rep.design_class = classify(d);
        rep.bounds = full_report(d);

        optional<SolveResult> gamma;
        if (opts.exact || opts.enumerate || opts.neat) {
            gamma = gamma_bnb(g, d, opts.limits);
            rep.gamma = summarize(*gamma);
        }
        if (opts.exact) {
            auto tau = tau_exact(d, opts.limits);
            auto beta = beta_exact(d, opts.limits);
            rep.tau = summarize(tau);
            rep.beta = summarize(beta);
            if (tau.optimal() && beta.optimal())
                rep.bounds = full_report(d, tau.value, beta.value);
        }

        optional<EnumerationResult> minimum;
        if ((opts.enumerate || opts.neat) && gamma) {
            if (gamma->optimal()) {
                minimum = enumerate_min_dominating(g, gamma->value, opts.minimum_budget);
                rep.minimum_sets = EnumerationSummary{minimum->target_size, minimum->sets.size(), minimum->complete,
                    minimum->nodes};
                for (const auto & s : minimum->sets)
                    if (! hat_contained(d, s))
                        throw std::logic_error("dominating set misses a block disjoint from its points");
                if (minimum->complete)
                    rep.epn_certificate = epn_certificate(g, *minimum);
            }
            else
                rep.notes.push_back("minimum dominating sets not enumerated: gamma not proven optimal");
        }

        if (opts.neat && gamma) {
            auto idom = idom_exact(g, d, opts.limits);
            rep.idom = summarize(idom);
            optional<EnumerationResult> minimal;
            if (opts.minimal) {
                try {
                    minimal = enumerate_minimal_dominating(g, opts.minimal_budget);
                    rep.minimal_sets = EnumerationSummary{0, minimal->sets.size(), minimal->complete, minimal->nodes};
                }
                catch (const Error & e) {
                    if (e.kind() != ErrorKind::budget_exceeded)
                        throw;
                    rep.notes.push_back(string("super-neatness not computed: ") + e.what());
                }
            }
            if (minimum && minimum->complete && idom.optimal())
                rep.neatness = classify_neatness(d, *minimum, idom.value, minimal ? &*minimal : nullptr);
            else
                rep.notes.push_back("neatness not classified: enumeration or idom incomplete");
        }
        return rep;
    }

    auto vertex_set_to_json(const VertexSet & s) -> json
    {
        return json{{"points", one_based(s.point_list())}, {"blocks", one_based(s.block_list())}};
    }

    auto bounds_to_json(const BoundReport & b) -> json
    {
        json j{{"lower", entries_to_json(b.lower)}, {"upper", entries_to_json(b.upper)}, {"bestLower", b.best_lower},
            {"bestUpper", b.best_upper ? json(*b.best_upper) : json(nullptr)}, {"notes", b.notes}};
        if (b.fractional_gamma)
            j["fractionalGamma"] = {b.fractional_gamma->numerator(), b.fractional_gamma->denominator()};
        if (b.tau_upper_symmetric)
            j["tauUpperSymmetric"] = *b.tau_upper_symmetric;
        return j;
    }

    auto to_json(const AnalysisReport & r) -> json
    {
        json j;
        j["source"] = r.source;
        j["params"] = {{"v", r.params.v}, {"k", r.params.k}, {"lambda", r.params.lambda}, {"b", r.params.b},
            {"r", r.params.r}};
        j["class"] = {{"simple", r.design_class.is_simple}, {"steiner", r.design_class.is_steiner},
            {"symmetric", r.design_class.is_symmetric}, {"sts", r.design_class.is_sts}};
        j["bounds"] = bounds_to_json(r.bounds);
        put_optional(j, "gamma", r.gamma, solve_to_json);
        put_optional(j, "tau", r.tau, solve_to_json);
        put_optional(j, "beta", r.beta, solve_to_json);
        put_optional(j, "idom", r.idom, solve_to_json);
        put_optional(j, "minimumEnumeration", r.minimum_sets, enum_to_json);
        put_optional(j, "minimalEnumeration", r.minimal_sets, enum_to_json);
        put_optional(j, "epnCertificate", r.epn_certificate, [](bool b) { return json(b); });
        put_optional(j, "neatness", r.neatness, neat_to_json);
        j["notes"] = r.notes;
        return j;
    }

    auto analysis_from_json(const json & j) -> AnalysisReport
    {
        AnalysisReport r;
        r.source = j.at("source").get<string>();
        const auto & p = j.at("params");
        r.params = DesignParams{p.at("v").get<int>(), p.at("k").get<int>(), p.at("lambda").get<int>(),
            p.at("b").get<int>(), p.at("r").get<int>()};
        const auto & c = j.at("class");
        r.design_class = DesignClass{c.at("simple").get<bool>(), c.at("steiner").get<bool>(),
            c.at("symmetric").get<bool>(), c.at("sts").get<bool>()};
        r.bounds = bounds_from_json(j.at("bounds"));
        auto get_solve = [&](const char * key) -> optional<SolveSummary> {
            if (j.at(key).is_null())
                return std::nullopt;
            return solve_from_json(j.at(key));
        };
        r.gamma = get_solve("gamma");
        r.tau = get_solve("tau");
        r.beta = get_solve("beta");
        r.idom = get_solve("idom");
        if (! j.at("minimumEnumeration").is_null())
            r.minimum_sets = enum_from_json(j.at("minimumEnumeration"));
        if (! j.at("minimalEnumeration").is_null())
            r.minimal_sets = enum_from_json(j.at("minimalEnumeration"));
        if (! j.at("epnCertificate").is_null())
            r.epn_certificate = j.at("epnCertificate").get<bool>();
        if (! j.at("neatness").is_null())
            r.neatness = neat_from_json(j.at("neatness"), r.params);
        r.notes = j.at("notes").get<vector<string>>();
        return r;
    }

    auto render_text(const AnalysisReport & r) -> string
    {
        std::ostringstream out;
        const auto & p = r.params;
        out << "design " << r.source << ": v=" << p.v << " k=" << p.k << " lambda=" << p.lambda << " b=" << p.b
            << " r=" << p.r;
        const auto & c = r.design_class;
        out << " [" << (c.is_simple ? "simple" : "non-simple") << (c.is_steiner ? " steiner" : "")
            << (c.is_symmetric ? " symmetric" : "") << (c.is_sts ? " sts" : "") << "]\n";

        out << "bound ladder\n";
        auto row = [&](const char * side, const BoundEntry & e) {
            out << "  " << std::left << std::setw(6) << side << std::setw(16) << e.name << std::right << std::setw(6)
                << e.value << "   " << e.condition << '\n';
        };
        for (const auto & e : r.bounds.lower)
            row("lower", e);
        for (const auto & e : r.bounds.upper)
            row("upper", e);
        if (r.bounds.fractional_gamma)
            out << "  gamma* = " << r.bounds.fractional_gamma->numerator() << '/'
                << r.bounds.fractional_gamma->denominator() << '\n';
        if (r.bounds.tau_upper_symmetric)
            out << "  tau <= " << *r.bounds.tau_upper_symmetric << " (symmetric design)\n";
        out << "  best: " << r.bounds.best_lower << " <= gamma <= "
            << (r.bounds.best_upper ? std::to_string(*r.bounds.best_upper) : string("?")) << '\n';
        for (const auto & n : r.bounds.notes)
            out << "  note: " << n << '\n';

        auto solve = [&](const optional<SolveSummary> & s) {
            if (! s)
                return;
            out << s->invariant << ": ";
            if (s->status == to_string(ProofStatus::optimal))
                out << s->value;
            else
                out << "not computed (" << s->status << "), proven range [" << s->lower_bound << ", "
                    << s->upper_bound << "]";
            out << "  nodes=" << s->nodes << "  witness={";
            bool first = true;
            for (int x : s->witness_points) {
                out << (first ? "" : ", ") << x;
                first = false;
            }
            for (int x : s->witness_blocks) {
                out << (first ? "" : ", ") << 'B' << x;
                first = false;
            }
            out << "}\n";
        };
        solve(r.gamma);
        solve(r.tau);
        solve(r.beta);
        solve(r.idom);
        if (r.minimum_sets)
            out << "minimum dominating sets of size " << r.minimum_sets->target_size << ": " << r.minimum_sets->count
                << (r.minimum_sets->complete ? "" : " (incomplete)") << '\n';
        if (r.epn_certificate)
            out << "EPN certificate: " << (*r.epn_certificate ? "yes" : "no") << '\n';
        if (r.minimal_sets)
            out << "minimal dominating sets: " << r.minimal_sets->count
                << (r.minimal_sets->complete ? "" : " (incomplete)") << '\n';
        if (r.neatness) {
            const auto & n = *r.neatness;
            out << "neat minimum sets: " << n.neat_minimum_sets << " of " << n.minimum_sets;
            if (! n.neat_by_points.empty()) {
                out << "  by |P|:";
                for (auto [points, count] : n.neat_by_points)
                    out << ' ' << points << ':' << count;
            }
            out << '\n';
            out << "neat: " << (n.is_neat ? "yes" : "no") << "  super-neat: "
                << (n.is_super_neat ? (*n.is_super_neat ? "yes" : "no") : "not computed") << '\n';
            if (n.neat_witness)
                out << "  neat witness: " << set_label(*n.neat_witness) << '\n';
            if (n.non_neat_witness)
                out << "  non-neat witness: " << set_label(*n.non_neat_witness) << '\n';
            if (n.non_neat_minimal_witness)
                out << "  non-neat minimal witness: " << set_label(*n.non_neat_minimal_witness) << '\n';
        }
        for (const auto & n : r.notes)
            out << "note: " << n << '\n';
        return out.str();
    }
}
