#include "cpw/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpw/json_io.hpp"

namespace cpw {

namespace {

struct Options {
    std::string verb;
    std::string graph_path;
    std::string relations = "all";
    std::string expression;
    std::string family_path;
    std::size_t k = 1;
    bool as_json = false;
    bool seed_given = false;
    std::uint64_t seed = 0;
    std::size_t cap = 20;
};

std::string set_str(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : s) {
        if (!first) out += ", ";
        out += v;
        first = false;
    }
    return out + "}";
}

std::string ordered_set_str(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : ordered_vertices(g, s)) {
        if (!first) out += ", ";
        out += v;
        first = false;
    }
    return out + "}";
}

std::string cycle_str(const ClosedPath& c) {
    std::string out;
    for (const auto& e : c.path.edges) {
        if (!out.empty()) out += " ";
        out += e;
    }
    return out;
}

std::string simple_line(const AnalysisReport& r) {
    if (r.simple) return "simple: true";
    std::string line = "simple: false (" + r.simple_reason;
    if (r.condition_l.witness)
        line += "; witness cycle: " + cycle_str(*r.condition_l.witness);
    else if (r.super_maximal.witness)
        line += "; witness: " + set_str(*r.super_maximal.witness);
    return line + ")";
}

std::string condl_line(const ConditionLVerdict& v) {
    if (v.holds) return "conditionL: true";
    return "conditionL: false (witness cycle: " + cycle_str(*v.witness) + ")";
}

std::string condk_line(const ConditionKVerdict& v) {
    if (v.holds) return "conditionK: true";
    return "conditionK: false (witness vertex: " + *v.witness + ")";
}

std::string supermax_line(const SuperMaximalVerdict& v) {
    if (v.holds) return "superMaximal: true";
    return "superMaximal: false (witness: " + set_str(*v.witness) + ")";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

json graded_ideals_json(const std::vector<VertexSet>& ideals) {
    json out = json::array();
    for (const auto& h : ideals) {
        json hj = json::array();
        for (const auto& v : h) hj.push_back(v);
        out.push_back(hj);
    }
    return out;
}

std::string graded_ideals_str(const std::vector<VertexSet>& ideals) {
    std::string out;
    for (const auto& h : ideals) {
        if (!out.empty()) out += ", ";
        out += set_str(h);
    }
    return out;
}

// payload + text produced per verb; the caller wraps them for output
struct Result {
    json payload;
    std::string text;
};

Result do_analyze(const Graph& g, const VertexSet& x, const Options& opt) {
    AnalysisReport r = analyze(g, x, opt.cap);
    std::ostringstream text;
    text << condl_line(r.condition_l) << "\n"
         << condk_line(r.condition_k) << "\n"
         << "maximal: " << bool_str(r.maximal) << "\n"
         << supermax_line(r.super_maximal) << "\n"
         << simple_line(r) << "\n"
         << "ckUniqueness: " << bool_str(r.ck_uniqueness) << "\n"
         << "everyNonzeroIdealContainsGraded: "
         << bool_str(r.every_nonzero_ideal_contains_graded) << "\n"
         << "allIdealsGraded: " << bool_str(r.all_ideals_graded) << "\n"
         << "gradedIdeals: " << graded_ideals_str(r.graded_ideals) << "\n"
         << "jInfinity: " << ordered_set_str(g, r.j_inf);
    return {analysis_report_to_json(g, r), text.str()};
}

Result do_condl(const Graph& g, const VertexSet& x) {
    ConditionLVerdict v = condition_L(g, x);
    json payload;
    payload["conditionL"] = json{{"holds", v.holds}};
    if (v.witness) payload["conditionL"]["witness"] = closed_path_to_json(*v.witness);
    return {payload, condl_line(v)};
}

Result do_condk(const Graph& g, const VertexSet& x) {
    ConditionKVerdict v = condition_K(g, x);
    json payload;
    payload["conditionK"] = json{{"holds", v.holds}};
    if (v.witness) payload["conditionK"]["witness"] = *v.witness;
    return {payload, condk_line(v)};
}

Result do_simple(const Graph& g, const VertexSet& x, const Options& opt) {
    AnalysisReport r = analyze(g, x, opt.cap);
    json payload;
    payload["simple"] = analysis_report_to_json(g, r)["simple"];
    return {payload, simple_line(r)};
}

Result do_ideals(const Graph& g, const VertexSet& x, const Options& opt) {
    auto ideals = enumerate_hereditary_saturated(augment_relative(g, x), opt.cap);
    bool graded = condition_K(g, x).holds;
    json payload;
    payload["allIdealsGraded"] = graded;
    payload["gradedIdeals"] = graded_ideals_json(ideals);
    std::string text = "gradedIdeals: " + graded_ideals_str(ideals) +
                       "\nallIdealsGraded: " + bool_str(graded);
    return {payload, text};
}

Result do_jset(const Graph& g, const VertexSet& x, const Options& opt) {
    VertexSet s = j_bracket(g, x, opt.k);
    json payload;
    payload["vertices"] = vertex_set_to_json(g, s);
    return {payload, payload.dump()};
}

Result do_calc(const Graph& g, const VertexSet& x, const Options& opt) {
    AlgebraContext ctx(g, x);
    ExprPtr tree = parse_expression(opt.expression, ctx);
    Element value = normal_form(*tree, ctx);
    if (opt.seed_given &&
        normal_form_randomized(*tree, ctx, opt.seed) != value)
        throw std::logic_error("randomized reduction disagrees with normal form");
    std::string rendered = render_element(value);
    json payload;
    payload["element"] = rendered;
    if (auto deg = homogeneous_degree(value)) payload["degree"] = *deg;
    return {payload, rendered};
}

Result do_tck(const Graph& g, const VertexSet& x, const Options& opt) {
    (void)x;
    MatrixFamily fam = load_family_file(opt.family_path);
    RelationReport rel = check_tck_family(fam, g);
    json payload;
    json violations = json::array();
    for (const auto& v : rel.violations) violations.push_back(v);
    payload["relations"] = json{{"ok", rel.ok}, {"violations", violations}};
    std::ostringstream text;
    if (!rel.ok) {
        text << "relations: fail";
        for (const auto& v : rel.violations) text << "\n  " << v;
        return {payload, text.str()};
    }
    text << "relations: ok\n";
    InjectivityVerdict inj = tck_injectivity_verdict(fam, g);
    json reasons = json::array();
    for (const auto& r : inj.reasons) reasons.push_back(r);
    payload["injective"] = json{{"verdict", inj.injective}, {"reasons", reasons}};
    text << "injective: " << bool_str(inj.injective);
    if (!inj.injective) {
        text << " (";
        for (std::size_t i = 0; i < inj.reasons.size(); ++i) {
            if (i) text << "; ";
            text << inj.reasons[i];
        }
        text << ")";
    }
    return {payload, text.str()};
}

Result do_invcycle(const Graph& g, const VertexSet& x) {
    (void)x;
    RSystemGraph sys = build_system(g);
    std::size_t max_n = std::max<std::size_t>(1, g.vertices().size());
    auto found = invariant_cycle_search(sys, max_n);
    json list = json::array();
    std::ostringstream text;
    text << "invariantCycles: " << found.size();
    for (const auto& inv : found) {
        json entry;
        json ideal = json::array();
        for (const auto& v : inv.ideal) ideal.push_back(v);
        entry["I"] = ideal;
        entry["n"] = inv.n;
        entry["eta"] = eta_map_to_json(inv.eta);
        list.push_back(entry);
        text << "\n  I=" << set_str(inv.ideal) << ", n=" << inv.n << ", eta:";
        for (const auto& [v, img] : inv.eta.map) {
            text << " 1_" << v << " -> " << img.second.str() << "*(";
            for (std::size_t i = 0; i < img.first.edges.size(); ++i) {
                if (i) text << " ";
                text << img.first.edges[i];
            }
            text << ")";
        }
    }
    json payload;
    payload["invariantCycles"] = list;
    return {payload, text.str()};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;

    CLI::App app{"relative Cohn/Leavitt path algebra workbench"};
    app.require_subcommand(1);

    const std::vector<std::string> verbs = {"analyze", "condl", "condk",
                                            "simple",  "ideals", "jset",
                                            "calc",    "tck",    "invcycle"};
    const std::map<std::string, std::string> descriptions = {
        {"analyze", "full structural report"},
        {"condl", "condition (L) verdict"},
        {"condk", "condition (K) verdict"},
        {"simple", "simplicity verdict"},
        {"ideals", "graded-ideal lattice"},
        {"jset", "J^[k] vertex set"},
        {"calc", "evaluate an expression to normal form"},
        {"tck", "check a matrix family against the TCK relations"},
        {"invcycle", "search for invariant cycles"},
    };
    for (const auto& verb : verbs) {
        CLI::App* sub = app.add_subcommand(verb, descriptions.at(verb));
        sub->add_option("-g,--graph", opt.graph_path, "graph JSON file")->required();
        sub->add_option("-X,--relations", opt.relations,
                        "relation set: all, none or v1,v2,...");
        sub->add_flag("--json", opt.as_json, "emit a JSON report envelope");
        sub->add_option("--seed", opt.seed, "seed for randomized cross-checks")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--cap", opt.cap, "enumeration cap (vertices)");
        if (verb == "jset")
            sub->add_option("-k", opt.k, "filtration index")->required()
                ->check(CLI::PositiveNumber);
        if (verb == "calc")
            sub->add_option("-e,--expression", opt.expression, "expression to evaluate")
                ->required();
        if (verb == "tck")
            sub->add_option("-f,--family", opt.family_path, "matrix family JSON file")
                ->required();
        sub->callback([&opt, verb] { opt.verb = verb; });
    }

    try {
        // CLI11 parses argv-style right-to-left
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        for (const auto& verb : verbs)
            if (app.got_subcommand(verb))
                opt.seed_given =
                    app.get_subcommand(verb)->count("--seed") > 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        Graph g = load_graph_file(opt.graph_path);
        VertexSet x = relations_from_string(g, opt.relations);

        Result result;
        if (opt.verb == "analyze") result = do_analyze(g, x, opt);
        else if (opt.verb == "condl") result = do_condl(g, x);
        else if (opt.verb == "condk") result = do_condk(g, x);
        else if (opt.verb == "simple") result = do_simple(g, x, opt);
        else if (opt.verb == "ideals") result = do_ideals(g, x, opt);
        else if (opt.verb == "jset") result = do_jset(g, x, opt);
        else if (opt.verb == "calc") result = do_calc(g, x, opt);
        else if (opt.verb == "tck") result = do_tck(g, x, opt);
        else if (opt.verb == "invcycle") result = do_invcycle(g, x);
        else { err << "unknown verb\n"; return 1; }

        if (opt.as_json) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started);
            json envelope;
            envelope["digest"] = graph_digest(g);
            envelope["payload"] = result.payload;
            envelope["timingMs"] = elapsed.count();
            envelope["verb"] = opt.verb;
            envelope["version"] = kToolVersion;
            out << envelope.dump(2) << "\n";
        } else {
            out << result.text << "\n";
        }
        return 0;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const IdentifierError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace cpw
