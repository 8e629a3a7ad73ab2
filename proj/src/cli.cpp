#include "braidix/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidix/braidindex.hpp"
#include "braidix/castle.hpp"
#include "braidix/diagram.hpp"
#include "braidix/errors.hpp"
#include "braidix/seifert.hpp"
#include "braidix/skein.hpp"
#include "braidix/verify.hpp"
#include "json.hpp"

namespace braidix {

namespace {

// Unreadable input files are usage-level problems (exit 2), like bad PD text.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& message)
        : std::runtime_error(message) {}
};

struct Options {
    std::string inline_pd;
    std::string file_path;
    std::string tree = "generic";
    std::string suite = "all";
    std::string corpus = "corpus";
    bool as_json = false;
    bool as_dot = false;
    bool dump_tree = false;
};

Diagram load_input(const Options& opt) {
    if (!opt.inline_pd.empty()) return Diagram::parse(opt.inline_pd);
    std::ifstream in(opt.file_path);
    if (!in) throw input_error("cannot open input file: " + opt.file_path);
    std::ostringstream text;
    text << in.rdbuf();
    return Diagram::parse(text.str());
}

void add_input_options(CLI::App* sub, Options& opt) {
    auto* inline_opt =
        sub->add_option("--inline", opt.inline_pd, "PD text given directly");
    auto* file_opt =
        sub->add_option("--file", opt.file_path, "path to a PD text file");
    inline_opt->excludes(file_opt);
    file_opt->excludes(inline_opt);
}

void require_input(const Options& opt) {
    if (opt.inline_pd.empty() && opt.file_path.empty()) {
        throw input_error("an input is required: pass --inline <pd> or --file <path>");
    }
}

int run_parse(const Options& opt, std::ostream& out) {
    const Diagram d = load_input(opt);
    d.validate();
    const std::size_t components = d.components().size();
    if (opt.as_json) {
        nlohmann::ordered_json j;
        j["crossings"] = d.num_crossings();
        j["free_loops"] = d.free_loops;
        j["components"] = components;
        j["arcs"] = d.arcs().size();
        out << j.dump(2) << "\n";
    } else {
        out << "crossings: " << d.num_crossings() << "\n"
            << "free loops: " << d.free_loops << "\n"
            << "components: " << components << "\n"
            << "arcs: " << d.arcs().size() << "\n";
    }
    return 0;
}

int run_invariants(const Options& opt, std::ostream& out) {
    const Diagram d = load_input(opt);
    const bool alternating = d.is_alternating();
    const bool reduced = d.is_reduced();
    if (opt.as_json) {
        nlohmann::ordered_json j;
        j["writhe"] = d.writhe();
        j["components"] = d.components().size();
        j["faces"] = d.faces().total;
        j["alternating"] = alternating;
        j["reduced"] = reduced;
        out << j.dump(2) << "\n";
    } else {
        out << "writhe: " << d.writhe() << "\n"
            << "components: " << d.components().size() << "\n"
            << "faces: " << d.faces().total << "\n"
            << "alternating: " << (alternating ? "true" : "false") << "\n"
            << "reduced: " << (reduced ? "true" : "false") << "\n";
    }
    return 0;
}

int run_seifert(const Options& opt, std::ostream& out) {
    const Diagram d = load_input(opt);
    const SeifertData s = seifert(d);
    if (opt.as_dot) {
        out << gs_dot(s, arrangement(d, s));
        return 0;
    }
    if (opt.as_json) {
        nlohmann::ordered_json j;
        j["circles"] = s.circles;
        j["free_loops"] = s.free_loops;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const GsEdge& e : s.edges) {
            edges.push_back(nlohmann::ordered_json::array(
                {e.u, e.v, e.weight, e.pos, e.neg}));
        }
        j["edges"] = edges;
        j["stats"] = {{"tau_plus", s.stats.tau_plus},
                      {"tau_minus", s.stats.tau_minus},
                      {"sigma_plus", s.stats.sigma_plus},
                      {"sigma_minus", s.stats.sigma_minus}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "circles: " << s.circles.size() << "\n"
        << "free loops: " << s.free_loops << "\n";
    for (std::size_t c = 0; c < s.circles.size(); ++c) {
        out << "circle " << c << ":";
        for (int arc : s.circles[c]) out << " " << arc;
        out << "\n";
    }
    for (const GsEdge& e : s.edges) {
        out << "edge " << e.u << "-" << e.v << ": weight " << e.weight << " (+"
            << e.pos << "/-" << e.neg << ")\n";
    }
    out << "tau: +" << s.stats.tau_plus << "/-" << s.stats.tau_minus << "\n"
        << "sigma: +" << s.stats.sigma_plus << "/-" << s.stats.sigma_minus
        << "\n";
    return 0;
}

void dump_lines(const std::vector<TreeLine>& lines, std::ostream& out) {
    for (const TreeLine& line : lines) {
        out << std::string(2 * static_cast<std::size_t>(line.depth), ' ')
            << (line.flip ? "flip" : "smooth") << " crossing " << line.crossing
            << "  " << line.monomial << "\n";
    }
}

int run_homfly(const Options& opt, std::ostream& out) {
    const Diagram d = load_input(opt);
    Poly poly;
    std::vector<TreeLine> lines;
    if (opt.tree == "P" || opt.tree == "N") {
        const TreeKind kind = opt.tree == "P" ? TreeKind::P : TreeKind::N;
        ResolveTree tree = resolve_tree(d, kind, opt.dump_tree);
        poly = tree.poly;
        lines = std::move(tree.lines);
    } else if (opt.dump_tree) {
        GenericTree tree = homfly_tree(d);
        poly = tree.poly;
        lines = std::move(tree.lines);
    } else {
        poly = homfly(d);
    }
    if (opt.as_json) {
        nlohmann::ordered_json j;
        j["homfly"] = poly.str();
        j["tree"] = opt.tree;
        if (opt.dump_tree) {
            nlohmann::ordered_json steps = nlohmann::ordered_json::array();
            for (const TreeLine& line : lines) {
                steps.push_back(
                    nlohmann::ordered_json{{"depth", line.depth},
                                           {"crossing", line.crossing},
                                           {"action", line.flip ? "flip" : "smooth"},
                                           {"monomial", line.monomial}});
            }
            j["steps"] = steps;
        }
        out << j.dump(2) << "\n";
    } else {
        if (opt.dump_tree) dump_lines(lines, out);
        out << poly.str() << "\n";
    }
    return 0;
}

int run_braid_index(const Options& opt, std::ostream& out) {
    const Diagram d = load_input(opt);
    out << braid_index_report(d).dump(2) << "\n";
    return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
    const auto results = verify::run_suites(opt.suite, opt.corpus);
    int failed_total = 0;
    if (opt.as_json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            j.push_back(nlohmann::ordered_json{{"suite", r.name},
                                               {"passed", r.passed},
                                               {"failed", r.failed},
                                               {"failures", r.failures}});
            failed_total += r.failed;
        }
        out << j.dump(2) << "\n";
    } else {
        int passed_total = 0;
        for (const auto& r : results) {
            out << "suite " << r.name << ": " << r.passed << " passed, "
                << r.failed << " failed\n";
            for (const std::string& what : r.failures) {
                out << "  FAIL " << what << "\n";
            }
            passed_total += r.passed;
            failed_total += r.failed;
        }
        out << "total: " << passed_total << " passed, " << failed_total
            << " failed\n";
    }
    return failed_total == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"braid index bounds and link polynomials from PD diagrams",
                 "braidix"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* parse_cmd =
        app.add_subcommand("parse", "validate a PD text and print a summary");
    add_input_options(parse_cmd, opt);
    parse_cmd->add_flag("--json", opt.as_json, "emit JSON");

    CLI::App* invariants_cmd = app.add_subcommand(
        "invariants", "writhe, components, faces, alternating, reduced");
    add_input_options(invariants_cmd, opt);
    invariants_cmd->add_flag("--json", opt.as_json, "emit JSON");

    CLI::App* seifert_cmd = app.add_subcommand(
        "seifert", "circle decomposition, circle graph, and sign counts");
    add_input_options(seifert_cmd, opt);
    seifert_cmd->add_flag("--json", opt.as_json, "emit JSON");
    seifert_cmd->add_flag("--dot", opt.as_dot, "emit the circle graph as DOT");

    CLI::App* homfly_cmd =
        app.add_subcommand("homfly", "canonical skein polynomial");
    add_input_options(homfly_cmd, opt);
    homfly_cmd->add_flag("--json", opt.as_json, "emit JSON");
    homfly_cmd
        ->add_option("--tree", opt.tree,
                     "resolving tree flavor: P, N, or generic")
        ->check(CLI::IsMember({"P", "N", "generic"}));
    homfly_cmd->add_flag("--dump-tree", opt.dump_tree,
                         "print every branch decision of the resolving tree");

    CLI::App* braid_cmd = app.add_subcommand(
        "braid-index", "bounds report with certificates (JSON)");
    add_input_options(braid_cmd, opt);
    braid_cmd->add_flag("--json", opt.as_json,
                        "emit JSON (the report always is JSON)");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run property suites over a corpus directory");
    verify_cmd
        ->add_option("--suite", opt.suite,
                     "suite name: diagram, seifert, skein, castle, braidindex, all")
        ->check(CLI::IsMember(
            {"all", "diagram", "seifert", "skein", "castle", "braidindex"}));
    verify_cmd->add_option("--corpus", opt.corpus,
                           "directory of .pd files (default: corpus)");
    verify_cmd->add_flag("--json", opt.as_json, "emit JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (parse_cmd->parsed() || invariants_cmd->parsed() ||
            seifert_cmd->parsed() || homfly_cmd->parsed() ||
            braid_cmd->parsed()) {
            require_input(opt);
        }
        if (parse_cmd->parsed()) return run_parse(opt, out);
        if (invariants_cmd->parsed()) return run_invariants(opt, out);
        if (seifert_cmd->parsed()) return run_seifert(opt, out);
        if (homfly_cmd->parsed()) return run_homfly(opt, out);
        if (braid_cmd->parsed()) return run_braid_index(opt, out);
        if (verify_cmd->parsed()) return run_verify(opt, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const computation_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_error& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace braidix
