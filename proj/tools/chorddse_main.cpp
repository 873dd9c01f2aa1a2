#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chorddse/json_io.hpp"
#include "chorddse/render.hpp"

namespace {

using namespace chorddse;

constexpr const char* kToolVersion = "1.0.0";

// Exit codes: 0 success / all hold, 1 computation mismatch, 2 usage error.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

unsigned default_threads() {
    if (const char* env = std::getenv("CHORDDSE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

Json make_manifest(const std::string& command, Json parameters) {
    Json m;
    m["tool"] = "chorddse";
    m["version"] = kToolVersion;
    m["command"] = command;
    m["parameters"] = std::move(parameters);
    return m;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    Json j;
    in >> j;
    return j;
}

struct EnumerateOptions {
    int chords = 0;
    int norm = 0;
    int max_dec = 0;
    bool count_only = false;
    bool stats = false;
    bool csv = false;
    std::string out;
};

int run_enumerate(const EnumerateOptions& opt) {
    if ((opt.chords > 0) == (opt.norm > 0))
        throw CLI::ValidationError("enumerate", "give exactly one of --chords or --norm");
    if (opt.norm > 0 && opt.max_dec <= 0)
        throw CLI::ValidationError("enumerate", "--norm needs --max-dec");
    if (opt.csv && !(opt.count_only && opt.chords > 0))
        throw CLI::ValidationError("enumerate", "--csv is the count table: needs --count-only --chords");

    Json params;
    if (opt.chords > 0) params["chords"] = opt.chords;
    if (opt.norm > 0) {
        params["norm"] = opt.norm;
        params["max_dec"] = opt.max_dec;
    }
    params["count_only"] = opt.count_only;
    params["stats"] = opt.stats;
    Json manifest = make_manifest("enumerate", params);

    Output output(opt.out);
    std::ostream& os = output.stream();

    auto emit = [&](const ChordDiagram& c) {
        Json line;
        if (opt.stats) {
            line["diagram"] = diagram_to_json(c);
            TerminalData td = terminal_data(c);
            line["ter"] = td.ter;
            line["base"] = td.base;
            line["nu"] = branch_left_vector(c);
            line["norm"] = c.norm();
        } else {
            line = diagram_to_json(c);
        }
        os << line.dump() << "\n";
    };

    if (opt.csv && opt.count_only && opt.chords > 0) {
        os << "# manifest: " << manifest.dump() << "\n";
        os << "n,count\n";
        for (int n = 1; n <= opt.chords; ++n) {
            long count = 0;
            enumerate_connected(n, [&](const ChordDiagram&) { ++count; });
            os << n << "," << count << "\n";
        }
        return kExitOk;
    }

    if (opt.count_only) {
        long count = 0;
        if (opt.chords > 0)
            enumerate_connected(opt.chords, [&](const ChordDiagram&) { ++count; });
        else
            enumerate_decorated(opt.norm, opt.max_dec, [&](const ChordDiagram&) { ++count; });
        os << count << "\n";
        return kExitOk;
    }

    os << Json{{"manifest", manifest}}.dump() << "\n";
    if (opt.chords > 0)
        enumerate_connected(opt.chords, emit);
    else
        enumerate_decorated(opt.norm, opt.max_dec, emit);
    return kExitOk;
}

struct ExpandOptions {
    std::string spec_file;
    std::string preset;
    int x_order = -1;
    int l_order = -1;
    std::string side = "comb";
    bool numeric = false;
    bool csv = false;
    std::string out;
    unsigned threads = 0;
};

BiSeries substitute_numeric_primitives(const BiSeries& g, const DseSpec& spec) {
    auto lookup = [&](Symbol sym) -> std::optional<Rational> {
        for (const Primitive& p : spec.primitives) {
            if (p.loop_order != sym.k || p.symbolic) continue;
            if (sym.i < static_cast<int>(p.coeffs.size())) return p.coeffs[sym.i];
            return Rational(0);
        }
        return std::nullopt;
    };
    BiSeries out(g.x_order(), g.l_order());
    for (int m = 0; m <= g.x_order(); ++m)
        for (int j = 0; j <= g.l_order(); ++j) out.set(m, j, g.at(m, j).substituted(lookup));
    return out;
}

int run_expand(const ExpandOptions& opt) {
    DseSpec spec;
    if (!opt.preset.empty()) {
        if (opt.preset != "yukawa-bk")
            throw CLI::ValidationError("expand", "unknown preset '" + opt.preset + "'");
        int x = opt.x_order >= 0 ? opt.x_order : 5;
        int l = opt.l_order >= 0 ? opt.l_order : x;
        spec = yukawa_bk_preset(x, l);
    } else if (!opt.spec_file.empty()) {
        spec = dse_spec_from_json(read_json_file(opt.spec_file));
    } else {
        throw CLI::ValidationError("expand", "give --spec or --preset");
    }
    if (opt.x_order >= 0) spec.x_order = opt.x_order;
    if (opt.l_order >= 0) spec.l_order = opt.l_order;
    if (opt.side != "comb" && opt.side != "dif" && opt.side != "both")
        throw CLI::ValidationError("expand", "--side must be comb, dif or both");
    if (opt.numeric) {
        for (const Primitive& p : spec.primitives)
            if (p.symbolic)
                throw CLI::ValidationError("expand",
                                           "--numeric needs numeric primitive coefficients");
    }

    int max_dec = 0;
    for (const Primitive& p : spec.primitives) max_dec = std::max(max_dec, p.loop_order);

    unsigned threads = opt.threads ? opt.threads : default_threads();

    Json params;
    params["spec"] = dse_spec_to_json(spec);
    params["side"] = opt.side;
    params["numeric"] = opt.numeric;
    params["threads"] = threads;
    Json manifest = make_manifest("expand", params);

    std::optional<BiSeries> comb, dif;
    if (opt.side != "dif") {
        BiSeries g = g_comb_green(spec.x_order, spec.l_order, spec.s, max_dec, threads);
        comb = substitute_numeric_primitives(g, spec);
    }
    if (opt.side != "comb") dif = solve_dse(spec);

    Output output(opt.out);
    std::ostream& os = output.stream();

    auto emit_series = [&](const BiSeries& g, Json& doc, const std::string& key) {
        if (opt.numeric) {
            Json rows = Json::array();
            for (int m = 0; m <= g.x_order(); ++m) {
                for (int j = 0; j <= g.l_order(); ++j) {
                    if (g.at(m, j).is_zero()) continue;
                    Json row;
                    row["key"] = Json::array({m, j});
                    row["value"] = rational_to_string(g.at(m, j).constant_value());
                    rows.push_back(row);
                }
            }
            doc[key] = rows;
        } else {
            doc[key] = biseries_to_json(g);
        }
    };

    if (opt.csv) {
        if (!opt.numeric)
            throw CLI::ValidationError("expand", "--csv needs --numeric (flat tables only)");
        if (opt.side == "both")
            throw CLI::ValidationError("expand", "--csv supports a single side");
        const BiSeries& g = opt.side == "comb" ? *comb : *dif;
        os << "# manifest: " << manifest.dump() << "\n";
        os << "m,j,value\n";
        for (int m = 0; m <= g.x_order(); ++m)
            for (int j = 0; j <= g.l_order(); ++j)
                if (!g.at(m, j).is_zero())
                    os << m << "," << j << ","
                       << rational_to_string(g.at(m, j).constant_value()) << "\n";
        return kExitOk;
    }

    Json doc;
    doc["manifest"] = manifest;
    int exit_code = kExitOk;
    if (comb) emit_series(*comb, doc, "comb");
    if (dif) emit_series(*dif, doc, "dif");
    if (opt.side == "both") {
        auto diffs = compare(*comb, *dif);
        Json dj = Json::array();
        for (const auto& d : diffs) {
            Json row;
            row["m"] = d.m;
            row["j"] = d.j;
            row["delta"] = polynomial_to_json(d.delta);
            dj.push_back(row);
        }
        doc["diff"] = dj;
        doc["match"] = diffs.empty();
        if (!diffs.empty()) exit_code = kExitMismatch;
    }
    os << doc.dump(2) << "\n";
    if (opt.side == "both") std::cerr << (exit_code == kExitOk ? "MATCH" : "MISMATCH") << "\n";
    return exit_code;
}

struct VerifyOptions {
    std::vector<std::string> names;
    int max_norm = 5;
    int max_dec = 0;
    std::vector<std::string> s_values;
    std::string report;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<std::string> names = opt.names;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) names = identity_names();
    for (const std::string& n : names) {
        const auto& known = identity_names();
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            std::cerr << "unknown identity '" << n << "'\n";
            return kExitUsage;
        }
    }
    std::vector<std::string> s_list = opt.s_values;
    if (s_list.empty()) s_list = {"1", "2", "3", "5/2"};
    int max_dec = opt.max_dec > 0 ? opt.max_dec : opt.max_norm;

    Json params;
    params["identities"] = names;
    params["max_norm"] = opt.max_norm;
    params["max_dec"] = max_dec;
    params["s"] = s_list;
    Json doc;
    doc["manifest"] = make_manifest("verify", params);
    Json reports = Json::array();

    bool all_hold = true;
    for (const std::string& name : names) {
        for (const std::string& s_text : s_list) {
            Rational s = rational_from_string(s_text);
            IdentityReport r = verify_identity(name, opt.max_norm, s, max_dec);
            all_hold = all_hold && r.holds;
            Json rj = identity_report_to_json(r);
            rj["s"] = s_text;
            reports.push_back(rj);
            std::cerr << (r.holds ? "ok   " : "FAIL ") << name << " (s=" << s_text
                      << ", instances=" << r.instances << ")\n";
        }
    }
    doc["reports"] = reports;
    doc["all_hold"] = all_hold;

    Output output(opt.report);
    output.stream() << doc.dump(2) << "\n";
    return all_hold ? kExitOk : kExitMismatch;
}

struct RenderOptions {
    std::string diagram_json;
    std::string diagram_file;
    std::string tree_json;
    std::string tree_file;
    std::string as = "diagram";
    std::string out;
};

int run_render(const RenderOptions& opt) {
    Output output(opt.out);
    std::ostream& os = output.stream();
    Json manifest = make_manifest("render", Json{{"as", opt.as}});

    if (!opt.tree_json.empty() || !opt.tree_file.empty()) {
        Json j = opt.tree_file.empty() ? Json::parse(opt.tree_json)
                                       : read_json_file(opt.tree_file);
        LabeledTree t = tree_from_json(j);
        os << "// manifest: " << manifest.dump() << "\n" << tree_to_dot(t);
        return kExitOk;
    }
    if (opt.diagram_json.empty() && opt.diagram_file.empty())
        throw CLI::ValidationError("render", "give --diagram/--diagram-file or --tree/--tree-file");
    Json j = opt.diagram_file.empty() ? Json::parse(opt.diagram_json)
                                      : read_json_file(opt.diagram_file);
    ChordDiagram c = diagram_from_json(j);
    if (opt.as == "tree") {
        os << "// manifest: " << manifest.dump() << "\n" << tree_to_dot(insertion_tree(c));
    } else if (opt.as == "diagram") {
        os << "<!-- manifest: " << manifest.dump() << " -->\n" << diagram_to_svg(c);
    } else {
        throw CLI::ValidationError("render", "--as must be diagram or tree");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chord-diagram expansions for single-equation Dyson-Schwinger equations"};
    app.require_subcommand(1);

    EnumerateOptions en;
    CLI::App* cmd_en = app.add_subcommand("enumerate", "List rooted connected chord diagrams");
    cmd_en->add_option("--chords", en.chords, "number of chords (undecorated enumeration)");
    cmd_en->add_option("--norm", en.norm, "total decoration sum (decorated enumeration)");
    cmd_en->add_option("--max-dec", en.max_dec, "largest allowed decoration");
    cmd_en->add_flag("--count-only", en.count_only, "emit only the tally");
    cmd_en->add_flag("--stats", en.stats, "append ter, base, nu, norm per diagram");
    cmd_en->add_flag("--csv", en.csv, "with --count-only --chords: counts as CSV (n,count)");
    cmd_en->add_option("--out", en.out, "output file (default stdout)");

    ExpandOptions ex;
    CLI::App* cmd_ex = app.add_subcommand("expand", "Compute the Green function series");
    cmd_ex->add_option("--spec", ex.spec_file, "DSE spec file (JSON)");
    cmd_ex->add_option("--preset", ex.preset, "named preset: yukawa-bk");
    cmd_ex->add_option("--x-order", ex.x_order, "truncation order in x");
    cmd_ex->add_option("--l-order", ex.l_order, "truncation order in L");
    cmd_ex->add_option("--side", ex.side, "comb | dif | both (default comb)");
    cmd_ex->add_flag("--numeric", ex.numeric, "evaluate coefficients (needs numeric primitives)");
    cmd_ex->add_flag("--csv", ex.csv, "CSV output (needs --numeric)");
    cmd_ex->add_option("--out", ex.out, "output file (default stdout)");
    cmd_ex->add_option("--threads", ex.threads, "worker threads (default $CHORDDSE_THREADS or 1)");

    VerifyOptions ve;
    CLI::App* cmd_ve = app.add_subcommand("verify", "Check the registered identities exactly");
    cmd_ve->add_option("names", ve.names, "identity names or 'all'");
    cmd_ve->add_option("--max-norm,--max-size", ve.max_norm, "sweep bound (default 5)");
    cmd_ve->add_option("--max-dec", ve.max_dec, "decoration cap (default: the bound)");
    cmd_ve->add_option("--s", ve.s_values, "s values, e.g. --s 1 2 3 5/2");
    cmd_ve->add_option("--report", ve.report, "report file (default stdout)");

    RenderOptions re;
    CLI::App* cmd_re = app.add_subcommand("render", "Render a diagram (SVG) or tree (DOT)");
    cmd_re->add_option("--diagram", re.diagram_json, "diagram JSON literal");
    cmd_re->add_option("--diagram-file", re.diagram_file, "diagram JSON file");
    cmd_re->add_option("--tree", re.tree_json, "tree JSON literal (nested arrays)");
    cmd_re->add_option("--tree-file", re.tree_file, "tree JSON file");
    cmd_re->add_option("--as", re.as, "diagram | tree (for diagram input)");
    cmd_re->add_option("--out", re.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (cmd_en->parsed()) return run_enumerate(en);
        if (cmd_ex->parsed()) return run_expand(ex);
        if (cmd_ve->parsed()) return run_verify(ve);
        if (cmd_re->parsed()) return run_render(re);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
