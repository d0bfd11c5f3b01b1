// indmorse: generate graphs, build acyclic matchings on their independence
// complexes, count critical cells and cross-check against homology.

#include "indmorse/indmorse.hpp"
#include "indmorse/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace indmorse;

namespace {

enum Exit { kOk = 0, kVerify = 1, kInput = 2, kUnsupported = 3 };

struct Output {
    bool pretty = false;
    std::string path;  // empty: stdout
};

// --pretty renders top-level members one per line; values stay compact JSON.
std::string render(const Json& j, bool pretty) {
    if (!pretty || !j.is_object()) return j.dump();
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : j.items()) {
        out << k << std::string(width - k.size() + 2, ' ');
        out << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    std::string s = out.str();
    if (!s.empty()) s.pop_back();
    return s;
}

void emit(const Json& j, const Output& o) {
    const std::string text = render(j, o.pretty) + "\n";
    if (o.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.path);
    if (!f) throw InputError("cannot write " + o.path);
    f << text;
}

Driver parse_driver(const std::string& s) {
    if (s == "auto") return Driver::automatic;
    if (s == "chordal") return Driver::chordal;
    if (s == "grid") return Driver::grid;
    throw InputError("unknown driver " + s);
}

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

std::optional<GridSpec> labelled_spec(const Graph& g) {
    if (!g.has_labels()) return std::nullopt;
    return grid_spec_from_labels(g);
}

Json graph_summary(const Graph& g) {
    Json out;
    out["n"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["chordal"] = is_chordal(g);
    const auto spec = labelled_spec(g);
    out["grid"] = spec ? grid_spec_to_json(*spec) : Json(nullptr);
    return out;
}

// The chordal driver only accepts chordal graphs; report that as unsupported
// rather than as malformed input.
ConstructionResult construct(const Graph& g, Driver d, const BuildOptions& opts = {}) {
    if (d == Driver::chordal && !is_chordal(g))
        throw UnsupportedGraphError("graph is not chordal", g.all_vertices().members());
    if (d == Driver::grid) return build_grid_matching(g, grid_spec_from_labels(g), opts);
    return build_matching(g, d, opts);
}

class Stopwatch {
public:
    double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int m = 0, n = -1;
    std::vector<int> sizes;
    long long p = 0, q = 0;
    double density = 0.3;
    std::uint64_t seed = 0;
};

GridSpec spec_from_args(const GenArgs& a) {
    if (a.n < 0) throw InputError("grid needs --n");
    const auto cells = static_cast<std::size_t>(a.m + 1) * static_cast<std::size_t>(a.n + 1);
    if (a.m < 0) throw InputError("grid needs m >= 0");
    std::vector<int> flat = a.sizes.empty() ? std::vector<int>{1} : a.sizes;
    if (flat.size() == 1) flat.assign(cells, flat[0]);
    if (flat.size() != cells)
        throw InputError("--sizes needs 1 or (m+1)(n+1) = " + std::to_string(cells) + " values, got " + std::to_string(flat.size()));
    GridSpec spec{a.m, a.n, {}};
    for (int i = 0; i <= a.m; ++i)
        spec.sizes.emplace_back(flat.begin() + i * (a.n + 1), flat.begin() + (i + 1) * (a.n + 1));
    spec.validate();
    return spec;
}

int cmd_gen(const GenArgs& a, const Output& o) {
    Graph g;
    if (a.kind == "grid") {
        g = grid_graph(spec_from_args(a));
    } else if (a.kind == "power") {
        if (a.n < 0) throw InputError("power needs --n");
        g = power_graph_cyclic(a.p, a.q, a.m, a.n);
    } else {
        if (a.n < 0) throw InputError(a.kind + " needs --n");
        if (a.kind == "chordal-random") g = random_chordal(a.n, a.density, a.seed);
        else if (a.kind == "path") g = standard_graph(StandardKind::path, a.n);
        else if (a.kind == "cycle") g = standard_graph(StandardKind::cycle, a.n);
        else if (a.kind == "complete") g = standard_graph(StandardKind::complete, a.n);
        else if (a.kind == "empty") g = standard_graph(StandardKind::empty, a.n);
        else throw InputError("unknown kind " + a.kind);
    }
    emit(graph_to_json(g), o);
    return kOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string graph;
    std::string mode = "explicit";
    std::string driver = "auto";
    bool oracle = false, gamma = false, pairs = false, table = false, timings = false;
    std::uint64_t seed = 0;
};

int cmd_analyze(const AnalyzeArgs& a, const Output& o) {
    Stopwatch clock;
    Json timings;
    const Graph g = load_graph(a.graph);
    const Driver driver = parse_driver(a.driver);
    int status = kOk;

    Json report;
    report["graph"] = graph_summary(g);
    report["mode"] = a.mode;
    report["driver"] = driver_name(driver);
    timings["load"] = clock.lap_ms();

    HomotopyType homotopy;
    if (a.mode == "counts") {
        CriticalFVector f;
        if (driver == Driver::grid) {
            GridCountTable table;
            f = grid_critical_fvector(grid_spec_from_labels(g), &table);
            if (a.table) report["table"] = count_table_to_json(table);
        } else {
            if (driver == Driver::chordal && !is_chordal(g))
                throw UnsupportedGraphError("graph is not chordal", g.all_vertices().members());
            f = critical_fvector_recursive(g);
        }
        report["critical_f"] = counts_to_json(f);
        homotopy = homotopy_from_counts(f);
        report["homotopy"] = homotopy_to_json(homotopy);
        timings["counts"] = clock.lap_ms();
    } else if (a.mode == "explicit") {
        const auto r = construct(g, driver);
        timings["construct"] = clock.lap_ms();
        const auto x = independence_complex(g);
        const auto c = classify_detailed(x, r.matching);
        homotopy = c.type;
        report["critical_f"] = counts_to_json(r.critical.counts);
        report["special_zero"] = r.special_zero ? simplex_to_json(*r.special_zero) : Json(nullptr);
        report["critical"] = critical_simplices_to_json(r.critical);
        report["homotopy"] = homotopy_to_json(homotopy);
        report["classified_by"] = classify_rule_name(c.rule);
        if (a.pairs) report["pairs"] = matching_to_json(r.matching);
        timings["classify"] = clock.lap_ms();
        if (a.oracle) {
            const auto h = homology_integer(x);
            Json oracle = homology_to_json(h);
            const bool consistent = consistency_with_homology(homotopy, h);
            BigInt betti_total = 0;
            for (auto b : h.betti) betti_total += b;
            const bool perfect = r.critical.counts.total() == betti_total;
            oracle["consistent"] = consistent;
            oracle["perfect"] = perfect;
            report["oracle"] = std::move(oracle);
            if (!consistent || !perfect) status = kVerify;
            timings["oracle"] = clock.lap_ms();
        }
    } else {
        throw InputError("unknown mode " + a.mode);
    }

    if (a.gamma) {
        Json gj;
        if (std::holds_alternative<Unclassified>(homotopy)) {
            gj["skipped"] = "homotopy type not classified";
        } else if (g.vertex_count() > kMaxDominationVertices) {
            gj["skipped"] = "more than " + std::to_string(kMaxDominationVertices) + " vertices";
        } else {
            const bool holds = check_domination_bound(g, homotopy);
            gj["gamma"] = domination_number(g);
            gj["min_sphere_dim"] = min_sphere_dimension(homotopy);
            gj["holds"] = holds;
            if (!holds) status = kVerify;
        }
        report["gamma"] = std::move(gj);
        timings["gamma"] = clock.lap_ms();
    }
    report["seed"] = a.seed;
    if (a.timings) report["timings_ms"] = std::move(timings);
    emit(report, o);
    return status;
}

// ---- verify / match / homology / compare ------------------------------------

int cmd_verify(const std::string& graph_path, const std::string& matching_path, const Output& o) {
    const Graph g = load_graph(graph_path);
    const Matching v = matching_from_json(read_json_file(matching_path));
    const auto x = independence_complex(g);
    Json report;
    const auto valid = verify_matching(x, v);
    report["valid"] = static_cast<bool>(valid);
    if (!valid) {
        report["detail"] = valid.detail;
        emit(report, o);
        return kVerify;
    }
    const auto acyclic = verify_acyclic(x, v);
    report["acyclic"] = static_cast<bool>(acyclic);
    if (!acyclic) {
        report["detail"] = acyclic.detail;
        emit(report, o);
        return kVerify;
    }
    report["critical_f"] = counts_to_json(critical_simplices(x, v).counts);
    emit(report, o);
    return kOk;
}

int cmd_match(const std::string& graph_path, const std::string& driver_arg, bool pairs, const Output& o) {
    const Graph g = load_graph(graph_path);
    const Driver d = parse_driver(driver_arg);
    emit(construction_to_json(construct(g, d), d, pairs), o);
    return kOk;
}

int cmd_homology(const std::string& graph_path, bool gf2, const Output& o) {
    const auto x = independence_complex(load_graph(graph_path));
    Json report = homology_to_json(homology_integer(x));
    if (gf2) report["betti_gf2"] = betti_gf2(x);
    emit(report, o);
    return kOk;
}

int cmd_compare(const std::string& graph_path, const Output& o) {
    const Graph g = load_graph(graph_path);
    const auto spec = labelled_spec(g);
    const Driver d = spec ? Driver::grid : Driver::automatic;
    Json report;
    report["graph"] = graph_summary(g);

    const auto r = construct(g, d);
    const auto x = independence_complex(g);
    const auto homotopy = classify(x, r.matching);
    const CriticalFVector recursive = critical_fvector_recursive(g);
    bool agree = recursive == r.critical.counts;
    report["construction"] = Json{{"driver", driver_name(d)},
                                  {"critical_f", counts_to_json(r.critical.counts)},
                                  {"homotopy", homotopy_to_json(homotopy)}};
    report["recursion"] = Json{{"critical_f", counts_to_json(recursive)}};
    if (spec) {
        const auto closed = grid_critical_fvector(*spec);
        agree = agree && closed == r.critical.counts;
        report["grid_recurrences"] = Json{{"critical_f", counts_to_json(closed)}};
    }
    const auto h = homology_integer(x);
    BigInt betti_total = 0;
    for (auto b : h.betti) betti_total += b;
    const bool consistent = consistency_with_homology(homotopy, h) && betti_total == r.critical.counts.total();
    report["oracle"] = homology_to_json(h);
    agree = agree && consistent;
    report["agree"] = agree;
    emit(report, o);
    return agree ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acyclic matchings on independence complexes"};
    app.require_subcommand(1);
    Output out;
    auto add_output = [&](CLI::App* sub) {
        sub->add_flag("--pretty", out.pretty, "One member per line instead of compact JSON");
        sub->add_option("-o,--out", out.path, "Write to a file instead of stdout");
    };

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a graph as JSON");
    gen_cmd->add_option("kind", gen.kind, "grid|power|chordal-random|path|cycle|complete|empty")->required();
    gen_cmd->add_option("--m", gen.m, "Grid rows minus one, or exponent of p");
    gen_cmd->add_option("--n", gen.n, "Grid columns minus one, exponent of q, or vertex count");
    gen_cmd->add_option("--sizes", gen.sizes, "Cell sizes, row-major; one value means uniform")->delimiter(',');
    gen_cmd->add_option("--p", gen.p, "First prime");
    gen_cmd->add_option("--q", gen.q, "Second prime");
    gen_cmd->add_option("--density", gen.density, "Extra-edge probability for chordal-random");
    gen_cmd->add_option("--seed", gen.seed, "Seed for chordal-random");
    add_output(gen_cmd);

    AnalyzeArgs an;
    auto* an_cmd = app.add_subcommand("analyze", "Construct, count and classify");
    an_cmd->add_option("graph", an.graph)->required();
    an_cmd->add_option("--mode", an.mode)->check(CLI::IsMember({"explicit", "counts"}));
    an_cmd->add_option("--driver", an.driver)->check(CLI::IsMember({"auto", "chordal", "grid"}));
    an_cmd->add_flag("--oracle", an.oracle, "Check against integer homology");
    an_cmd->add_flag("--gamma", an.gamma, "Check the domination-number bound");
    an_cmd->add_flag("--pairs", an.pairs, "Include the matched pairs");
    an_cmd->add_flag("--table", an.table, "Include the grid count table (counts mode, grid driver)");
    an_cmd->add_flag("--timings", an.timings, "Include wall-clock timings (not byte-stable)");
    an_cmd->add_option("--seed", an.seed, "Recorded in the report");
    add_output(an_cmd);

    std::string graph_path, matching_path, driver = "auto";
    bool pairs = false, gf2 = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check a matching for validity and acyclicity");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("matching", matching_path)->required();
    add_output(verify_cmd);

    auto* match_cmd = app.add_subcommand("match", "Emit the constructed matching");
    match_cmd->add_option("graph", graph_path)->required();
    match_cmd->add_option("--driver", driver)->check(CLI::IsMember({"auto", "chordal", "grid"}));
    match_cmd->add_flag("--pairs", pairs, "Include the matched pairs");
    add_output(match_cmd);

    auto* hom_cmd = app.add_subcommand("homology", "Integer homology of I(G)");
    hom_cmd->add_option("graph", graph_path)->required();
    hom_cmd->add_flag("--gf2", gf2, "Also report GF(2) Betti numbers");
    add_output(hom_cmd);

    auto* cmp_cmd = app.add_subcommand("compare", "Cross-check every count source");
    cmp_cmd->add_option("graph", graph_path)->required();
    add_output(cmp_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*an_cmd) return cmd_analyze(an, out);
        if (*verify_cmd) return cmd_verify(graph_path, matching_path, out);
        if (*match_cmd) return cmd_match(graph_path, driver, pairs, out);
        if (*hom_cmd) return cmd_homology(graph_path, gf2, out);
        if (*cmp_cmd) return cmd_compare(graph_path, out);
    } catch (const UnsupportedGraphError& e) {
        std::cerr << "unsupported graph: " << e.what() << '\n';
        return kUnsupported;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerify;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const CapabilityError& e) {
        std::cerr << "too large: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
