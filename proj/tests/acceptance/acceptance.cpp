// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance [--cli PATH]
//
// With --cli the negative controls also run the command-line tool and check
// its exit code; without it they check the library exception only.

#include "corpus.hpp"
#include "indmorse/indmorse.hpp"
#include "oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace indmorse;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what();
    }
};

bool report(int id, const std::string& title, const Tally& t, double secs, double limit_secs = 0) {
    const bool over_time = limit_secs > 0 && secs > limit_secs;
    const bool pass = t.failed == 0 && t.checked > 0 && !over_time;
    std::printf("%s %2d  %-36s checks=%lld failures=%lld time=%.1fs", pass ? "PASS" : "FAIL", id, title.c_str(), t.checked,
                t.failed, secs);
    if (limit_secs > 0) std::printf(" (limit %.0fs)", limit_secs);
    std::printf("\n");
    if (!t.first_failure.empty()) std::printf("      first failure: %s\n", t.first_failure.c_str());
    if (t.checked == 0) std::printf("      nothing was checked\n");
    std::fflush(stdout);
    return pass;
}

std::string counts_str(const CountVector& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string graph_str(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges=[";
    for (auto [u, v] : g.edges()) os << '(' << u << ',' << v << ')';
    os << ']';
    return os.str();
}

std::string spec_str(const GridSpec& s) {
    std::ostringstream os;
    os << "grid m=" << s.m << " n=" << s.n << " sizes=";
    for (const auto& row : s.sizes) {
        os << '[';
        for (int x : row) os << x;
        os << ']';
    }
    return os.str();
}

// Counts predicted by the single-step formulas from the branch sub-results.
CriticalFVector local_prediction(const ExtensionNode& node) {
    const int k = node.universal_count;
    std::vector<BigInt> f(1, BigInt(1 + k));
    std::vector<BigInt> sums;
    for (const auto& b : node.branches) {
        if (!b.sub) continue;
        const auto& c = b.sub->critical.counts;
        if (sums.size() < c.size()) sums.resize(c.size());
        for (std::size_t t = 0; t < c.size(); ++t) sums[t] += c[t];
    }
    f.resize(sums.size() + 1);
    for (std::size_t t = 0; t < sums.size(); ++t) f[t + 1] += sums[t];
    if (f.size() > 1) f[1] -= node.neighbor_count - k;
    return CountVector(std::move(f));
}

struct Instance {
    std::string name;
    Graph g;
    ConstructionResult r;
};

struct Results {
    Tally local, valid, maximal, perfect, gamma, euler;
    double build_secs = 0, check_secs = 0;
};

void check_instance(const Instance& in, Results& res) {
    const auto x = independence_complex(in.g);
    const auto& r = in.r;
    const auto where = [&](const std::string& msg) { return [&, msg] { return in.name + ": " + msg; }; };

    const auto valid = verify_matching(x, r.matching);
    res.valid.check(static_cast<bool>(valid), where("invalid: " + valid.detail));
    if (valid) {
        const auto acyclic = verify_acyclic(x, r.matching);
        res.valid.check(static_cast<bool>(acyclic), where("cyclic: " + acyclic.detail));
    }

    for (Simplex s : r.critical.simplices) {
        if (r.special_zero && s == *r.special_zero) continue;
        res.maximal.check(is_maximal(x, s), where("critical " + s.str() + " is not maximal"));
    }

    const auto h = homology_integer(x);
    std::size_t betti_total = 0;
    for (auto b : h.betti) betti_total += b;
    res.perfect.check(r.critical.counts.total() == betti_total && h.all_torsion_free(),
                      where("critical " + counts_str(r.critical.counts) + " vs betti total " + std::to_string(betti_total)));

    const auto f = f_vector(x);
    long long chi_f = 0, chi_b = 0;
    for (std::size_t d = 0; d < f.size(); ++d) chi_f += (d % 2 ? -1 : 1) * static_cast<long long>(f[d]);
    for (std::size_t d = 0; d < h.betti.size(); ++d) chi_b += (d % 2 ? -1 : 1) * static_cast<long long>(h.betti[d]);
    res.euler.check(r.critical.counts.euler() == chi_f && chi_f == chi_b,
                    where("euler f=" + std::to_string(chi_f) + " betti=" + std::to_string(chi_b)));

    if (in.g.vertex_count() <= kMaxDominationVertices) {
        const auto type = classify(x, r.matching);
        if (std::holds_alternative<WedgeOfSpheres>(type)) {
            const int gamma = domination_number(in.g);
            res.gamma.check(min_sphere_dimension(type) >= gamma - 1,
                            where("min sphere dim " + std::to_string(min_sphere_dimension(type)) + " < gamma-1 = " +
                                  std::to_string(gamma - 1)));
        } else {
            res.gamma.check(std::holds_alternative<Collapsible>(type), where("unclassified"));
        }
    }
}

BuildOptions local_checker(const std::string& name, Tally& local) {
    BuildOptions opts;
    opts.on_extend = [&local, name](const ExtensionNode& node) {
        const auto expected = local_prediction(node);
        local.check(expected == node.result->critical.counts, [&] {
            return name + ": node v=" + std::to_string(node.v) + " counts " + counts_str(node.result->critical.counts) +
                   " predicted " + counts_str(expected);
        });
    };
    return opts;
}

// ---- negative controls via the CLI ------------------------------------------

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void write_graph(const std::filesystem::path& p, const Graph& g) {
    std::ofstream out(p);
    out << "{\"n\":" << g.vertex_count() << ",\"edges\":[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out << (first ? "" : ",") << '[' << u << ',' << v << ']';
        first = false;
    }
    out << "]}\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    bool all = true;
    Results res;

    // Corpus: seeded random chordal graphs and every small grid spec.
    auto t0 = Clock::now();
    std::vector<Instance> corpus;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Instance in;
        in.name = "chordal seed " + std::to_string(seed);
        in.g = corpus::random_chordal_instance(seed, 14);
        in.r = build_chordal_matching(in.g, local_checker(in.name, res.local));
        corpus.push_back(std::move(in));
    }
    const auto specs = corpus::all_grid_specs(3, 2);
    for (const auto& spec : specs) {
        Instance in;
        in.name = spec_str(spec);
        in.g = grid_graph(spec);
        in.r = build_grid_matching(in.g, spec, local_checker(in.name, res.local));
        corpus.push_back(std::move(in));
    }
    res.build_secs = seconds_since(t0);
    std::printf("corpus: 500 random chordal graphs (n <= 14) and %zu grid specs (m, n <= 3, sizes <= 2)\n", specs.size());

    t0 = Clock::now();
    for (const auto& in : corpus) check_instance(in, res);
    res.check_secs = seconds_since(t0);

    all &= report(1, "local extension counts", res.local, res.build_secs, 300);
    all &= report(2, "validity and acyclicity", res.valid, res.check_secs);
    all &= report(3, "maximality of critical cells", res.maximal, res.check_secs);
    all &= report(4, "critical total equals Betti total", res.perfect, res.check_secs);

    // 5. Exhaustive optimality on small chordal graphs.
    {
        t0 = Clock::now();
        Tally t;
        for (int n = 1; n <= 6; ++n)
            for (const Graph& g : oracle::all_labelled_graphs(n)) {
                if (!oracle::chordal_by_induced_cycles(g)) continue;
                const auto x = independence_complex(g);
                if (x.nonempty_size() > kMaxBruteForceSimplices) continue;
                const auto r = build_chordal_matching(g);
                const std::size_t best = optimal_matching_bruteforce(x);
                t.check(r.critical.counts.total() == best,
                        [&] { return graph_str(g) + ": construction " + counts_str(r.critical.counts) + " vs optimum " + std::to_string(best); });
            }
        all &= report(5, "optimality on chordal graphs n<=6", t, seconds_since(t0), 600);
    }

    // 6. Grid recurrences against both recursions.
    {
        t0 = Clock::now();
        Tally t;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const auto closed = grid_critical_fvector(specs[i]);
            const auto& built = corpus[500 + i].r.critical.counts;
            const auto recursive = critical_fvector_recursive(corpus[500 + i].g);
            t.check(closed == built && closed == recursive, [&] {
                return spec_str(specs[i]) + ": recurrences " + counts_str(closed) + " construction " + counts_str(built) +
                       " recursion " + counts_str(recursive);
            });
        }
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const GridSpec spec = corpus::random_grid_spec(seed, 5, 4);
            const auto closed = grid_critical_fvector(spec);
            const auto recursive = critical_fvector_recursive(grid_graph(spec));
            t.check(closed == recursive,
                    [&] { return spec_str(spec) + ": recurrences " + counts_str(closed) + " recursion " + counts_str(recursive); });
        }
        all &= report(6, "grid recurrences", t, seconds_since(t0));
    }

    // 7. Named instances, each confirmed by the homology oracle.
    {
        t0 = Clock::now();
        Tally t;
        auto named = [&](const std::string& name, const Graph& g, const ConstructionResult& r, const CountVector& f,
                         const HomotopyType& type) {
            const auto x = independence_complex(g);
            const auto got = classify(x, r.matching);
            const bool oracle_ok = consistency_with_homology(type, homology_integer(x));
            t.check(r.critical.counts == f && got == type && oracle_ok, [&] {
                return name + ": counts " + counts_str(r.critical.counts) + " type " + homotopy_str(got) +
                       (oracle_ok ? "" : " (homology disagrees)");
            });
        };
        const Graph p4 = standard_graph(StandardKind::path, 4);
        const Graph p5 = standard_graph(StandardKind::path, 5);
        named("I(P4)", p4, build_chordal_matching(p4), CountVector{1}, Collapsible{});
        named("I(P5)", p5, build_chordal_matching(p5), CountVector{1, 1}, WedgeOfSpheres{CountVector{0, 1}});
        const GridSpec s11 = GridSpec::uniform(1, 1, 1);
        const Graph g11 = grid_graph(s11);
        named("1x1 singleton grid", g11, build_grid_matching(g11, s11), CountVector{3}, WedgeOfSpheres{CountVector{2}});
        const Graph z6 = power_graph_cyclic(2, 3, 1, 1);
        named("Z6 power graph", z6, build_grid_matching(z6, grid_spec_from_labels(z6)), CountVector{4},
              WedgeOfSpheres{CountVector{3}});
        for (int n = 1; n <= 10; ++n) {
            const Graph k = standard_graph(StandardKind::complete, n);
            const HomotopyType type = n == 1 ? HomotopyType{Collapsible{}} : HomotopyType{WedgeOfSpheres{CountVector{n - 1}}};
            named("I(K" + std::to_string(n) + ")", k, build_chordal_matching(k), CountVector{n}, type);
        }
        all &= report(7, "named instances", t, seconds_since(t0));
    }

    all &= report(8, "sphere dimension >= gamma - 1", res.gamma, res.check_secs);
    all &= report(9, "Euler characteristic", res.euler, res.check_secs);

    // 10. Negative controls.
    {
        t0 = Clock::now();
        Tally t;
        const auto dir = std::filesystem::temp_directory_path() / ("indmorse_acceptance_" + std::to_string(::getpid()));
        if (!cli.empty()) std::filesystem::create_directories(dir);
        for (int n : {4, 5}) {
            const Graph c = standard_graph(StandardKind::cycle, n);
            bool rejected = false;
            try {
                build_auto(c);
            } catch (const UnsupportedGraphError&) {
                rejected = true;
            }
            t.check(rejected, [n] { return "C" + std::to_string(n) + " accepted by the auto driver"; });
            if (!cli.empty()) {
                const auto file = dir / ("c" + std::to_string(n) + ".json");
                write_graph(file, c);
                const int code = run_cli(cli, "analyze \"" + file.string() + "\" --driver auto");
                t.check(code == 3, [n, code] { return "CLI on C" + std::to_string(n) + " exited " + std::to_string(code); });
            }
        }
        Matching cyc;
        cyc.add(Simplex::of({0}), Simplex::of({0, 1}));
        cyc.add(Simplex::of({1}), Simplex::of({1, 2}));
        cyc.add(Simplex::of({2}), Simplex::of({0, 2}));
        const auto boundary =
            SimplicialComplex::closure(3, {Simplex::of({0, 1}), Simplex::of({1, 2}), Simplex::of({0, 2})});
        t.check(!verify_acyclic(boundary, cyc), [] { return "cyclic field on the triangle boundary accepted"; });
        t.check(!verify_acyclic(independence_complex(Graph(3)), cyc), [] { return "cyclic field on the full triangle accepted"; });
        if (!cli.empty()) std::filesystem::remove_all(dir);
        all &= report(10, cli.empty() ? "negative controls (library only)" : "negative controls (library and CLI)", t,
                      seconds_since(t0));
    }

    std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
