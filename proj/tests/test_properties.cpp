#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "indmorse/indmorse.hpp"
#include "oracles.hpp"

using namespace indmorse;

namespace {

long long alternating(const std::vector<long long>& f) {
    long long s = 0;
    for (std::size_t d = 0; d < f.size(); ++d) s += (d % 2 ? -1 : 1) * f[d];
    return s;
}

// Morse inequalities, Euler characteristic and the domination bound for one
// graph and one constructed matching.
void check_invariants(const Graph& g, const ConstructionResult& r) {
    const auto x = independence_complex(g);
    const auto h = homology_integer(x);
    for (std::size_t d = 0; d < h.betti.size(); ++d) REQUIRE(r.critical.counts[d] >= h.betti[d]);

    std::vector<long long> betti(h.betti.begin(), h.betti.end());
    const long long chi = alternating(oracle::f_vector(g));
    REQUIRE(r.critical.counts.euler() == chi);
    REQUIRE(alternating(betti) == chi);

    if (g.vertex_count() <= 16) {
        const auto type = classify(x, r.matching);
        REQUIRE(domination_number(g) == oracle::domination_number(g));
        if (!std::holds_alternative<Collapsible>(type))
            REQUIRE(min_sphere_dimension(type) >= oracle::domination_number(g) - 1);
    }
}

}  // namespace

TEST_CASE("Morse, Euler and domination invariants on random chordal graphs") {
    for (std::uint64_t seed = 1000; seed < 1250; ++seed) {
        const Graph g = corpus::random_chordal_instance(seed, 14);
        check_invariants(g, build_chordal_matching(g));
    }
}

TEST_CASE("Morse, Euler and domination invariants on grids") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const GridSpec spec = corpus::random_grid_spec(seed, 3, 2);
        if (spec.vertex_count() > 20) continue;
        const Graph g = grid_graph(spec);
        check_invariants(g, build_grid_matching(g, spec));
    }
}

TEST_CASE("count recursion matches the explicit construction up to 20 vertices") {
    for (std::uint64_t seed = 2000; seed < 2060; ++seed) {
        const Graph g = corpus::random_chordal_instance(seed, 20);
        const auto r = build_auto(g);
        REQUIRE(critical_fvector_recursive(g) == r.critical.counts);
    }
}

TEST_CASE("relabelling a chordal graph keeps its critical counts") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const Graph g = corpus::random_chordal_instance(seed, 12);
        std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(g.vertex_count());
        for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        REQUIRE(build_chordal_matching(h).critical.counts == build_chordal_matching(g).critical.counts);
        REQUIRE(build_auto(h).critical.counts == critical_fvector_recursive(g));
    }
}
