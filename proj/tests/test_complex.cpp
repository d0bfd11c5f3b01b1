#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "indmorse/complex.hpp"
#include "indmorse/generators.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace indmorse;

namespace {
Graph path(int n) { return standard_graph(StandardKind::path, n); }
Graph complete(int n) { return standard_graph(StandardKind::complete, n); }

std::vector<std::uint32_t> masks(const SimplicialComplex& x) {
    std::vector<std::uint32_t> out;
    for (Simplex s : x.simplices()) out.push_back(s.bits);
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("simplex basics") {
    const Simplex s = Simplex::of({0, 2});
    CHECK(s.dim() == 1);
    CHECK(Simplex{}.dim() == -1);
    CHECK(s.str() == "{0,2}");
    CHECK(Simplex{}.str() == "{}");
    CHECK(Simplex::singleton(2).is_face_of(s));
    CHECK(s.without(0) == Simplex::singleton(2));
    CHECK(Simplex::singleton(5) < Simplex::of({0, 1}));
}

TEST_CASE("independence complex examples") {
    CHECK(masks(independence_complex(complete(3))) == std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b100});
    CHECK(masks(independence_complex(path(3))) == std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b100, 0b101});
    const auto full = independence_complex(Graph(2));
    CHECK(full.size() == 4);
    CHECK(full.contains(Simplex::of({0, 1})));
    CHECK_THROWS_AS(independence_complex(Graph(33)), CapabilityError);
}

TEST_CASE("independence complex equals the subset scan") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::all_labelled_graphs(n)) {
            auto expected = oracle::independent_sets(g);
            REQUIRE(masks(independence_complex(g)) == expected);
        }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = corpus::random_chordal_instance(seed, 14);
        REQUIRE(masks(independence_complex(g)) == oracle::independent_sets(g));
    }
}

TEST_CASE("f-vector") {
    CHECK(f_vector(independence_complex(complete(3))) == FVector{3});
    CHECK(f_vector(independence_complex(path(3))) == FVector{3, 1});
    CHECK(f_vector(independence_complex(grid_graph(GridSpec::uniform(1, 1, 1)))) == FVector{4, 1});
    CHECK(f_vector(independence_complex(Graph(0))).empty());
}

TEST_CASE("dimension ranges") {
    const auto x = independence_complex(path(5));
    CHECK(x.dimension() == 2);
    CHECK(x.count_of_dim(-1) == 1);
    CHECK(x.count_of_dim(0) == 5);
    CHECK(x.count_of_dim(1) == 6);
    CHECK(x.count_of_dim(2) == 1);
    CHECK(x.count_of_dim(3) == 0);
    CHECK(x.count_of_dim(-2) == 0);
    auto [b, e] = x.range_of_dim(1);
    for (auto i = b; i < e; ++i) CHECK(x.simplices()[i].dim() == 1);
}

TEST_CASE("maximality") {
    const auto x = independence_complex(path(3));
    CHECK(is_maximal(x, Simplex::of({0, 2})));
    CHECK_FALSE(is_maximal(x, Simplex::of({0})));
    CHECK(is_maximal(independence_complex(complete(3)), Simplex::of({0})));
    CHECK_THROWS_AS(is_maximal(x, Simplex::of({0, 1})), InputError);
}

TEST_CASE("universal vertices are exactly the isolated points of the complex") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::all_labelled_graphs(n)) {
            const auto x = independence_complex(g);
            const auto univ = universal_vertices(g);
            for (int v = 0; v < n; ++v) REQUIRE(univ.contains(v) == is_maximal(x, Simplex::singleton(v)));
        }
}

TEST_CASE("Hasse edges") {
    const auto k1 = hasse_edges(independence_complex(Graph(1)));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == HasseEdge{Simplex::singleton(0), Simplex{}});

    const auto p3 = hasse_edges(independence_complex(path(3)));
    CHECK(p3.size() == 5);
    CHECK(std::count(p3.begin(), p3.end(), HasseEdge{Simplex::of({0, 2}), Simplex::singleton(0)}) == 1);
    CHECK(std::count(p3.begin(), p3.end(), HasseEdge{Simplex::of({0, 2}), Simplex::singleton(2)}) == 1);

    CHECK(hasse_edges(independence_complex(Graph(2))).size() == 4);
}

TEST_CASE("complexes are downward closed") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto x = independence_complex(corpus::random_chordal_instance(seed, 14));
        for (Simplex s : x.simplices())
            for (int v : s.vertices()) REQUIRE(x.contains(s.without(v)));
    }
}

TEST_CASE("closure builds arbitrary complexes") {
    const auto boundary = SimplicialComplex::closure(3, {Simplex::of({0, 1}), Simplex::of({1, 2}), Simplex::of({0, 2})});
    CHECK(boundary.size() == 7);
    CHECK(f_vector(boundary) == FVector{3, 3});
    CHECK_THROWS_AS(SimplicialComplex::closure(2, {Simplex::of({0, 3})}), InputError);
}

TEST_CASE("partition check") {
    CHECK(partition_check(path(3), 0));
    CHECK(partition_check(path(4), 0));
    CHECK(partition_check(path(4), 3));
    CHECK(partition_check(complete(2), 0));
    CHECK(partition_check(complete(2), 1));
    CHECK_THROWS_AS(partition_check(path(3), 1), InputError);  // N(b) = {a, c} is not a clique
    CHECK_THROWS_AS(partition_check(Graph(2), 0), InputError);
}

TEST_CASE("partition check holds at every simplicial vertex of the corpus") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const Graph g = corpus::random_chordal_instance(seed, 12);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0 && is_simplicial(g, v)) REQUIRE(partition_check(g, v));
    }
}

TEST_CASE("grid complexes have dimension min(m, n)") {
    for (const auto& spec : corpus::all_grid_specs(3, 2))
        REQUIRE(independence_complex(grid_graph(spec)).dimension() == std::min(spec.m, spec.n));
}
