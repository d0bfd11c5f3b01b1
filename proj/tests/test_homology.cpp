#include "catch_amalgamated.hpp"

#include "corpus.hpp"
#include "indmorse/homology.hpp"
#include "indmorse/morse.hpp"

using namespace indmorse;

namespace {
Graph path(int n) { return standard_graph(StandardKind::path, n); }
Simplex S(std::initializer_list<int> vs) { return Simplex::of(vs); }

// Dense product A*B of two boundary matrices.
std::vector<std::vector<BigInt>> product(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    std::vector<std::vector<BigInt>> out(a.rows, std::vector<BigInt>(b.cols));
    for (std::size_t c = 0; c < b.cols; ++c)
        for (const auto& eb : b.columns[c])
            for (const auto& ea : a.columns[eb.row]) out[ea.row][c] += ea.value * eb.value;
    return out;
}

SparseIntMatrix dense_to_sparse(const std::vector<std::vector<int>>& d) {
    SparseIntMatrix m;
    m.rows = d.size();
    m.cols = d.empty() ? 0 : d[0].size();
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (std::size_t r = 0; r < m.rows; ++r)
            if (d[r][c] != 0) m.columns[c].push_back({r, BigInt(d[r][c])});
    return m;
}
}  // namespace

TEST_CASE("boundary matrix of I(P3)") {
    const auto x = independence_complex(path(3));
    const auto d1 = boundary_matrix(x, 1);
    REQUIRE(d1.rows == 3);
    REQUIRE(d1.cols == 1);
    // Rows follow {0}, {1}, {2}; the edge is {0, 2}.
    CHECK(d1.at(0, 0) == -1);
    CHECK(d1.at(1, 0) == 0);
    CHECK(d1.at(2, 0) == 1);
    CHECK_THROWS_AS(boundary_matrix(x, 2), InputError);
    CHECK_THROWS_AS(boundary_matrix(x, 0), InputError);
}

TEST_CASE("boundary matrices square to zero and edges have two endpoints") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto x = independence_complex(corpus::random_chordal_instance(seed, 13));
        if (x.dimension() >= 1) {
            const auto d1 = boundary_matrix(x, 1);
            for (const auto& col : d1.columns) {
                REQUIRE(col.size() == 2);
                REQUIRE(col[0].value + col[1].value == 0);
            }
        }
        for (int d = 2; d <= x.dimension(); ++d) {
            for (const auto& row : product(boundary_matrix(x, d - 1), boundary_matrix(x, d)))
                for (const auto& e : row) REQUIRE(e == 0);
        }
    }
}

TEST_CASE("Smith invariant factors") {
    CHECK(smith_invariant_factors(dense_to_sparse({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
    CHECK(smith_invariant_factors(dense_to_sparse({{2, 4}, {6, 8}})) == std::vector<BigInt>{2, 4});
    CHECK(smith_invariant_factors(dense_to_sparse({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == std::vector<BigInt>{1, 3});
    CHECK(smith_invariant_factors(dense_to_sparse({{0, 0}, {0, 0}})).empty());
    CHECK(smith_invariant_factors(dense_to_sparse({{6}, {4}})) == std::vector<BigInt>{2});
}

TEST_CASE("integer homology of named complexes") {
    const auto k3 = homology_integer(independence_complex(standard_graph(StandardKind::complete, 3)));
    CHECK(k3.betti == std::vector<std::size_t>{3});
    CHECK(k3.all_torsion_free());

    CHECK(homology_integer(independence_complex(path(5))).betti == std::vector<std::size_t>{1, 1, 0});
    const auto c5 = homology_integer(independence_complex(standard_graph(StandardKind::cycle, 5)));
    CHECK(c5.betti == std::vector<std::size_t>{1, 1});
    CHECK(c5.all_torsion_free());

    CHECK(homology_integer(SimplicialComplex{}).betti.empty());
}

TEST_CASE("integer homology detects torsion") {
    // Six-vertex real projective plane: H_1 = Z/2, H_2 = 0.
    const std::vector<Simplex> facets{S({0, 1, 2}), S({0, 2, 3}), S({0, 3, 4}), S({0, 4, 5}), S({0, 1, 5}),
                                      S({1, 2, 4}), S({2, 3, 5}), S({1, 3, 4}), S({2, 4, 5}), S({1, 3, 5})};
    const auto rp2 = SimplicialComplex::closure(6, facets);
    const auto h = homology_integer(rp2);
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 0});
    CHECK(h.torsion_free == std::vector<bool>{true, false, true});
    // Over GF(2) the class shows up in dimensions 1 and 2.
    CHECK(betti_gf2(rp2) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("GF(2) Betti numbers") {
    CHECK(betti_gf2(independence_complex(standard_graph(StandardKind::complete, 3))) == std::vector<std::size_t>{3});
    CHECK(betti_gf2(independence_complex(path(5))) == std::vector<std::size_t>{1, 1, 0});
    CHECK(betti_gf2(independence_complex(standard_graph(StandardKind::cycle, 5))) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("homology invariants on the corpus") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto x = independence_complex(corpus::random_chordal_instance(seed, 14));
        const auto h = homology_integer(x);
        REQUIRE(h.betti.size() == static_cast<std::size_t>(x.dimension() + 1));
        REQUIRE(h.betti[0] >= 1);
        REQUIRE(h.all_torsion_free());
        REQUIRE(betti_gf2(x) == h.betti);
        long long chi_f = 0, chi_b = 0;
        const auto f = f_vector(x);
        for (std::size_t d = 0; d < f.size(); ++d) {
            chi_f += (d % 2 ? -1 : 1) * static_cast<long long>(f[d]);
            chi_b += (d % 2 ? -1 : 1) * static_cast<long long>(h.betti[d]);
        }
        REQUIRE(chi_f == chi_b);
    }
}

TEST_CASE("homology size gate") {
    CHECK_THROWS_AS(homology_integer(independence_complex(Graph(17))), CapabilityError);
    CHECK_THROWS_AS(betti_gf2(independence_complex(Graph(17))), CapabilityError);
}

TEST_CASE("brute-force optimal matching") {
    CHECK(optimal_matching_bruteforce(independence_complex(standard_graph(StandardKind::complete, 3))) == 3);
    CHECK(optimal_matching_bruteforce(independence_complex(path(3))) == 2);
    CHECK(optimal_matching_bruteforce(independence_complex(path(4))) == 1);
    CHECK(optimal_matching_bruteforce(SimplicialComplex{}) == 0);
    // Boundary of a triangle: a circle needs two critical cells.
    CHECK(optimal_matching_bruteforce(SimplicialComplex::closure(3, {S({0, 1}), S({1, 2}), S({0, 2})})) == 2);
    // Full triangle collapses.
    CHECK(optimal_matching_bruteforce(independence_complex(Graph(3))) == 1);
    CHECK_THROWS_AS(optimal_matching_bruteforce(independence_complex(Graph(4))), CapabilityError);
}

TEST_CASE("brute force never beats the homology lower bound") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto x = independence_complex(corpus::random_chordal_instance(seed, 8));
        if (x.nonempty_size() > kMaxBruteForceSimplices) continue;
        std::size_t total_betti = 0;
        for (auto b : homology_integer(x).betti) total_betti += b;
        REQUIRE(optimal_matching_bruteforce(x) >= total_betti);
    }
}
