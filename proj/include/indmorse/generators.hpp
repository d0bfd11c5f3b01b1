#pragma once

#include "indmorse/errors.hpp"
#include "indmorse/graph.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace indmorse {

/// Cell sizes |V_{i,j}| for 0 <= i <= m, 0 <= j <= n; sizes[i][j].
struct GridSpec {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> sizes;

    static GridSpec uniform(int m, int n, int size) {
        return GridSpec{m, n, std::vector<std::vector<int>>(static_cast<std::size_t>(m + 1),
                                                            std::vector<int>(static_cast<std::size_t>(n + 1), size))};
    }

    int size(int i, int j) const { return sizes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    void validate() const {
        if (m < 0 || n < 0) throw InputError("grid spec needs m, n >= 0");
        if (sizes.size() != static_cast<std::size_t>(m + 1)) throw InputError("grid spec needs m+1 rows of sizes");
        for (const auto& row : sizes) {
            if (row.size() != static_cast<std::size_t>(n + 1)) throw InputError("grid spec needs n+1 sizes per row");
            for (int s : row)
                if (s < 1) throw InputError("every grid cell needs at least one vertex");
        }
    }

    long long vertex_count() const {
        long long total = 0;
        for (const auto& row : sizes)
            for (int s : row) total += s;
        return total;
    }

    // Rectangle of cells [i0, i1] x [j0, j1], relabelled to start at (0, 0).
    GridSpec sub(int i0, int i1, int j0, int j1) const {
        GridSpec out{i1 - i0, j1 - j0, {}};
        for (int i = i0; i <= i1; ++i) {
            out.sizes.emplace_back();
            for (int j = j0; j <= j1; ++j) out.sizes.back().push_back(size(i, j));
        }
        return out;
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Vertices of V_{a} and V_{b} are adjacent iff the cells are comparable in
// the product order (a <= b or b <= a coordinatewise).
inline bool grid_cells_comparable(GridCell a, GridCell b) {
    return (a.i <= b.i && a.j <= b.j) || (a.i >= b.i && a.j >= b.j);
}

/// Graph of the grid family for `spec`. Vertex ids run row-major over cells
/// (i, then j), then over the members of each cell.
inline Graph grid_graph(const GridSpec& spec) {
    spec.validate();
    const long long total = spec.vertex_count();
    if (total > std::numeric_limits<int>::max() / 2) throw InputError("grid spec too large");
    std::vector<GridCell> labels;
    labels.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i <= spec.m; ++i)
        for (int j = 0; j <= spec.n; ++j)
            for (int k = 0; k < spec.size(i, j); ++k) labels.push_back({i, j});
    Graph g(static_cast<int>(total));
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = x + 1; y < g.vertex_count(); ++y)
            if (grid_cells_comparable(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]))
                g.add_edge(x, y);
    g.set_labels(std::move(labels));
    return g;
}

/// Recover the spec realised by a labelled graph, checking that every cell
/// is nonempty and that adjacency follows the comparability rule.
inline GridSpec grid_spec_from_labels(const Graph& g) {
    const auto& labels = g.labels();
    if (labels.empty()) throw InputError("grid graph needs at least one vertex");
    int m = 0, n = 0;
    for (auto c : labels) {
        if (c.i < 0 || c.j < 0) throw InputError("negative grid label");
        m = std::max(m, c.i);
        n = std::max(n, c.j);
    }
    GridSpec spec{m, n, std::vector<std::vector<int>>(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0))};
    for (auto c : labels) ++spec.sizes[static_cast<std::size_t>(c.i)][static_cast<std::size_t>(c.j)];
    spec.validate();
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = x + 1; y < g.vertex_count(); ++y)
            if (g.has_edge(x, y) != grid_cells_comparable(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]))
                throw InputError("adjacency of vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                 " contradicts their grid labels");
    return spec;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Euler's totient by trial division.
inline long long euler_phi(long long x) {
    long long result = x;
    for (long long d = 2; d * d <= x; ++d) {
        if (x % d) continue;
        while (x % d == 0) x /= d;
        result -= result / d;
    }
    if (x > 1) result -= result / x;
    return result;
}

inline constexpr long long kMaxPowerGraphOrder = 1 << 14;

/// Power graph of the cyclic group Z_N, N = p^m q^n. Vertex id = group
/// element; x ~ y iff one generates a subgroup containing the other, i.e.
/// ord(x) | ord(y) or ord(y) | ord(x), with ord(x) = N / gcd(N, x). An
/// element of order p^i q^j is labelled (i, j).
inline Graph power_graph_cyclic(long long p, long long q, int m, int n) {
    if (!is_prime(p) || !is_prime(q)) throw InputError("p and q must be prime");
    if (p == q) throw InputError("p and q must be distinct");
    if (m < 0 || n < 0) throw InputError("exponents must be nonnegative");
    long long order = 1;
    for (int k = 0; k < m + n; ++k) {
        order *= (k < m ? p : q);
        if (order > kMaxPowerGraphOrder) throw InputError("group order exceeds " + std::to_string(kMaxPowerGraphOrder));
    }
    const int total = static_cast<int>(order);
    std::vector<long long> ord(static_cast<std::size_t>(total));
    std::vector<GridCell> labels(static_cast<std::size_t>(total));
    for (int x = 0; x < total; ++x) {
        long long o = order / std::gcd(order, static_cast<long long>(x));
        ord[static_cast<std::size_t>(x)] = o;
        GridCell c{0, 0};
        while (o % p == 0) o /= p, ++c.i;
        while (o % q == 0) o /= q, ++c.j;
        labels[static_cast<std::size_t>(x)] = c;
    }
    Graph g(total);
    for (int x = 0; x < total; ++x)
        for (int y = x + 1; y < total; ++y) {
            const long long a = ord[static_cast<std::size_t>(x)], b = ord[static_cast<std::size_t>(y)];
            if (b % a == 0 || a % b == 0) g.add_edge(x, y);
        }
    g.set_labels(std::move(labels));
    return g;
}

/// Grid spec whose grid graph is isomorphic to power_graph_cyclic(p, q, m, n):
/// |V_{i,j}| = phi(p^i q^j).
inline GridSpec power_graph_spec(long long p, long long q, int m, int n) {
    GridSpec spec{m, n, {}};
    long long pi = 1;
    for (int i = 0; i <= m; ++i, pi *= p) {
        spec.sizes.emplace_back();
        long long qj = 1;
        for (int j = 0; j <= n; ++j, qj *= q) spec.sizes.back().push_back(static_cast<int>(euler_phi(pi * qj)));
    }
    return spec;
}

/// Seeded random chordal graph built by repeatedly adding a simplicial vertex.
///
/// The stream is std::mt19937_64 seeded with `seed`; draws use raw engine
/// output only, so the corpus is reproducible on any standard library:
///   index in [0, k)   : engine() % k
///   Bernoulli(p)      : (engine() >> 11) * 2^-53 < p
/// Vertex x (x = 1..n-1) picks an anchor w = index(x), then grows a maximal
/// clique containing w by scanning 0..x-1 in a Fisher-Yates shuffled order
/// (for i = x-1 down to 1 swap i with index(i+1)). x is joined to w and to
/// every other clique member that passes Bernoulli(extra_density), drawn in
/// increasing id order.
inline Graph random_chordal(int n, double extra_density, std::uint64_t seed) {
    if (n < 1) throw InputError("random_chordal needs n >= 1");
    if (!(extra_density >= 0.0 && extra_density <= 1.0)) throw InputError("extra_density must lie in [0, 1]");
    std::mt19937_64 engine(seed);
    auto index = [&](std::uint64_t k) { return static_cast<int>(engine() % k); };
    auto bernoulli = [&](double p) { return static_cast<double>(engine() >> 11) * 0x1.0p-53 < p; };

    Graph g(n);
    std::vector<int> perm;
    for (int x = 1; x < n; ++x) {
        const int anchor = index(static_cast<std::uint64_t>(x));
        perm.resize(static_cast<std::size_t>(x));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = x - 1; i >= 1; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(index(static_cast<std::uint64_t>(i + 1)))]);
        VertexSet clique = g.empty_set();
        clique.insert(anchor);
        for (int y : perm)
            if (y != anchor && clique.is_subset_of(g.neighbors(y))) clique.insert(y);
        std::vector<int> attach{anchor};
        clique.for_each([&](int y) {
            if (y != anchor && bernoulli(extra_density)) attach.push_back(y);
        });
        for (int y : attach) g.add_edge(x, y);
    }
    return g;
}

enum class StandardKind { path, cycle, complete, empty };

inline Graph standard_graph(StandardKind kind, int n) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    switch (kind) {
        case StandardKind::path:
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            break;
        case StandardKind::cycle:
            if (n < 3) throw InputError("a cycle needs at least 3 vertices");
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            break;
        case StandardKind::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            break;
        case StandardKind::empty:
            break;
    }
    return g;
}

}  // namespace indmorse
