#pragma once

#include "indmorse/bigint.hpp"
#include "indmorse/errors.hpp"
#include "indmorse/generators.hpp"
#include "indmorse/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace indmorse {

namespace detail {

class CountRecursion {
public:
    explicit CountRecursion(const Graph& g) : g_(g) {}

    CriticalFVector solve(const VertexSet& alive) {
        if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
        CriticalFVector out = compute(alive);
        memo_.emplace(alive, out);
        return out;
    }

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    CriticalFVector compute(const VertexSet& alive) {
        if (alive.empty()) return {};
        if (smallest_isolated_in(g_, alive) >= 0) return CriticalFVector{1};
        if (is_clique_in(g_, alive)) return CriticalFVector(std::vector<BigInt>{BigInt(alive.size())});
        const int v = smallest_simplicial_in(g_, alive);
        if (v < 0) throw UnsupportedGraphError("no simplicial vertex in an induced subgraph with " + std::to_string(alive.size()) + " vertices", alive.members());

        CriticalFVector f;
        f.add(0, BigInt(1 + universal_in(g_, alive).size()));
        BigInt non_universal = 0;
        (g_.neighbors(v) & alive).for_each([&](int u) {
            const VertexSet rest = alive - closed_neighborhood(g_, u);
            if (rest.empty()) return;
            ++non_universal;
            const CriticalFVector sub = solve(rest);
            for (std::size_t d = 0; d < sub.size(); ++d) f.add(d + 1, sub[d]);
        });
        f.add(1, -non_universal);
        return f;
    }

    const Graph& g_;
    std::unordered_map<VertexSet, CriticalFVector, VertexSetHash> memo_;
};

inline BigInt delta(long long a, long long b) { return a == b ? BigInt(1) : BigInt(0); }

}  // namespace detail

/// Critical f-vector of the recursive construction without building any
/// complex. Same vertex policy as build_auto (smallest-id simplicial vertex);
/// memoised on vertex subsets, so there is no vertex cap.
inline CriticalFVector critical_fvector_recursive(const Graph& g) {
    detail::CountRecursion rec(g);
    return rec.solve(g.all_vertices());
}

/// c[i][j][l] = number of l-dimensional critical simplices of I(G_{i,j}),
/// where G_{i,j} is induced by the cells [0, i] x [j, n], for
/// 0 <= i <= m-1, 1 <= j <= n and 0 <= l <= min(i, n-j).
class GridCountTable {
public:
    GridCountTable() = default;
    GridCountTable(int m, int n) : m_(m), n_(n), c_(static_cast<std::size_t>(m), std::vector<std::vector<BigInt>>(static_cast<std::size_t>(n + 1))) {
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= n; ++j) at(i, j).assign(static_cast<std::size_t>(top(i, j) + 1), 0);
    }

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    // d_{i,j}
    int top(int i, int j) const { return std::min(i, n_ - j); }

    const std::vector<BigInt>& at(int i, int j) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    std::vector<BigInt>& at(int i, int j) { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const BigInt& operator()(int i, int j, int l) const { return at(i, j).at(static_cast<std::size_t>(l)); }

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<std::vector<std::vector<BigInt>>> c_;
};

/// Fill the table from the closed recurrences. Layer l only reads layer l-1,
/// so the table is filled layer by layer.
inline GridCountTable grid_count_table(const GridSpec& spec) {
    spec.validate();
    if (spec.m < 1 || spec.n < 1) throw InputError("grid count table needs m >= 1 and n >= 1");
    const int m = spec.m, n = spec.n;
    auto size = [&](int i, int j) { return BigInt(spec.size(i, j)); };
    using detail::delta;

    GridCountTable c(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= n; ++j) {
            BigInt& c0 = c.at(i, j)[0];
            if (i == 0) {
                for (int s = j; s <= n; ++s) c0 += size(0, s);
            } else if (j == n) {
                for (int r = 0; r <= i; ++r) c0 += size(r, n);
            } else {
                c0 = 1 + size(0, j) + size(i, n);
            }
        }
    const int max_top = std::min(m - 1, n - 1);
    for (int l = 1; l <= max_top; ++l)
        for (int i = 0; i < m; ++i)
            for (int j = 1; j <= n; ++j) {
                if (l > c.top(i, j)) continue;
                BigInt value = 0;
                for (int r = l; r <= i; ++r)
                    value += (size(r, j) - delta(r, i)) * (c(r - 1, j + 1, l - 1) - delta(l - 1, 0));
                if (l < n - j)
                    for (int s = j + 1; s <= n - l; ++s)
                        value += size(i, s) * (c(i - 1, s + 1, l - 1) - delta(l - 1, 0));
                c.at(i, j)[static_cast<std::size_t>(l)] = value;
            }
    return c;
}

/// Critical f-vector of the grid construction on I(grid_graph(spec)) from the
/// closed recurrences. Single rows or columns are complete graphs.
inline CriticalFVector grid_critical_fvector(const GridSpec& spec, GridCountTable* table_out = nullptr) {
    spec.validate();
    const int m = spec.m, n = spec.n;
    auto size = [&](int i, int j) { return BigInt(spec.size(i, j)); };
    using detail::delta;

    if (m == 0 || n == 0) {
        BigInt total = 0;
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= n; ++j) total += size(i, j);
        return CriticalFVector(std::vector<BigInt>{total});
    }
    const GridCountTable c = grid_count_table(spec);
    const int d = std::min(m, n);
    std::vector<BigInt> f(static_cast<std::size_t>(d + 1));
    f[0] = 1 + size(0, 0) + size(m, n);
    for (int t = 1; t <= d; ++t) {
        BigInt value = 0;
        for (int r = t; r <= m; ++r)
            value += (size(r, 0) - delta(r, m)) * (c(r - 1, 1, t - 1) - delta(t - 1, 0));
        // In the top dimension the second sum only survives when m < n; its
        // upper index is n - d there.
        if (t < d || m < n)
            for (int s = 1; s <= n - t; ++s)
                value += size(m, s) * (c(m - 1, s + 1, t - 1) - delta(t - 1, 0));
        f[static_cast<std::size_t>(t)] = value;
    }
    if (table_out) *table_out = c;
    return CriticalFVector(std::move(f));
}

}  // namespace indmorse
