#pragma once

#include "indmorse/bigint.hpp"
#include "indmorse/complex.hpp"
#include "indmorse/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace indmorse {

/// Sparse integer matrix stored by columns; each column sorted by row.
struct SparseIntMatrix {
    struct Entry {
        std::size_t row;
        BigInt value;
    };
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    BigInt at(std::size_t r, std::size_t c) const {
        for (const auto& e : columns.at(c))
            if (e.row == r) return e.value;
        return 0;
    }
};

/// Simplicial boundary d: C_d -> C_{d-1}. Rows and columns follow the
/// complex's canonical order within each dimension; the face omitting the
/// k-th smallest vertex carries sign (-1)^k.
inline SparseIntMatrix boundary_matrix(const SimplicialComplex& x, int d) {
    if (d < 1 || d > x.dimension())
        throw InputError("boundary dimension " + std::to_string(d) + " outside [1, " + std::to_string(x.dimension()) + "]");
    const auto [rb, re] = x.range_of_dim(d - 1);
    const auto [cb, ce] = x.range_of_dim(d);
    SparseIntMatrix m;
    m.rows = re - rb;
    m.cols = ce - cb;
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
        const Simplex s = x.simplices()[cb + c];
        const auto verts = s.vertices();
        for (std::size_t k = 0; k < verts.size(); ++k) {
            const long idx = x.index_of(s.without(verts[k]));
            m.columns[c].push_back({static_cast<std::size_t>(idx) - rb, BigInt(k % 2 == 0 ? 1 : -1)});
        }
        std::sort(m.columns[c].begin(), m.columns[c].end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    }
    return m;
}

namespace detail {

// Invariant factors of a small dense matrix (destroyed).
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
    using boost::multiprecision::abs;
    std::vector<BigInt> diag;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Pivot: smallest nonzero magnitude in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) pr = r, pc = c;
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                const BigInt q = a[r][t] / a[t][t];
                for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                const BigInt q = a[t][c] / a[t][t];
                for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into the pivot row.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

}  // namespace detail

/// Nonzero invariant factors of an integer matrix, in Smith order.
///
/// Unit pivots are eliminated first on the sparse columns (each removes one
/// row and one column and contributes a factor 1), choosing the sparsest
/// column and row available; whatever remains is reduced densely with
/// smallest-magnitude pivoting.
inline std::vector<BigInt> smith_invariant_factors(SparseIntMatrix m) {
    using Entry = SparseIntMatrix::Entry;
    std::vector<std::unordered_set<std::size_t>> row_cols(m.rows);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c]) row_cols[e.row].insert(c);

    std::size_t units = 0;
    std::vector<bool> alive(m.cols, true);
    while (true) {
        std::size_t pc = m.cols, pr = m.rows;
        BigInt pv;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (!alive[c] || m.columns[c].empty()) continue;
            if (pc != m.cols && m.columns[c].size() >= m.columns[pc].size()) continue;
            for (const auto& e : m.columns[c])
                if (e.value == 1 || e.value == -1) {
                    if (pc != c || row_cols[e.row].size() < row_cols[pr].size()) pc = c, pr = e.row, pv = e.value;
                }
        }
        if (pc == m.cols) break;

        const std::vector<Entry> pivot_col = m.columns[pc];
        std::vector<std::size_t> others(row_cols[pr].begin(), row_cols[pr].end());
        for (std::size_t c : others) {
            if (c == pc) continue;
            auto& col = m.columns[c];
            BigInt factor = 0;
            for (const auto& e : col)
                if (e.row == pr) factor = e.value * pv;  // pv is its own inverse
            std::vector<Entry> merged;
            merged.reserve(col.size() + pivot_col.size());
            std::size_t a = 0, b = 0;
            while (a < col.size() || b < pivot_col.size()) {
                if (b == pivot_col.size() || (a < col.size() && col[a].row < pivot_col[b].row)) {
                    merged.push_back(std::move(col[a++]));
                } else if (a == col.size() || pivot_col[b].row < col[a].row) {
                    merged.push_back({pivot_col[b].row, -factor * pivot_col[b].value});
                    row_cols[pivot_col[b].row].insert(c);
                    ++b;
                } else {
                    BigInt v = col[a].value - factor * pivot_col[b].value;
                    if (v != 0) merged.push_back({col[a].row, std::move(v)});
                    else row_cols[col[a].row].erase(c);
                    ++a, ++b;
                }
            }
            col = std::move(merged);
        }
        for (const auto& e : pivot_col) row_cols[e.row].erase(pc);
        m.columns[pc].clear();
        alive[pc] = false;
        ++units;
    }

    // Dense remainder.
    std::vector<std::size_t> rest_rows, rest_cols;
    for (std::size_t r = 0; r < m.rows; ++r)
        if (!row_cols[r].empty()) rest_rows.push_back(r);
    for (std::size_t c = 0; c < m.cols; ++c)
        if (alive[c] && !m.columns[c].empty()) rest_cols.push_back(c);
    std::vector<BigInt> factors(units, BigInt(1));
    if (!rest_rows.empty() && !rest_cols.empty()) {
        std::vector<std::vector<BigInt>> dense(rest_rows.size(), std::vector<BigInt>(rest_cols.size()));
        for (std::size_t j = 0; j < rest_cols.size(); ++j)
            for (const auto& e : m.columns[rest_cols[j]]) {
                const auto i = static_cast<std::size_t>(std::lower_bound(rest_rows.begin(), rest_rows.end(), e.row) - rest_rows.begin());
                dense[i][j] = e.value;
            }
        for (auto& f : detail::dense_smith(std::move(dense))) factors.push_back(std::move(f));
    }
    return factors;
}

// Unreduced Betti numbers and, per dimension, whether H_d has no torsion.
struct HomologyProfile {
    std::vector<std::size_t> betti;
    std::vector<bool> torsion_free;

    bool all_torsion_free() const { return std::all_of(torsion_free.begin(), torsion_free.end(), [](bool b) { return b; }); }
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

inline constexpr std::size_t kMaxHomologySimplices = 50'000;

inline HomologyProfile homology_integer(const SimplicialComplex& x) {
    if (x.size() > kMaxHomologySimplices)
        throw CapabilityError("integer homology is capped at " + std::to_string(kMaxHomologySimplices) + " simplices");
    const int top = x.dimension();
    HomologyProfile out;
    if (top < 0) return out;
    // rank[d] and torsion[d] describe the boundary d: C_d -> C_{d-1}.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    std::vector<bool> torsion(static_cast<std::size_t>(top + 2), false);
    for (int d = 1; d <= top; ++d) {
        const auto factors = smith_invariant_factors(boundary_matrix(x, d));
        rank[static_cast<std::size_t>(d)] = factors.size();
        for (const auto& f : factors)
            if (f > 1) torsion[static_cast<std::size_t>(d)] = true;
    }
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        out.betti.push_back(x.count_of_dim(d) - rank[du] - rank[du + 1]);
        out.torsion_free.push_back(!torsion[du + 1]);
    }
    return out;
}

/// Betti numbers over the two-element field.
inline std::vector<std::size_t> betti_gf2(const SimplicialComplex& x) {
    if (x.size() > kMaxHomologySimplices)
        throw CapabilityError("GF(2) homology is capped at " + std::to_string(kMaxHomologySimplices) + " simplices");
    const int top = x.dimension();
    if (top < 0) return {};
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    for (int d = 1; d <= top; ++d) {
        const auto [rb, re] = x.range_of_dim(d - 1);
        const auto [cb, ce] = x.range_of_dim(d);
        const std::size_t words = (re - rb + 63) / 64;
        // One bit vector per d-simplex over the (d-1)-faces.
        std::vector<std::vector<std::uint64_t>> vecs;
        vecs.reserve(ce - cb);
        for (std::size_t c = cb; c < ce; ++c) {
            std::vector<std::uint64_t> v(words, 0);
            const Simplex s = x.simplices()[c];
            for (int w : s.vertices()) {
                const auto r = static_cast<std::size_t>(x.index_of(s.without(w))) - rb;
                v[r / 64] ^= std::uint64_t{1} << (r % 64);
            }
            vecs.push_back(std::move(v));
        }
        std::vector<std::vector<std::uint64_t>> basis(re - rb);  // indexed by leading bit
        std::vector<bool> has(re - rb, false);
        std::size_t r = 0;
        for (auto& v : vecs) {
            while (true) {
                std::size_t lead = re - rb;
                for (std::size_t w = words; w-- > 0;)
                    if (v[w]) {
                        lead = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w]));
                        break;
                    }
                if (lead == re - rb) break;
                if (!has[lead]) {
                    basis[lead] = v;
                    has[lead] = true;
                    ++r;
                    break;
                }
                for (std::size_t w = 0; w < words; ++w) v[w] ^= basis[lead][w];
            }
        }
        rank[static_cast<std::size_t>(d)] = r;
    }
    std::vector<std::size_t> betti;
    for (int d = 0; d <= top; ++d)
        betti.push_back(x.count_of_dim(d) - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d) + 1]);
    return betti;
}

inline constexpr std::size_t kMaxBruteForceSimplices = 14;

/// Minimum total number of critical simplices over all acyclic matchings,
/// by exhaustive search on the Hasse diagram of the nonempty simplices.
/// Pairs with the empty simplex never lower the count and are not explored.
inline std::size_t optimal_matching_bruteforce(const SimplicialComplex& x) {
    const std::size_t n = x.nonempty_size();
    if (n > kMaxBruteForceSimplices)
        throw CapabilityError("brute-force matching search is capped at " + std::to_string(kMaxBruteForceSimplices) +
                              " nonempty simplices");
    if (n == 0) return 0;
    // Local index i <-> x.simplices()[i + 1].
    std::vector<Simplex> cell(n);
    for (std::size_t i = 0; i < n; ++i) cell[i] = x.simplices()[i + 1];
    std::vector<std::vector<std::size_t>> faces(n), cofaces(n);
    for (std::size_t i = 0; i < n; ++i)
        if (cell[i].dim() >= 1)
            for (int w : cell[i].vertices()) {
                const auto f = static_cast<std::size_t>(x.index_of(cell[i].without(w))) - 1;
                faces[i].push_back(f);
                cofaces[f].push_back(i);
            }

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> partner(n, none);

    // Would pairing face f with coface c close a V-path cycle?
    auto closes_cycle = [&](std::size_t f, std::size_t c) {
        std::vector<std::size_t> stack{c};
        std::vector<bool> seen(n, false);
        seen[c] = true;
        while (!stack.empty()) {
            const std::size_t top = stack.back();
            stack.pop_back();
            for (std::size_t g : faces[top]) {
                if (g == partner[top] || (top == c && g == f)) continue;
                if (g == f) return true;
                const std::size_t up = partner[g];
                if (up != none && cell[up].dim() > cell[g].dim() && !seen[up]) {
                    seen[up] = true;
                    stack.push_back(up);
                }
            }
        }
        return false;
    };

    // An acyclic matching leaves at least one critical 0-simplex, and the
    // number of critical simplices has the parity of n.
    const std::size_t floor = (n % 2 == 1) ? 1 : 2;
    std::size_t best = n;
    auto search = [&](auto&& self, std::size_t i, std::size_t fixed_critical) -> void {
        if (best == floor || fixed_critical >= best) return;
        if (i == n) {
            best = fixed_critical;
            return;
        }
        if (partner[i] != none) {
            self(self, i + 1, fixed_critical);
            return;
        }
        for (std::size_t c : cofaces[i]) {
            if (partner[c] != none || closes_cycle(i, c)) continue;
            partner[i] = c;
            partner[c] = i;
            self(self, i + 1, fixed_critical);
            partner[i] = partner[c] = none;
        }
        self(self, i + 1, fixed_critical + 1);
    };
    search(search, 0, 0);
    return best;
}

}  // namespace indmorse
