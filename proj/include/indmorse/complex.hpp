#pragma once

#include "indmorse/errors.hpp"
#include "indmorse/graph.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace indmorse {

// Explicit complexes index vertices with 32-bit masks.
inline constexpr int kMaxExplicitVertices = 32;

/// A simplex as a vertex bitmask over original graph ids. The empty simplex
/// (bits == 0) has dimension -1. Ordered by size, then by mask.
struct Simplex {
    std::uint32_t bits = 0;

    static Simplex of(std::initializer_list<int> vs) {
        Simplex s;
        for (int v : vs) s.bits |= std::uint32_t{1} << v;
        return s;
    }
    static Simplex singleton(int v) { return Simplex{std::uint32_t{1} << v}; }

    int size() const noexcept { return std::popcount(bits); }
    int dim() const noexcept { return size() - 1; }
    bool empty() const noexcept { return bits == 0; }
    bool contains(int v) const noexcept { return (bits >> v) & 1u; }
    bool is_face_of(Simplex other) const noexcept { return (bits & ~other.bits) == 0; }
    Simplex with(int v) const noexcept { return Simplex{bits | (std::uint32_t{1} << v)}; }
    Simplex without(int v) const noexcept { return Simplex{bits & ~(std::uint32_t{1} << v)}; }
    Simplex united(Simplex o) const noexcept { return Simplex{bits | o.bits}; }
    // Smallest vertex id, or -1 for the empty simplex.
    int first() const noexcept { return bits ? std::countr_zero(bits) : -1; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first_vertex = true;
        for (int v : vertices()) {
            s += (first_vertex ? "" : ",") + std::to_string(v);
            first_vertex = false;
        }
        return s + "}";
    }

    friend bool operator==(Simplex a, Simplex b) noexcept { return a.bits == b.bits; }
    friend std::strong_ordering operator<=>(Simplex a, Simplex b) noexcept {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.bits <=> b.bits;
    }
};

struct SimplexHash {
    std::size_t operator()(Simplex s) const noexcept { return std::hash<std::uint32_t>{}(s.bits); }
};

// Neighbourhood masks for graphs under the explicit cap.
inline std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    if (g.vertex_count() > kMaxExplicitVertices)
        throw CapabilityError("explicit complexes are capped at " + std::to_string(kMaxExplicitVertices) +
                              " vertices; use count-only mode");
    std::vector<std::uint32_t> out(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(v)] = g.neighbors(v).to_mask32();
    return out;
}

inline std::uint32_t full_mask(int n) {
    return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u);
}

namespace detail {
template <typename F>
void independent_sets_rec(const std::vector<std::uint32_t>& nbr, std::uint32_t candidates, std::uint32_t current, F& f) {
    if (candidates == 0) {
        f(Simplex{current});
        return;
    }
    const int v = 31 - std::countl_zero(candidates);
    const std::uint32_t rest = candidates & ~(std::uint32_t{1} << v);
    independent_sets_rec(nbr, rest, current, f);
    independent_sets_rec(nbr, rest & ~nbr[static_cast<std::size_t>(v)], current | (std::uint32_t{1} << v), f);
}
}  // namespace detail

/// Visit every independent set (including the empty one) of the subgraph
/// induced by `alive`, branching on the highest remaining vertex.
template <typename F>
void for_each_independent_set(const std::vector<std::uint32_t>& nbr, std::uint32_t alive, F&& f) {
    detail::independent_sets_rec(nbr, alive, 0u, f);
}

/// Downward-closed family of simplices, always containing the empty simplex.
/// Simplices are kept sorted (by dimension, then mask) with a hash index.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(0, {Simplex{}}) {}

    // Trusted constructor: `simplices` must already be downward closed.
    SimplicialComplex(int vertex_count, std::vector<Simplex> simplices) : vertex_count_(vertex_count), simplices_(std::move(simplices)) {
        std::sort(simplices_.begin(), simplices_.end());
        simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
        index_.reserve(simplices_.size());
        for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i].bits, i);
        // dim_start_[k] = first position holding a simplex with >= k vertices.
        const auto sizes = static_cast<std::size_t>(max_dim() + 2);
        dim_start_.assign(sizes + 1, simplices_.size());
        std::size_t pos = 0;
        for (std::size_t k = 0; k <= sizes; ++k) {
            while (pos < simplices_.size() && static_cast<std::size_t>(simplices_[pos].size()) < k) ++pos;
            dim_start_[k] = pos;
        }
    }

    /// Closure of arbitrary generating simplices (used for hand-built test
    /// complexes that are not independence complexes).
    static SimplicialComplex closure(int vertex_count, const std::vector<Simplex>& generators) {
        if (vertex_count > kMaxExplicitVertices) throw CapabilityError("explicit complexes are capped at 32 vertices");
        std::unordered_set<std::uint32_t> seen{0u};
        for (Simplex g : generators) {
            if (vertex_count < 32 && (g.bits >> vertex_count)) throw InputError("generator uses a vertex out of range");
            for (std::uint32_t sub = g.bits;; sub = (sub - 1) & g.bits) {
                seen.insert(sub);
                if (sub == 0) break;
            }
        }
        std::vector<Simplex> all;
        for (auto b : seen) all.push_back(Simplex{b});
        return SimplicialComplex(vertex_count, std::move(all));
    }

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    std::size_t nonempty_size() const noexcept { return simplices_.size() - 1; }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }

    bool contains(Simplex s) const { return index_.count(s.bits) != 0; }
    // Position in simplices(); -1 if absent.
    long index_of(Simplex s) const {
        auto it = index_.find(s.bits);
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

    // max dimension; -1 for {empty}.
    int dimension() const noexcept { return max_dim(); }

    // Simplices of dimension d (d >= -1).
    std::pair<std::size_t, std::size_t> range_of_dim(int d) const {
        const auto k = static_cast<std::size_t>(d + 1);
        if (d < -1 || k + 1 >= dim_start_.size()) return {simplices_.size(), simplices_.size()};
        return {dim_start_[k], dim_start_[k + 1]};
    }
    std::size_t count_of_dim(int d) const {
        auto [b, e] = range_of_dim(d);
        return e - b;
    }

private:
    int max_dim() const noexcept { return simplices_.empty() ? -1 : simplices_.back().dim(); }

    int vertex_count_ = 0;
    std::vector<Simplex> simplices_;
    std::unordered_map<std::uint32_t, std::size_t> index_;
    std::vector<std::size_t> dim_start_;
};

/// Independence complex of G[alive] with original vertex ids.
inline SimplicialComplex independence_complex_in(const Graph& g, std::uint32_t alive) {
    const auto nbr = neighbor_masks(g);
    std::vector<Simplex> all;
    for_each_independent_set(nbr, alive, [&](Simplex s) { all.push_back(s); });
    return SimplicialComplex(g.vertex_count(), std::move(all));
}

inline SimplicialComplex independence_complex(const Graph& g) {
    return independence_complex_in(g, full_mask(std::min(g.vertex_count(), kMaxExplicitVertices)));
}

// f_0, ..., f_dim; empty for the complex {empty}.
using FVector = std::vector<std::size_t>;

inline FVector f_vector(const SimplicialComplex& x) {
    FVector f;
    for (int d = 0; d <= x.dimension(); ++d) f.push_back(x.count_of_dim(d));
    return f;
}

inline bool is_maximal(const SimplicialComplex& x, Simplex s) {
    if (!x.contains(s)) throw InputError("simplex " + s.str() + " is not in the complex");
    for (int w = 0; w < x.vertex_count(); ++w)
        if (!s.contains(w) && x.contains(s.with(w))) return false;
    return true;
}

// A codimension-one face pair of the Hasse diagram: face ⊂ coface.
struct HasseEdge {
    Simplex coface;
    Simplex face;
    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// All edges coface -> face with dim(coface) = dim(face) + 1, including
/// ({v}, empty).
inline std::vector<HasseEdge> hasse_edges(const SimplicialComplex& x) {
    std::vector<HasseEdge> out;
    for (Simplex s : x.simplices())
        for (int v : s.vertices()) out.push_back({s, s.without(v)});
    return out;
}

/// Check that the independence complex splits into the four blocks
///   B1 = union over u in N(v) of I(G - N[u]),
///   B2 = I(G - N[v]) \ B1,
///   B3 = disjoint union over u of { a + u : a in I(G - N[u]) },
///   B4 = { a + v : a in I(G - N[v]) },
/// that the blocks are pairwise disjoint with union I(G), and that
/// B1 ⊆ I(G - N[v]).
inline bool partition_check(const Graph& g, int v) {
    g.check_vertex(v);
    if (g.degree(v) == 0) throw InputError("partition_check needs a non-isolated vertex");
    if (!is_clique(g, g.neighbors(v))) throw InputError("partition_check needs N(v) to be a clique");
    const auto nbr = neighbor_masks(g);
    const std::uint32_t all = full_mask(g.vertex_count());
    auto closed = [&](int w) { return nbr[static_cast<std::size_t>(w)] | (std::uint32_t{1} << w); };

    std::unordered_set<Simplex, SimplexHash> b1, b2, b3, b4;
    std::unordered_set<Simplex, SimplexHash> minus_nv;
    for_each_independent_set(nbr, all & ~closed(v), [&](Simplex s) { minus_nv.insert(s); });

    bool ok = true;
    for (int u : g.neighbors(v).members()) {
        for_each_independent_set(nbr, all & ~closed(u), [&](Simplex a) {
            b1.insert(a);
            if (!minus_nv.count(a)) ok = false;
            if (!b3.insert(a.with(u)).second) ok = false;
        });
    }
    for (Simplex a : minus_nv) {
        if (!b1.count(a)) b2.insert(a);
        b4.insert(a.with(v));
    }
    std::unordered_set<Simplex, SimplexHash> unioned;
    std::size_t total = 0;
    for (const auto* block : {&b1, &b2, &b3, &b4}) {
        total += block->size();
        unioned.insert(block->begin(), block->end());
    }
    if (unioned.size() != total) ok = false;  // some blocks overlap

    std::size_t complex_size = 0;
    for_each_independent_set(nbr, all, [&](Simplex s) {
        ++complex_size;
        if (!unioned.count(s)) ok = false;
    });
    return ok && complex_size == unioned.size();
}

}  // namespace indmorse
