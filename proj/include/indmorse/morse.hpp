#pragma once

#include "indmorse/bigint.hpp"
#include "indmorse/chordal.hpp"
#include "indmorse/complex.hpp"
#include "indmorse/errors.hpp"
#include "indmorse/generators.hpp"
#include "indmorse/graph.hpp"
#include "indmorse/matching.hpp"

#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace indmorse {

/// Acyclic matching on I(G[domain]) in original vertex ids, together with
/// its critical simplices. `special_zero` is the one critical 0-simplex that
/// may fail to be maximal.
struct ConstructionResult {
    std::uint32_t domain = 0;
    Matching matching;
    std::optional<Simplex> special_zero;
    CriticalSet critical;
};

using ResultPtr = std::shared_ptr<const ConstructionResult>;

enum class Driver { chordal, grid, automatic };

inline const char* driver_name(Driver d) {
    switch (d) {
        case Driver::chordal: return "chordal";
        case Driver::grid: return "grid";
        case Driver::automatic: return "auto";
    }
    return "?";
}

/// One application of the single-step extension, as seen by an observer.
struct ExtensionNode {
    struct Branch {
        int u = -1;
        std::optional<int> x_u;  // absent when u is universal in the node
        ResultPtr sub;           // matching on I(G[domain] - N[u]); null when universal
    };

    std::uint32_t domain = 0;
    int v = -1;
    int universal_count = 0;  // k
    int neighbor_count = 0;   // |N(v)|
    std::vector<Branch> branches;
    CriticalFVector predicted;  // counts from the single-step formulas
    ResultPtr result;
};

struct BuildOptions {
    // Called once per extension node (memoised nodes are visited once).
    std::function<void(const ExtensionNode&)> on_extend;
    // Re-verify validity and acyclicity of the final matching on I(G).
    bool verify_result = true;
};

namespace detail {

inline std::uint32_t bit_of(int v) { return std::uint32_t{1} << v; }

inline std::vector<int> mask_members(std::uint32_t m) { return Simplex{m}.vertices(); }

inline std::string mask_str(std::uint32_t m) { return Simplex{m}.str(); }

/// Shared machinery for the single-step extension and the base cases,
/// working on G[alive] with original ids.
class Kernel {
public:
    explicit Kernel(const Graph& g) : g_(g), nbr_(neighbor_masks(g)) {}

    const Graph& graph() const { return g_; }
    std::uint32_t nbr(int v) const { return nbr_[static_cast<std::size_t>(v)]; }
    std::uint32_t closed(int v) const { return nbr(v) | bit_of(v); }

    bool is_clique(std::uint32_t s) const {
        for (int v : mask_members(s))
            if ((s & ~bit_of(v)) & ~nbr(v)) return false;
        return true;
    }

    std::uint32_t universal(std::uint32_t alive) const {
        std::uint32_t out = 0;
        for (int v : mask_members(alive))
            if ((alive & ~closed(v)) == 0) out |= bit_of(v);
        return out;
    }

    CriticalSet criticals(std::uint32_t alive, const Matching& m) const {
        const MatchingIndex index(m);
        CriticalSet out;
        std::vector<BigInt> counts;
        for_each_independent_set(nbr_, alive, [&](Simplex s) {
            if (!index.is_critical(s)) return;
            out.simplices.push_back(s);
            const auto d = static_cast<std::size_t>(s.dim());
            if (counts.size() <= d) counts.resize(d + 1);
            counts[d] += 1;
        });
        std::sort(out.simplices.begin(), out.simplices.end());
        out.counts = CriticalFVector(std::move(counts));
        return out;
    }

    // Pairs (a, a + v) for every a in I(G[alive - v]).
    ConstructionResult isolated(std::uint32_t alive, int v) const {
        if (!(alive & bit_of(v))) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
        if (nbr(v) & alive) throw InputError("vertex " + std::to_string(v) + " is not isolated");
        ConstructionResult r;
        r.domain = alive;
        for_each_independent_set(nbr_, alive & ~bit_of(v), [&](Simplex a) { r.matching.add(a, a.with(v)); });
        r.special_zero = Simplex::singleton(v);
        r.critical = criticals(alive, r.matching);
        return r;
    }

    ConstructionResult complete(std::uint32_t alive) const {
        if (alive == 0) throw InputError("complete-graph base case needs at least one vertex");
        if (!is_clique(alive)) throw InputError("graph on " + mask_str(alive) + " is not complete");
        ConstructionResult r;
        r.domain = alive;
        r.critical = criticals(alive, r.matching);
        return r;
    }

    // x_u: the sub-result's special 0-simplex when it is not maximal in the
    // subcomplex, otherwise its smallest-id critical 0-simplex.
    int choose_x(const ConstructionResult& sub) const {
        if (sub.special_zero) {
            const int x = sub.special_zero->first();
            if (sub.domain & ~closed(x)) return x;
        }
        for (Simplex s : sub.critical.simplices)
            if (s.dim() == 0) return s.first();
        throw VerificationError("sub-matching on " + mask_str(sub.domain) + " has no critical 0-simplex");
    }

    /// Single-step extension at the simplicial vertex v of G[alive].
    ConstructionResult extend(std::uint32_t alive, int v, const std::map<int, ResultPtr>& subs, ExtensionNode* node) const {
        if (!(alive & bit_of(v))) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
        const std::uint32_t nv = nbr(v) & alive;
        if (nv == 0) throw InputError("extension vertex " + std::to_string(v) + " is isolated");
        if ((alive & ~closed(v)) == 0) throw InputError("extension vertex " + std::to_string(v) + " is universal");
        if (!is_clique(nv)) throw InputError("extension vertex " + std::to_string(v) + " is not simplicial");

        const std::uint32_t univ = universal(alive);
        ConstructionResult r;
        r.domain = alive;
        std::vector<BigInt> predicted;
        auto bump = [&](std::size_t d, const BigInt& by) {
            if (predicted.size() <= d) predicted.resize(d + 1);
            predicted[d] += by;
        };
        bump(0, 1 + std::popcount(univ));
        BigInt non_universal = 0;

        if (node) {
            node->domain = alive;
            node->v = v;
            node->universal_count = std::popcount(univ);
            node->neighbor_count = std::popcount(nv);
        }
        for (int u : mask_members(nv)) {
            const std::uint32_t rest = alive & ~closed(u);
            ExtensionNode::Branch branch{u, std::nullopt, nullptr};
            if (rest != 0) {
                auto it = subs.find(u);
                if (it == subs.end() || !it->second)
                    throw InputError("missing sub-matching for non-universal neighbour " + std::to_string(u));
                const ConstructionResult& sub = *it->second;
                if (sub.domain != rest)
                    throw InputError("sub-matching for " + std::to_string(u) + " lives on " + mask_str(sub.domain) +
                                     ", expected " + mask_str(rest));
                for (const auto& p : sub.matching.pairs)
                    if (!p.face.empty()) r.matching.add(p.face.with(u), p.coface.with(u));
                const int x = choose_x(sub);
                r.matching.add(Simplex::singleton(u), Simplex::singleton(u).with(x));
                branch.x_u = x;
                branch.sub = it->second;
                ++non_universal;
                const auto& c = sub.critical.counts.values();
                for (std::size_t d = 0; d < c.size(); ++d) bump(d + 1, c[d]);
            }
            if (node) node->branches.push_back(std::move(branch));
        }
        bump(1, -non_universal);
        for_each_independent_set(nbr_, alive & ~closed(v), [&](Simplex a) { r.matching.add(a, a.with(v)); });
        r.special_zero = Simplex::singleton(v);
        r.critical = criticals(alive, r.matching);

        CriticalFVector expected(std::move(predicted));
        if (r.critical.counts != expected)
            throw VerificationError("critical counts " + r.critical.counts.str() + " at extension of vertex " +
                                    std::to_string(v) + " on " + mask_str(alive) + " differ from the single-step formula " +
                                    expected.str());
        if (node) node->predicted = expected;
        return r;
    }

private:
    const Graph& g_;
    std::vector<std::uint32_t> nbr_;
};

/// Memoised recursive driver over vertex subsets.
class Builder {
public:
    Builder(const Graph& g, Driver driver, const BuildOptions& opts) : kernel_(g), driver_(driver), opts_(opts) {
        if (driver == Driver::grid) labels_ = g.labels();
    }

    ResultPtr solve(std::uint32_t alive) {
        if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
        ResultPtr out = compute(alive);
        memo_.emplace(alive, out);
        return out;
    }

private:
    ResultPtr compute(std::uint32_t alive) {
        if (alive == 0) return std::make_shared<const ConstructionResult>();
        int v = -1;
        if (driver_ == Driver::grid) {
            v = grid_vertex(alive);
            if (v < 0) return std::make_shared<const ConstructionResult>(kernel_.complete(alive));
        } else {
            const VertexSet alive_set = VertexSet::from_mask32(static_cast<std::size_t>(kernel_.graph().vertex_count()), alive);
            if (int iso = smallest_isolated_in(kernel_.graph(), alive_set); iso >= 0)
                return std::make_shared<const ConstructionResult>(kernel_.isolated(alive, iso));
            if (kernel_.is_clique(alive)) return std::make_shared<const ConstructionResult>(kernel_.complete(alive));
            v = driver_ == Driver::chordal ? peo_head(alive_set) : smallest_simplicial_in(kernel_.graph(), alive_set);
            if (v < 0)
                throw UnsupportedGraphError("no simplicial vertex in the induced subgraph on " + mask_str(alive),
                                            mask_members(alive));
        }
        std::map<int, ResultPtr> subs;
        for (int u : mask_members(kernel_.nbr(v) & alive)) {
            const std::uint32_t rest = alive & ~kernel_.closed(u);
            if (rest != 0) subs.emplace(u, solve(rest));
        }
        ExtensionNode node;
        ExtensionNode* node_ptr = opts_.on_extend ? &node : nullptr;
        auto result = std::make_shared<const ConstructionResult>(kernel_.extend(alive, v, subs, node_ptr));
        if (node_ptr) {
            node.result = result;
            opts_.on_extend(node);
        }
        return result;
    }

    int peo_head(const VertexSet& alive) const {
        auto sub = induced_subgraph(kernel_.graph(), alive);
        const auto order = maximum_cardinality_search(sub.graph);
        const int v = sub.original_id[static_cast<std::size_t>(order.order.front())];
        if (!is_simplicial_in(kernel_.graph(), alive, v))
            throw VerificationError("perfect elimination ordering head " + std::to_string(v) + " is not simplicial");
        return v;
    }

    // Smallest-id vertex of the lower-right corner cell (m, 0) of the current
    // rectangle of cells, or -1 when the rectangle is a single row or column.
    int grid_vertex(std::uint32_t alive) const {
        int i0 = 1 << 30, i1 = -1, j0 = 1 << 30, j1 = -1;
        for (int x : mask_members(alive)) {
            const GridCell c = labels_[static_cast<std::size_t>(x)];
            i0 = std::min(i0, c.i), i1 = std::max(i1, c.i);
            j0 = std::min(j0, c.j), j1 = std::max(j1, c.j);
        }
        int corner = -1;
        for (int x = 0; x < kernel_.graph().vertex_count(); ++x) {
            const GridCell c = labels_[static_cast<std::size_t>(x)];
            const bool inside = c.i >= i0 && c.i <= i1 && c.j >= j0 && c.j <= j1;
            if (inside != static_cast<bool>(alive & bit_of(x)))
                throw InputError("subgraph on " + mask_str(alive) + " is not a full rectangle of grid cells");
            if (inside && corner < 0 && c.i == i1 && c.j == j0) corner = x;
        }
        if (i0 == i1 || j0 == j1) return -1;
        return corner;
    }

    Kernel kernel_;
    Driver driver_;
    const BuildOptions& opts_;
    std::vector<GridCell> labels_;
    std::unordered_map<std::uint32_t, ResultPtr> memo_;
};

inline void verify_final(const Graph& g, const ConstructionResult& r) {
    const auto x = independence_complex(g);
    if (auto ok = verify_matching(x, r.matching); !ok) throw VerificationError("constructed matching is invalid: " + ok.detail);
    if (auto ok = verify_acyclic(x, r.matching); !ok) throw VerificationError("constructed matching is cyclic: " + ok.detail);
}

inline ConstructionResult run(const Graph& g, Driver driver, const BuildOptions& opts) {
    Builder b(g, driver, opts);
    ConstructionResult r = *b.solve(full_mask(g.vertex_count()));
    if (opts.verify_result) verify_final(g, r);
    return r;
}

}  // namespace detail

/// Matching for a graph with an isolated vertex v: (a, a + v) for every
/// a in I(G - v), the empty simplex included. {v} is the only critical simplex.
inline ConstructionResult match_isolated(const Graph& g, int v) {
    g.check_vertex(v);
    return detail::Kernel(g).isolated(full_mask(g.vertex_count()), v);
}

/// Complete graphs: empty matching, every vertex a maximal critical 0-simplex.
inline ConstructionResult match_complete(const Graph& g) {
    return detail::Kernel(g).complete(full_mask(g.vertex_count()));
}

/// Extend matchings on I(G - N[u]) (one per non-universal u in N(v), given in
/// original ids) to an acyclic matching on I(G):
///   (i)   lift every pair (a, b) of V_u with a nonempty to (a + u, b + u);
///   (ii)  pair {u} with {u, x_u} for a chosen V_u-critical 0-simplex x_u;
///   (iii) pair a with a + v for every a in I(G - N[v]), including (empty, {v}).
/// The critical counts are checked against
///   f_0 = 1 + k,  f_1 = sum_u f_0(V_u) - (|N(v)| - k),  f_t = sum_u f_{t-1}(V_u).
inline ConstructionResult extend_matching(const Graph& g, int v, const std::map<int, ConstructionResult>& sub,
                                          ExtensionNode* node = nullptr) {
    g.check_vertex(v);
    detail::Kernel kernel(g);
    std::map<int, ResultPtr> subs;
    for (const auto& [u, r] : sub) {
        g.check_vertex(u);
        const auto x = independence_complex_in(g, r.domain);
        if (auto ok = verify_matching(x, r.matching); !ok)
            throw InputError("sub-matching for " + std::to_string(u) + " is invalid: " + ok.detail);
        if (auto ok = verify_acyclic(x, r.matching); !ok)
            throw InputError("sub-matching for " + std::to_string(u) + " is cyclic: " + ok.detail);
        subs.emplace(u, std::make_shared<const ConstructionResult>(r));
    }
    return kernel.extend(full_mask(g.vertex_count()), v, subs, node);
}

/// Recursive construction for chordal graphs; v is the head of the maximum
/// cardinality search elimination ordering at every stage.
inline ConstructionResult build_chordal_matching(const Graph& g, const BuildOptions& opts = {}) {
    if (!is_chordal(g)) throw InputError("graph is not chordal");
    return detail::run(g, Driver::chordal, opts);
}

/// Recursive construction for the grid family; v is taken from the corner
/// cell (m, 0) of each sub-rectangle.
inline ConstructionResult build_grid_matching(const Graph& g, const GridSpec& spec, const BuildOptions& opts = {}) {
    spec.validate();
    if (!g.has_labels()) throw InputError("grid driver needs grid labels");
    if (grid_spec_from_labels(g) != spec) throw InputError("graph labels do not realise the given grid spec");
    return detail::run(g, Driver::grid, opts);
}

/// Generic driver: smallest-id simplicial vertex at every stage. Throws
/// UnsupportedGraphError when some stage has none.
inline ConstructionResult build_auto(const Graph& g, const BuildOptions& opts = {}) {
    return detail::run(g, Driver::automatic, opts);
}

inline ConstructionResult build_matching(const Graph& g, Driver driver, const BuildOptions& opts = {}) {
    switch (driver) {
        case Driver::chordal: return build_chordal_matching(g, opts);
        case Driver::grid: return build_grid_matching(g, grid_spec_from_labels(g), opts);
        case Driver::automatic: return build_auto(g, opts);
    }
    throw InputError("unknown driver");
}

/// Translate a result computed on an induced subgraph back to parent ids.
inline ConstructionResult lift(const ConstructionResult& r, std::span<const int> original_id) {
    auto map = [&](Simplex s) {
        Simplex out;
        for (int v : s.vertices()) out = out.with(original_id[static_cast<std::size_t>(v)]);
        return out;
    };
    ConstructionResult out;
    out.domain = map(Simplex{r.domain}).bits;
    for (const auto& p : r.matching.pairs) out.matching.add(map(p.face), map(p.coface));
    if (r.special_zero) out.special_zero = map(*r.special_zero);
    for (Simplex s : r.critical.simplices) out.critical.simplices.push_back(map(s));
    std::sort(out.critical.simplices.begin(), out.critical.simplices.end());
    out.critical.counts = r.critical.counts;
    return out;
}

}  // namespace indmorse
