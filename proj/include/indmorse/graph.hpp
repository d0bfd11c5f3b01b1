#pragma once

#include "indmorse/errors.hpp"
#include "indmorse/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace indmorse {

// Position (i, j) of a vertex in the grid family; cell V_{i,j}.
struct GridCell {
    int i = 0;
    int j = 0;
    friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Finite simple undirected graph on dense vertex ids 0..n-1.
///
/// Adjacency is kept as one VertexSet per vertex. Optional grid labels
/// assign every vertex to a cell of the grid family; they are carried
/// through induced_delete so recursive drivers can read them back.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_count(n)), VertexSet(static_cast<std::size_t>(n))) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].insert(v);
        adjacency_[static_cast<std::size_t>(v)].insert(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(u)].contains(v);
    }

    // Open neighbourhood N(v).
    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& a : adjacency_) twice += a.size();
        return twice / 2;
    }

    // Edges (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            adjacency_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    VertexSet all_vertices() const { return VertexSet::full(adjacency_.size()); }
    VertexSet empty_set() const { return VertexSet(adjacency_.size()); }

    bool has_labels() const noexcept { return labels_.has_value(); }
    const std::vector<GridCell>& labels() const {
        if (!labels_) throw InputError("graph carries no grid labels");
        return *labels_;
    }
    void set_labels(std::vector<GridCell> labels) {
        if (labels.size() != adjacency_.size()) throw InputError("label count does not match vertex count");
        labels_ = std::move(labels);
    }
    void clear_labels() { labels_.reset(); }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(vertex_count()) + ")");
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
    }

private:
    static int check_count(int n) {
        if (n < 0) throw InputError("negative vertex count");
        return n;
    }

    std::vector<VertexSet> adjacency_;
    std::optional<std::vector<GridCell>> labels_;
};

// Induced subgraph with dense relabelling; original_id[new] = old.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_id;
};

inline void check_members(const Graph& g, const VertexSet& s) {
    s.for_each([&](int v) { g.check_vertex(v); });
}

/// N_G[v] = N_G(v) + v.
inline VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    check_members(g, s);
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

inline bool is_simplicial(const Graph& g, int v) { return is_clique(g, closed_neighborhood(g, v)); }

inline VertexSet universal_vertices(const Graph& g) {
    VertexSet out = g.empty_set();
    const auto n = static_cast<std::size_t>(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).size() + 1 == n) out.insert(v);
    return out;
}

/// G - U with vertices renumbered in increasing order of original id.
inline InducedSubgraph induced_delete(const Graph& g, const VertexSet& removed) {
    check_members(g, removed);
    InducedSubgraph out;
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed.contains(v)) continue;
        new_id[static_cast<std::size_t>(v)] = static_cast<int>(out.original_id.size());
        out.original_id.push_back(v);
    }
    out.graph = Graph(static_cast<int>(out.original_id.size()));
    for (auto [u, v] : g.edges()) {
        const int a = new_id[static_cast<std::size_t>(u)];
        const int b = new_id[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) out.graph.add_edge(a, b);
    }
    if (g.has_labels()) {
        std::vector<GridCell> labels;
        labels.reserve(out.original_id.size());
        for (int v : out.original_id) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

/// Subgraph induced by `kept` (convenience over induced_delete).
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
    return induced_delete(g, g.all_vertices() - kept);
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen = g.empty_set();
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp = g.empty_set();
        std::vector<int> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            g.neighbors(v).for_each([&](int w) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline constexpr int kMaxDominationVertices = 24;

/// Exact domination number by exhaustive search over subsets of increasing
/// cardinality. Gated at kMaxDominationVertices.
inline int domination_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw InputError("domination number needs at least one vertex");
    if (n > kMaxDominationVertices)
        throw CapabilityError("domination number is exhaustive and capped at " +
                              std::to_string(kMaxDominationVertices) + " vertices");
    std::vector<VertexSet> closed;
    for (int v = 0; v < n; ++v) closed.push_back(closed_neighborhood(g, v));
    const VertexSet everything = g.all_vertices();

    std::vector<int> pick;
    // Lexicographic k-combinations of 0..n-1.
    for (int k = 1; k <= n; ++k) {
        pick.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet covered = g.empty_set();
            for (int v : pick) covered |= closed[static_cast<std::size_t>(v)];
            if (covered == everything) return k;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return n;
}

// ---- queries restricted to an alive vertex subset (original ids) ----------

inline bool is_clique_in(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

inline bool is_simplicial_in(const Graph& g, const VertexSet& alive, int v) {
    return is_clique_in(g, g.neighbors(v) & alive);
}

// Smallest-id simplicial vertex of G[alive], or -1.
inline int smallest_simplicial_in(const Graph& g, const VertexSet& alive) {
    int found = -1;
    alive.for_each([&](int v) {
        if (found < 0 && is_simplicial_in(g, alive, v)) found = v;
    });
    return found;
}

// Smallest-id isolated vertex of G[alive], or -1.
inline int smallest_isolated_in(const Graph& g, const VertexSet& alive) {
    int found = -1;
    alive.for_each([&](int v) {
        if (found < 0 && !g.neighbors(v).intersects(alive)) found = v;
    });
    return found;
}

inline VertexSet universal_in(const Graph& g, const VertexSet& alive) {
    VertexSet out = g.empty_set();
    const std::size_t n = alive.size();
    alive.for_each([&](int v) {
        if ((g.neighbors(v) & alive).size() + 1 == n) out.insert(v);
    });
    return out;
}

}  // namespace indmorse
