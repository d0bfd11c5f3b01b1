#pragma once

#include "indmorse/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace indmorse {

// Vertex ordering v_1, ..., v_n with v_1 at index 0.
struct EliminationOrder {
    std::vector<int> order;
};

/// Maximum cardinality search. Repeatedly visits the unvisited vertex with the
/// most visited neighbours (ties: smallest id); the reverse of the visit
/// sequence is a perfect elimination ordering whenever the graph is chordal.
inline EliminationOrder maximum_cardinality_search(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
        }
        visited[static_cast<std::size_t>(best)] = true;
        visit.push_back(best);
        g.neighbors(best).for_each([&](int w) {
            if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
        });
    }
    std::reverse(visit.begin(), visit.end());
    return EliminationOrder{std::move(visit)};
}

/// True iff, for every position i, the neighbours of v_i appearing after it
/// form a clique.
inline bool verify_peo(const Graph& g, const EliminationOrder& ord) {
    const int n = g.vertex_count();
    if (static_cast<int>(ord.order.size()) != n) throw InputError("elimination order has wrong length");
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int v = ord.order[static_cast<std::size_t>(i)];
        g.check_vertex(v);
        if (position[static_cast<std::size_t>(v)] >= 0)
            throw InputError("elimination order repeats vertex " + std::to_string(v));
        position[static_cast<std::size_t>(v)] = i;
    }
    for (int i = 0; i < n; ++i) {
        const int v = ord.order[static_cast<std::size_t>(i)];
        VertexSet later = g.empty_set();
        g.neighbors(v).for_each([&](int w) {
            if (position[static_cast<std::size_t>(w)] > i) later.insert(w);
        });
        if (!is_clique_in(g, later)) return false;
    }
    return true;
}

inline bool is_chordal(const Graph& g) { return verify_peo(g, maximum_cardinality_search(g)); }

}  // namespace indmorse
