#pragma once

#include "indmorse/bigint.hpp"
#include "indmorse/complex.hpp"
#include "indmorse/errors.hpp"
#include "indmorse/graph.hpp"
#include "indmorse/homology.hpp"
#include "indmorse/matching.hpp"
#include "indmorse/morse.hpp"

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

namespace indmorse {

struct Collapsible {
    friend bool operator==(const Collapsible&, const Collapsible&) = default;
};

// counts[d] spheres of dimension d; at least one count is nonzero.
struct WedgeOfSpheres {
    CountVector counts;
    friend bool operator==(const WedgeOfSpheres&, const WedgeOfSpheres&) = default;
};

struct Unclassified {
    std::string reason;
    friend bool operator==(const Unclassified&, const Unclassified&) = default;
};

using HomotopyType = std::variant<Collapsible, WedgeOfSpheres, Unclassified>;

inline std::string homotopy_str(const HomotopyType& h) {
    if (std::holds_alternative<Collapsible>(h)) return "collapsible";
    if (const auto* w = std::get_if<WedgeOfSpheres>(&h)) return "wedge" + w->counts.str();
    return "unclassified: " + std::get<Unclassified>(h).reason;
}

/// Homotopy type read off critical counts (f_0, f_1, ...) when the wedge
/// conclusion is known to apply: a point if only one critical cell, else
/// f_0 - 1 zero-spheres and f_d spheres of dimension d >= 1.
inline HomotopyType homotopy_from_counts(const CriticalFVector& f) {
    if (f.total() == 1 && f[0] == 1) return Collapsible{};
    if (f.empty()) throw InputError("an acyclic matching on a nonempty complex has a critical 0-simplex");
    std::vector<BigInt> c = f.values();
    c[0] -= 1;
    return WedgeOfSpheres{CountVector(std::move(c))};
}

enum class ClassifyRule { maximal_critical, single_dimension, vpath_reachability, none };

inline const char* classify_rule_name(ClassifyRule r) {
    switch (r) {
        case ClassifyRule::maximal_critical: return "maximal-critical";
        case ClassifyRule::single_dimension: return "single-dimension";
        case ClassifyRule::vpath_reachability: return "vpath-reachability";
        case ClassifyRule::none: break;
    }
    return "none";
}

struct Classification {
    HomotopyType type;
    ClassifyRule rule = ClassifyRule::none;
};

/// Classify X from an acyclic matching. Rules are tried in order:
///   1. every critical simplex is maximal, except possibly one 0-simplex;
///   2. one critical 0-simplex and all other critical simplices in a
///      single dimension (or no critical simplex above dimension 0);
///   3. one critical 0-simplex, and no critical simplex of dimension >= 1
///      reaches another one along generalised V-paths.
inline Classification classify_detailed(const SimplicialComplex& x, const Matching& v) {
    if (auto ok = verify_matching(x, v); !ok) throw InputError("classify: " + ok.detail);
    if (auto ok = verify_acyclic(x, v); !ok) throw InputError("classify: matching is not acyclic: " + ok.detail);
    const CriticalSet crit = critical_simplices(x, v);
    const CriticalFVector& f = crit.counts;

    std::size_t non_maximal_points = 0;
    const Simplex* offender = nullptr;
    for (const Simplex& s : crit.simplices) {
        if (is_maximal(x, s)) continue;
        if (s.dim() == 0 && non_maximal_points++ == 0) continue;
        offender = &s;
        break;
    }
    if (!offender) return {homotopy_from_counts(f), ClassifyRule::maximal_critical};

    // Everything critical sits in dimension 0: only 0-cells remain.
    if (f.size() <= 1) return {homotopy_from_counts(f), ClassifyRule::single_dimension};

    if (f[0] == 1) {
        std::size_t used_dims = 0;
        for (std::size_t d = 1; d < f.size(); ++d)
            if (f[d] != 0) ++used_dims;
        if (used_dims == 1) return {homotopy_from_counts(f), ClassifyRule::single_dimension};

        const Simplex point = crit.simplices.front();  // the unique critical 0-simplex
        bool isolated = true;
        for (const Simplex& s : crit.simplices) {
            if (s.dim() < 1) continue;
            for (const Simplex& r : generalized_vpath_reachable(x, v, s))
                if (r != s && r != point) isolated = false;
            if (!isolated) break;
        }
        if (isolated) return {homotopy_from_counts(f), ClassifyRule::vpath_reachability};
    }
    return {Unclassified{"critical simplex " + offender->str() + " is not maximal and no fallback criterion applies"},
            ClassifyRule::none};
}

inline HomotopyType classify(const SimplicialComplex& x, const Matching& v) { return classify_detailed(x, v).type; }
inline HomotopyType classify(const SimplicialComplex& x, const ConstructionResult& r) { return classify(x, r.matching); }

/// Smallest dimension carrying a sphere; -1 when collapsible.
inline int min_sphere_dimension(const HomotopyType& h) {
    if (std::holds_alternative<Collapsible>(h)) return -1;
    const auto* w = std::get_if<WedgeOfSpheres>(&h);
    if (!w) throw InputError("unclassified homotopy type has no sphere dimensions");
    for (std::size_t d = 0; d < w->counts.size(); ++d)
        if (w->counts[d] != 0) return static_cast<int>(d);
    throw InputError("wedge of spheres with all counts zero");
}

/// Every sphere has dimension at least gamma(G) - 1.
inline bool check_domination_bound(const Graph& g, const HomotopyType& h) {
    if (std::holds_alternative<Unclassified>(h)) throw InputError("domination bound needs a classified homotopy type");
    if (std::holds_alternative<Collapsible>(h)) return true;
    return min_sphere_dimension(h) >= domination_number(g) - 1;
}

/// A point has homology (1); a wedge has free homology with
/// beta_0 = 1 + counts_0 and beta_d = counts_d for d >= 1.
inline bool consistency_with_homology(const HomotopyType& h, const HomologyProfile& p) {
    if (std::holds_alternative<Unclassified>(h)) return false;
    if (!p.all_torsion_free()) return false;
    CountVector expected{1};
    if (const auto* w = std::get_if<WedgeOfSpheres>(&h)) {
        std::vector<BigInt> c = w->counts.values();
        if (c.empty()) return false;
        c[0] += 1;
        expected = CountVector(std::move(c));
    }
    std::vector<BigInt> betti;
    for (auto b : p.betti) betti.emplace_back(b);
    return CountVector(std::move(betti)) == expected;
}

}  // namespace indmorse
