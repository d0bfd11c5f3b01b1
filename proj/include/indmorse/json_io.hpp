#pragma once

#include "indmorse/bigint.hpp"
#include "indmorse/complex.hpp"
#include "indmorse/counts.hpp"
#include "indmorse/errors.hpp"
#include "indmorse/generators.hpp"
#include "indmorse/graph.hpp"
#include "indmorse/homology.hpp"
#include "indmorse/homotopy.hpp"
#include "indmorse/matching.hpp"
#include "indmorse/morse.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace indmorse {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are written as numbers, larger ones as
// decimal strings.
inline Json bigint_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline Json counts_to_json(const CountVector& c) {
    Json out = Json::array();
    for (const auto& x : c.values()) out.push_back(bigint_to_json(x));
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(e.what());
    }
}

namespace detail {
inline int json_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) throw InputError(std::string(what) + " out of range");
    return static_cast<int>(v);
}
}  // namespace detail

// ---- graphs ---------------------------------------------------------------

inline Json graph_to_json(const Graph& g) {
    Json out;
    out["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
    if (g.has_labels()) {
        Json labels = Json::array();
        for (const auto& c : g.labels()) labels.push_back({c.i, c.j});
        out["labels"] = std::move(labels);
    }
    return out;
}

/// {"n": int, "edges": [[u,v],...], "labels": optional [[i,j],...]}.
/// Rejects self-loops, duplicate edges and out-of-range ids.
inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw InputError("graph JSON needs \"n\" and \"edges\"");
    const int n = detail::json_int(j["n"], "n");
    if (n < 0) throw InputError("n must be nonnegative");
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [u, v]");
        const int u = detail::json_int(e[0], "edge endpoint");
        const int v = detail::json_int(e[1], "edge endpoint");
        g.check_vertex(u);
        g.check_vertex(v);
        if (u != v && g.has_edge(u, v))
            throw InputError("duplicate edge [" + std::to_string(u) + ", " + std::to_string(v) + "]");
        g.add_edge(u, v);
    }
    if (j.contains("labels") && !j["labels"].is_null()) {
        const auto& l = j["labels"];
        if (!l.is_array()) throw InputError("\"labels\" must be an array");
        std::vector<GridCell> cells;
        for (const auto& c : l) {
            if (!c.is_array() || c.size() != 2) throw InputError("each label must be a pair [i, j]");
            cells.push_back({detail::json_int(c[0], "label"), detail::json_int(c[1], "label")});
        }
        g.set_labels(std::move(cells));
    }
    return g;
}

inline Json grid_spec_to_json(const GridSpec& s) {
    return Json{{"m", s.m}, {"n", s.n}, {"sizes", s.sizes}};
}

// ---- simplices and matchings -----------------------------------------------

inline Json simplex_to_json(Simplex s) { return s.vertices(); }

inline Simplex simplex_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("a simplex must be an array of vertex ids");
    Simplex s;
    for (const auto& x : j) {
        const int v = detail::json_int(x, "simplex vertex");
        if (v < 0 || v >= kMaxExplicitVertices) throw InputError("simplex vertex " + std::to_string(v) + " out of range");
        if (s.contains(v)) throw InputError("simplex lists vertex " + std::to_string(v) + " twice");
        s = s.with(v);
    }
    return s;
}

inline Json matching_to_json(const Matching& v) {
    Json out = Json::array();
    for (const auto& p : v.pairs) out.push_back({simplex_to_json(p.face), simplex_to_json(p.coface)});
    return out;
}

/// [[face, coface], ...]. Accepts either a bare array or an object with a
/// "pairs" member (as written by `match --pairs`).
inline Matching matching_from_json(const Json& j) {
    const Json& arr = (j.is_object() && j.contains("pairs")) ? j["pairs"] : j;
    if (!arr.is_array()) throw InputError("matching JSON must be an array of [face, coface] pairs");
    Matching v;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw InputError("each matched pair must be [face, coface]");
        v.add(simplex_from_json(p[0]), simplex_from_json(p[1]));
    }
    return v;
}

// ---- reports ---------------------------------------------------------------

inline Json homotopy_to_json(const HomotopyType& h) {
    if (std::holds_alternative<Collapsible>(h)) return "collapsible";
    if (const auto* w = std::get_if<WedgeOfSpheres>(&h)) return Json{{"wedge", counts_to_json(w->counts)}};
    return Json{{"unclassified", std::get<Unclassified>(h).reason}};
}

inline Json homology_to_json(const HomologyProfile& p) {
    return Json{{"betti", p.betti}, {"torsion_free", p.torsion_free}};
}

inline Json critical_simplices_to_json(const CriticalSet& c) {
    Json out = Json::array();
    for (Simplex s : c.simplices) {
        const auto d = static_cast<std::size_t>(s.dim());
        while (out.size() <= d) out.push_back(Json::array());
        out[d].push_back(simplex_to_json(s));
    }
    return out;
}

inline Json construction_to_json(const ConstructionResult& r, Driver driver, bool with_pairs) {
    Json out;
    out["critical_f"] = counts_to_json(r.critical.counts);
    out["special_zero"] = r.special_zero ? simplex_to_json(*r.special_zero) : Json(nullptr);
    if (with_pairs) out["pairs"] = matching_to_json(r.matching);
    out["driver"] = driver_name(driver);
    return out;
}

/// Table rows are indexed by i = 0..m-1, columns by j = 1..n (stored at
/// position j-1); each entry lists c_{i,j}^{(l)} for l = 0..min(i, n-j).
inline Json count_table_to_json(const GridCountTable& t) {
    Json rows = Json::array();
    for (int i = 0; i < t.m(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= t.n(); ++j) {
            Json cell = Json::array();
            for (const auto& x : t.at(i, j)) cell.push_back(bigint_to_json(x));
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace indmorse
