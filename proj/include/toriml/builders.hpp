#pragma once

// Constructors for every polytope family handled by the library: cubes,
// cross polytopes, the 16 reflexive polygons, the Sylvester-sequence simplex
// families Q/R/S/T, the A/B/C lifting constructions, products, and
// graph-derived polytopes.

#include <array>
#include <string>
#include <utility>

#include "lattice.hpp"

namespace toriml {

// [-1,1]^d.
inline Polytope cube(int d) {
    if (d < 1) throw DimensionOutOfRange("cube requires d >= 1");
    std::vector<IntVec> pts;
    for (long long m = 0; m < (1LL << d); ++m) {
        IntVec v(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = (m >> i & 1) ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(std::move(pts));
}

// conv(+-e_1, ..., +-e_d).
inline Polytope cross(int d) {
    if (d < 1) throw DimensionOutOfRange("cross requires d >= 1");
    std::vector<IntVec> pts;
    for (int i = 0; i < d; ++i)
        for (int s : {-1, 1}) {
            IntVec v(static_cast<std::size_t>(d), 0);
            v[static_cast<std::size_t>(i)] = s;
            pts.push_back(std::move(v));
        }
    return Polytope::from_points(std::move(pts));
}

// Sylvester sequence t_1 = 2, t_{i+1} = t_i^2 - t_i + 1. Values beyond t_6
// are rejected (they are astronomically large and unused here).
inline Int sylvester(int i) {
    if (i < 1 || i > 6) throw DimensionOutOfRange("sylvester index must be in 1..6");
    Int t = 2;
    for (int k = 1; k < i; ++k) t = t * t - t + 1;
    return t;
}

// Self-dual reflexive simplex Q_d: columns q_0 = all-ones and, for j in 1..d,
// (q_j)_i = 1 for i > j, j-1-d at i = j, 0 for i < j. Already centered.
inline Polytope simplex_Q(int d) {
    if (d < 2 || d > 5) throw DimensionOutOfRange("Q_d requires 2 <= d <= 5");
    std::vector<IntVec> pts;
    pts.emplace_back(static_cast<std::size_t>(d), 1);
    for (int j = 1; j <= d; ++j) {
        IntVec v(static_cast<std::size_t>(d), 0);
        for (int i = 1; i <= d; ++i) {
            if (i > j) v[static_cast<std::size_t>(i - 1)] = 1;
            else if (i == j) v[static_cast<std::size_t>(i - 1)] = j - 1 - d;
        }
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(std::move(pts));
}

// R_d = conv(0, t_1 e_1, ..., t_d e_d), centered at its interior point 1.
inline Polytope simplex_R(int d) {
    if (d < 2 || d > 5) throw DimensionOutOfRange("R_d requires 2 <= d <= 5");
    std::vector<IntVec> pts{IntVec(static_cast<std::size_t>(d), -1)};
    for (int i = 1; i <= d; ++i) {
        IntVec v(static_cast<std::size_t>(d), -1);
        v[static_cast<std::size_t>(i - 1)] += sylvester(i);
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(std::move(pts));
}

// S_d = conv(0, t_1 e_1, ..., t_{d-1} e_{d-1}, 2(t_d - 1) e_d), centered at 1.
inline Polytope simplex_S(int d) {
    if (d < 2 || d > 5) throw DimensionOutOfRange("S_d requires 2 <= d <= 5");
    std::vector<IntVec> pts{IntVec(static_cast<std::size_t>(d), -1)};
    for (int i = 1; i < d; ++i) {
        IntVec v(static_cast<std::size_t>(d), -1);
        v[static_cast<std::size_t>(i - 1)] += sylvester(i);
        pts.push_back(std::move(v));
    }
    IntVec v(static_cast<std::size_t>(d), -1);
    v[static_cast<std::size_t>(d - 1)] += 2 * (sylvester(d) - 1);
    pts.push_back(std::move(v));
    return Polytope::from_points(std::move(pts));
}

// T_d (d >= 3): v_0 = -3e_1 - 2(e_2 + ... + e_d), v_1 = e_1, v_2 = e_1 + 2e_2,
// v_3 = e_1 + 2e_3, and v_i = e_1 + 2 t_{i-3} e_i for i >= 4. Already centered.
inline Polytope simplex_T(int d) {
    if (d < 3 || d > 5) throw DimensionOutOfRange("T_d requires 3 <= d <= 5");
    std::vector<IntVec> pts;
    IntVec v0(static_cast<std::size_t>(d), -2);
    v0[0] = -3;
    pts.push_back(std::move(v0));
    for (int i = 1; i <= d; ++i) {
        IntVec v(static_cast<std::size_t>(d), 0);
        v[0] = 1;
        if (i == 2 || i == 3) v[static_cast<std::size_t>(i - 1)] = 2;
        else if (i >= 4) v[static_cast<std::size_t>(i - 1)] = 2 * sylvester(i - 3);
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(std::move(pts));
}

// Cartesian product, in dimension dim(P) + dim(Q).
inline Polytope product(const Polytope& P, const Polytope& Q) {
    std::vector<IntVec> pts;
    for (const IntVec& a : P.vertices())
        for (const IntVec& b : Q.vertices()) {
            IntVec v = a;
            v.insert(v.end(), b.begin(), b.end());
            pts.push_back(std::move(v));
        }
    return Polytope::from_points(std::move(pts));
}

// A(P) = P x [-1,1].
inline Polytope construct_A(const Polytope& P) { return product(P, cube(1)); }

// B(P) = conv(P x {0}, +-e_{d+1}) (bipyramid).
inline Polytope construct_B(const Polytope& P) {
    std::vector<IntVec> pts;
    for (const IntVec& a : P.vertices()) {
        IntVec v = a;
        v.push_back(0);
        pts.push_back(std::move(v));
    }
    IntVec up(static_cast<std::size_t>(P.dim()) + 1, 0), dn(static_cast<std::size_t>(P.dim()) + 1, 0);
    up.back() = 1;
    dn.back() = -1;
    pts.push_back(std::move(up));
    pts.push_back(std::move(dn));
    return Polytope::from_points(std::move(pts));
}

// C(P) = conv(P x [-1,0], e_{d+1}).
inline Polytope construct_C(const Polytope& P) {
    std::vector<IntVec> pts;
    for (const IntVec& a : P.vertices())
        for (int h : {-1, 0}) {
            IntVec v = a;
            v.push_back(h);
            pts.push_back(std::move(v));
        }
    IntVec apex(static_cast<std::size_t>(P.dim()) + 1, 0);
    apex.back() = 1;
    pts.push_back(std::move(apex));
    return Polytope::from_points(std::move(pts));
}

enum class Construction { A, B, C };

inline Polytope apply_construction(Construction c, const Polytope& P) {
    switch (c) {
        case Construction::A: return construct_A(P);
        case Construction::B: return construct_B(P);
        default: return construct_C(P);
    }
}

// k-fold application; k = 0 returns P unchanged.
inline Polytope iterate(Construction c, int k, Polytope P) {
    if (k < 0) throw DimensionOutOfRange("iterate requires k >= 0");
    for (int i = 0; i < k; ++i) P = apply_construction(c, P);
    return P;
}

// ---------------------------------------------------------------------------
// The 16 reflexive polygons (fixture coordinates, interior point at the
// origin). Fixture lists are boundary lattice points; the hull constructor
// reduces them to true vertices, so the label number equals the boundary
// lattice point count.
// ---------------------------------------------------------------------------

inline Polytope reflexive_polygon(const std::string& name) {
    static const std::map<std::string, std::vector<std::array<int, 2>>> table = {
        {"P3", {{-1, -1}, {0, 1}, {1, 0}}},
        {"P4a", {{0, -1}, {0, 1}, {1, 0}, {-1, 0}}},
        {"P4b", {{0, -1}, {0, 1}, {1, 0}, {-1, 1}}},
        {"P4c", {{0, -1}, {0, 1}, {1, 1}, {-1, 1}}},
        {"P5a", {{0, -1}, {0, 1}, {1, 0}, {-1, 1}, {-1, 0}}},
        {"P5b", {{0, -1}, {0, 1}, {1, 1}, {-1, 1}, {-1, 0}}},
        {"P6a", {{0, -1}, {0, 1}, {1, 0}, {-1, 1}, {-1, 0}, {1, -1}}},
        {"P6b", {{0, -1}, {0, 1}, {1, 0}, {-1, 1}, {-1, 0}, {1, 1}}},
        {"P6c", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}}},
        {"P6d", {{-1, -2}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}}},
        {"P7a", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}, {1, 0}}},
        {"P7b", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}, {-1, -2}}},
        {"P8a", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}, {1, -1}, {1, 0}}},
        {"P8b", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}, {-1, -2}, {1, 0}}},
        {"P8c", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}, {-1, -2}, {-1, -3}}},
        {"P9", {{0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {-1, 0}, {1, 1}, {-1, -2}, {2, 1}, {1, 0}}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw UnknownName("unknown reflexive polygon: " + name);
    std::vector<IntVec> pts;
    for (const auto& a : it->second) pts.push_back(IntVec{a[0], a[1]});
    return Polytope::from_points(std::move(pts));
}

// ---------------------------------------------------------------------------
// Graph-derived polytopes
// ---------------------------------------------------------------------------

// Simple undirected graph; vertices are 0-indexed internally (the file format
// is 1-indexed). No loops, no duplicate edges.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // each pair normalized (u < v)

    static Graph make(int n, std::vector<std::pair<int, int>> raw) {
        Graph g;
        g.vertex_count = n;
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : raw) {
            if (u == v) throw std::invalid_argument("graph has a loop");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw std::invalid_argument("graph edge out of range");
            if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate graph edge");
            g.edges.emplace_back(u, v);
        }
        return g;
    }
};

// Star K_{1,d-1}: center vertex 0, leaves 1..d-1.
inline Graph star_graph(int d) {
    if (d < 2) throw DimensionOutOfRange("star graph requires d >= 2");
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < d; ++j) e.emplace_back(0, j);
    return Graph::make(d, std::move(e));
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int s = 0; s < g.vertex_count; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Symmetric edge polytope A_G = conv({0} u {+-(e_i - e_j) : edges}), expressed
// in Z^{d-1} by dropping the last coordinate (the points live in the sum-zero
// lattice, which that projection identifies with Z^{d-1}). Requires G
// connected; otherwise the points span a proper subspace and
// NotFullDimensional propagates from the hull constructor.
inline Polytope sym_edge_polytope(const Graph& g) {
    const std::size_t d = static_cast<std::size_t>(g.vertex_count);
    std::vector<IntVec> pts{IntVec(d - 1, 0)};
    for (auto [u, v] : g.edges)
        for (int s : {1, -1}) {
            IntVec p(d - 1, 0);
            if (static_cast<std::size_t>(u) < d - 1) p[static_cast<std::size_t>(u)] = s;
            if (static_cast<std::size_t>(v) < d - 1) p[static_cast<std::size_t>(v)] = -s;
            pts.push_back(std::move(p));
        }
    return Polytope::from_points(std::move(pts));
}

// B_G = conv({0, +-e_i} u {+-e_i +- e_j : edges}). Reflexive iff G is
// bipartite; callers that care should check is_bipartite(G).
inline Polytope bg_polytope(const Graph& g) {
    const std::size_t d = static_cast<std::size_t>(g.vertex_count);
    std::vector<IntVec> pts{IntVec(d, 0)};
    for (int i = 0; i < g.vertex_count; ++i)
        for (int s : {1, -1}) {
            IntVec p(d, 0);
            p[static_cast<std::size_t>(i)] = s;
            pts.push_back(std::move(p));
        }
    for (auto [u, v] : g.edges)
        for (int su : {1, -1})
            for (int sv : {1, -1}) {
                IntVec p(d, 0);
                p[static_cast<std::size_t>(u)] = su;
                p[static_cast<std::size_t>(v)] = sv;
                pts.push_back(std::move(p));
            }
    return Polytope::from_points(std::move(pts));
}

// ---------------------------------------------------------------------------
// Builtin registry (names accepted by the CLI and the verification suites)
// ---------------------------------------------------------------------------

// Two named 3-dimensional simplices used by the verification suites and the
// closed-form discriminants.
inline Polytope builtin_P0() {
    return Polytope::from_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
}

inline Polytope builtin_P132() {
    return Polytope::from_points({{1, 0, 0}, {0, 0, 1}, {-1, 0, -1}, {-1, -1, 0}, {0, 1, 0}});
}

// Resolves a builtin name: P3..P9 (16 polygons), P0, P132, cube-D, cross-D,
// Q-D, R-D, S-D, T-D. Throws UnknownName otherwise.
inline Polytope builtin_polytope(const std::string& name) {
    if (!name.empty() && name[0] == 'P' && name != "P0" && name != "P132") return reflexive_polygon(name);
    if (name == "P0") return builtin_P0();
    if (name == "P132") return builtin_P132();
    auto dash = name.find('-');
    if (dash != std::string::npos) {
        const std::string head = name.substr(0, dash);
        int d = 0;
        try {
            d = std::stoi(name.substr(dash + 1));
        } catch (const std::exception&) {
            throw UnknownName("unknown builtin polytope: " + name);
        }
        if (head == "cube") return cube(d);
        if (head == "cross") return cross(d);
        if (head == "Q") return simplex_Q(d);
        if (head == "R") return simplex_R(d);
        if (head == "S") return simplex_S(d);
        if (head == "T") return simplex_T(d);
    }
    throw UnknownName("unknown builtin polytope: " + name);
}

inline const std::vector<std::string>& polygon_names() {
    static const std::vector<std::string> names = {"P3",  "P4a", "P4b", "P4c", "P5a", "P5b", "P6a", "P6b",
                                                   "P6c", "P6d", "P7a", "P7b", "P8a", "P8b", "P8c", "P9"};
    return names;
}

}  // namespace toriml
