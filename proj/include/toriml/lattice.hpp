#pragma once

// Exact integer polyhedral geometry: hulls, facets, faces, lattice points,
// normalized volumes, reflexivity, duality, and lattice normal forms.
//
// All computations are exact (arbitrary-precision integers); no floating
// point enters this module. Hull enumeration is brute force over d-subsets,
// which is exact and fast at the scales handled here (dim <= 8, <= ~60
// vertices).

#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "core.hpp"

namespace toriml {

// Supporting hyperplane of a polytope: normal is primitive integer, every
// vertex v satisfies normal . v <= offset, with equality exactly on vertex_set.
struct Facet {
    IntVec normal;
    Int offset;
    std::vector<int> vertex_set;  // sorted indices into Polytope::vertices()
};

// Nonempty face: an intersection of facet vertex sets (or the whole polytope),
// carrying its dimension and all its lattice points (lex-sorted).
struct Face {
    std::vector<int> vertex_set;  // sorted
    int dim = 0;
    std::vector<IntVec> lattice_points;
};

namespace detail {

// Primitive normal of the hyperplane spanned by the affine hull of `pts`
// (expects |pts| == d, affine rank d-1). Zero vector when rank-deficient.
inline IntVec hyperplane_normal(const std::vector<IntVec>& pts) {
    const std::size_t d = pts[0].size();
    IntVec n(d, 0);
    // cofactor expansion: n_j = (-1)^j det(differences with column j removed)
    IntMat diff(d - 1, IntVec(d));
    for (std::size_t i = 0; i + 1 < d; ++i) diff[i] = sub(pts[i + 1], pts[0]);
    for (std::size_t j = 0; j < d; ++j) {
        IntMat minor(d - 1, IntVec(d - 1));
        for (std::size_t i = 0; i + 1 < d; ++i) {
            std::size_t t = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor[i][t++] = diff[i][c];
            }
        }
        Int m = det_bareiss(std::move(minor));
        n[j] = (j % 2 == 0) ? m : -m;
    }
    return primitive(std::move(n));
}

inline int affine_rank(const std::vector<IntVec>& pts) {
    if (pts.size() <= 1) return 0;
    IntMat diff(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) diff[i - 1] = sub(pts[i], pts[0]);
    return rank(std::move(diff));
}

// Enumerates the next d-subset of {0..n-1} in lexicographic order.
inline bool next_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

}  // namespace detail

class Polytope {
  public:
    // Builds the convex hull of an arbitrary point set: duplicates and
    // non-extreme points are removed, so `vertices()` holds true vertices
    // only (lex-sorted). Throws NotFullDimensional when the affine span of
    // the points is deficient.
    static Polytope from_points(std::vector<IntVec> pts) {
        if (pts.empty()) throw NotFullDimensional("empty point set");
        std::sort(pts.begin(), pts.end(), lex_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const int d = static_cast<int>(pts[0].size());
        for (const IntVec& p : pts)
            if (static_cast<int>(p.size()) != d) throw DimensionMismatch("mixed point dimensions");
        if (detail::affine_rank(pts) != d)
            throw NotFullDimensional("points span a proper affine subspace");

        // all supporting hyperplanes through d-subsets of the points
        std::map<std::pair<IntVec, Int>, std::vector<int>> planes;  // (normal, offset) -> on-plane point indices
        std::vector<int> idx(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
        const int n = static_cast<int>(pts.size());
        do {
            std::vector<IntVec> sel;
            sel.reserve(static_cast<std::size_t>(d));
            for (int i : idx) sel.push_back(pts[static_cast<std::size_t>(i)]);
            IntVec nrm = detail::hyperplane_normal(sel);
            bool zero = true;
            for (const Int& x : nrm)
                if (x != 0) zero = false;
            if (zero) continue;  // subset not affinely independent
            Int off = dot(nrm, sel[0]);
            bool any_less = false, any_greater = false;
            for (const IntVec& p : pts) {
                Int v = dot(nrm, p);
                if (v < off) any_less = true;
                if (v > off) any_greater = true;
                if (any_less && any_greater) break;
            }
            if (any_less && any_greater) continue;  // not supporting
            if (any_greater) {
                for (Int& x : nrm) x = -x;
                off = -off;
            }
            auto key = std::make_pair(nrm, off);
            if (planes.count(key)) continue;
            std::vector<int> on;
            for (int i = 0; i < n; ++i)
                if (dot(nrm, pts[static_cast<std::size_t>(i)]) == off) on.push_back(i);
            planes.emplace(std::move(key), std::move(on));
        } while (detail::next_subset(idx, n));

        // vertices: points whose containing facet normals span full rank
        std::vector<char> is_vert(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            IntMat nm;
            for (const auto& [key, on] : planes)
                if (std::binary_search(on.begin(), on.end(), i)) nm.push_back(key.first);
            if (static_cast<int>(nm.size()) >= d && rank(std::move(nm)) == d) is_vert[static_cast<std::size_t>(i)] = 1;
        }
        Polytope P;
        P.dim_ = d;
        std::vector<int> remap(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < n; ++i)
            if (is_vert[static_cast<std::size_t>(i)]) {
                remap[static_cast<std::size_t>(i)] = static_cast<int>(P.verts_.size());
                P.verts_.push_back(pts[static_cast<std::size_t>(i)]);
            }
        std::vector<Facet> fs;
        for (const auto& [key, on] : planes) {
            Facet f;
            f.normal = key.first;
            f.offset = key.second;
            for (int i : on)
                if (remap[static_cast<std::size_t>(i)] >= 0) f.vertex_set.push_back(remap[static_cast<std::size_t>(i)]);
            fs.push_back(std::move(f));
        }
        std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) {
            return a.normal != b.normal ? lex_less(a.normal, b.normal) : a.offset < b.offset;
        });
        P.facets_ = std::move(fs);
        return P;
    }

    int dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return verts_; }

    const std::vector<Facet>& facets() const { return *facets_; }

    // True iff every facet inequality is normal . x <= 1 with primitive
    // integer normal (origin then lies strictly inside).
    bool is_reflexive() const {
        for (const Facet& f : facets())
            if (f.offset != 1) return false;
        return true;
    }

    // Polytope translated by +shift. Cheap: vertices, facets, and cached
    // lattice points move along; volume and face combinatorics are reused.
    Polytope translated(const IntVec& shift) const {
        Polytope P;
        P.dim_ = dim_;
        P.verts_.reserve(verts_.size());
        for (const IntVec& v : verts_) P.verts_.push_back(add(v, shift));
        std::vector<Facet> fs = *facets_;
        for (Facet& f : fs) f.offset += dot(f.normal, shift);
        P.facets_ = std::move(fs);
        if (latpts_) {
            std::vector<IntVec> lp;
            lp.reserve(latpts_->size());
            for (const IntVec& p : *latpts_) lp.push_back(add(p, shift));
            P.latpts_ = std::move(lp);
        }
        P.nvol_ = nvol_;
        return P;
    }

    // All integer points satisfying every facet inequality, lex-sorted.
    const std::vector<IntVec>& lattice_points() const {
        if (latpts_) return *latpts_;
        const std::size_t d = static_cast<std::size_t>(dim_);
        std::vector<long long> lo(d), hi(d);
        for (std::size_t c = 0; c < d; ++c) {
            Int mn = verts_[0][c], mx = verts_[0][c];
            for (const IntVec& v : verts_) {
                if (v[c] < mn) mn = v[c];
                if (v[c] > mx) mx = v[c];
            }
            lo[c] = static_cast<long long>(mn);
            hi[c] = static_cast<long long>(mx);
        }
        double box = 1.0;
        for (std::size_t c = 0; c < d; ++c) box *= static_cast<double>(hi[c] - lo[c] + 1);
        if (box > 5e7) throw std::runtime_error("lattice point bounding box too large");
        std::vector<IntVec> out;
        IntVec p(d);
        std::vector<long long> cur(lo);
        for (;;) {
            for (std::size_t c = 0; c < d; ++c) p[c] = cur[c];
            bool inside = true;
            for (const Facet& f : *facets_)
                if (dot(f.normal, p) > f.offset) {
                    inside = false;
                    break;
                }
            if (inside) out.push_back(p);
            std::size_t c = d;
            while (c > 0) {
                --c;
                if (cur[c] < hi[c]) {
                    ++cur[c];
                    for (std::size_t t = c + 1; t < d; ++t) cur[t] = lo[t];
                    break;
                }
                if (c == 0) {
                    std::sort(out.begin(), out.end(), lex_less);
                    latpts_ = std::move(out);
                    return *latpts_;
                }
            }
        }
    }

    // d! times the Euclidean volume, exactly, via the deterministic boundary
    // triangulation (cone over facet triangulations from the lex-lowest
    // vertex, recursing in affine lattice coordinates).
    const Int& normalized_volume() const {
        if (nvol_) return *nvol_;
        Int total = 0;
        for (const std::vector<int>& s : triangulation()) {
            IntMat diff(static_cast<std::size_t>(dim_));
            for (int i = 1; i <= dim_; ++i)
                diff[static_cast<std::size_t>(i - 1)] =
                    sub(verts_[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])],
                        verts_[static_cast<std::size_t>(s[0])]);
            total += boost::multiprecision::abs(det_bareiss(std::move(diff)));
        }
        nvol_ = std::move(total);
        return *nvol_;
    }

    // Decomposition of the polytope into d-simplices given as vertex index
    // lists. Deterministic: cones the lex-lowest vertex over the recursive
    // triangulations of the facets that avoid it.
    std::vector<std::vector<int>> triangulation() const {
        const int d = dim_;
        const int n = static_cast<int>(verts_.size());
        if (n == d + 1) {
            std::vector<int> all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
            return {all};
        }
        std::vector<std::vector<int>> out;
        for (const Facet& f : facets()) {
            if (std::binary_search(f.vertex_set.begin(), f.vertex_set.end(), 0)) continue;
            // facet vertices in their own affine lattice coordinates
            std::vector<IntVec> fpts;
            fpts.reserve(f.vertex_set.size());
            for (int i : f.vertex_set) fpts.push_back(verts_[static_cast<std::size_t>(i)]);
            std::vector<IntVec> diffs;
            for (std::size_t i = 1; i < fpts.size(); ++i) diffs.push_back(sub(fpts[i], fpts[0]));
            std::vector<int> pivots;
            std::vector<IntVec> basis = hnf_column_basis(diffs, &pivots);
            std::vector<IntVec> coords;
            coords.reserve(fpts.size());
            for (const IntVec& q : fpts) coords.push_back(hnf_solve(basis, pivots, sub(q, fpts[0])));
            Polytope sub = Polytope::from_points(coords);
            // map sub-polytope vertex order back to parent indices
            std::map<IntVec, int> where;
            for (std::size_t i = 0; i < coords.size(); ++i) where[coords[i]] = f.vertex_set[i];
            for (const std::vector<int>& s : sub.triangulation()) {
                std::vector<int> lifted{0};
                for (int i : s) lifted.push_back(where.at(sub.verts_[static_cast<std::size_t>(i)]));
                out.push_back(std::move(lifted));
            }
        }
        return out;
    }

    // All nonempty faces including the polytope itself, as the closure of the
    // facet vertex sets under intersection; sorted by (dim, vertex_set).
    const std::vector<Face>& faces() const {
        if (faces_) return *faces_;
        const int n = static_cast<int>(verts_.size());
        if (n > 63) throw std::runtime_error("face enumeration supports at most 63 vertices");
        const std::uint64_t full = (n == 63) ? ~0ULL >> 1 : (1ULL << n) - 1;
        std::vector<std::uint64_t> fsets;
        for (const Facet& f : facets()) {
            std::uint64_t m = 0;
            for (int i : f.vertex_set) m |= 1ULL << i;
            fsets.push_back(m);
        }
        std::set<std::uint64_t> closed;
        closed.insert(full);
        for (std::uint64_t m : fsets) closed.insert(m);
        for (;;) {
            std::vector<std::uint64_t> fresh;
            for (std::uint64_t a : closed)
                for (std::uint64_t f : fsets) {
                    std::uint64_t c = a & f;
                    if (c && !closed.count(c)) fresh.push_back(c);
                }
            if (fresh.empty()) break;
            for (std::uint64_t c : fresh) closed.insert(c);
        }
        std::vector<Face> out;
        for (std::uint64_t m : closed) {
            Face F;
            for (int i = 0; i < n; ++i)
                if (m & (1ULL << i)) F.vertex_set.push_back(i);
            std::vector<IntVec> vp;
            for (int i : F.vertex_set) vp.push_back(verts_[static_cast<std::size_t>(i)]);
            F.dim = detail::affine_rank(vp);
            // lattice points: points of P lying on every facet containing the face
            std::vector<const Facet*> carriers;
            for (std::size_t fi = 0; fi < fsets.size(); ++fi)
                if ((m & fsets[fi]) == m) carriers.push_back(&facets()[fi]);
            for (const IntVec& p : lattice_points()) {
                bool on = true;
                for (const Facet* f : carriers)
                    if (dot(f->normal, p) != f->offset) {
                        on = false;
                        break;
                    }
                if (on) F.lattice_points.push_back(p);
            }
            out.push_back(std::move(F));
        }
        std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.vertex_set < b.vertex_set;
        });
        faces_ = std::move(out);
        return *faces_;
    }

  private:
    Polytope() = default;
    int dim_ = 0;
    std::vector<IntVec> verts_;
    mutable std::optional<std::vector<Facet>> facets_;
    mutable std::optional<std::vector<IntVec>> latpts_;
    mutable std::optional<Int> nvol_;
    mutable std::optional<std::vector<Face>> faces_;
};

// ---------------------------------------------------------------------------
// Free-function surface
// ---------------------------------------------------------------------------

inline const std::vector<Facet>& facets(const Polytope& P) { return P.facets(); }
inline bool is_reflexive(const Polytope& P) { return P.is_reflexive(); }
inline const std::vector<IntVec>& lattice_points(const Polytope& P) { return P.lattice_points(); }
inline Int normalized_volume(const Polytope& P) { return P.normalized_volume(); }
inline const std::vector<Face>& faces(const Polytope& P) { return P.faces(); }

// Vertices of the dual are the primitive facet normals. Defined for
// reflexive polytopes only.
inline Polytope dual(const Polytope& P) {
    if (!P.is_reflexive()) throw NotReflexive("dual requires a reflexive polytope");
    std::vector<IntVec> pts;
    for (const Facet& f : P.facets()) pts.push_back(f.normal);
    return Polytope::from_points(std::move(pts));
}

// (f_0, ..., f_{d-1}): counts of i-dimensional proper faces.
inline std::vector<Int> f_vector(const Polytope& P) {
    std::vector<Int> f(static_cast<std::size_t>(P.dim()), 0);
    for (const Face& F : P.faces())
        if (F.dim < P.dim()) ++f[static_cast<std::size_t>(F.dim)];
    return f;
}

// Translate so that all lattice points are >= 0 with a zero attained in each
// coordinate. Returns the translated polytope and the applied shift.
inline std::pair<Polytope, IntVec> translate_nonnegative(const Polytope& P) {
    const std::size_t d = static_cast<std::size_t>(P.dim());
    IntVec shift(d);
    for (std::size_t c = 0; c < d; ++c) {
        Int mn = P.vertices()[0][c];
        for (const IntVec& v : P.vertices())
            if (v[c] < mn) mn = v[c];
        shift[c] = -mn;
    }
    return {P.translated(shift), shift};
}

// Index in Z^d of the lattice generated by the pairwise differences of the
// given points (columns of a design matrix). 1 means the monomial
// parametrization is generically one-to-one; 0 means rank-deficient.
inline Int lattice_index(const std::vector<IntVec>& columns) {
    if (columns.size() <= 1) return 0;
    std::vector<IntVec> diffs;
    diffs.reserve(columns.size() - 1);
    for (std::size_t i = 1; i < columns.size(); ++i) diffs.push_back(sub(columns[i], columns[0]));
    return column_lattice_index(diffs);
}

// Lattice points of a face expressed in a basis of the face's own affine
// lattice (Hermite normal form of the point differences), shifted so every
// coordinate is nonnegative with minimum 0. Result is k x m for a
// k-dimensional face with m lattice points; a vertex yields the 0 x 1 matrix.
inline IntMat affine_face_coordinates(const Face& F) {
    const std::vector<IntVec>& pts = F.lattice_points;
    if (pts.empty()) throw DimensionMismatch("face has no lattice points");
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    std::vector<int> pivots;
    std::vector<IntVec> basis = hnf_column_basis(diffs, &pivots);
    const std::size_t k = basis.size();
    IntMat coords(k, IntVec(pts.size(), 0));
    for (std::size_t j = 1; j < pts.size(); ++j) {
        IntVec x = hnf_solve(basis, pivots, sub(pts[j], pts[0]));
        for (std::size_t r = 0; r < k; ++r) coords[r][j] = x[r];
    }
    for (std::size_t r = 0; r < k; ++r) {
        Int mn = 0;
        for (const Int& v : coords[r])
            if (v < mn) mn = v;
        if (mn != 0)
            for (Int& v : coords[r]) v -= mn;
    }
    return coords;
}

// Stable human-readable face identifier used in reports.
inline std::string face_id(const Face& F) {
    std::string s = "dim=" + std::to_string(F.dim) + ";verts=[";
    for (std::size_t i = 0; i < F.vertex_set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(F.vertex_set[i]);
    }
    return s + "]";
}

}  // namespace toriml
