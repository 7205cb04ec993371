// Exact lattice kernel: hulls, facets, faces, volumes, duality, and the
// integer-linear helpers. Every polytope here is built by hand so the
// expectations are independent of the family builders.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <toriml/lattice.hpp>

using namespace toriml;

namespace {

// [-1,1]^d as an explicit vertex list.
Polytope box(int d) {
    std::vector<IntVec> pts;
    for (long long m = 0; m < (1LL << d); ++m) {
        IntVec v(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = (m >> i & 1) ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(std::move(pts));
}

// conv(+-e_1, ..., +-e_d).
Polytope diamond(int d) {
    std::vector<IntVec> pts;
    for (int i = 0; i < d; ++i)
        for (int s : {-1, 1}) {
            IntVec v(static_cast<std::size_t>(d), 0);
            v[static_cast<std::size_t>(i)] = s;
            pts.push_back(std::move(v));
        }
    return Polytope::from_points(std::move(pts));
}

// conv(0, e_1, ..., e_d).
Polytope unit_simplex(int d) {
    std::vector<IntVec> pts{IntVec(static_cast<std::size_t>(d), 0)};
    for (int i = 0; i < d; ++i) {
        IntVec v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(i)] = 1;
        pts.push_back(std::move(v));
    }
    return Polytope::from_points(std::move(pts));
}

std::vector<IntVec> sorted_vertices(const Polytope& P) {
    std::vector<IntVec> v = P.vertices();
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

// Identity churned by row shears and swaps; determinant stays +-1.
IntMat random_unimodular(int d, std::mt19937_64& rng) {
    IntMat U(static_cast<std::size_t>(d), IntVec(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) U[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    std::uniform_int_distribution<int> row(0, d - 1), shear(-2, 2), op(0, 3);
    for (int step = 0; step < 20; ++step) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        if (op(rng) == 0) {
            std::swap(U[static_cast<std::size_t>(i)], U[static_cast<std::size_t>(j)]);
        } else {
            Int f = shear(rng);
            for (int k = 0; k < d; ++k)
                U[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                    f * U[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
    }
    return U;
}

Polytope transformed(const Polytope& P, const IntMat& U) {
    std::vector<IntVec> pts;
    for (const IntVec& v : P.vertices()) {
        IntVec w(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) w[i] += U[i][j] * v[j];
        pts.push_back(std::move(w));
    }
    return Polytope::from_points(std::move(pts));
}

}  // namespace

TEST_CASE("hull keeps only vertices") {
    // feed the full 3x3 grid of the square; the hull must reduce to 4 corners
    std::vector<IntVec> pts;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) pts.push_back(IntVec{x, y});
    Polytope P = Polytope::from_points(pts);
    REQUIRE(P.dim() == 2);
    REQUIRE(P.vertices().size() == 4);
    for (const IntVec& v : P.vertices()) {
        CHECK(boost::multiprecision::abs(v[0]) == 1);
        CHECK(boost::multiprecision::abs(v[1]) == 1);
    }
    CHECK(P.lattice_points().size() == 9);
    CHECK(sorted_vertices(P) == sorted_vertices(box(2)));
}

TEST_CASE("hull requires full dimension") {
    CHECK_THROWS_AS(Polytope::from_points({IntVec{0, 0}, IntVec{1, 1}, IntVec{2, 2}}), NotFullDimensional);
    CHECK_THROWS_AS(Polytope::from_points({IntVec{1, 2}}), NotFullDimensional);
}

TEST_CASE("facets of the square and the octahedron") {
    Polytope sq = box(2);
    REQUIRE(sq.facets().size() == 4);
    std::vector<IntVec> normals;
    for (const Facet& f : sq.facets()) {
        CHECK(f.offset == 1);
        CHECK(f.vertex_set.size() == 2);
        normals.push_back(f.normal);
    }
    std::sort(normals.begin(), normals.end(), lex_less);
    CHECK(normals == std::vector<IntVec>{IntVec{-1, 0}, IntVec{0, -1}, IntVec{0, 1}, IntVec{1, 0}});

    Polytope oct = diamond(3);
    REQUIRE(oct.facets().size() == 8);
    for (const Facet& f : oct.facets()) {
        CHECK(f.offset == 1);
        CHECK(f.vertex_set.size() == 3);
        for (const Int& c : f.normal) CHECK(boost::multiprecision::abs(c) == 1);
    }
}

TEST_CASE("every facet supports its polytope") {
    for (const Polytope& P : {box(3), diamond(3), unit_simplex(3)}) {
        for (const Facet& f : P.facets()) {
            Int on = 0;
            for (const IntVec& p : P.lattice_points()) {
                Int v = dot(f.normal, p);
                CHECK(v <= f.offset);
                if (v == f.offset) ++on;
            }
            CHECK(on >= P.dim());  // a facet carries at least d affinely spanning points
        }
    }
}

TEST_CASE("normalized volume closed forms") {
    // box: 2^d d!, diamond: 2^d, unit simplex: 1
    CHECK(box(1).normalized_volume() == 2);
    CHECK(box(2).normalized_volume() == 8);
    CHECK(box(3).normalized_volume() == 48);
    CHECK(box(4).normalized_volume() == 384);
    CHECK(diamond(2).normalized_volume() == 4);
    CHECK(diamond(3).normalized_volume() == 8);
    CHECK(diamond(4).normalized_volume() == 16);
    CHECK(unit_simplex(2).normalized_volume() == 1);
    CHECK(unit_simplex(4).normalized_volume() == 1);
}

TEST_CASE("triangulation covers the volume with genuine simplices") {
    for (const Polytope& P : {box(2), box(3), diamond(3)}) {
        Int total = 0;
        for (const std::vector<int>& s : P.triangulation()) {
            REQUIRE(static_cast<int>(s.size()) == P.dim() + 1);
            IntMat diff;
            for (std::size_t i = 1; i < s.size(); ++i)
                diff.push_back(sub(P.vertices()[static_cast<std::size_t>(s[i])],
                                   P.vertices()[static_cast<std::size_t>(s[0])]));
            Int vol = boost::multiprecision::abs(det_bareiss(std::move(diff)));
            CHECK(vol > 0);
            total += vol;
        }
        CHECK(total == P.normalized_volume());
    }
}

TEST_CASE("reflexivity") {
    CHECK(box(2).is_reflexive());
    CHECK(box(3).is_reflexive());
    CHECK(diamond(3).is_reflexive());
    CHECK_FALSE(unit_simplex(2).is_reflexive());  // origin on the boundary
    // doubled square: facet offsets 2
    Polytope sq = box(2);
    std::vector<IntVec> big;
    for (const IntVec& v : sq.vertices()) {
        IntVec w = v;
        for (Int& c : w) c *= 2;
        big.push_back(std::move(w));
    }
    CHECK_FALSE(Polytope::from_points(big).is_reflexive());
}

TEST_CASE("duality of reflexive polytopes") {
    CHECK(sorted_vertices(dual(box(3))) == sorted_vertices(diamond(3)));
    CHECK(sorted_vertices(dual(diamond(3))) == sorted_vertices(box(3)));
    for (const Polytope& P : {box(2), box(3), diamond(3), diamond(4)}) {
        Polytope D = dual(P);
        CHECK(D.is_reflexive());
        CHECK(sorted_vertices(dual(D)) == sorted_vertices(P));
    }
    CHECK_THROWS_AS(dual(unit_simplex(3)), NotReflexive);
}

TEST_CASE("f-vector and the Euler relation") {
    CHECK(f_vector(box(2)) == IntVec{4, 4});
    CHECK(f_vector(box(3)) == IntVec{8, 12, 6});
    CHECK(f_vector(diamond(3)) == IntVec{6, 12, 8});
    CHECK(f_vector(diamond(4)) == IntVec{8, 24, 32, 16});
    for (const Polytope& P : {box(2), box(3), box(4), diamond(3), diamond(4), unit_simplex(3)}) {
        Int chi = 0, sign = 1;
        for (const Int& f : f_vector(P)) {
            chi += sign * f;
            sign = -sign;
        }
        CHECK(chi == (P.dim() % 2 == 0 ? 0 : 2));  // Euler characteristic of the boundary sphere
    }
}

TEST_CASE("face lattice of the square") {
    Polytope sq = box(2);
    const std::vector<Face>& fs = sq.faces();
    REQUIRE(fs.size() == 9);  // 4 vertices + 4 edges + the square itself
    // sorted by dimension, so the last face is the whole polytope
    CHECK(fs.back().dim == 2);
    CHECK(fs.back().vertex_set.size() == 4);
    CHECK(fs.back().lattice_points.size() == 9);
    int nv = 0, ne = 0;
    for (const Face& F : fs) {
        if (F.dim == 0) {
            ++nv;
            CHECK(F.lattice_points.size() == 1);
        }
        if (F.dim == 1) {
            ++ne;
            CHECK(F.lattice_points.size() == 3);  // corner, midpoint, corner
        }
        CHECK(std::is_sorted(F.vertex_set.begin(), F.vertex_set.end()));
    }
    CHECK(nv == 4);
    CHECK(ne == 4);
}

TEST_CASE("face ids are stable and readable") {
    Polytope seg = box(1);
    CHECK(face_id(seg.faces().back()) == "dim=1;verts=[0,1]");
    CHECK(face_id(seg.faces().front()) == "dim=0;verts=[0]");
}

TEST_CASE("unimodular maps preserve lattice invariants") {
    std::mt19937_64 rng(7);
    for (const Polytope& P : {box(2), box(3), diamond(3), diamond(4), unit_simplex(3)}) {
        for (int trial = 0; trial < 3; ++trial) {
            Polytope Q = transformed(P, random_unimodular(P.dim(), rng));
            CHECK(Q.dim() == P.dim());
            CHECK(Q.vertices().size() == P.vertices().size());
            CHECK(Q.lattice_points().size() == P.lattice_points().size());
            CHECK(Q.normalized_volume() == P.normalized_volume());
            CHECK(f_vector(Q) == f_vector(P));
            CHECK(Q.is_reflexive() == P.is_reflexive());
        }
    }
}

TEST_CASE("translate_nonnegative shifts onto the nonnegative orthant") {
    auto [T, shift] = translate_nonnegative(box(2));
    CHECK(shift == IntVec{1, 1});
    for (int c = 0; c < 2; ++c) {
        Int mn = T.lattice_points()[0][static_cast<std::size_t>(c)];
        for (const IntVec& p : T.lattice_points()) mn = std::min(mn, p[static_cast<std::size_t>(c)]);
        CHECK(mn == 0);
    }
    CHECK(T.normalized_volume() == box(2).normalized_volume());
    CHECK(sorted_vertices(T).front() == IntVec{0, 0});
}

TEST_CASE("lattice_index of point configurations") {
    CHECK(lattice_index({IntVec{0}, IntVec{1}, IntVec{2}}) == 1);
    CHECK(lattice_index({IntVec{0}, IntVec{2}}) == 2);
    CHECK(lattice_index({IntVec{0, 0}, IntVec{1, 0}, IntVec{0, 1}}) == 1);
    CHECK(lattice_index({IntVec{0, 0}, IntVec{2, 0}, IntVec{0, 2}}) == 4);
    CHECK(lattice_index({IntVec{0, 0}, IntVec{1, 0}}) == 0);  // rank-deficient
    CHECK(lattice_index({IntVec{3, 5}}) == 0);                // a single point spans nothing
}

TEST_CASE("affine face coordinates") {
    Polytope sq = box(2);
    // an axis-aligned edge enumerates as 0,1,2 in its own lattice
    for (const Face& F : sq.faces()) {
        if (F.dim != 1) continue;
        IntMat M = affine_face_coordinates(F);
        REQUIRE(M.size() == 1);
        IntVec row = M[0];
        std::sort(row.begin(), row.end());
        CHECK(row == IntVec{0, 1, 2});
    }
    // a diagonal edge of the diamond has primitive direction in the face lattice
    Polytope dia = diamond(2);
    for (const Face& F : dia.faces()) {
        if (F.dim != 1) continue;
        IntMat M = affine_face_coordinates(F);
        REQUIRE(M.size() == 1);
        IntVec row = M[0];
        std::sort(row.begin(), row.end());
        CHECK(row == IntVec{0, 1});
    }
    // a vertex face has a 0-row coordinate matrix
    CHECK(affine_face_coordinates(sq.faces().front()).empty());
}
