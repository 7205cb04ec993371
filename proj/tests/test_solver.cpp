// Homotopy tracking, endpoint classification, critical-point solving, ML
// degrees, face discriminants, and the named closed-form discriminants.
// Planted systems with known roots pin down the tracker; the polytope cases
// use the smallest members of each family.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>

#include <toriml/builders.hpp>
#include <toriml/solver.hpp>

using namespace toriml;

namespace {

Poly univariate(std::vector<Complex> coeffs) {
    // coeffs[k] multiplies x^k
    Poly p;
    p.nvars = 1;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
        if (coeffs[static_cast<std::size_t>(k)] == Complex(0.0, 0.0)) continue;
        p.terms.push_back({{k}, coeffs[static_cast<std::size_t>(k)]});
    }
    return p;
}

PolynomialSystem one_equation(Poly p) {
    PolynomialSystem sys;
    sys.num_vars = p.nvars;
    sys.equations.push_back(std::move(p));
    return sys;
}

std::vector<Complex> sorted_roots(const std::vector<TrackedSolution>& sols, PathStatus want) {
    std::vector<Complex> out;
    for (const TrackedSolution& s : sols)
        if (s.status == want) out.push_back(s.point[0]);
    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
    return out;
}

long long count_status(const std::vector<TrackedSolution>& sols, PathStatus want) {
    return std::count_if(sols.begin(), sols.end(), [&](const TrackedSolution& s) { return s.status == want; });
}

Scaling make_scaling(std::vector<Complex> w) { return Scaling{std::move(w)}; }

}  // namespace

TEST_CASE("planted univariate roots") {
    // (x - 1)(x - 2) = 2 - 3x + x^2
    TrackerConfig cfg;
    auto sols = solve_total_degree(one_equation(univariate({2.0, -3.0, 1.0})), cfg, 5);
    REQUIRE(sols.size() == 2);
    auto roots = sorted_roots(sols, PathStatus::nonsingular_torus);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - Complex(1.0, 0.0)) < 1e-8);
    CHECK(std::abs(roots[1] - Complex(2.0, 0.0)) < 1e-8);
    for (const TrackedSolution& s : sols) {
        CHECK(s.residual < 1e-10);
        CHECK(s.min_sv > 1e-4);
        CHECK(s.t_reached == 1.0);
    }
}

TEST_CASE("planted bivariate grid") {
    // x^2 = 1, y^2 = 4
    PolynomialSystem sys;
    sys.num_vars = 2;
    Poly p1;
    p1.nvars = 2;
    p1.terms = {{{2, 0}, {1.0, 0.0}}, {{0, 0}, {-1.0, 0.0}}};
    Poly p2;
    p2.nvars = 2;
    p2.terms = {{{0, 2}, {1.0, 0.0}}, {{0, 0}, {-4.0, 0.0}}};
    sys.equations = {p1, p2};
    TrackerConfig cfg;
    auto sols = solve_total_degree(sys, cfg, 11);
    REQUIRE(sols.size() == 4);
    int hits = 0;
    for (double x : {-1.0, 1.0})
        for (double y : {-2.0, 2.0})
            for (const TrackedSolution& s : sols)
                if (s.status == PathStatus::nonsingular_torus && std::abs(s.point[0] - Complex(x, 0.0)) < 1e-8 &&
                    std::abs(s.point[1] - Complex(y, 0.0)) < 1e-8)
                    ++hits;
    CHECK(hits == 4);
}

TEST_CASE("double roots classify as singular") {
    // (x - 1)^2: both paths land on the multiple root
    TrackerConfig cfg;
    auto sols = solve_total_degree(one_equation(univariate({1.0, -2.0, 1.0})), cfg, 5);
    REQUIRE(sols.size() == 2);
    CHECK(count_status(sols, PathStatus::nonsingular_torus) == 0);
    CHECK(count_status(sols, PathStatus::singular) == 2);
    for (const TrackedSolution& s : sols) CHECK(std::abs(s.point[0] - Complex(1.0, 0.0)) < 1e-4);
}

TEST_CASE("roots at zero classify as off-torus") {
    // x(x - 1)
    TrackerConfig cfg;
    auto sols = solve_total_degree(one_equation(univariate({0.0, -1.0, 1.0})), cfg, 5);
    REQUIRE(sols.size() == 2);
    CHECK(count_status(sols, PathStatus::off_torus) == 1);
    auto roots = sorted_roots(sols, PathStatus::nonsingular_torus);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - Complex(1.0, 0.0)) < 1e-8);
}

TEST_CASE("tracking is deterministic under a fixed seed") {
    TrackerConfig cfg;
    PolynomialSystem sys = one_equation(univariate({-6.0, 11.0, -6.0, 1.0}));  // roots 1, 2, 3
    auto a = solve_total_degree(sys, cfg, 77);
    auto b = solve_total_degree(sys, cfg, 77);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].point[0].real() == b[i].point[0].real());  // bit-identical
        CHECK(a[i].point[0].imag() == b[i].point[0].imag());
    }
    auto c = solve_total_degree(sys, cfg, 78);
    bool same = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        same = same && a[i].point[0] == c[i].point[0];
    CHECK_FALSE(same);  // a fresh seed draws fresh start roots
}

TEST_CASE("path budget guards") {
    CHECK(detail::bezout_count({3, 3, 3}, 50000) == 27);
    CHECK(detail::bezout_count({10, 10, 10, 10, 10}, 50000) > 50000);  // saturates at the cap
    PolynomialSystem sys;
    sys.num_vars = 3;
    for (int k = 0; k < 3; ++k) {
        Poly p;
        p.nvars = 3;
        std::vector<int> e(3, 0);
        e[static_cast<std::size_t>(k)] = 3;
        p.terms = {{e, {1.0, 0.0}}, {{0, 0, 0}, {-1.0, 0.0}}};
        sys.equations.push_back(std::move(p));
    }
    TrackerConfig cfg;
    cfg.bezout_cap = 10;
    CHECK_THROWS_AS(solve_total_degree(sys, cfg, 1), TooManyPaths);

    PolynomialSystem nonsquare;
    nonsquare.num_vars = 2;
    nonsquare.equations.push_back(univariate({1.0, 1.0}));
    CHECK_THROWS_AS(solve_total_degree(nonsquare, TrackerConfig{}, 1), DimensionMismatch);
}

TEST_CASE("newton refinement") {
    TrackerConfig cfg;
    PolynomialSystem quad = one_equation(univariate({2.0, -3.0, 1.0}));
    TrackedSolution r = newton_refine(quad, {Complex(2.001, 0.0)}, cfg);
    CHECK(r.status == PathStatus::nonsingular_torus);
    CHECK(std::abs(r.point[0] - Complex(2.0, 0.0)) < 1e-10);
    CHECK(r.residual < 1e-12);

    // a double root resists Newton while already satisfying the system
    PolynomialSystem dbl = one_equation(univariate({1.0, -2.0, 1.0}));
    TrackedSolution s = newton_refine(dbl, {Complex(1.001, 0.0)}, cfg);
    CHECK(s.status == PathStatus::singular);

    // a far-off claimed point is not certified
    TrackedSolution far = newton_refine(quad, {Complex(10.0, 0.0)}, cfg);
    CHECK(far.status != PathStatus::nonsingular_torus);

    CHECK_THROWS_AS(newton_refine(quad, {Complex(1.0, 0.0), Complex(1.0, 0.0)}, cfg), DimensionMismatch);
}

TEST_CASE("critical points of the segment model") {
    DesignMatrix A = design_matrix(cube(1));
    Scaling c = standard_scaling(3);
    DataVector u = DataVector::from_counts(A, {1, 2, 1});
    TrackerConfig cfg;
    auto sols = score_solutions(A, c, u, cfg, 42);
    REQUIRE(sols.size() == 2);
    std::sort(sols.begin(), sols.end(),
              [](const TrackedSolution& a, const TrackedSolution& b) { return a.point[1].real() < b.point[1].real(); });
    // (s, theta) = (1, -1) and (1/3, 1)
    CHECK(std::abs(sols[0].point[1] - Complex(-1.0, 0.0)) < 1e-9);
    CHECK(std::abs(sols[0].point[0] - Complex(1.0, 0.0)) < 1e-9);
    CHECK(std::abs(sols[1].point[1] - Complex(1.0, 0.0)) < 1e-9);
    CHECK(std::abs(sols[1].point[0] - Complex(1.0 / 3.0, 0.0)) < 1e-9);
    for (const TrackedSolution& s : sols) {
        CHECK(s.status == PathStatus::nonsingular_torus);
        CHECK(s.residual < 1e-9);
        CHECK(birch_residual(A, c, s.point, u) < 1e-8);
    }
}

TEST_CASE("ml degree of the segment") {
    TrackerConfig cfg;
    MLReport rep = ml_degree(cube(1), standard_scaling(3), cfg);
    CHECK(rep.degree == 2);
    CHECK(rep.ml_degree == 2);
    CHECK(rep.drop == 0);
    CHECK(rep.consistent);
    CHECK(rep.witness_complete);
    CHECK(rep.drop_witness.empty());
    REQUIRE(static_cast<int>(rep.per_seed_counts.size()) == cfg.seeds);
    for (long long n : rep.per_seed_counts) CHECK(n == 2);
}

TEST_CASE("ml degree drop of the square") {
    TrackerConfig cfg;
    MLReport rep = ml_degree(builtin_polytope("cube-2"), standard_scaling(9), cfg);
    CHECK(rep.degree == 8);
    CHECK(rep.ml_degree == 4);
    CHECK(rep.drop == 4);
    CHECK(rep.consistent);
    CHECK_FALSE(rep.drop_witness.empty());  // a face discriminant witnesses the drop

    MLReport tri = ml_degree(reflexive_polygon("P3"), standard_scaling(4), cfg);
    CHECK(tri.degree == 3);
    CHECK(tri.ml_degree == 3);
    CHECK(tri.drop == 0);
}

TEST_CASE("ml degree accepts a design matrix directly") {
    TrackerConfig cfg;
    DesignMatrix A = design_matrix(cube(1));
    MLReport rep = ml_degree(A, standard_scaling(3), cfg);
    CHECK(rep.ml_degree == 2);
    CHECK(rep.degree == 2);
    CHECK_THROWS_AS(ml_degree(A, standard_scaling(4), cfg), DimensionMismatch);
}

TEST_CASE("scaled models drop the ml degree") {
    TrackerConfig cfg;
    // weights are indexed by the lex-sorted translated design in every case
    MLReport diamond = ml_degree(builtin_polytope("cross-2"),
                                 make_scaling({{4.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {25.0, 0.0}, {4.0, 0.0}}), cfg);
    CHECK(diamond.degree == 4);
    CHECK(diamond.ml_degree == 3);

    MLReport p0 = ml_degree(builtin_polytope("P0"),
                            make_scaling({{1.0, 0.0}, {4.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}), cfg);
    CHECK(p0.degree == 4);
    CHECK(p0.ml_degree == 3);

    MLReport p132 = ml_degree(builtin_polytope("P132"),
                              make_scaling({{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0},
                                            {-1.0 / 108.0, 0.0}}), cfg);
    CHECK(p132.degree == 6);
    CHECK(p132.ml_degree == 4);
}

TEST_CASE("face polynomials restrict the model") {
    Polytope seg = builtin_polytope("cube-1");
    const Face& full = seg.faces().back();
    Poly f = face_polynomial(seg, full, standard_scaling(3));
    REQUIRE(f.nvars == 1);
    REQUIRE(f.terms.size() == 3);
    CHECK(f.total_degree() == 2);
    CHECK(std::abs(f.eval({{1.0, 0.0}}) - Complex(3.0, 0.0)) < 1e-12);

    // vertex faces keep a single constant term
    Poly corner = face_polynomial(seg, seg.faces().front(), standard_scaling(3));
    CHECK(corner.nvars == 0);
    REQUIRE(corner.terms.size() == 1);

    // an edge of the square restricts to three points in the face lattice
    Polytope sq = builtin_polytope("cube-2");
    for (const Face& F : sq.faces()) {
        if (F.dim != 1) continue;
        Poly g = face_polynomial(sq, F, standard_scaling(9));
        CHECK(g.nvars == 1);
        CHECK(g.terms.size() == 3);
        CHECK(g.total_degree() == 2);
    }
}

TEST_CASE("toric singularity detection on the segment") {
    Polytope seg = builtin_polytope("cube-1");
    const Face& full = seg.faces().back();
    TrackerConfig cfg;
    // 1 + t + t^2 has no double root; (1 + t)^2 does
    CHECK_FALSE(has_toric_singularity(seg, full, standard_scaling(3), cfg));
    CHECK(has_toric_singularity(seg, full, make_scaling({{1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}}), cfg));
    // vertex faces short-circuit
    CHECK_FALSE(has_toric_singularity(seg, seg.faces().front(), standard_scaling(3), cfg));
}

TEST_CASE("principal determinant verdicts") {
    Polytope seg = builtin_polytope("cube-1");
    TrackerConfig cfg;
    EAResult flat = principal_A_determinant_vanishes(seg, standard_scaling(3), cfg);
    CHECK_FALSE(flat.vanishes);
    CHECK(flat.certain);

    EAResult pinched = principal_A_determinant_vanishes(seg, make_scaling({{1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}}), cfg);
    CHECK(pinched.vanishes);
    CHECK(pinched.witness == "dim=1;verts=[0,1]");

    // a starved path cap leaves the verdict uncertain instead of wrong
    TrackerConfig tiny = cfg;
    tiny.adet_bezout_cap = 1;
    CHECK_THROWS_AS(has_toric_singularity(seg, seg.faces().back(), standard_scaling(3), tiny), TooManyPaths);
    EAResult capped = principal_A_determinant_vanishes(seg, standard_scaling(3), tiny);
    CHECK_FALSE(capped.vanishes);
    CHECK_FALSE(capped.certain);
}

TEST_CASE("named closed-form discriminants") {
    CHECK(closed_form_discriminant("P0", standard_scaling(5)).real() == Catch::Approx(-255.0));
    CHECK(closed_form_discriminant("cross2", standard_scaling(5)).real() == Catch::Approx(-15.0));
    CHECK(closed_form_discriminant("P132-full", standard_scaling(6)).real() == Catch::Approx(109.0));
    CHECK(std::abs(closed_form_discriminant("P132-gamma0", standard_scaling(4))) < 1e-12);

    // the scalings used by the drop cases sit exactly on the discriminant
    Scaling diamond = make_scaling({{4.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {25.0, 0.0}, {4.0, 0.0}});
    CHECK(std::abs(closed_form_discriminant("cross2", diamond)) <
          1e-12 * closed_form_discriminant_scale("cross2", diamond));
    Scaling p0 = make_scaling({{1.0, 0.0}, {4.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
    CHECK(std::abs(closed_form_discriminant("P0", p0)) < 1e-12 * closed_form_discriminant_scale("P0", p0));
    Scaling p132 = make_scaling({{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {-1.0 / 108.0, 0.0}});
    CHECK(std::abs(closed_form_discriminant("P132-full", p132)) <
          1e-12 * closed_form_discriminant_scale("P132-full", p132));

    CHECK_THROWS_AS(closed_form_discriminant("nope", standard_scaling(5)), UnknownName);
    CHECK_THROWS_AS(closed_form_discriminant("P0", standard_scaling(4)), DimensionMismatch);
}
