// Design matrices, data vectors, score-equation systems, and the cube closed
// forms. The segment (three lattice points on a line) is small enough to
// check every coefficient by hand.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include <toriml/builders.hpp>
#include <toriml/score.hpp>

using namespace toriml;

namespace {

constexpr double kTight = 1e-12;

DesignMatrix segment_design() { return design_matrix(cube(1)); }

double abs_err(const Complex& a, const Complex& b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("design matrix of the segment") {
    DesignMatrix A = segment_design();
    CHECK(A.d == 1);
    CHECK(A.n == 3);
    CHECK(A.columns == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(A.shift == IntVec{1});
    CHECK_FALSE(A.homogenized);
    CHECK(A.row(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("design matrix columns are lex-sorted and nonnegative") {
    DesignMatrix A = design_matrix(cross(2));
    CHECK(A.d == 2);
    CHECK(A.n == 5);
    CHECK(std::is_sorted(A.columns.begin(), A.columns.end()));
    for (const auto& col : A.columns)
        for (int e : col) CHECK(e >= 0);
}

TEST_CASE("homogenization adds the all-ones row once") {
    DesignMatrix A = segment_design();
    DesignMatrix H = homogenize(A);
    CHECK(H.homogenized);
    CHECK(H.d == 2);
    CHECK(H.row(0) == std::vector<int>{1, 1, 1});
    CHECK(H.row(1) == A.row(0));
    DesignMatrix HH = homogenize(H);
    CHECK(HH.d == 2);  // idempotent
}

TEST_CASE("design matrix rejects proper sublattices") {
    // the empty simplex conv{0, e1+e2, e1+e3, e2+e3} has lattice index 2
    Polytope P = Polytope::from_points({IntVec{0, 0, 0}, IntVec{1, 1, 0}, IntVec{1, 0, 1}, IntVec{0, 1, 1}});
    CHECK(P.lattice_points().size() == 4);
    CHECK_THROWS_AS(design_matrix(P), LatticeIndexNotOne);
}

TEST_CASE("scalings") {
    Scaling c = standard_scaling(4);
    CHECK(c.size() == 4);
    for (const Complex& w : c.weights) CHECK(w == Complex(1.0, 0.0));
    REQUIRE_NOTHROW(require_nonzero(c));
    c.weights[2] = Complex(0.0, 0.0);
    CHECK_THROWS_AS(require_nonzero(c), std::invalid_argument);
}

TEST_CASE("data vectors") {
    DesignMatrix A = segment_design();
    DataVector u = DataVector::from_counts(A, {1, 2, 1});
    CHECK(u.u_plus == 4);
    CHECK(u.b_num == std::vector<long long>{4});  // 0*1 + 1*2 + 2*1
    CHECK(u.b_centered() == std::vector<double>{0.0});

    DataVector skew = DataVector::from_counts(A, {3, 1, 0});
    CHECK(skew.u_plus == 4);
    CHECK(skew.b_num == std::vector<long long>{1});
    CHECK(skew.b_centered()[0] == Catch::Approx(-0.75));

    CHECK_THROWS_AS(DataVector::from_counts(A, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(DataVector::from_counts(A, {1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DataVector::from_counts(A, {0, 0, 0}), ZeroSampleSize);
}

TEST_CASE("random counts are positive, bounded, and seed-deterministic") {
    std::mt19937_64 a(99), b(99), c(100);
    std::vector<long long> ua = random_counts(500, a), ub = random_counts(500, b), uc = random_counts(500, c);
    CHECK(ua == ub);
    CHECK(ua != uc);
    for (long long x : ua) {
        CHECK(x >= 1);
        CHECK(x <= 1000);
    }
}

TEST_CASE("score system of the segment") {
    DesignMatrix A = segment_design();
    Scaling c = standard_scaling(3);
    DataVector u = DataVector::from_counts(A, {1, 2, 1});
    PolynomialSystem sys = score_system(A, c, u);
    REQUIRE(sys.num_vars == 2);  // (s, theta)
    REQUIRE(sys.equations.size() == 2);
    // row 0: s + s t + s t^2 - 1, row 1: 4 s t + 8 s t^2 - 4
    CHECK(sys.equations[0].terms.size() == 4);
    CHECK(sys.equations[1].terms.size() == 3);  // the exponent-0 column drops out
    CHECK(sys.equations[0].total_degree() == 3);
    // both critical points satisfy the system exactly
    for (const auto& sol : {std::vector<Complex>{{1.0 / 3.0, 0.0}, {1.0, 0.0}},
                            std::vector<Complex>{{1.0, 0.0}, {-1.0, 0.0}}}) {
        for (const Poly& eq : sys.equations) CHECK(std::abs(eq.eval(sol)) < kTight);
    }
    // a non-critical point does not
    CHECK(std::abs(sys.equations[1].eval({{1.0, 0.0}, {2.0, 0.0}})) > 1.0);
}

TEST_CASE("reduced score system eliminates s") {
    DesignMatrix A = segment_design();
    Scaling c = standard_scaling(3);
    DataVector u = DataVector::from_counts(A, {1, 2, 1});
    PolynomialSystem red = reduced_score_system(A, c, u);
    REQUIRE(red.num_vars == 1);
    REQUIRE(red.equations.size() == 1);
    // coefficients c_j (u+ a_j - Au): (-4, 0, 4), so the equation is 4 t^2 - 4
    REQUIRE(red.equations[0].terms.size() == 2);
    CHECK(abs_err(red.equations[0].eval({{1.0, 0.0}}), {0.0, 0.0}) < kTight);
    CHECK(abs_err(red.equations[0].eval({{-1.0, 0.0}}), {0.0, 0.0}) < kTight);
    CHECK(std::abs(red.equations[0].eval({{2.0, 0.0}})) > 1.0);

    // solutions of the reduced system lift to the full system through s = 1/f
    Poly f = model_polynomial(A, c);
    PolynomialSystem full = score_system(A, c, u);
    for (double t : {1.0, -1.0}) {
        Complex fv = f.eval({{t, 0.0}});
        REQUIRE(std::abs(fv) > 0.1);
        std::vector<Complex> lifted{Complex(1.0, 0.0) / fv, Complex(t, 0.0)};
        for (const Poly& eq : full.equations) CHECK(std::abs(eq.eval(lifted)) < kTight);
    }
}

TEST_CASE("model polynomial matches the design") {
    DesignMatrix A = segment_design();
    Poly f = model_polynomial(A, standard_scaling(3));
    CHECK(f.nvars == 1);
    CHECK(f.terms.size() == 3);
    CHECK(f.total_degree() == 2);
    CHECK(abs_err(f.eval({{2.0, 0.0}}), {7.0, 0.0}) < kTight);  // 1 + 2 + 4
}

TEST_CASE("cube closed-form critical points") {
    // centered b = 0: the quadratic is 1 - t^2 with roots +-1
    auto sols = cube_mle_closed_form({0.0});
    REQUIRE(sols.size() == 2);
    std::vector<double> roots{sols[0][0].real(), sols[1][0].real()};
    std::sort(roots.begin(), roots.end());
    CHECK(roots[0] == Catch::Approx(-1.0));
    CHECK(roots[1] == Catch::Approx(1.0));

    // d = 2: every returned vector satisfies its coordinate quadratic
    std::vector<double> b{0.25, -0.5};
    auto grid = cube_mle_closed_form(b);
    REQUIRE(grid.size() == 4);
    for (const auto& theta : grid)
        for (int k = 0; k < 2; ++k) {
            Complex t = theta[static_cast<std::size_t>(k)];
            Complex q = (b[static_cast<std::size_t>(k)] - 1.0) * t * t + b[static_cast<std::size_t>(k)] * t +
                        (b[static_cast<std::size_t>(k)] + 1.0);
            CHECK(std::abs(q) < 1e-10);
        }
    // all four sign choices are distinct
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j)
            CHECK((abs_err(grid[i][0], grid[j][0]) > 1e-9 || abs_err(grid[i][1], grid[j][1]) > 1e-9));

    CHECK_THROWS_AS(cube_mle_closed_form({1.0}), DegenerateData);
    CHECK_THROWS_AS(cube_mle_closed_form({2.0 / std::sqrt(3.0)}), DegenerateData);
}

TEST_CASE("product scalings with one critical point") {
    Scaling w = cube_ml1_scaling({2.0, 2.0, 2.0}, {1.0, 1.0, 1.0});
    const std::vector<double> expected{1, 2, 1, 2, 4, 2, 1, 2, 1, 2, 4, 2, 4, 8, 4,
                                       2, 4, 2, 1, 2, 1, 2, 4, 2, 1, 2, 1};
    REQUIRE(w.size() == 27);
    for (int j = 0; j < 27; ++j) {
        CHECK(w.weights[static_cast<std::size_t>(j)].real() == Catch::Approx(expected[static_cast<std::size_t>(j)]));
        CHECK(w.weights[static_cast<std::size_t>(j)].imag() == 0.0);
    }
    CHECK_THROWS_AS(cube_ml1_scaling({1.0, 2.0}, {1.0}), DimensionMismatch);
    CHECK_THROWS_AS(cube_ml1_scaling({0.0}, {1.0}), ZeroParameter);
    CHECK_THROWS_AS(cube_ml1_scaling({1.0}, {0.0}), ZeroParameter);
}

TEST_CASE("the closed-form critical point satisfies the Birch conditions") {
    DesignMatrix A = design_matrix(cube(3));
    std::vector<Complex> c0{2.0, 2.0, 2.0}, c1{1.0, 1.0, 1.0};
    Scaling w = cube_ml1_scaling(c0, c1);

    // uniform counts center b at 0, so every theta_k is c0/(2 c1)
    DataVector uni = DataVector::from_counts(A, std::vector<long long>(27, 1));
    std::vector<Complex> theta = cube_ml1_mle(uni.b_centered(), c0, c1);
    for (const Complex& t : theta) CHECK(abs_err(t, {1.0, 0.0}) < kTight);

    // generic counts: the formula still satisfies the Birch conditions exactly
    std::vector<long long> counts(27);
    for (int i = 0; i < 27; ++i) counts[static_cast<std::size_t>(i)] = i + 1;
    DataVector u = DataVector::from_counts(A, counts);
    theta = cube_ml1_mle(u.b_centered(), c0, c1);
    Complex fv = model_polynomial(A, w).eval(theta);
    REQUIRE(std::abs(fv) > 1e-6);
    std::vector<Complex> sol{Complex(1.0, 0.0) / fv};
    sol.insert(sol.end(), theta.begin(), theta.end());
    CHECK(birch_residual(A, w, sol, u) < 1e-9);

    CHECK_THROWS_AS(cube_ml1_mle({1.0}, {1.0}, {1.0}), DegenerateData);
    CHECK_THROWS_AS(cube_ml1_mle({0.0, 0.0}, {1.0}, {1.0}), DimensionMismatch);
}

TEST_CASE("parametrization and distributions") {
    DesignMatrix A = segment_design();
    Scaling c = standard_scaling(3);

    std::vector<Complex> interior{{1.0 / 3.0, 0.0}, {1.0, 0.0}};
    std::vector<Complex> p = parametrization(A, c, interior);
    REQUIRE(p.size() == 3);
    for (const Complex& v : p) CHECK(abs_err(v, {1.0 / 3.0, 0.0}) < kTight);
    Distribution dist = solution_to_distribution(A, c, interior);
    CHECK(dist.statistically_valid);

    std::vector<Complex> signed_sol{{1.0, 0.0}, {-1.0, 0.0}};
    Distribution bad = solution_to_distribution(A, c, signed_sol);
    CHECK_FALSE(bad.statistically_valid);
    Complex total(0.0, 0.0);
    for (const Complex& v : bad.p) total += v;
    CHECK(abs_err(total, {1.0, 0.0}) < kTight);  // sums to one even off the probability simplex

    CHECK_THROWS_AS(parametrization(A, c, {{1.0, 0.0}}), DimensionMismatch);
}

TEST_CASE("birch residual detects perturbations") {
    DesignMatrix A = segment_design();
    Scaling c = standard_scaling(3);
    DataVector u = DataVector::from_counts(A, {1, 2, 1});
    std::vector<Complex> sol{{1.0 / 3.0, 0.0}, {1.0, 0.0}};
    CHECK(birch_residual(A, c, sol, u) < kTight);
    sol[1] += 1e-3;
    CHECK(birch_residual(A, c, sol, u) > 1e-4);
    CHECK_THROWS_AS(birch_residual(homogenize(A), c, sol, u), DimensionMismatch);
}
