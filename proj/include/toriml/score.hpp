#pragma once

// Design matrices, scalings, data vectors, and score-equation polynomial
// systems, plus the closed forms for the cube (the two-value MLE formula and
// the ML-degree-one product scalings).
//
// Conventions: design matrices are translated to nonnegative entries and
// their columns are lex-sorted; all scaling/solution indexing follows that
// column order. The cube closed-form helpers take the data vector b in the
// *centered* cube convention (entries of A in {-1,0,1}), which is the
// translated b minus the all-ones vector.

#include <complex>
#include <random>

#include "lattice.hpp"

namespace toriml {

using Complex = std::complex<double>;

struct DesignMatrix {
    int d = 0;              // ambient dimension (rows)
    int n = 0;              // number of lattice points (columns)
    std::vector<std::vector<int>> columns;  // nonnegative entries, lex-sorted
    IntVec shift;           // translation applied to the source polytope
    bool homogenized = false;  // true when row 0 is the all-ones row

    std::vector<int> row(int k) const {
        std::vector<int> r(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        return r;
    }
};

// A' : adds the homogenizing all-ones top row.
inline DesignMatrix homogenize(const DesignMatrix& A) {
    if (A.homogenized) return A;
    DesignMatrix H = A;
    H.d = A.d + 1;
    H.homogenized = true;
    for (auto& col : H.columns) col.insert(col.begin(), 1);
    return H;
}

// Columns = lattice points of translate_nonnegative(P), lex-sorted. Throws
// LatticeIndexNotOne when the points generate a proper sublattice (solution
// counts would then overcount the model degree).
inline DesignMatrix design_matrix(const Polytope& P) {
    auto [T, shift] = translate_nonnegative(P);
    const std::vector<IntVec>& pts = T.lattice_points();
    Int idx = lattice_index(pts);
    if (idx != 1)
        throw LatticeIndexNotOne("lattice index is " + idx.str() + ", expected 1");
    DesignMatrix A;
    A.d = P.dim();
    A.n = static_cast<int>(pts.size());
    A.shift = shift;
    for (const IntVec& p : pts) {
        std::vector<int> col;
        col.reserve(p.size());
        for (const Int& x : p) col.push_back(static_cast<int>(x));
        A.columns.push_back(std::move(col));
    }
    return A;
}

struct Scaling {
    std::vector<Complex> weights;
    int size() const { return static_cast<int>(weights.size()); }
};

inline Scaling standard_scaling(int n) { return Scaling{std::vector<Complex>(static_cast<std::size_t>(n), Complex(1.0, 0.0))}; }

inline void require_nonzero(const Scaling& c) {
    for (const Complex& w : c.weights)
        if (w == Complex(0.0, 0.0)) throw std::invalid_argument("scaling weight is zero");
}

struct DataVector {
    std::vector<long long> u;
    long long u_plus = 0;
    std::vector<long long> b_num;  // A u (translated design); b = b_num / u_plus

    static DataVector from_counts(const DesignMatrix& A, std::vector<long long> counts) {
        if (static_cast<int>(counts.size()) != A.n) throw DimensionMismatch("data length != number of columns");
        DataVector dv;
        dv.u = std::move(counts);
        for (long long x : dv.u) {
            if (x < 0) throw std::invalid_argument("negative count");
            dv.u_plus += x;
        }
        if (dv.u_plus <= 0) throw ZeroSampleSize("all counts are zero");
        dv.b_num.assign(static_cast<std::size_t>(A.d), 0);
        for (int k = 0; k < A.d; ++k)
            for (int j = 0; j < A.n; ++j)
                dv.b_num[static_cast<std::size_t>(k)] +=
                    static_cast<long long>(A.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) * dv.u[static_cast<std::size_t>(j)];
        return dv;
    }

    // b in the centered convention of the cube formulas: b_translated - 1.
    std::vector<double> b_centered() const {
        std::vector<double> b(b_num.size());
        for (std::size_t k = 0; k < b_num.size(); ++k)
            b[k] = static_cast<double>(b_num[k]) / static_cast<double>(u_plus) - 1.0;
        return b;
    }
};

// Generic-data policy: counts drawn uniformly from {1, ..., 1000}.
inline std::vector<long long> random_counts(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(1, 1000);
    std::vector<long long> u(static_cast<std::size_t>(n));
    for (auto& x : u) x = dist(rng);
    return u;
}

// ---------------------------------------------------------------------------
// Sparse polynomial systems
// ---------------------------------------------------------------------------

struct Term {
    std::vector<int> exp;
    Complex coeff;
};

struct Poly {
    int nvars = 0;
    std::vector<Term> terms;

    int total_degree() const {
        int d = 0;
        for (const Term& t : terms) {
            int s = 0;
            for (int e : t.exp) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    Complex eval(const std::vector<Complex>& x) const {
        Complex v(0.0, 0.0);
        for (const Term& t : terms) {
            Complex m = t.coeff;
            for (int i = 0; i < nvars; ++i)
                for (int e = 0; e < t.exp[static_cast<std::size_t>(i)]; ++e) m *= x[static_cast<std::size_t>(i)];
            v += m;
        }
        return v;
    }
};

struct PolynomialSystem {
    int num_vars = 0;
    std::vector<Poly> equations;
};

// Full score system in (s, theta_1..theta_d): d+1 equations
//   row 0:      sum_i c_i s theta^{a_i} - 1 = 0
//   row k >= 1: u_+ * sum_i a_{ki} c_i s theta^{a_i} - (A u)_k = 0
// with rational right-hand sides cleared to integers. Variable order is
// (s, theta_1, ..., theta_d).
inline PolynomialSystem score_system(const DesignMatrix& A, const Scaling& c, const DataVector& u) {
    require_nonzero(c);
    if (c.size() != A.n) throw DimensionMismatch("scaling length != number of columns");
    PolynomialSystem sys;
    sys.num_vars = A.d + 1;
    for (int k = 0; k <= A.d; ++k) {
        Poly eq;
        eq.nvars = sys.num_vars;
        for (int j = 0; j < A.n; ++j) {
            const auto& col = A.columns[static_cast<std::size_t>(j)];
            double w = (k == 0) ? 1.0 : static_cast<double>(u.u_plus) * col[static_cast<std::size_t>(k - 1)];
            if (w == 0.0) continue;
            Term t;
            t.exp.assign(static_cast<std::size_t>(sys.num_vars), 0);
            t.exp[0] = 1;
            for (int i = 0; i < A.d; ++i) t.exp[static_cast<std::size_t>(i + 1)] = col[static_cast<std::size_t>(i)];
            t.coeff = c.weights[static_cast<std::size_t>(j)] * w;
            eq.terms.push_back(std::move(t));
        }
        Term rhs;
        rhs.exp.assign(static_cast<std::size_t>(sys.num_vars), 0);
        rhs.coeff = (k == 0) ? Complex(-1.0, 0.0) : Complex(-static_cast<double>(u.b_num[static_cast<std::size_t>(k - 1)]), 0.0);
        eq.terms.push_back(std::move(rhs));
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

// Score system with s eliminated through row 0 (s = 1/f): d equations
//   sum_i c_i (u_+ a_{ki} - (A u)_k) theta^{a_i} = 0,   k = 1..d,
// in theta only. Torus solutions with f(theta) != 0 correspond one-to-one
// (and nonsingularly) to torus solutions of the full system; torus solutions
// with f(theta) = 0 are toric singular points of f and must be filtered out
// by the caller.
inline PolynomialSystem reduced_score_system(const DesignMatrix& A, const Scaling& c, const DataVector& u) {
    require_nonzero(c);
    if (c.size() != A.n) throw DimensionMismatch("scaling length != number of columns");
    PolynomialSystem sys;
    sys.num_vars = A.d;
    for (int k = 0; k < A.d; ++k) {
        Poly eq;
        eq.nvars = A.d;
        for (int j = 0; j < A.n; ++j) {
            const auto& col = A.columns[static_cast<std::size_t>(j)];
            double w = static_cast<double>(u.u_plus) * col[static_cast<std::size_t>(k)] -
                       static_cast<double>(u.b_num[static_cast<std::size_t>(k)]);
            if (w == 0.0) continue;
            Term t;
            t.exp.assign(col.begin(), col.end());
            t.coeff = c.weights[static_cast<std::size_t>(j)] * w;
            eq.terms.push_back(std::move(t));
        }
        if (eq.terms.empty()) throw DegenerateData("score equation degenerates for this data vector");
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

// f_c(theta) = sum_i c_i theta^{a_i} over the translated design.
inline Poly model_polynomial(const DesignMatrix& A, const Scaling& c) {
    Poly f;
    f.nvars = A.d;
    for (int j = 0; j < A.n; ++j) {
        Term t;
        t.exp.assign(A.columns[static_cast<std::size_t>(j)].begin(), A.columns[static_cast<std::size_t>(j)].end());
        t.coeff = c.weights[static_cast<std::size_t>(j)];
        f.terms.push_back(std::move(t));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Cube closed forms
// ---------------------------------------------------------------------------

// The 2^d critical parameter vectors of the standard-scaling cube model:
// theta_k = (+-sqrt(4 - 3 b_k^2) - b_k) / (2 (b_k - 1)), each a root of
// (b_k - 1) theta^2 + b_k theta + (b_k + 1) = 0. Takes the centered b.
inline std::vector<std::vector<Complex>> cube_mle_closed_form(const std::vector<double>& b) {
    const int d = static_cast<int>(b.size());
    std::vector<std::array<Complex, 2>> roots(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        double bk = b[static_cast<std::size_t>(k)];
        if (std::abs(bk - 1.0) < 1e-12 || std::abs(4.0 - 3.0 * bk * bk) < 1e-12)
            throw DegenerateData("cube closed form requires b_k != 1 and 4 - 3 b_k^2 != 0");
        Complex s = std::sqrt(Complex(4.0 - 3.0 * bk * bk, 0.0));
        roots[static_cast<std::size_t>(k)] = {(s - bk) / (2.0 * (bk - 1.0)), (-s - bk) / (2.0 * (bk - 1.0))};
    }
    std::vector<std::vector<Complex>> out;
    for (long long m = 0; m < (1LL << d); ++m) {
        std::vector<Complex> theta(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) theta[static_cast<std::size_t>(k)] = roots[static_cast<std::size_t>(k)][(m >> k) & 1];
        out.push_back(std::move(theta));
    }
    return out;
}

// Product scaling with ML degree one: c_{k,-1} forced to c_{k,0}^2/(4 c_{k,1});
// weight of lattice point a is prod_k c_{k, a_k} (centered exponents). Weights
// are returned in lex order over the translated design of cube(d).
inline Scaling cube_ml1_scaling(const std::vector<Complex>& c0, const std::vector<Complex>& c1) {
    if (c0.size() != c1.size()) throw DimensionMismatch("parameter vectors differ in length");
    const int d = static_cast<int>(c0.size());
    for (int k = 0; k < d; ++k)
        if (c0[static_cast<std::size_t>(k)] == Complex(0.0, 0.0) || c1[static_cast<std::size_t>(k)] == Complex(0.0, 0.0))
            throw ZeroParameter("cube_ml1_scaling requires nonzero c_{k,0}, c_{k,1}");
    std::vector<Complex> w;
    std::vector<int> t(static_cast<std::size_t>(d), 0);
    for (;;) {
        Complex prod(1.0, 0.0);
        for (int k = 0; k < d; ++k) {
            const Complex &a = c0[static_cast<std::size_t>(k)], &b = c1[static_cast<std::size_t>(k)];
            switch (t[static_cast<std::size_t>(k)]) {
                case 0: prod *= a * a / (4.0 * b); break;  // centered exponent -1
                case 1: prod *= a; break;                  // centered exponent 0
                default: prod *= b; break;                 // centered exponent +1
            }
        }
        w.push_back(prod);
        int k = d;
        while (k > 0) {
            --k;
            if (t[static_cast<std::size_t>(k)] < 2) {
                ++t[static_cast<std::size_t>(k)];
                for (int j = k + 1; j < d; ++j) t[static_cast<std::size_t>(j)] = 0;
                break;
            }
            if (k == 0) return Scaling{std::move(w)};
        }
    }
}

// Unique critical point under the ML-degree-one scaling:
// theta_k = (b_k + 1) c_{k,0} / (2 c_{k,1} (1 - b_k)). Takes the centered b.
inline std::vector<Complex> cube_ml1_mle(const std::vector<double>& b, const std::vector<Complex>& c0,
                                         const std::vector<Complex>& c1) {
    if (b.size() != c0.size() || b.size() != c1.size()) throw DimensionMismatch("parameter vectors differ in length");
    std::vector<Complex> theta(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (std::abs(b[k] - 1.0) < 1e-12) throw DegenerateData("cube ML-1 MLE requires b_k != 1");
        theta[k] = (b[k] + 1.0) * c0[k] / (2.0 * c1[k] * (1.0 - b[k]));
    }
    return theta;
}

// ---------------------------------------------------------------------------
// Residuals and distributions
// ---------------------------------------------------------------------------

// p_i = c_i s theta^{a_i} for a full solution (s, theta_1..theta_d).
inline std::vector<Complex> parametrization(const DesignMatrix& A, const Scaling& c,
                                            const std::vector<Complex>& solution) {
    if (static_cast<int>(solution.size()) != A.d + 1) throw DimensionMismatch("solution must be (s, theta)");
    std::vector<Complex> p(static_cast<std::size_t>(A.n));
    for (int j = 0; j < A.n; ++j) {
        Complex m = c.weights[static_cast<std::size_t>(j)] * solution[0];
        for (int i = 0; i < A.d; ++i) {
            int e = A.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            for (int r = 0; r < e; ++r) m *= solution[static_cast<std::size_t>(i + 1)];
        }
        p[static_cast<std::size_t>(j)] = m;
    }
    return p;
}

// Max-norm of A' p - A' u / u_+ (row 0 is sum(p) - 1). Accepts A either plain
// or homogenized.
inline double birch_residual(const DesignMatrix& A_in, const Scaling& c, const std::vector<Complex>& solution,
                             const DataVector& u) {
    const DesignMatrix& A = A_in;  // parametrization expects the plain design
    if (A.homogenized) throw DimensionMismatch("pass the plain design; the all-ones row is added internally");
    std::vector<Complex> p = parametrization(A, c, solution);
    Complex sum(0.0, 0.0);
    for (const Complex& v : p) sum += v;
    double res = std::abs(sum - 1.0);
    for (int k = 0; k < A.d; ++k) {
        Complex row(0.0, 0.0);
        for (int j = 0; j < A.n; ++j)
            row += static_cast<double>(A.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) * p[static_cast<std::size_t>(j)];
        row -= static_cast<double>(u.b_num[static_cast<std::size_t>(k)]) / static_cast<double>(u.u_plus);
        res = std::max(res, std::abs(row));
    }
    return res;
}

struct Distribution {
    std::vector<Complex> p;
    bool statistically_valid = false;  // all entries real and strictly positive
};

inline Distribution solution_to_distribution(const DesignMatrix& A, const Scaling& c,
                                             const std::vector<Complex>& solution) {
    Distribution out;
    out.p = parametrization(A, c, solution);
    out.statistically_valid = true;
    for (const Complex& v : out.p)
        if (std::abs(v.imag()) > 1e-9 || v.real() <= 0.0) {
            out.statistically_valid = false;
            break;
        }
    return out;
}

}  // namespace toriml
