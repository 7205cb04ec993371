#pragma once

// Exact integer kernel shared by all modules: arbitrary-precision vectors and
// matrices, fraction-free determinants, Hermite/Smith normal forms, and the
// error taxonomy of the public API.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toriml {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
// Row-major dense matrix; rows need not share storage tricks at desk scale.
using IntMat = std::vector<IntVec>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct NotFullDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotReflexive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownName : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroSampleSize : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LatticeIndexNotOne : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateData : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooManyPaths : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small vector helpers
// ---------------------------------------------------------------------------

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Int gcd_abs(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    return g;
}

// Divides by the gcd of the entries, preserving direction. Zero vectors pass
// through unchanged.
inline IntVec primitive(IntVec v) {
    Int g = gcd_abs(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Determinants and rank (fraction-free Bareiss elimination)
// ---------------------------------------------------------------------------

inline Int det_bareiss(IntMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Rank of an arbitrary integer matrix (rows x cols), by exact elimination.
inline int rank(IntMat m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int a = m[r][c], b = m[i][c];
            Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                               boost::multiprecision::abs(b));
            Int fa = b / g, fb = a / g;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * fb - m[r][j] * fa;
        }
        ++r;
    }
    return static_cast<int>(r);
}

// ---------------------------------------------------------------------------
// Hermite normal form (column style)
// ---------------------------------------------------------------------------

// Echelon lattice basis of the column span of `cols` (each entry one column,
// all of dimension d). Returned columns have strictly increasing pivot rows,
// positive pivots, and entries above each pivot reduced into [0, pivot). When
// the columns generate all of Z^d the result is the identity basis.
inline std::vector<IntVec> hnf_column_basis(std::vector<IntVec> work, std::vector<int>* pivot_rows = nullptr) {
    if (work.empty()) return {};
    const std::size_t d = work[0].size();
    std::vector<IntVec> basis;
    std::vector<int> pivots;
    for (std::size_t r = 0; r < d; ++r) {
        for (;;) {
            std::size_t best = work.size();
            for (std::size_t j = 0; j < work.size(); ++j) {
                if (work[j][r] == 0) continue;
                if (best == work.size() ||
                    boost::multiprecision::abs(work[j][r]) < boost::multiprecision::abs(work[best][r]))
                    best = j;
            }
            if (best == work.size()) break;  // no pivot in this row
            bool clean = true;
            for (std::size_t j = 0; j < work.size(); ++j) {
                if (j == best || work[j][r] == 0) continue;
                Int q = work[j][r] / work[best][r];  // truncated division
                if (q != 0)
                    for (std::size_t i = 0; i < d; ++i) work[j][i] -= q * work[best][i];
                if (work[j][r] != 0) clean = false;
            }
            if (clean) {
                IntVec piv = work[best];
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
                if (piv[r] < 0)
                    for (Int& x : piv) x = -x;
                basis.push_back(std::move(piv));
                pivots.push_back(static_cast<int>(r));
                break;
            }
        }
    }
    // Reduce entries in earlier pivot rows of later basis columns (canonical HNF).
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const int r = pivots[i];
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Int p = basis[i][static_cast<std::size_t>(r)];
            Int v = basis[j][static_cast<std::size_t>(r)];
            // floor division so the reduced entry lands in [0, p)
            Int q = v / p;
            if (v < 0 && v % p != 0) q -= 1;
            if (q != 0)
                for (std::size_t t = 0; t < basis[j].size(); ++t) basis[j][t] -= q * basis[i][t];
        }
    }
    if (pivot_rows) *pivot_rows = pivots;
    return basis;
}

// Solves basis * x = v exactly for an echelon basis as produced above.
// Throws DimensionMismatch when v is not in the lattice.
inline IntVec hnf_solve(const std::vector<IntVec>& basis, const std::vector<int>& pivot_rows, IntVec v) {
    IntVec x(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::size_t r = static_cast<std::size_t>(pivot_rows[i]);
        const Int& p = basis[i][r];
        if (v[r] % p != 0) throw DimensionMismatch("point not in the face lattice");
        x[i] = v[r] / p;
        if (x[i] != 0)
            for (std::size_t t = 0; t < v.size(); ++t) v[t] -= x[i] * basis[i][t];
    }
    for (const Int& e : v)
        if (e != 0) throw DimensionMismatch("point not in the face lattice");
    return x;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

// Diagonal of the Smith normal form of m (nonnegative, d_i | d_{i+1}).
inline IntVec smith_diagonal(IntMat m) {
    const std::size_t p = m.size();
    const std::size_t q = p ? m[0].size() : 0;
    const std::size_t k = std::min(p, q);
    IntVec diag;
    for (std::size_t t = 0; t < k; ++t) {
        // locate a nonzero entry of minimal magnitude in the trailing block
        std::size_t bi = p, bj = q;
        for (std::size_t i = t; i < p; ++i)
            for (std::size_t j = t; j < q; ++j)
                if (m[i][j] != 0 &&
                    (bi == p || boost::multiprecision::abs(m[i][j]) < boost::multiprecision::abs(m[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi == p) break;  // trailing block is zero
        std::swap(m[t], m[bi]);
        for (std::size_t i = 0; i < p; ++i) std::swap(m[i][t], m[i][bj]);
        for (;;) {
            bool again = false;
            for (std::size_t i = t + 1; i < p; ++i) {
                if (m[i][t] == 0) continue;
                Int qq = m[i][t] / m[t][t];
                if (qq != 0)
                    for (std::size_t j = t; j < q; ++j) m[i][j] -= qq * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < q; ++j) {
                if (m[t][j] == 0) continue;
                Int qq = m[t][j] / m[t][t];
                if (qq != 0)
                    for (std::size_t i = t; i < p; ++i) m[i][j] -= qq * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < p; ++i) std::swap(m[i][t], m[i][j]);
                    again = true;
                }
            }
            if (!again) break;
        }
        // divisibility fixup: pivot must divide every entry of the trailing block
        bool redo = false;
        for (std::size_t i = t + 1; i < p && !redo; ++i)
            for (std::size_t j = t + 1; j < q && !redo; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t jj = t; jj < q; ++jj) m[t][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) {
            --t;
            continue;
        }
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        diag.push_back(m[t][t]);
    }
    return diag;
}

// Index in Z^d of the lattice generated by the columns of `cols`
// (d = coordinate dimension). Zero when the columns do not span rank d.
inline Int column_lattice_index(const std::vector<IntVec>& cols) {
    if (cols.empty()) return 0;
    const std::size_t d = cols[0].size();
    IntMat m(d, IntVec(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) m[i][j] = cols[j][i];
    IntVec diag = smith_diagonal(std::move(m));
    if (diag.size() < d) return 0;
    Int idx = 1;
    for (const Int& e : diag) idx *= e;
    return idx;
}

}  // namespace toriml
