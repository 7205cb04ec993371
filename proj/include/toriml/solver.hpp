#pragma once

// Polynomial homotopy continuation for score systems: total-degree solves,
// data-to-data parameter bridges, ML degree counting, and toric-singularity
// tests of faces (principal A-determinant vanishing).
//
// The score system is solved with s eliminated (see reduced_score_system);
// reduced torus solutions with f_c(theta) = 0 do not correspond to critical
// points (s = 1/f_c blows up) and are filtered by a relative |f_c| test.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "score.hpp"

namespace toriml {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

struct TrackerConfig {
    double newton_tol = 1e-10;         // relative Newton step tolerance at endpoints
    double tracking_tol = 1e-9;        // relative corrector tolerance during tracking
    double dedup_tol = 1e-6;           // relative distance identifying two endpoints
    double torus_tol = 1e-8;           // |x_i| below this counts as off the torus
    double infinity_threshold = 1e8;   // |x_i| above this counts as at infinity
    double singular_svd_tol = 1e-8;    // min_sv <= tol * max(1, ||J||_inf) is singular
    double endpoint_residual_tol = 1e-6;  // unpolishable endpoints below this residual are singular
    double spurious_f_tol = 1e-6;      // relative |f_c| above this certifies s = 1/f_c finite
    double adet_tol = 1e-7;            // relative residual certifying a toric singularity
    double initial_step = 0.05;
    double min_step = 1e-11;  // slowly diverging paths separate from finite endpoints late
    double max_step = 0.1;
    int corrector_iters = 3;
    int max_newton_iters = 12;
    int seeds = 3;                     // independent data vectors per ML degree run
    std::uint64_t base_seed = 2024;
    long long bezout_cap = 50000;      // refuse total-degree solves above this many paths
    long long adet_bezout_cap = 2000;  // per-face cap for singularity searches
    int witness_max_dim = 6;           // skip drop-witness search above this dimension
};

enum class PathStatus { nonsingular_torus, singular, off_torus, at_infinity, failed };

inline const char* to_string(PathStatus s) {
    switch (s) {
        case PathStatus::nonsingular_torus: return "nonsingular-torus";
        case PathStatus::singular: return "singular";
        case PathStatus::off_torus: return "off-torus";
        case PathStatus::at_infinity: return "at-infinity";
        default: return "failed";
    }
}

struct TrackedSolution {
    std::vector<Complex> point;
    PathStatus status = PathStatus::failed;
    double residual = std::numeric_limits<double>::infinity();  // relative, max-norm
    double min_sv = 0.0;  // smallest singular value of the endpoint Jacobian
    double t_reached = 0.0;
};

struct MLReport {
    long long degree = 0;
    long long ml_degree = 0;
    long long drop = 0;
    std::vector<long long> per_seed_counts;
    bool consistent = true;          // all seeds agree and fail rates stay under 1%
    std::string drop_witness;        // id of a face with vanishing discriminant
    bool witness_complete = true;    // false when some faces were skipped by the cap
};

struct EAResult {
    bool vanishes = false;
    std::string witness;   // id of the first face (by increasing dim) found singular
    bool certain = true;   // false when a face was skipped by the path cap
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a * 6364136223846793005ULL + b * 1442695040888963407ULL + 0x9e3779b97f4a7c15ULL;
    x ^= x >> 29;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return x;
}

inline Complex random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    return std::polar(1.0, ang(rng));
}

// Sparse system with a shared monomial pool and externally supplied
// coefficients, so one structure serves a whole family of data vectors.
struct CompiledSystem {
    int nv = 0;
    int neq = 0;
    std::vector<std::vector<int>> pool;  // distinct exponent vectors
    std::vector<int> maxdeg;             // per-variable max exponent in the pool
    struct FTerm { int mono; int coeff; };
    struct JTerm { int mono; int coeff; double factor; };
    std::vector<std::vector<FTerm>> eqs;
    std::vector<std::vector<std::vector<JTerm>>> jac;  // [eq][var]
    std::vector<Complex> coeffs;  // default coefficient values
    std::vector<int> degrees;     // structural total degree per equation

    struct Ws {
        std::vector<std::vector<Complex>> pow;
        std::vector<Complex> mono;
    };

    int pool_index(std::map<std::vector<int>, int>& where, const std::vector<int>& e) {
        auto it = where.find(e);
        if (it != where.end()) return it->second;
        int id = static_cast<int>(pool.size());
        pool.push_back(e);
        where.emplace(e, id);
        return id;
    }

    // terms[k] = list of (exponent vector, coefficient slot); coefficient
    // values live in an external vector indexed by slot.
    void build(int num_vars, const std::vector<std::vector<std::pair<std::vector<int>, int>>>& terms,
               int num_coeffs) {
        nv = num_vars;
        neq = static_cast<int>(terms.size());
        std::map<std::vector<int>, int> where;
        eqs.assign(static_cast<std::size_t>(neq), {});
        jac.assign(static_cast<std::size_t>(neq), std::vector<std::vector<JTerm>>(static_cast<std::size_t>(nv)));
        degrees.assign(static_cast<std::size_t>(neq), 0);
        for (int k = 0; k < neq; ++k) {
            for (const auto& [e, slot] : terms[static_cast<std::size_t>(k)]) {
                eqs[static_cast<std::size_t>(k)].push_back({pool_index(where, e), slot});
                int td = 0;
                for (int v : e) td += v;
                degrees[static_cast<std::size_t>(k)] = std::max(degrees[static_cast<std::size_t>(k)], td);
                for (int v = 0; v < nv; ++v) {
                    int ev = e[static_cast<std::size_t>(v)];
                    if (ev == 0) continue;
                    std::vector<int> de = e;
                    --de[static_cast<std::size_t>(v)];
                    jac[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)].push_back(
                        {pool_index(where, de), slot, static_cast<double>(ev)});
                }
            }
        }
        maxdeg.assign(static_cast<std::size_t>(nv), 0);
        for (const auto& e : pool)
            for (int v = 0; v < nv; ++v)
                maxdeg[static_cast<std::size_t>(v)] = std::max(maxdeg[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
        coeffs.assign(static_cast<std::size_t>(num_coeffs), Complex(0.0, 0.0));
    }

    static CompiledSystem from_system(const PolynomialSystem& sys) {
        CompiledSystem C;
        std::vector<std::vector<std::pair<std::vector<int>, int>>> terms(sys.equations.size());
        std::vector<Complex> co;
        for (std::size_t k = 0; k < sys.equations.size(); ++k)
            for (const Term& t : sys.equations[k].terms) {
                terms[k].push_back({t.exp, static_cast<int>(co.size())});
                co.push_back(t.coeff);
            }
        C.build(sys.num_vars, terms, static_cast<int>(co.size()));
        C.coeffs = std::move(co);
        return C;
    }

    void prepare(Ws& ws) const {
        ws.pow.assign(static_cast<std::size_t>(nv), {});
        for (int v = 0; v < nv; ++v) ws.pow[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(maxdeg[static_cast<std::size_t>(v)]) + 1, Complex(1.0, 0.0));
        ws.mono.assign(pool.size(), Complex(1.0, 0.0));
    }

    void monomials(const VectorXcd& x, Ws& ws) const {
        for (int v = 0; v < nv; ++v) {
            auto& pw = ws.pow[static_cast<std::size_t>(v)];
            pw[0] = Complex(1.0, 0.0);
            for (int e = 1; e <= maxdeg[static_cast<std::size_t>(v)]; ++e) pw[static_cast<std::size_t>(e)] = pw[static_cast<std::size_t>(e - 1)] * x(v);
        }
        for (std::size_t m = 0; m < pool.size(); ++m) {
            Complex val(1.0, 0.0);
            const auto& e = pool[m];
            for (int v = 0; v < nv; ++v) val *= ws.pow[static_cast<std::size_t>(v)][static_cast<std::size_t>(e[static_cast<std::size_t>(v)])];
            ws.mono[m] = val;
        }
    }

    void values(const Ws& ws, const std::vector<Complex>& co, VectorXcd& F) const {
        F.resize(neq);
        for (int k = 0; k < neq; ++k) {
            Complex v(0.0, 0.0);
            for (const FTerm& t : eqs[static_cast<std::size_t>(k)]) v += co[static_cast<std::size_t>(t.coeff)] * ws.mono[static_cast<std::size_t>(t.mono)];
            F(k) = v;
        }
    }

    void jacobian(const Ws& ws, const std::vector<Complex>& co, MatrixXcd& J) const {
        J.resize(neq, nv);
        for (int k = 0; k < neq; ++k)
            for (int v = 0; v < nv; ++v) {
                Complex s(0.0, 0.0);
                for (const JTerm& t : jac[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)])
                    s += t.factor * co[static_cast<std::size_t>(t.coeff)] * ws.mono[static_cast<std::size_t>(t.mono)];
                J(k, v) = s;
            }
    }

    // Per-equation magnitude scale sum_j |c_j| |x^{e_j}| used for relative residuals.
    double scale(const Ws& ws, const std::vector<Complex>& co, int k) const {
        double s = 0.0;
        for (const FTerm& t : eqs[static_cast<std::size_t>(k)]) s += std::abs(co[static_cast<std::size_t>(t.coeff)]) * std::abs(ws.mono[static_cast<std::size_t>(t.mono)]);
        return s;
    }

    double relative_residual(const Ws& ws, const std::vector<Complex>& co, const VectorXcd& F) const {
        double r = 0.0;
        for (int k = 0; k < neq; ++k) r = std::max(r, std::abs(F(k)) / std::max(scale(ws, co, k), 1e-100));
        return r;
    }
};

inline double norm_inf(const VectorXcd& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); }

// Equation-wise rescaling to unit max coefficient. Count data makes the raw
// score coefficients ~1e4 larger than the start system, which squeezes the
// whole total-degree deformation into a sliver near t = 0; balancing spreads
// it over the full interval. Coefficient slots are never shared across
// equations, so per-row division is safe.
inline std::vector<Complex> balance_rows(const CompiledSystem& C, const std::vector<Complex>& co) {
    std::vector<Complex> out = co;
    for (int k = 0; k < C.neq; ++k) {
        double m = 0.0;
        for (const CompiledSystem::FTerm& t : C.eqs[static_cast<std::size_t>(k)])
            m = std::max(m, std::abs(co[static_cast<std::size_t>(t.coeff)]));
        if (m <= 0.0) continue;
        for (const CompiledSystem::FTerm& t : C.eqs[static_cast<std::size_t>(k)])
            out[static_cast<std::size_t>(t.coeff)] /= m;
    }
    return out;
}

// H(x,t) = (1-t) gamma (x_k^{d_k} - r_k) + t F(x).
struct TotalDegreeHomotopy {
    const CompiledSystem* C = nullptr;
    const std::vector<Complex>* co = nullptr;
    Complex gamma;
    std::vector<Complex> roots;  // r_k

    void eval(const VectorXcd& x, double t, CompiledSystem::Ws& ws, VectorXcd& H, MatrixXcd& J, VectorXcd& Ht) const {
        C->monomials(x, ws);
        C->values(ws, *co, H);
        C->jacobian(ws, *co, J);
        Ht.resize(C->neq);
        for (int k = 0; k < C->neq; ++k) {
            int dk = std::max(1, C->degrees[static_cast<std::size_t>(k)]);
            Complex xk = x(k), p(1.0, 0.0);
            for (int e = 0; e < dk - 1; ++e) p *= xk;
            Complex gk = p * xk - roots[static_cast<std::size_t>(k)];
            Ht(k) = H(k) - gamma * gk;
            H(k) = t * H(k) + (1.0 - t) * gamma * gk;
            for (int v = 0; v < C->nv; ++v) J(k, v) *= t;
            J(k, k) += (1.0 - t) * gamma * static_cast<double>(dk) * p;
        }
    }

    void target(const VectorXcd& x, CompiledSystem::Ws& ws, VectorXcd& F, MatrixXcd& J) const {
        C->monomials(x, ws);
        C->values(ws, *co, F);
        C->jacobian(ws, *co, J);
    }
    const std::vector<Complex>& target_coeffs() const { return *co; }
};

// Coefficients quadratic in t: co(t) = a0 + a1 t + a2 t^2 (data-vector bridge).
struct ParameterHomotopy {
    const CompiledSystem* C = nullptr;
    std::vector<Complex> a0, a1, a2;
    mutable std::vector<Complex> co, dco;

    void set_t(double t) const {
        co.resize(a0.size());
        dco.resize(a0.size());
        for (std::size_t j = 0; j < a0.size(); ++j) {
            co[j] = a0[j] + t * (a1[j] + t * a2[j]);
            dco[j] = a1[j] + 2.0 * t * a2[j];
        }
    }

    void eval(const VectorXcd& x, double t, CompiledSystem::Ws& ws, VectorXcd& H, MatrixXcd& J, VectorXcd& Ht) const {
        set_t(t);
        C->monomials(x, ws);
        C->values(ws, co, H);
        C->jacobian(ws, co, J);
        C->values(ws, dco, Ht);
    }

    void target(const VectorXcd& x, CompiledSystem::Ws& ws, VectorXcd& F, MatrixXcd& J) const {
        set_t(1.0);
        C->monomials(x, ws);
        C->values(ws, co, F);
        C->jacobian(ws, co, J);
    }
    const std::vector<Complex>& target_coeffs() const {
        set_t(1.0);
        return co;
    }
};

enum class RawStatus { converged, at_infinity, failed };

struct RawPath {
    VectorXcd x;
    RawStatus status = RawStatus::failed;
    double t = 0.0;
};

// RK4 predictor on x'(t) = -J^{-1} H_t with a short Newton corrector and
// multiplicative step control. Tracks t from 0 to 1.
template <class Hom>
RawPath track_path(const Hom& hom, VectorXcd x, const TrackerConfig& cfg, CompiledSystem::Ws& ws) {
    const int n = static_cast<int>(x.size());
    VectorXcd H(n), Ht(n), k1(n), k2(n), k3(n), k4(n), xp(n), dx(n);
    MatrixXcd J(n, n);
    double t = 0.0, h = cfg.initial_step;
    int streak = 0;

    auto tangent = [&](const VectorXcd& xx, double tt, VectorXcd& out) -> bool {
        hom.eval(xx, tt, ws, H, J, Ht);
        out = Eigen::PartialPivLU<MatrixXcd>(J).solve(-Ht);
        return out.allFinite();
    };

    while (t < 1.0 - 1e-12) {
        if (norm_inf(x) >= cfg.infinity_threshold) return {x, RawStatus::at_infinity, t};
        double hs = std::min(h, 1.0 - t);
        bool ok = tangent(x, t, k1);
        if (ok) ok = tangent(x + (hs / 2.0) * k1, t + hs / 2.0, k2);
        if (ok) ok = tangent(x + (hs / 2.0) * k2, t + hs / 2.0, k3);
        if (ok) ok = tangent(x + hs * k3, t + hs, k4);
        if (ok) {
            xp = x + (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            ok = false;
            for (int it = 0; it < cfg.corrector_iters; ++it) {
                hom.eval(xp, t + hs, ws, H, J, Ht);
                dx = Eigen::PartialPivLU<MatrixXcd>(J).solve(-H);
                if (!dx.allFinite()) break;
                double step = norm_inf(dx), size = 1.0 + norm_inf(xp);
                if (step > 0.5 * size) break;
                xp += dx;
                if (step <= cfg.tracking_tol * size) {
                    ok = true;
                    break;
                }
            }
        }
        if (ok) {
            x = xp;
            t += hs;
            if (++streak >= 3) {
                h = std::min(h * 1.5, cfg.max_step);
                streak = 0;
            }
        } else {
            streak = 0;
            h /= 2.0;
            if (h < cfg.min_step) return {x, RawStatus::failed, t};
        }
    }
    return {x, RawStatus::converged, 1.0};
}

struct NewtonOutcome {
    VectorXcd x;
    bool converged = false;
    double moved = 0.0;  // total displacement from the starting point
};

inline NewtonOutcome newton_polish(const CompiledSystem& C, const std::vector<Complex>& co, VectorXcd x,
                                   const TrackerConfig& cfg, CompiledSystem::Ws& ws, int iters) {
    NewtonOutcome out;
    VectorXcd F, dx, x0 = x;
    MatrixXcd J;
    for (int it = 0; it < iters; ++it) {
        C.monomials(x, ws);
        C.values(ws, co, F);
        C.jacobian(ws, co, J);
        dx = Eigen::PartialPivLU<MatrixXcd>(J).solve(-F);
        if (!dx.allFinite()) break;
        double step = norm_inf(dx), size = 1.0 + norm_inf(x);
        if (step > 0.5 * size) break;
        x += dx;
        if (step <= cfg.newton_tol * size) {
            out.converged = true;
            break;
        }
    }
    out.moved = norm_inf(x - x0);
    out.x = std::move(x);
    return out;
}

// Endpoint classification: polish, then status by the chain
// at-infinity -> singular -> off-torus -> nonsingular-torus. Endpoints that
// resist polishing but already satisfy the target system sit on a multiple or
// positive-dimensional solution: Newton converges quadratically from this
// close to any nonsingular one, so refusal is itself the singularity signal
// (the Jacobian rank test alone misses multiple roots approached only to the
// tracker's stall distance).
inline TrackedSolution classify_endpoint(const CompiledSystem& C, const std::vector<Complex>& co, RawPath raw,
                                         const TrackerConfig& cfg, CompiledSystem::Ws& ws) {
    TrackedSolution out;
    out.t_reached = raw.t;
    out.point.assign(raw.x.data(), raw.x.data() + raw.x.size());
    if (raw.status == RawStatus::at_infinity) {
        out.status = PathStatus::at_infinity;
        return out;
    }
    // Deep-endgame stalls get the same polish attempt as converged paths: a
    // finite nonsingular endpoint sits within the stall step of the last
    // tracked point and Newton recovers it, while divergent stalls fail the
    // movement guard.
    const bool attempted = raw.status == RawStatus::converged || raw.t >= 0.9;
    bool polished = false;
    NewtonOutcome nr;
    if (attempted) {
        nr = newton_polish(C, co, raw.x, cfg, ws, cfg.max_newton_iters);
        polished = nr.converged && nr.moved <= 0.1 * (1.0 + norm_inf(nr.x));
    }
    const VectorXcd& y = polished ? nr.x : raw.x;
    out.point.assign(y.data(), y.data() + y.size());
    VectorXcd F;
    MatrixXcd J;
    C.monomials(y, ws);
    C.values(ws, co, F);
    C.jacobian(ws, co, J);
    out.residual = C.relative_residual(ws, co, F);
    Eigen::JacobiSVD<MatrixXcd> svd(J);
    out.min_sv = svd.singularValues().minCoeff();
    double jnorm = J.cwiseAbs().rowwise().sum().maxCoeff();
    bool rank_deficient = out.min_sv <= cfg.singular_svd_tol * std::max(1.0, jnorm);
    if (!polished) {
        if (out.residual <= cfg.endpoint_residual_tol && (rank_deficient || attempted)) {
            out.status = PathStatus::singular;
            return out;
        }
        // A stall in the deep endgame away from any solution is divergence:
        // generic finite endpoints are nonsingular and correct cleanly.
        out.status = norm_inf(y) > 1e6 || raw.t >= 0.99 ? PathStatus::at_infinity : PathStatus::failed;
        return out;
    }
    for (const Complex& xi : out.point)
        if (std::abs(xi) >= cfg.infinity_threshold) {
            out.status = PathStatus::at_infinity;
            return out;
        }
    if (rank_deficient) {
        out.status = PathStatus::singular;
        return out;
    }
    for (const Complex& xi : out.point)
        if (std::abs(xi) <= cfg.torus_tol) {
            out.status = PathStatus::off_torus;
            return out;
        }
    out.status = PathStatus::nonsingular_torus;
    return out;
}

inline long long bezout_count(const std::vector<int>& degrees, long long cap) {
    long long paths = 1;
    for (int d : degrees) {
        int dk = std::max(1, d);
        if (paths > cap / dk + 1) return cap + 1;  // saturate, avoids overflow
        paths *= dk;
    }
    return paths;
}

// All start solutions of x_k^{d_k} = r_k, enumerated in mixed radix.
inline std::vector<VectorXcd> start_points(const std::vector<int>& degrees, const std::vector<Complex>& roots) {
    const int n = static_cast<int>(degrees.size());
    std::vector<std::vector<Complex>> per_var(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int dk = std::max(1, degrees[static_cast<std::size_t>(k)]);
        double mag = std::pow(std::abs(roots[static_cast<std::size_t>(k)]), 1.0 / dk);
        double arg = std::arg(roots[static_cast<std::size_t>(k)]);
        for (int m = 0; m < dk; ++m)
            per_var[static_cast<std::size_t>(k)].push_back(std::polar(mag, (arg + 6.283185307179586 * m) / dk));
    }
    std::vector<VectorXcd> out;
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
        VectorXcd x(n);
        for (int k = 0; k < n; ++k) x(k) = per_var[static_cast<std::size_t>(k)][static_cast<std::size_t>(digit[static_cast<std::size_t>(k)])];
        out.push_back(std::move(x));
        int k = n - 1;
        while (k >= 0) {
            if (++digit[static_cast<std::size_t>(k)] < static_cast<int>(per_var[static_cast<std::size_t>(k)].size())) break;
            digit[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

template <class Hom>
std::vector<TrackedSolution> run_paths(const Hom& hom, const CompiledSystem& C, const std::vector<VectorXcd>& starts,
                                       const TrackerConfig& cfg) {
    CompiledSystem::Ws ws;
    C.prepare(ws);
    std::vector<TrackedSolution> out;
    out.reserve(starts.size());
    const std::vector<Complex>& co = hom.target_coeffs();
    std::vector<Complex> co_copy(co.begin(), co.end());
    for (const VectorXcd& s : starts) {
        RawPath raw = track_path(hom, s, cfg, ws);
        if constexpr (std::is_same_v<Hom, ParameterHomotopy>) hom.set_t(1.0);
        out.push_back(classify_endpoint(C, co_copy, std::move(raw), cfg, ws));
    }
    return out;
}

inline bool same_point(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    double dist = 0.0, mag = 1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dist = std::max(dist, std::abs(a[i] - b[i]));
        mag = std::max(mag, std::abs(a[i]));
    }
    return dist <= tol * mag;
}

// Representatives of the distinct points in path order.
inline std::vector<std::vector<Complex>> dedup_points(const std::vector<std::vector<Complex>>& pts, double tol) {
    std::vector<std::vector<Complex>> reps;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& r : reps)
            if (same_point(p, r, tol)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(p);
    }
    return reps;
}

}  // namespace detail

// Number of total-degree paths for the reduced score system of A (uniform
// per-equation degree bound: the max column sum). Saturates at cap + 1.
inline long long reduced_bezout(const DesignMatrix& A, long long cap = std::numeric_limits<long long>::max() / 4) {
    int D = 1;
    for (const auto& col : A.columns) {
        int s = 0;
        for (int v : col) s += v;
        D = std::max(D, s);
    }
    std::vector<int> degs(static_cast<std::size_t>(A.d), D);
    return detail::bezout_count(degs, cap);
}

// Total-degree homotopy solve of a square polynomial system. One entry per
// path, in deterministic path order. Throws TooManyPaths over cfg.bezout_cap.
inline std::vector<TrackedSolution> solve_total_degree(const PolynomialSystem& sys, const TrackerConfig& cfg,
                                                       std::uint64_t seed) {
    if (static_cast<int>(sys.equations.size()) != sys.num_vars)
        throw DimensionMismatch("total-degree solve needs a square system");
    detail::CompiledSystem C = detail::CompiledSystem::from_system(sys);
    long long paths = detail::bezout_count(C.degrees, cfg.bezout_cap);
    if (paths > cfg.bezout_cap)
        throw TooManyPaths("total-degree path count exceeds cap " + std::to_string(cfg.bezout_cap));
    std::mt19937_64 rng(detail::mix_seed(seed, 0x7f4a7c15));
    std::vector<Complex> co = detail::balance_rows(C, C.coeffs);
    detail::TotalDegreeHomotopy hom;
    hom.C = &C;
    hom.co = &co;
    hom.gamma = detail::random_unit(rng);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    for (int k = 0; k < C.neq; ++k) hom.roots.push_back(mag(rng) * detail::random_unit(rng));
    std::vector<VectorXcd> starts = detail::start_points(C.degrees, hom.roots);
    return detail::run_paths(hom, C, starts, cfg);
}

// Newton refinement of a point against a square system, classified like a
// tracked endpoint.
inline TrackedSolution newton_refine(const PolynomialSystem& sys, const std::vector<Complex>& point,
                                     const TrackerConfig& cfg = {}) {
    if (static_cast<int>(point.size()) != sys.num_vars) throw DimensionMismatch("point size != num_vars");
    detail::CompiledSystem C = detail::CompiledSystem::from_system(sys);
    detail::CompiledSystem::Ws ws;
    C.prepare(ws);
    detail::RawPath raw;
    raw.x = Eigen::Map<const VectorXcd>(point.data(), static_cast<Eigen::Index>(point.size()));
    raw.status = detail::RawStatus::converged;
    raw.t = 1.0;
    return detail::classify_endpoint(C, C.coeffs, std::move(raw), cfg, ws);
}

namespace detail {

// Shared structure of the reduced score system over all data vectors:
// equation k has one term per design column j with coefficient slot k*n + j.
inline CompiledSystem reduced_structure(const DesignMatrix& A) {
    CompiledSystem C;
    std::vector<std::vector<std::pair<std::vector<int>, int>>> terms(static_cast<std::size_t>(A.d));
    for (int k = 0; k < A.d; ++k)
        for (int j = 0; j < A.n; ++j)
            terms[static_cast<std::size_t>(k)].push_back({A.columns[static_cast<std::size_t>(j)], k * A.n + j});
    C.build(A.d, terms, A.d * A.n);
    // Degrees reflect the full support, keeping the start system independent
    // of numeric coefficient cancellations.
    int D = 1;
    for (const auto& col : A.columns) {
        int s = 0;
        for (int v : col) s += v;
        D = std::max(D, s);
    }
    C.degrees.assign(static_cast<std::size_t>(A.d), D);
    return C;
}

inline std::vector<Complex> reduced_coeffs(const DesignMatrix& A, const Scaling& c, const DataVector& u) {
    std::vector<Complex> co(static_cast<std::size_t>(A.d * A.n));
    for (int k = 0; k < A.d; ++k)
        for (int j = 0; j < A.n; ++j) {
            double w = static_cast<double>(u.u_plus) * A.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                       static_cast<double>(u.b_num[static_cast<std::size_t>(k)]);
            co[static_cast<std::size_t>(k * A.n + j)] = c.weights[static_cast<std::size_t>(j)] * w;
        }
    return co;
}

struct SeedRun {
    std::vector<std::vector<Complex>> accepted;  // distinct nonsingular torus points with f != 0
    long long failed = 0;
    long long paths = 0;
};

// Relative magnitude of f_c at theta; genuine critical points have
// |f| / sum |c_i theta^{a_i}| = 1 / sum |p_i| >= 1/n at valid distributions.
inline double f_relative(const CompiledSystem& Cf, CompiledSystem::Ws& ws, const std::vector<Complex>& theta) {
    VectorXcd x = Eigen::Map<const VectorXcd>(theta.data(), static_cast<Eigen::Index>(theta.size()));
    Cf.monomials(x, ws);
    VectorXcd F;
    Cf.values(ws, Cf.coeffs, F);
    return std::abs(F(0)) / std::max(Cf.scale(ws, Cf.coeffs, 0), 1e-100);
}

inline SeedRun summarize(const std::vector<TrackedSolution>& sols, const CompiledSystem& Cf, CompiledSystem::Ws& fws,
                         const TrackerConfig& cfg) {
    SeedRun run;
    run.paths = static_cast<long long>(sols.size());
    std::vector<std::vector<Complex>> torus;
    for (const TrackedSolution& s : sols) {
        if (s.status == PathStatus::failed) ++run.failed;
        if (s.status != PathStatus::nonsingular_torus) continue;
        if (f_relative(Cf, fws, s.point) <= cfg.spurious_f_tol) continue;  // s = 1/f blows up
        torus.push_back(s.point);
    }
    run.accepted = dedup_points(torus, cfg.dedup_tol);
    return run;
}

}  // namespace detail

// Model polynomial compiled once per (A, c); used for the f != 0 filter.
namespace detail {
inline CompiledSystem compile_model(const DesignMatrix& A, const Scaling& c) {
    PolynomialSystem fs;
    fs.num_vars = A.d;
    fs.equations.push_back(model_polynomial(A, c));
    return CompiledSystem::from_system(fs);
}
}  // namespace detail

// Critical points of the likelihood for given data: reduced-system solve,
// spurious-solution filter, dedup, then refinement of the full (s, theta)
// points against the uneliminated score system. residual and min_sv refer to
// the full system.
inline std::vector<TrackedSolution> score_solutions(const DesignMatrix& A, const Scaling& c, const DataVector& u,
                                                    const TrackerConfig& cfg, std::uint64_t seed) {
    require_nonzero(c);
    detail::CompiledSystem C = detail::reduced_structure(A);
    long long paths = detail::bezout_count(C.degrees, cfg.bezout_cap);
    if (paths > cfg.bezout_cap)
        throw TooManyPaths("reduced score system needs more paths than cap " + std::to_string(cfg.bezout_cap));
    std::vector<Complex> co = detail::balance_rows(C, detail::reduced_coeffs(A, c, u));
    std::mt19937_64 rng(detail::mix_seed(seed, 0x51ed2701));
    detail::TotalDegreeHomotopy hom;
    hom.C = &C;
    hom.co = &co;
    hom.gamma = detail::random_unit(rng);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    for (int k = 0; k < C.neq; ++k) hom.roots.push_back(mag(rng) * detail::random_unit(rng));
    std::vector<TrackedSolution> sols = detail::run_paths(hom, C, detail::start_points(C.degrees, hom.roots), cfg);

    detail::CompiledSystem Cf = detail::compile_model(A, c);
    detail::CompiledSystem::Ws fws;
    Cf.prepare(fws);
    detail::SeedRun run = detail::summarize(sols, Cf, fws, cfg);

    PolynomialSystem full = score_system(A, c, u);
    detail::CompiledSystem Cfull = detail::CompiledSystem::from_system(full);
    detail::CompiledSystem::Ws ws;
    Cfull.prepare(ws);
    std::vector<TrackedSolution> out;
    for (const auto& theta : run.accepted) {
        VectorXcd x = Eigen::Map<const VectorXcd>(theta.data(), static_cast<Eigen::Index>(theta.size()));
        Cf.monomials(x, fws);
        VectorXcd fv;
        Cf.values(fws, Cf.coeffs, fv);
        VectorXcd fullpt(A.d + 1);
        fullpt(0) = 1.0 / fv(0);  // s = 1 / f_c(theta)
        fullpt.tail(A.d) = x;
        detail::RawPath raw;
        raw.x = std::move(fullpt);
        raw.status = detail::RawStatus::converged;
        raw.t = 1.0;
        TrackedSolution refined = detail::classify_endpoint(Cfull, Cfull.coeffs, std::move(raw), cfg, ws);
        out.push_back(std::move(refined));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Faces, toric singularities, principal A-determinant
// ---------------------------------------------------------------------------

// Restriction of the scaled model polynomial to a face, in affine lattice
// coordinates of the face. c is indexed by the design (lex) order of P.
inline Poly face_polynomial(const Polytope& P, const Face& F, const Scaling& c) {
    DesignMatrix A = design_matrix(P);
    if (c.size() != A.n) throw DimensionMismatch("scaling length != number of columns");
    // The full face keeps the design's own translated coordinates; a derived
    // affine basis can inflate degrees there for no benefit.
    const bool full = F.dim == A.d;
    IntMat M = full ? IntMat{} : affine_face_coordinates(F);
    const int k = F.dim;
    Poly f;
    f.nvars = k;
    for (std::size_t j = 0; j < F.lattice_points.size(); ++j) {
        // Locate the face point in the design: translated coords, lex order.
        std::vector<int> key(static_cast<std::size_t>(A.d));
        for (int i = 0; i < A.d; ++i)
            key[static_cast<std::size_t>(i)] =
                static_cast<int>(F.lattice_points[j][static_cast<std::size_t>(i)] + A.shift[static_cast<std::size_t>(i)]);
        auto it = std::lower_bound(A.columns.begin(), A.columns.end(), key);
        if (it == A.columns.end() || *it != key) throw DimensionMismatch("face lattice point missing from design");
        int idx = static_cast<int>(it - A.columns.begin());
        Term t;
        t.exp.assign(static_cast<std::size_t>(k), 0);
        for (int r = 0; r < k; ++r)
            t.exp[static_cast<std::size_t>(r)] =
                full ? key[static_cast<std::size_t>(r)] : static_cast<int>(M[static_cast<std::size_t>(r)][j]);
        t.coeff = c.weights[static_cast<std::size_t>(idx)];
        f.terms.push_back(std::move(t));
    }
    std::sort(f.terms.begin(), f.terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    return f;
}

// Whether the face's restricted polynomial has a singular point on the torus
// (equivalently, the face discriminant vanishes at c). Solves a square system
// of random combinations of {f, t_1 df/dt_1, ..., t_k df/dt_k} and certifies
// candidates by the values of all k+1 generators. Throws TooManyPaths when
// the face needs more than cfg.adet_bezout_cap paths.
inline bool has_toric_singularity(const Polytope& P, const Face& F, const Scaling& c, const TrackerConfig& cfg) {
    const int k = F.dim;
    const int m = static_cast<int>(F.lattice_points.size());
    // A face whose lattice points are affinely independent (simplex with no
    // extra points) supports no toric singularity: the homogenized coefficient
    // matrix of {f, t df/dt} has trivial kernel.
    if (m == k + 1 || k == 0) return false;
    Poly f = face_polynomial(P, F, c);

    // Generators: G_0 = f, G_j = t_j df/dt_j (same support, no denominators).
    std::vector<Poly> gens(static_cast<std::size_t>(k + 1));
    gens[0] = f;
    for (int j = 1; j <= k; ++j) {
        Poly g;
        g.nvars = k;
        for (const Term& t : f.terms) {
            if (t.exp[static_cast<std::size_t>(j - 1)] == 0) continue;
            Term s = t;
            s.coeff *= static_cast<double>(t.exp[static_cast<std::size_t>(j - 1)]);
            g.terms.push_back(std::move(s));
        }
        gens[static_cast<std::size_t>(j)] = std::move(g);
    }

    std::mt19937_64 rng(detail::mix_seed(cfg.base_seed, 0xadE7 + static_cast<std::uint64_t>(m) * 131 + static_cast<std::uint64_t>(k)));
    PolynomialSystem W;
    W.num_vars = k;
    for (int i = 0; i < k; ++i) {
        std::map<std::vector<int>, Complex> acc;
        for (int j = 0; j <= k; ++j) {
            Complex lam = detail::random_unit(rng);
            for (const Term& t : gens[static_cast<std::size_t>(j)].terms) acc[t.exp] += lam * t.coeff;
        }
        Poly w;
        w.nvars = k;
        for (auto& [e, v] : acc) w.terms.push_back({e, v});
        W.equations.push_back(std::move(w));
    }
    TrackerConfig sub = cfg;
    sub.bezout_cap = cfg.adet_bezout_cap;
    std::vector<TrackedSolution> sols = solve_total_degree(W, sub, detail::mix_seed(cfg.base_seed, 0x5ee0));

    // Certify candidates by all generator values; accept singular endpoints
    // too (degenerate critical points still witness the vanishing).
    std::vector<detail::CompiledSystem> CG;
    std::vector<detail::CompiledSystem::Ws> GW(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) {
        PolynomialSystem one;
        one.num_vars = k;
        one.equations.push_back(gens[static_cast<std::size_t>(j)]);
        CG.push_back(detail::CompiledSystem::from_system(one));
        CG.back().prepare(GW[static_cast<std::size_t>(j)]);
    }
    for (const TrackedSolution& s : sols) {
        if (s.status != PathStatus::nonsingular_torus && s.status != PathStatus::singular) continue;
        bool torus = true;
        for (const Complex& xi : s.point)
            if (std::abs(xi) <= cfg.torus_tol) {
                torus = false;
                break;
            }
        if (!torus) continue;
        VectorXcd x = Eigen::Map<const VectorXcd>(s.point.data(), static_cast<Eigen::Index>(s.point.size()));
        bool all_small = true;
        for (int j = 0; j <= k && all_small; ++j) {
            CG[static_cast<std::size_t>(j)].monomials(x, GW[static_cast<std::size_t>(j)]);
            VectorXcd v;
            CG[static_cast<std::size_t>(j)].values(GW[static_cast<std::size_t>(j)], CG[static_cast<std::size_t>(j)].coeffs, v);
            double scale = CG[static_cast<std::size_t>(j)].scale(GW[static_cast<std::size_t>(j)], CG[static_cast<std::size_t>(j)].coeffs, 0);
            if (std::abs(v(0)) > cfg.adet_tol * std::max(scale, 1e-100)) all_small = false;
        }
        if (all_small) return true;
    }
    return false;
}

// E_A(c) = 0 iff some face's restricted polynomial is toric-singular. Faces
// are scanned by increasing dimension; a face skipped by the path cap leaves
// the verdict uncertain unless a later face already witnesses vanishing.
inline EAResult principal_A_determinant_vanishes(const Polytope& P, const Scaling& c, const TrackerConfig& cfg) {
    EAResult out;
    for (const Face& F : P.faces()) {
        try {
            if (has_toric_singularity(P, F, c, cfg)) {
                out.vanishes = true;
                out.witness = face_id(F);
                return out;
            }
        } catch (const TooManyPaths&) {
            out.certain = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// ML degree
// ---------------------------------------------------------------------------

namespace detail {

inline SeedRun solve_seed_full(const CompiledSystem& C, const std::vector<Complex>& co, const CompiledSystem& Cf,
                               CompiledSystem::Ws& fws, const TrackerConfig& cfg, std::mt19937_64& rng) {
    std::vector<Complex> cob = balance_rows(C, co);
    TotalDegreeHomotopy hom;
    hom.C = &C;
    hom.co = &cob;
    hom.gamma = random_unit(rng);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    for (int k = 0; k < C.neq; ++k) hom.roots.push_back(mag(rng) * random_unit(rng));
    std::vector<TrackedSolution> sols = run_paths(hom, C, start_points(C.degrees, hom.roots), cfg);
    return summarize(sols, Cf, fws, cfg);
}

// Coefficient bridge u(t) = (1-t) u0 + t u1 + t(1-t) gamma w between two data
// vectors; coefficients of the reduced system are linear in u, so quadratic
// in t.
inline ParameterHomotopy make_bridge(const CompiledSystem& C, const DesignMatrix& A, const Scaling& c,
                                     const DataVector& u0, const DataVector& u1, std::mt19937_64& rng) {
    const int d = A.d, n = A.n;
    std::vector<Complex> ua(static_cast<std::size_t>(n)), ub(static_cast<std::size_t>(n)), uc(static_cast<std::size_t>(n));
    Complex gamma = random_unit(rng);
    for (int i = 0; i < n; ++i) {
        Complex w = 250.0 * random_unit(rng);
        ua[static_cast<std::size_t>(i)] = static_cast<double>(u0.u[static_cast<std::size_t>(i)]);
        ub[static_cast<std::size_t>(i)] = static_cast<double>(u1.u[static_cast<std::size_t>(i)] - u0.u[static_cast<std::size_t>(i)]) + gamma * w;
        uc[static_cast<std::size_t>(i)] = -gamma * w;
    }
    auto msum = [&](const std::vector<Complex>& v) {
        Complex s(0.0, 0.0);
        for (const Complex& x : v) s += x;
        return s;
    };
    Complex sa = msum(ua), sb = msum(ub), sc = msum(uc);
    ParameterHomotopy hom;
    hom.C = &C;
    hom.a0.resize(static_cast<std::size_t>(d * n));
    hom.a1.resize(static_cast<std::size_t>(d * n));
    hom.a2.resize(static_cast<std::size_t>(d * n));
    for (int k = 0; k < d; ++k) {
        Complex pa(0.0, 0.0), pb(0.0, 0.0), pc(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            double aki = A.columns[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            pa += aki * ua[static_cast<std::size_t>(i)];
            pb += aki * ub[static_cast<std::size_t>(i)];
            pc += aki * uc[static_cast<std::size_t>(i)];
        }
        for (int j = 0; j < n; ++j) {
            double akj = A.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            const Complex& cj = c.weights[static_cast<std::size_t>(j)];
            hom.a0[static_cast<std::size_t>(k * n + j)] = cj * (akj * sa - pa);
            hom.a1[static_cast<std::size_t>(k * n + j)] = cj * (akj * sb - pb);
            hom.a2[static_cast<std::size_t>(k * n + j)] = cj * (akj * sc - pc);
        }
    }
    return hom;
}

}  // namespace detail

// ML degree by homotopy continuation over cfg.seeds independent data vectors.
// Seed counts are reconciled by majority (ties resolved upward: path failures
// only ever lose solutions); disagreement or a >1% failure rate clears
// `consistent`. When the first seed tracks every path successfully and the
// system is large, later seeds reuse its solutions through a coefficient
// parameter homotopy, with a full fallback on any mismatch.
inline MLReport ml_degree(const Polytope& P, const Scaling& c, const TrackerConfig& cfg = {}) {
    DesignMatrix A = design_matrix(P);
    if (c.size() != A.n) throw DimensionMismatch("scaling length != number of lattice points");
    MLReport rep;
    rep.degree = P.normalized_volume().convert_to<long long>();

    detail::CompiledSystem C = detail::reduced_structure(A);
    long long paths = detail::bezout_count(C.degrees, cfg.bezout_cap);
    if (paths > cfg.bezout_cap)
        throw TooManyPaths("reduced score system needs more paths than cap " + std::to_string(cfg.bezout_cap));
    detail::CompiledSystem Cf = detail::compile_model(A, c);
    detail::CompiledSystem::Ws fws;
    Cf.prepare(fws);

    std::vector<detail::SeedRun> runs;
    DataVector u_first;
    bool bridge_ok = false;
    for (int si = 0; si < cfg.seeds; ++si) {
        std::mt19937_64 rng(detail::mix_seed(cfg.base_seed, static_cast<std::uint64_t>(si)));
        DataVector u = DataVector::from_counts(A, random_counts(A.n, rng));
        std::vector<Complex> co = detail::reduced_coeffs(A, c, u);
        if (si == 0) {
            runs.push_back(detail::solve_seed_full(C, co, Cf, fws, cfg, rng));
            u_first = u;
            bridge_ok = runs[0].failed == 0 && paths > 4000 && !runs[0].accepted.empty();
            continue;
        }
        bool done = false;
        if (bridge_ok) {
            detail::ParameterHomotopy hom = detail::make_bridge(C, A, c, u_first, u, rng);
            std::vector<VectorXcd> starts;
            for (const auto& p : runs[0].accepted)
                starts.push_back(Eigen::Map<const VectorXcd>(p.data(), static_cast<Eigen::Index>(p.size())));
            std::vector<TrackedSolution> sols = detail::run_paths(hom, C, starts, cfg);
            detail::SeedRun run = detail::summarize(sols, Cf, fws, cfg);
            // The bridge must preserve every solution; anything else falls
            // back to a full solve for this seed.
            if (run.failed == 0 && static_cast<long long>(run.accepted.size()) == static_cast<long long>(starts.size())) {
                run.paths = static_cast<long long>(starts.size());
                runs.push_back(std::move(run));
                done = true;
            }
        }
        if (!done) runs.push_back(detail::solve_seed_full(C, co, Cf, fws, cfg, rng));
    }

    std::map<long long, int> freq;
    for (const detail::SeedRun& r : runs) {
        long long cnt = static_cast<long long>(r.accepted.size());
        rep.per_seed_counts.push_back(cnt);
        ++freq[cnt];
    }
    long long best = 0;
    int best_freq = 0;
    for (const auto& [cnt, fr] : freq)
        if (fr > best_freq || (fr == best_freq && cnt > best)) {
            best = cnt;
            best_freq = fr;
        }
    rep.ml_degree = best;
    rep.drop = rep.degree - rep.ml_degree;
    rep.consistent = static_cast<int>(freq.size()) == 1;
    for (const detail::SeedRun& r : runs)
        if (r.paths > 0 && static_cast<double>(r.failed) > 0.01 * static_cast<double>(r.paths)) rep.consistent = false;

    if (rep.drop > 0 && P.dim() <= cfg.witness_max_dim) {
        EAResult ea = principal_A_determinant_vanishes(P, c, cfg);
        rep.drop_witness = ea.witness;
        rep.witness_complete = ea.certain;
    }
    return rep;
}

// Same computation for a design matrix given directly: the polytope is the
// convex hull of the columns.
inline MLReport ml_degree(const DesignMatrix& A, const Scaling& c, const TrackerConfig& cfg = {}) {
    std::vector<IntVec> pts;
    for (const auto& col : A.columns) {
        IntVec v;
        for (int x : col) v.push_back(x);
        pts.push_back(std::move(v));
    }
    return ml_degree(Polytope::from_points(pts), c, cfg);
}

// ---------------------------------------------------------------------------
// Named closed-form discriminants
// ---------------------------------------------------------------------------

namespace detail {

struct DiscriminantTerm {
    double coeff;
    std::vector<int> exp;
};

// Monomial expansions in design (lex) order of the scaling weights.
inline const std::vector<DiscriminantTerm>& discriminant_terms(const std::string& name) {
    // P0: c = (c000, c111, c112, c121, c211); Delta = c111^4 - 256 c000 c112 c121 c211.
    static const std::vector<DiscriminantTerm> p0 = {
        {1.0, {0, 4, 0, 0, 0}},
        {-256.0, {1, 0, 1, 1, 1}},
    };
    // P132 full: c = (c001, c010, c111, c112, c121, c211).
    static const std::vector<DiscriminantTerm> p132 = {
        {1.0, {0, 0, 6, 0, 0, 0}},      {54.0, {0, 1, 3, 1, 0, 1}},     {729.0, {0, 2, 0, 2, 0, 2}},
        {54.0, {1, 0, 3, 0, 1, 1}},     {-1458.0, {1, 1, 0, 1, 1, 2}},  {729.0, {2, 0, 0, 0, 2, 2}},
    };
    // P132 facet Gamma_0: c = (c001, c010, c112, c121); Delta = c010 c112 - c001 c121.
    static const std::vector<DiscriminantTerm> p132g0 = {
        {1.0, {0, 1, 1, 0}},
        {-1.0, {1, 0, 0, 1}},
    };
    // cross(2): c = (c01, c10, c11, c12, c21).
    static const std::vector<DiscriminantTerm> cross2 = {
        {1.0, {1, 1, 4, 0, 0}},   {-8.0, {2, 1, 2, 0, 1}},  {16.0, {3, 1, 0, 0, 2}},
        {-8.0, {1, 2, 2, 1, 0}},  {-32.0, {2, 2, 0, 1, 1}}, {16.0, {1, 3, 0, 2, 0}},
    };
    if (name == "P0") return p0;
    if (name == "P132-full") return p132;
    if (name == "P132-gamma0") return p132g0;
    if (name == "cross2") return cross2;
    throw UnknownName("no closed-form discriminant named '" + name + "'");
}

}  // namespace detail

// Closed-form face discriminants for a few named models, evaluated at a
// scaling given in design (lex) order.
inline Complex closed_form_discriminant(const std::string& name, const Scaling& c) {
    const auto& terms = detail::discriminant_terms(name);
    Complex val(0.0, 0.0);
    for (const auto& t : terms) {
        if (static_cast<int>(t.exp.size()) != c.size()) throw DimensionMismatch("scaling length mismatch for " + name);
        Complex m(t.coeff, 0.0);
        for (std::size_t j = 0; j < t.exp.size(); ++j)
            for (int e = 0; e < t.exp[j]; ++e) m *= c.weights[j];
        val += m;
    }
    return val;
}

// Magnitude scale of the same expansion (sum of |term|), for relative
// vanishing thresholds.
inline double closed_form_discriminant_scale(const std::string& name, const Scaling& c) {
    const auto& terms = detail::discriminant_terms(name);
    double s = 0.0;
    for (const auto& t : terms) {
        double m = std::abs(t.coeff);
        for (std::size_t j = 0; j < t.exp.size(); ++j)
            for (int e = 0; e < t.exp[j]; ++e) m *= std::abs(c.weights[j]);
        s += m;
    }
    return std::max(s, 1e-100);
}

}  // namespace toriml
