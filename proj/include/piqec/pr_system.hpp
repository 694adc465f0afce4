// Generalized Pollatsek-Ruskai quadratic systems (D1)-(D3), exact residual
// evaluation, and a damped Gauss-Newton solver with random restarts for
// discovering codes numerically.
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "piqec/radical_sum.hpp"

namespace piqec {

// One homogeneous quadratic in the variables q_0, q_2, ..., q_{n-1}.
// Monomials are keyed by the (unordered) variable index pair; variables are
// addressed by slot = index/2.
struct QuadraticEquation {
    std::string condition;  // "D1", "D2", "D3"
    long a = 0;
    long b = 0;
    std::map<std::pair<long, long>, Int> monomials;  // (slot_i <= slot_j) -> coefficient

    void add_monomial(long slot_i, long slot_j, const Int& coef) {
        if (coef == 0) return;
        if (slot_i > slot_j) std::swap(slot_i, slot_j);
        auto key = std::make_pair(slot_i, slot_j);
        auto it = monomials.find(key);
        if (it == monomials.end()) {
            monomials.emplace(key, coef);
        } else {
            it->second += coef;
            if (it->second == 0) monomials.erase(it);
        }
    }

    // Divides out the integer content of the coefficients.
    QuadraticEquation normalized() const {
        QuadraticEquation out = *this;
        Int g(0);
        for (const auto& [key, c] : out.monomials) {
            Int a_abs = abs(c);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a_abs.get_mpz_t());
        }
        if (g > 1)
            for (auto& [key, c] : out.monomials) c /= g;
        return out;
    }
};

struct QuadraticSystem {
    long n = 0;
    long t = 0;
    std::vector<QuadraticEquation> equations;

    long num_vars() const { return (n + 1) / 2; }  // q_0, q_2, ..., q_{n-1}
};

// Builds the (D1)-(D3) system for odd n and t errors. Index-out-of-range
// q terms are dropped; (D2)/(D3) pairs with a+b = 2t are excluded as
// identically zero.
inline QuadraticSystem generate_system(long n, long t) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("generate_system: n must be odd");
    if (t < 0 || n < 2 * t + 1) throw std::invalid_argument("generate_system: need n >= 2t+1");
    QuadraticSystem sys;
    sys.n = n;
    sys.t = t;
    const long kmax = (n - 1) / 2 - t;
    auto slot_ok = [&](long idx) { return idx >= 0 && idx <= n - 1 && idx % 2 == 0; };
    // (D1): even a, odd b, a,b <= 2t
    for (long a = 0; a <= 2 * t; a += 2) {
        for (long b = 1; b <= 2 * t; b += 2) {
            QuadraticEquation eq{"D1", a, b, {}};
            for (long k = 0; k <= kmax; ++k) {
                long i = 2 * k + a, j = n - 2 * k - b;
                if (!slot_ok(i) || !slot_ok(j)) continue;
                eq.add_monomial(i / 2, j / 2, binom_int(n - 2 * t, 2 * k));
            }
            sys.equations.push_back(std::move(eq));
        }
    }
    // (D2): even a <= b, a + b < 2t
    for (long a = 0; a < 2 * t; a += 2) {
        for (long b = a; a + b < 2 * t; b += 2) {
            QuadraticEquation eq{"D2", a, b, {}};
            for (long k = 0; k <= kmax; ++k) {
                Int c = binom_int(n - 2 * t, 2 * k);
                long i1 = 2 * k + a, j1 = 2 * k + b;
                long i2 = 2 * k + 2 * t - a, j2 = 2 * k + 2 * t - b;
                if (slot_ok(i1) && slot_ok(j1)) eq.add_monomial(i1 / 2, j1 / 2, c);
                if (slot_ok(i2) && slot_ok(j2)) eq.add_monomial(i2 / 2, j2 / 2, -c);
            }
            sys.equations.push_back(std::move(eq));
        }
    }
    // (D3): odd a <= b, a + b < 2t
    for (long a = 1; a < 2 * t; a += 2) {
        for (long b = a; a + b < 2 * t; b += 2) {
            QuadraticEquation eq{"D3", a, b, {}};
            for (long k = 0; k <= kmax; ++k) {
                Int c = binom_int(n - 2 * t, 2 * k);
                long i1 = n - 2 * k - a, j1 = n - 2 * k - b;
                long i2 = n - 2 * k - 2 * t + a, j2 = n - 2 * k - 2 * t + b;
                if (slot_ok(i1) && slot_ok(j1)) eq.add_monomial(i1 / 2, j1 / 2, c);
                if (slot_ok(i2) && slot_ok(j2)) eq.add_monomial(i2 / 2, j2 / 2, -c);
            }
            sys.equations.push_back(std::move(eq));
        }
    }
    return sys;
}

// Exact residual of each equation at a rational point.
inline std::vector<Rational> residual(const QuadraticSystem& sys,
                                      const std::vector<Rational>& q) {
    if (static_cast<long>(q.size()) != sys.num_vars())
        throw std::invalid_argument("residual: q length mismatch");
    std::vector<Rational> out;
    out.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) {
        Rational v(0);
        for (const auto& [key, c] : eq.monomials) v += Rational(c) * q[key.first] * q[key.second];
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

// Exact residual at a radical-valued point (sums of radicals).
inline std::vector<RadicalSum> residual_radical(const QuadraticSystem& sys,
                                                const std::vector<Radical>& q) {
    if (static_cast<long>(q.size()) != sys.num_vars())
        throw std::invalid_argument("residual_radical: q length mismatch");
    std::vector<RadicalSum> out;
    out.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) {
        RadicalSum v;
        for (const auto& [key, c] : eq.monomials)
            v.add(Rational(c) * (q[key.first] * q[key.second]));
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<double> residual_double(const QuadraticSystem& sys,
                                           const std::vector<double>& q) {
    std::vector<double> out;
    out.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) {
        double v = 0;
        for (const auto& [key, c] : eq.monomials)
            v += c.get_d() * q[key.first] * q[key.second];
        out.push_back(v);
    }
    return out;
}

struct SolveConfig {
    int restarts = 100;
    unsigned seed = 1;
    long gauge_slot = 0;  // variable pinned to 1 (slot index, default q_0)
    double tolerance = 1e-12;
    int max_iterations = 300;
};

struct PRSolution {
    std::vector<double> q;             // all slots, gauge included
    double max_residual = 0;           // exact-rational-certified magnitude
    std::vector<Rational> q_rational;  // rationalized coordinates backing the certificate
};

namespace detail {

// Dense Gaussian elimination with partial pivoting; returns false if singular.
inline bool solve_linear(std::vector<double>& A, std::vector<double>& rhs, int dim) {
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(A[r * dim + col]) > std::abs(A[piv * dim + col])) piv = r;
        if (std::abs(A[piv * dim + col]) < 1e-14) return false;
        if (piv != col) {
            for (int c = 0; c < dim; ++c) std::swap(A[col * dim + c], A[piv * dim + c]);
            std::swap(rhs[col], rhs[piv]);
        }
        for (int r = col + 1; r < dim; ++r) {
            double f = A[r * dim + col] / A[col * dim + col];
            if (f == 0) continue;
            for (int c = col; c < dim; ++c) A[r * dim + c] -= f * A[col * dim + c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (int r = dim - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int c = r + 1; c < dim; ++c) s -= A[r * dim + c] * rhs[c];
        rhs[r] = s / A[r * dim + r];
    }
    return true;
}

// Worker-thread cap: PIQEC_THREADS if set, else hardware concurrency.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("PIQEC_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Continued-fraction rational approximation with bounded denominator.
inline Rational rationalize(double x, unsigned long max_den = 1'000'000'000UL) {
    if (x == 0) return Rational(0);
    bool neg = x < 0;
    double v = std::abs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 < 0 || static_cast<unsigned long long>(q2) > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rational r(Int(std::to_string(p1)), Int(std::to_string(q1)));
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

}  // namespace detail

// Levenberg-Marquardt minimization of the residual with the gauge variable
// pinned to 1 and random restarts. Solutions are deduplicated up to global
// sign and 1e-6 proximity; returned residuals are certified by exact
// rational re-evaluation of the rationalized point. Deterministic given the
// seed, independent of thread scheduling (restarts are seeded individually).
inline std::vector<PRSolution> solve(const QuadraticSystem& sys, const SolveConfig& cfg) {
    if (cfg.restarts < 1 || cfg.tolerance <= 0)
        throw std::invalid_argument("solve: invalid config");
    const long nv = sys.num_vars();
    const int dim = static_cast<int>(nv) - 1;  // free variables (gauge pinned)
    const int ne = static_cast<int>(sys.equations.size());
    if (ne == 0) return {};

    auto unpack = [&](const std::vector<double>& free) {
        std::vector<double> q(nv);
        int k = 0;
        for (long i = 0; i < nv; ++i) q[i] = (i == cfg.gauge_slot) ? 1.0 : free[k++];
        return q;
    };

    auto run_restart = [&](unsigned seed) -> std::optional<std::vector<double>> {
        std::mt19937 rng(seed);
        std::normal_distribution<double> dist(0.0, 0.5);
        std::vector<double> free(dim);
        for (auto& v : free) v = dist(rng);
        double lambda = 1e-3;
        for (int iter = 0; iter < cfg.max_iterations; ++iter) {
            std::vector<double> q = unpack(free);
            std::vector<double> r = residual_double(sys, q);
            double rnorm2 = 0;
            for (double v : r) rnorm2 += v * v;
            if (std::sqrt(rnorm2) < 1e-15) break;
            // Jacobian wrt free variables
            std::vector<double> J(ne * dim, 0.0);
            for (int e = 0; e < ne; ++e) {
                for (const auto& [key, c] : sys.equations[e].monomials) {
                    double cd = c.get_d();
                    auto accum = [&](long var, long other) {
                        if (var == cfg.gauge_slot) return;
                        int col = static_cast<int>(var > cfg.gauge_slot ? var - 1 : var);
                        J[e * dim + col] += cd * q[other];
                    };
                    accum(key.first, key.second);
                    accum(key.second, key.first);
                }
            }
            // normal equations with LM damping
            std::vector<double> A(dim * dim, 0.0), g(dim, 0.0);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    double s = 0;
                    for (int e = 0; e < ne; ++e) s += J[e * dim + i] * J[e * dim + j];
                    A[i * dim + j] = s;
                }
                double s = 0;
                for (int e = 0; e < ne; ++e) s += J[e * dim + i] * r[e];
                g[i] = -s;
            }
            bool stepped = false;
            for (int attempt = 0; attempt < 20; ++attempt) {
                std::vector<double> Ad = A;
                for (int i = 0; i < dim; ++i) Ad[i * dim + i] += lambda * (A[i * dim + i] + 1e-12);
                std::vector<double> step = g;
                if (!detail::solve_linear(Ad, step, dim)) {
                    lambda *= 10;
                    continue;
                }
                std::vector<double> trial = free;
                for (int i = 0; i < dim; ++i) trial[i] += step[i];
                std::vector<double> rt = residual_double(sys, unpack(trial));
                double tnorm2 = 0;
                for (double v : rt) tnorm2 += v * v;
                if (tnorm2 < rnorm2) {
                    free = std::move(trial);
                    lambda = std::max(lambda * 0.3, 1e-12);
                    stepped = true;
                    break;
                }
                lambda *= 10;
            }
            if (!stepped) break;
        }
        std::vector<double> q = unpack(free);
        double worst = 0;
        for (double v : residual_double(sys, q)) worst = std::max(worst, std::abs(v));
        if (!std::isfinite(worst) || worst >= cfg.tolerance) return std::nullopt;
        // reject the all-zero ray and wild exits
        double mag = 0;
        for (double v : q) mag = std::max(mag, std::abs(v));
        if (mag > 1e6) return std::nullopt;
        return q;
    };

    std::vector<PRSolution> solutions;
    auto canonical_sign = [&](std::vector<double>& q) {
        double lead = 0;
        for (double v : q)
            if (std::abs(v) > std::abs(lead)) lead = v;
        if (lead < 0)
            for (auto& v : q) v = -v;
    };
    // Restarts run in parallel; candidates are merged in restart order so the
    // output does not depend on scheduling.
    std::vector<std::optional<std::vector<double>>> candidates(cfg.restarts);
    {
        std::atomic<int> next{0};
        unsigned workers = std::min<unsigned>(detail::thread_cap(),
                                              static_cast<unsigned>(cfg.restarts));
        auto work = [&] {
            for (int rs = next.fetch_add(1); rs < cfg.restarts; rs = next.fetch_add(1))
                candidates[rs] = run_restart(cfg.seed + static_cast<unsigned>(rs) * 7919u);
        };
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
    }
    for (int rs = 0; rs < cfg.restarts; ++rs) {
        auto& maybe = candidates[rs];
        if (!maybe) continue;
        std::vector<double> q = *maybe;
        canonical_sign(q);
        bool dup = false;
        for (const auto& s : solutions) {
            double d = 0;
            for (long i = 0; i < nv; ++i) d = std::max(d, std::abs(s.q[i] - q[i]));
            if (d < 1e-6) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        PRSolution sol;
        sol.q = q;
        sol.q_rational.reserve(nv);
        for (double v : q) sol.q_rational.push_back(detail::rationalize(v));
        double worst = 0;
        for (const auto& rv : residual(sys, sol.q_rational))
            worst = std::max(worst, std::abs(rv.get_d()));
        sol.max_residual = worst;
        if (sol.max_residual < cfg.tolerance) solutions.push_back(std::move(sol));
    }
    return solutions;
}

// Tries to lift a numeric solution to exact radicals: each coordinate is
// matched to sign * sqrt(rational) with a small-denominator rational, then
// the whole point is certified by exact residual evaluation. Returns the
// radical point only if every equation vanishes identically.
inline std::optional<std::vector<Radical>> recognize_radical_solution(
    const QuadraticSystem& sys, const std::vector<double>& q,
    unsigned long max_den = 100'000) {
    std::vector<Radical> out;
    out.reserve(q.size());
    for (double v : q) {
        if (std::abs(v) < 1e-11) {
            out.emplace_back();
            continue;
        }
        Rational sq = detail::rationalize(v * v, max_den);
        if (sq <= 0 || std::abs(sq.get_d() - v * v) > 1e-9 * v * v) return std::nullopt;
        Radical r = sqrt_canonical(sq);
        if (v < 0) r = -r;
        out.push_back(r);
    }
    for (const auto& rs : residual_radical(sys, out))
        if (!rs.is_zero()) return std::nullopt;
    return out;
}

}  // namespace piqec
