// Permutation-invariant codes over the Dicke basis and the (g, m, delta)
// code family construction.
//
// A code is a pair of codewords |c0> = sum_j alpha_j |D^n_j| and
// |c1> = sum_j beta_j |D^n_j> with exact radical coefficients. Coefficient
// vectors are stored dense (n+1 entries); n stays <= ~100 in all intended use.
#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "piqec/radical_sum.hpp"

namespace piqec {

struct PICode {
    long n = 0;
    std::vector<Radical> alpha;  // n+1 entries
    std::vector<Radical> beta;   // n+1 entries
    std::string label;
    bool normalized = false;
};

struct GmdParams {
    long g = 1;
    long m = 1;
    long delta = 0;

    long n() const { return 2 * g * m + delta + 1; }
};

// Exact values of (sum alpha_j beta_j, sum alpha_j^2 - 1, sum beta_j^2 - 1),
// i.e. the residuals of conditions (C1) and (C2).
inline std::tuple<RadicalSum, RadicalSum, RadicalSum> code_inner_products(const PICode& code) {
    RadicalSum cross, norm_a, norm_b;
    for (long j = 0; j <= code.n; ++j) {
        cross.add(code.alpha[j] * code.beta[j]);
        norm_a.add(code.alpha[j] * code.alpha[j]);
        norm_b.add(code.beta[j] * code.beta[j]);
    }
    norm_a -= Radical(Rational(1));
    norm_b -= Radical(Rational(1));
    return {cross, norm_a, norm_b};
}

// gamma^2 * b_l^2 of Construction 1, as an exact rational.
inline Rational gmdelta_f_squared(const GmdParams& p, long l) {
    const long n = p.n();
    Rational ng(n, p.g);
    ng.canonicalize();
    Rational n2g(n, 2 * p.g);
    n2g.canonicalize();
    Rational bl2 = Rational(binom_int(p.m, l)) / binom_gen(ng - l, p.m + 1);
    bl2.canonicalize();
    Rational gamma2 = binom_gen(n2g, p.m) * Rational(n - 2 * p.g * p.m) / Rational(p.g * (p.m + 1));
    gamma2.canonicalize();
    Rational f2 = gamma2 * bl2;
    f2.canonicalize();
    return f2;
}

// Construction 1: the (g, m, delta) code on n = 2gm + delta + 1 qubits.
// alpha_{gl} = gamma b_l (l even), alpha_{n-gl} = gamma b_l (l odd);
// beta_{gl} = gamma b_l (l odd), beta_{n-gl} = -gamma b_l (l even).
inline PICode construct_gmdelta(const GmdParams& p) {
    if (p.g < 1 || p.m < 1 || p.delta < 0)
        throw std::invalid_argument("construct_gmdelta: need g >= 1, m >= 1, delta >= 0");
    const long n = p.n();
    PICode code;
    code.n = n;
    code.alpha.assign(n + 1, Radical());
    code.beta.assign(n + 1, Radical());
    code.label = "Q_{" + std::to_string(p.g) + "," + std::to_string(p.m) + "," +
                 std::to_string(p.delta) + "}";
    for (long l = 0; l <= p.m; ++l) {
        Rational f2 = gmdelta_f_squared(p, l);
        if (f2 < 0)
            throw std::runtime_error("construct_gmdelta: negative radicand (internal error)");
        Radical f = sqrt_canonical(f2);
        if (l % 2 == 0) {
            code.alpha[p.g * l] = f;
            code.beta[n - p.g * l] = -f;
        } else {
            code.alpha[n - p.g * l] = f;
            code.beta[p.g * l] = f;
        }
    }
    auto [c1, c2a, c2b] = code_inner_products(code);
    if (!c1.is_zero() || !c2a.is_zero() || !c2b.is_zero())
        throw std::runtime_error("construct_gmdelta: normalization check failed");
    code.normalized = true;
    return code;
}

// Pollatsek-Ruskai form: |c0> = sum_l q_{2l} sqrt(C(n,2l)) |D^n_{2l}>,
// |c1> = sum_l q_{n-2l-1} sqrt(C(n,2l+1)) |D^n_{2l+1}>, then each codeword
// is rescaled by its exact inverse norm. q entries indexed by even 0..n-1.
inline PICode construct_pr_code(long n, const std::vector<Radical>& q,
                                const std::string& label = "PR") {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("construct_pr_code: n must be odd");
    const long half = (n + 1) / 2;
    if (static_cast<long>(q.size()) != half)
        throw std::invalid_argument("construct_pr_code: q must have (n+1)/2 entries");
    PICode code;
    code.n = n;
    code.label = label;
    code.alpha.assign(n + 1, Radical());
    code.beta.assign(n + 1, Radical());
    for (long l = 0; 2 * l <= n - 1; ++l) {
        code.alpha[2 * l] = q[l] * sqrt_canonical(Rational(binom_int(n, 2 * l)));
        // beta_{2l+1} = q_{n-2l-1} sqrt(C(n,2l+1)); n-2l-1 is even
        code.beta[2 * l + 1] =
            q[(n - 2 * l - 1) / 2] * sqrt_canonical(Rational(binom_int(n, 2 * l + 1)));
    }
    Rational norm_a(0), norm_b(0);
    for (long j = 0; j <= n; ++j) {
        norm_a += code.alpha[j].squared();
        norm_b += code.beta[j].squared();
    }
    norm_a.canonicalize();
    norm_b.canonicalize();
    if (norm_a == 0 || norm_b == 0)
        throw std::invalid_argument("construct_pr_code: zero codeword");
    Radical inv_a = sqrt_canonical(Rational(1) / norm_a);
    Radical inv_b = sqrt_canonical(Rational(1) / norm_b);
    for (long j = 0; j <= n; ++j) {
        code.alpha[j] = code.alpha[j] * inv_a;
        code.beta[j] = code.beta[j] * inv_b;
    }
    auto [c1, c2a, c2b] = code_inner_products(code);
    if (!c1.is_zero() || !c2a.is_zero() || !c2b.is_zero())
        throw std::runtime_error("construct_pr_code: normalization check failed");
    code.normalized = true;
    return code;
}

inline PICode construct_pr_code(long n, const std::vector<Rational>& q,
                                const std::string& label = "PR") {
    std::vector<Radical> rq;
    rq.reserve(q.size());
    for (const auto& v : q) rq.emplace_back(v);
    return construct_pr_code(n, rq, label);
}

}  // namespace piqec
