// Amplitude-damping analysis for Construction-1 codes: exact polynomials in
// the decay probability p for Dicke-state inner products under truncated
// Kraus operators, the C / D constants, the p0 validity threshold, and the
// worst-case infidelity upper bound.
//
// Inner products <D|A^dag B|D> depend only on the class (a, c) with
// a = |supp(A)| = |supp(B)| and c = |supp(A) u supp(B)| - a, so the full
// truncated Kraus set is never materialized.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "piqec/picode.hpp"

namespace piqec {

// Polynomial in p with exact rational coefficients, trailing zeros trimmed.
struct PolyP {
    std::vector<Rational> coeff;  // coeff[k] multiplies p^k

    void trim() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }
    long degree() const { return static_cast<long>(coeff.size()) - 1; }
    bool is_zero() const { return coeff.empty(); }

    Rational at(long k) const {
        if (k < 0 || k >= static_cast<long>(coeff.size())) return Rational(0);
        return coeff[k];
    }

    PolyP& operator+=(const PolyP& o) {
        if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] += o.coeff[i];
        trim();
        return *this;
    }
    PolyP& operator-=(const PolyP& o) {
        if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] -= o.coeff[i];
        trim();
        return *this;
    }
    PolyP& operator*=(const Rational& s) {
        for (auto& c : coeff) c *= s;
        trim();
        return *this;
    }

    Rational evaluate(const Rational& p) const {
        Rational v(0);
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) v = v * p + *it;
        v.canonicalize();
        return v;
    }
};

// p^a (1-p)^e as a polynomial.
inline PolyP poly_p_pow_one_minus_p(long a, long e) {
    PolyP out;
    out.coeff.assign(a + e + 1, Rational(0));
    for (long i = 0; i <= e; ++i)
        out.coeff[a + i] = Rational((i % 2 == 0 ? 1 : -1) * binom_int(e, i));
    out.trim();
    return out;
}

// Kraus class of a pair (A, B) with equal support sizes.
struct ADClass {
    long a = 0;  // |supp(A)| = |supp(B)|
    long c = 0;  // |supp(A) u supp(B)| - a
};

// <D^n_w|A^dag B|D^n_w> = p^a (1-p)^{w-a} C(n-c-a, w-a)/C(n, w), as a
// polynomial; the zero polynomial when the binomials vanish.
inline PolyP ad_dicke_inner(long n, long w, const ADClass& cls) {
    if (w < 0 || w > n) throw std::invalid_argument("ad_dicke_inner: need 0 <= w <= n");
    Int num = binom_int(n - cls.c - cls.a, w - cls.a);
    if (num == 0) return {};
    PolyP out = poly_p_pow_one_minus_p(cls.a, w - cls.a);
    Rational scale = Rational(num) / Rational(binom_int(n, w));
    scale.canonicalize();
    out *= scale;
    return out;
}

// <c_+|A^dag B|c_-> for a Construction-1 code in the Hadamard basis:
// sum_l f(l)^2 (-1)^l [ <D_{gl}|A^dag B|D_{gl}> - <D_{n-gl}|A^dag B|D_{n-gl}> ]
// with f(l)^2 = gamma^2 b_l^2 / 2. Valid only in the regime g >= t+1,
// delta >= t where the codeword cross terms vanish.
inline PolyP hadamard_cross_poly(const GmdParams& params, long t, const ADClass& cls) {
    if (params.g < t + 1 || params.delta < t)
        throw std::invalid_argument(
            "hadamard_cross_poly: requires g >= t+1 and delta >= t (cross terms do not "
            "vanish outside this regime)");
    if (cls.c < 0 || cls.c > cls.a || cls.a > t)
        throw std::invalid_argument("hadamard_cross_poly: need 0 <= c <= a <= t");
    const long n = params.n();
    PolyP out;
    for (long l = 0; l <= params.m; ++l) {
        Rational f2 = gmdelta_f_squared(params, l) / 2;
        f2.canonicalize();
        if (l % 2 == 1) f2 = -f2;
        PolyP term = ad_dicke_inner(n, params.g * l, cls);
        term -= ad_dicke_inner(n, n - params.g * l, cls);
        term *= f2;
        out += term;
    }
    return out;
}

// C of the Delta <= C p^{2m-t+1} bound: max over classes of the absolute
// coefficient mass at orders >= 2m-t+1.
inline Rational constant_C(const GmdParams& params, long t) {
    Rational best(0);
    for (long a = 0; a <= t; ++a) {
        for (long c = 0; c <= a; ++c) {
            PolyP poly = hadamard_cross_poly(params, t, {a, c});
            Rational mass(0);
            for (long k = 2 * params.m - t + 1; k <= poly.degree(); ++k)
                mass += abs(poly.at(k));
            mass.canonicalize();
            if (mass > best) best = mass;
        }
    }
    return best;
}

struct ConstantDResult {
    Rational value;
    long attaining_a = 0;  // support size of the minimizing Kraus class
};

// D = min over A of min_i <c_i|A^dag A|c_i>, read as a p-independent
// constant: the diagonal polynomial has an overall p^a prefactor, which is
// removed, and the remainder is taken at p = 0 (its leading coefficient).
inline ConstantDResult constant_D(const PICode& code, long t) {
    if (!code.normalized) throw std::invalid_argument("constant_D: code must be normalized");
    const long n = code.n;
    ConstantDResult res;
    bool first = true;
    for (long a = 0; a <= t; ++a) {
        // <c_i|A^dag A|c_i> / p^a at p = 0: sum_w coeff_w^2 C(n-a, w-a)/C(n, w)
        Rational d0(0), d1(0);
        for (long w = a; w <= n; ++w) {
            Rational ratio = Rational(binom_int(n - a, w - a)) / Rational(binom_int(n, w));
            d0 += code.alpha[w].squared() * ratio;
            d1 += code.beta[w].squared() * ratio;
        }
        d0.canonicalize();
        d1.canonicalize();
        Rational d = d0 < d1 ? d0 : d1;
        if (first || d < res.value) {
            res.value = d;
            res.attaining_a = a;
            first = false;
        }
    }
    return res;
}

// |epsilon_{p,t}| = sum_{i<=t} C(n, i).
inline Int truncated_kraus_count(long n, long t) {
    Int total(0);
    for (long i = 0; i <= t; ++i) total += binom_int(n, i);
    return total;
}

struct ADBoundData {
    Rational bound;
    Rational C;
    Rational D;
    Int kraus_count;
    // p0 = n^{-t/(2m-2t+1)} (D/(2C))^{1/(2m-2t+1)}; stored through its
    // (2m-2t+1)-th power, which is rational.
    Rational p0_power;   // n^{-t} D / (2C), or 0 when C == 0 (p0 = infinity)
    long p0_exponent = 1;  // 2m - 2t + 1
};

inline bool p_below_p0(const Rational& p, const ADBoundData& d) {
    if (d.p0_power == 0) return true;  // C == 0, no constraint
    Rational lhs(1);
    for (long i = 0; i < d.p0_exponent; ++i) lhs *= p;
    lhs.canonicalize();
    return lhs < d.p0_power;
}

// C, D, the Kraus count, and the p0 data for a parameter set, without
// evaluating the bound at any particular p.
inline ADBoundData ad_constants(const GmdParams& params, long t) {
    if (params.m < t)
        throw std::invalid_argument("ad_constants: need m >= t (validity exponent)");
    const long n = params.n();
    ADBoundData data;
    data.C = constant_C(params, t);
    data.D = constant_D(construct_gmdelta(params), t).value;
    data.kraus_count = truncated_kraus_count(n, t);
    data.p0_exponent = 2 * params.m - 2 * t + 1;
    if (data.C > 0) {
        Rational npow(1);
        for (long i = 0; i < t; ++i) npow *= n;
        data.p0_power = data.D / (2 * data.C * npow);
        data.p0_power.canonicalize();
    }
    return data;
}

// The closed-form worst-case infidelity upper bound, exact in rationals:
// 1 - (1 - C(n,t+1) p^{t+1} - |eps|^2 C p^{2m-t+1})
//       / (1 + (2 C |eps|^2 (|eps|-1)/D) p^{2m-2t+1}).
// The formula itself is defined for any p in (0, 1/2); the p < p0 validity
// gate is enforced separately by infidelity_bound.
inline Rational ad_bound_formula(const ADBoundData& data, const GmdParams& params, long t,
                                 const Rational& p) {
    if (p <= 0 || p >= Rational(1, 2))
        throw std::domain_error("ad_bound_formula: need 0 < p < 1/2");
    const long n = params.n();
    auto p_pow = [&](long e) {
        Rational v(1);
        for (long i = 0; i < e; ++i) v *= p;
        v.canonicalize();
        return v;
    };
    Rational eps2 = Rational(data.kraus_count * data.kraus_count);
    Rational numer = Rational(1) - Rational(binom_int(n, t + 1)) * p_pow(t + 1) -
                     eps2 * data.C * p_pow(2 * params.m - t + 1);
    Rational denom(1);
    if (data.C > 0)
        denom += (2 * data.C * eps2 * Rational(data.kraus_count - 1) / data.D) *
                 p_pow(2 * params.m - 2 * t + 1);
    Rational bound = Rational(1) - numer / denom;
    bound.canonicalize();
    return bound;
}

// Bound evaluation with the validity gate: rejects p outside (0, p0) and
// returns the computed p0 data in the error path via ad_constants.
inline ADBoundData infidelity_bound(const GmdParams& params, long t, const Rational& p) {
    ADBoundData data = ad_constants(params, t);
    if (p <= 0 || !p_below_p0(p, data))
        throw std::domain_error("infidelity_bound: p outside (0, p0)");
    data.bound = ad_bound_formula(data, params, t, p);
    return data;
}

// Lemma "E2" instance check: exact evaluation of
// sum_l (-1)^l C(m,l)/C(n/g - l, m+1) [ C(gl-a, k-a) C(n-c-a, gl-a)/C(n, gl)
//   - C(n-gl-a, k-a) C(n-c-a, n-gl-a)/C(n, gl) ] == 0.
inline bool check_identity_E2(long n, long g, long m, long a, long c, long k, long t) {
    if (g < 1 || n <= 2 * g * m || k > 2 * m - t || c > a || a > t || t > m ||
        a < 0 || c < 0 || k < 0 || t < 0 || m < 0)
        throw std::invalid_argument(
            "check_identity_E2: need n > 2gm, k <= 2m-t, 0 <= c <= a <= t <= m");
    Rational ng(n, g);
    ng.canonicalize();
    Rational total(0);
    for (long l = 0; l <= m; ++l) {
        Rational lead = Rational(binom_int(m, l)) / binom_gen(ng - l, m + 1);
        if (l % 2 == 1) lead = -lead;
        Rational cn_gl(binom_int(n, g * l));
        Rational t1 = Rational(binom_int(g * l - a, k - a) * binom_int(n - c - a, g * l - a)) / cn_gl;
        Rational t2 = Rational(binom_int(n - g * l - a, k - a) *
                               binom_int(n - c - a, n - g * l - a)) / cn_gl;
        total += lead * (t1 - t2);
    }
    total.canonicalize();
    return total == 0;
}

}  // namespace piqec
