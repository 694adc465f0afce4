// Canonical quadratic radicals: values of the form coef * sqrt(radicand)
// with rational coef and squarefree positive integer radicand. The canonical
// form is unique, which makes equality and zero tests exact.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "piqec/rational.hpp"

namespace piqec {

namespace detail {

// Primes up to the trial-division bound, built once on first use.
inline const std::vector<unsigned long>& primes_upto(unsigned long bound) {
    static std::vector<unsigned long> cache;
    static unsigned long cached_bound = 0;
    if (bound > cached_bound) {
        cache.clear();
        std::vector<bool> sieve(bound + 1, true);
        for (unsigned long p = 2; p <= bound; ++p) {
            if (!sieve[p]) continue;
            cache.push_back(p);
            for (unsigned long q = p * p; q <= bound; q += p)
                sieve[q] = false;
        }
        cached_bound = bound;
    }
    return cache;
}

}  // namespace detail

// Trial-division bound for squarefree decomposition. Radicands in this
// library come from products of binomial coefficients with n <~ 100, whose
// prime factors are all <= n, so the default is never reached in practice.
inline constexpr unsigned long kSquarefreeBound = 1'000'000;

// Splits v > 0 into (s, d) with v = s^2 * d and d squarefree.
// Throws if an undecomposed factor > bound^2 remains after trial division.
inline std::pair<Int, Int> squarefree_decompose(Int v,
                                                unsigned long bound = kSquarefreeBound) {
    if (v <= 0) throw std::domain_error("squarefree_decompose: value must be positive");
    Int square_part(1), radicand(1);
    for (unsigned long p : detail::primes_upto(bound)) {
        if (Int(p) * p > v) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            ++e;
        }
        for (unsigned long i = 0; i + 1 < e; i += 2) square_part *= p;
        if (e % 2 == 1) radicand *= p;
    }
    if (v > 1) {
        if (mpz_perfect_square_p(v.get_mpz_t())) {
            Int s;
            mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
            square_part *= s;
        } else if (v > Int(bound) * bound) {
            throw std::domain_error(
                "squarefree_decompose: residual factor exceeds bound^2, cannot certify "
                "squarefreeness (residual " + v.get_str() + ")");
        } else {
            // no factor <= bound and v <= bound^2, so v is prime
            radicand *= v;
        }
    }
    return {square_part, radicand};
}

struct Radical {
    Rational coef;  // rational multiplier
    Int rad;        // squarefree positive radicand; rad == 1 for zero/rational values

    Radical() : coef(0), rad(1) {}
    Radical(Rational c, Int d) : coef(std::move(c)), rad(std::move(d)) {
        if (coef == 0) rad = 1;
    }
    // Rational values embed with radicand 1.
    explicit Radical(const Rational& c) : coef(c), rad(1) {}

    bool is_zero() const { return coef == 0; }
    bool is_rational() const { return rad == 1; }

    // coef^2 * rad, always rational.
    Rational squared() const {
        Rational r = coef * coef * Rational(rad);
        r.canonicalize();
        return r;
    }

    double to_double() const { return coef.get_d() * std::sqrt(rad.get_d()); }

    Radical operator-() const { return Radical(-coef, rad); }

    friend bool operator==(const Radical& a, const Radical& b) {
        return a.coef == b.coef && a.rad == b.rad;
    }
};

// sqrt(q) for q >= 0 in canonical form.
inline Radical sqrt_canonical(const Rational& q,
                              unsigned long bound = kSquarefreeBound) {
    if (q < 0) throw std::domain_error("sqrt_canonical: negative input");
    if (q == 0) return Radical();
    // sqrt(a/b) = sqrt(a*b)/b
    Int ab = q.get_num() * q.get_den();
    auto [s, d] = squarefree_decompose(ab, bound);
    Rational coef(s, q.get_den());
    coef.canonicalize();
    return Radical(coef, d);
}

inline Radical radical_mul(const Radical& a, const Radical& b,
                           unsigned long bound = kSquarefreeBound) {
    if (a.is_zero() || b.is_zero()) return Radical();
    Rational coef = a.coef * b.coef;
    coef.canonicalize();
    if (a.rad == b.rad) return Radical(coef * Rational(a.rad), Int(1));
    auto [s, d] = squarefree_decompose(a.rad * b.rad, bound);
    coef *= Rational(s);
    coef.canonicalize();
    return Radical(coef, d);
}

inline Radical operator*(const Radical& a, const Radical& b) { return radical_mul(a, b); }

inline Radical operator*(const Rational& c, const Radical& a) {
    if (c == 0) return Radical();
    Rational r = c * a.coef;
    r.canonicalize();
    return Radical(r, a.rad);
}

}  // namespace piqec
