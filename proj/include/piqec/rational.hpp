// Exact rational scalars and binomial coefficients.
//
// All symbolic computation in this library runs over arbitrary-precision
// rationals (GMP mpq_class). Values are immutable after construction and
// every function here is pure.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace piqec {

using Int = mpz_class;
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline Int binom_int(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    if (!k.fits_ulong_p()) throw std::overflow_error("binom_int: k too large");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

inline Int binom_int(long n, long k) { return binom_int(Int(n), Int(k)); }

// Falling-factorial binomial C(x, k) = x(x-1)...(x-k+1)/k! for rational x.
// Agrees with binom_int on nonnegative integer x; returns 0 for k < 0.
inline Rational binom_gen(const Rational& x, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= x - i;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    Rational r = num / Rational(fact);
    r.canonicalize();
    return r;
}

// Parses a decimal string ("0.0477572", "-3", "7/10") into an exact rational.
// Base 10 is forced everywhere: GMP's default base detection would read
// leading zeros as octal.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational q(s, 10);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q(s, 10);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    Int num(digits, 10);
    Int den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace piqec
