// Exact instance checks of the combinatorial identities backing the code
// construction, over parameter grids. Real-parameter identities are
// exercised at rational points (both sides are rational functions, so
// rational instances are checked exactly).
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "piqec/amp_damping.hpp"

namespace piqec {

// Alternating-sum identity: for g > 0 and 0 <= a <= r <= 2m < n/g,
// sum_l (-1)^l C(m,l)/C(n/g - l, m+1) [C(n-r, gl-a) - C(n-r, gl-r+a)] / C(n, gl) == 0.
inline bool check_E1(long n, long g, long m, long a, long r) {
    if (g < 1 || a < 0 || a > r || r > 2 * m || 2 * m * g >= n)
        throw std::invalid_argument("check_E1: need g > 0, 0 <= a <= r <= 2m < n/g");
    Rational ng(n, g);
    ng.canonicalize();
    Rational total(0);
    for (long l = 0; l <= m; ++l) {
        Rational lead = Rational(binom_int(m, l)) / binom_gen(ng - l, m + 1);
        if (l % 2 == 1) lead = -lead;
        Rational diff = Rational(binom_int(n - r, g * l - a) - binom_int(n - r, g * l - r + a)) /
                        Rational(binom_int(n, g * l));
        total += lead * diff;
    }
    total.canonicalize();
    return total == 0;
}

// Equivalent two-sum form: both sides use generalized binomials since n/g
// may be rational.
inline bool check_two_sums(long n, long g, long m, long a, long r) {
    if (g < 1 || a < 0 || a > r || r > 2 * m || 2 * m * g >= n)
        throw std::invalid_argument("check_two_sums: need g > 0, 0 <= a <= r <= 2m < n/g");
    Rational ng(n, g);
    ng.canonicalize();
    Rational lhs(0), rhs(0);
    for (long l = 0; l <= m; ++l) {
        Rational common = binom_gen(ng, l) * binom_gen(Rational(2 * m) - ng, m - l);
        lhs += common * Rational(binom_int(g * l, a) * binom_int(n - g * l, r - a));
        rhs += common * Rational(binom_int(g * l, r - a) * binom_int(n - g * l, a));
    }
    lhs.canonicalize();
    rhs.canonicalize();
    return lhs == rhs;
}

// Normalization identity: sum_l C(m,l)/C(2x-l, m+1) == (m+1) / (2 (x-m) C(x,m))
// for x > m > 0.
inline bool check_Z(const Rational& x, long m) {
    if (m < 1 || x <= m) throw std::invalid_argument("check_Z: need x > m > 0");
    Rational lhs(0);
    for (long l = 0; l <= m; ++l)
        lhs += Rational(binom_int(m, l)) / binom_gen(2 * x - l, m + 1);
    lhs.canonicalize();
    Rational rhs = Rational(m + 1) / (2 * (x - m) * binom_gen(x, m));
    rhs.canonicalize();
    return lhs == rhs;
}

// Termwise Zeilberger certificate for the identity above:
// 2(m+2) F(m,l) - 2(x-m-1) F(m+1,l) == G(m,l+1) - G(m,l),
// F(m,l) = C(m,l)/C(2x-l, m+1), G(m,l) = F(m,l) l (m+2) / (m-l+1).
inline bool check_telescoping(long m, long l, const Rational& x) {
    if (l < 0 || l > m || x <= m + 1)
        throw std::invalid_argument("check_telescoping: need 0 <= l <= m, x > m+1");
    auto F = [&](long mm, long ll) -> Rational {
        return Rational(binom_int(mm, ll)) / binom_gen(2 * x - ll, mm + 1);
    };
    // G(m,l) = F(m,l) l(m+2)/(m-l+1); C(m,l)/(m-l+1) = C(m+1,l)/(m+1) keeps
    // it defined at l = m+1 where the raw form is 0/0.
    auto G = [&](long mm, long ll) -> Rational {
        return Rational(binom_int(mm + 1, ll) * ll * (mm + 2)) /
               (Rational(mm + 1) * binom_gen(2 * x - ll, mm + 1));
    };
    Rational lhs = 2 * Rational(m + 2) * F(m, l) - 2 * (x - Rational(m + 1)) * F(m + 1, l);
    Rational rhs = G(m, l + 1) - G(m, l);
    lhs.canonicalize();
    rhs.canonicalize();
    return lhs == rhs;
}

// One grid-sweep result row; serialized by the CLI as a JSON-lines ledger.
struct GridResult {
    std::string lemma;
    std::vector<std::pair<std::string, std::string>> params;  // name -> value
    bool passed = false;
};

namespace detail {

inline GridResult grid_row(const std::string& lemma,
                           std::initializer_list<std::pair<std::string, std::string>> params,
                           bool passed) {
    return {lemma, std::vector<std::pair<std::string, std::string>>(params), passed};
}

}  // namespace detail

// Default grids: g, m in [1,4], all legal secondary parameters, n up to
// 2gm + 8 subject to each lemma's hypotheses, x over {m+1, m+3/2, ..., m+5}.
inline std::vector<GridResult> sweep_E1() {
    std::vector<GridResult> out;
    for (long g = 1; g <= 4; ++g)
        for (long m = 1; m <= 4; ++m)
            for (long n = 2 * g * m + 1; n <= 2 * g * m + 8; ++n)
                for (long r = 0; r <= 2 * m; ++r)
                    for (long a = 0; a <= r; ++a)
                        out.push_back(detail::grid_row(
                            "E1",
                            {{"n", std::to_string(n)},
                             {"g", std::to_string(g)},
                             {"m", std::to_string(m)},
                             {"a", std::to_string(a)},
                             {"r", std::to_string(r)}},
                            check_E1(n, g, m, a, r)));
    return out;
}

inline std::vector<GridResult> sweep_two_sums() {
    std::vector<GridResult> out;
    for (long g = 1; g <= 4; ++g)
        for (long m = 1; m <= 4; ++m)
            for (long n = 2 * g * m + 1; n <= 2 * g * m + 8; ++n)
                for (long r = 0; r <= 2 * m; ++r)
                    for (long a = 0; a <= r; ++a)
                        out.push_back(detail::grid_row(
                            "two_sums",
                            {{"n", std::to_string(n)},
                             {"g", std::to_string(g)},
                             {"m", std::to_string(m)},
                             {"a", std::to_string(a)},
                             {"r", std::to_string(r)}},
                            check_two_sums(n, g, m, a, r)));
    return out;
}

inline std::vector<GridResult> sweep_E2() {
    std::vector<GridResult> out;
    for (long g = 1; g <= 4; ++g)
        for (long m = 1; m <= 4; ++m)
            for (long n = 2 * g * m + 1; n <= 2 * g * m + 8; ++n)
                for (long t = 0; t <= m; ++t)
                    for (long a = 0; a <= t; ++a)
                        for (long c = 0; c <= a; ++c)
                            for (long k = 0; k <= 2 * m - t; ++k)
                                out.push_back(detail::grid_row(
                                    "E2",
                                    {{"n", std::to_string(n)},
                                     {"g", std::to_string(g)},
                                     {"m", std::to_string(m)},
                                     {"a", std::to_string(a)},
                                     {"c", std::to_string(c)},
                                     {"k", std::to_string(k)},
                                     {"t", std::to_string(t)}},
                                    check_identity_E2(n, g, m, a, c, k, t)));
    return out;
}

inline std::vector<GridResult> sweep_Z() {
    std::vector<GridResult> out;
    for (long m = 1; m <= 4; ++m)
        for (long twice_step = 0; twice_step <= 8; ++twice_step) {
            Rational x = Rational(m) + 1 + Rational(twice_step, 2);
            x.canonicalize();
            out.push_back(detail::grid_row(
                "Z",
                {{"x", x.get_str()}, {"m", std::to_string(m)}},
                check_Z(x, m)));
        }
    return out;
}

inline std::vector<GridResult> sweep_telescoping() {
    std::vector<GridResult> out;
    for (long m = 1; m <= 4; ++m)
        for (long l = 0; l <= m; ++l)
            for (long twice_step = 1; twice_step <= 8; ++twice_step) {
                Rational x = Rational(m) + 1 + Rational(twice_step, 2);
                x.canonicalize();
                out.push_back(detail::grid_row(
                    "telescoping",
                    {{"m", std::to_string(m)}, {"l", std::to_string(l)}, {"x", x.get_str()}},
                    check_telescoping(m, l, x)));
            }
    return out;
}

inline std::vector<GridResult> sweep(const std::string& lemma) {
    if (lemma == "E1") return sweep_E1();
    if (lemma == "two_sums") return sweep_two_sums();
    if (lemma == "E2") return sweep_E2();
    if (lemma == "Z") return sweep_Z();
    if (lemma == "telescoping") return sweep_telescoping();
    throw std::invalid_argument("sweep: unknown lemma " + lemma);
}

}  // namespace piqec
