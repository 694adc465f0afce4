// Exact verification of the error-correction conditions (C1)-(C4) for
// permutation-invariant codes, for t Pauli errors and for s deletions
// (same sums with 2t replaced by s), plus the deletion Kraus action
// E_a = G^a F^{s-a} on codewords.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "piqec/picode.hpp"

namespace piqec {

struct ConditionReport {
    std::string condition;  // "C1", "C2", "C3", "C4"
    long a = 0;
    long b = 0;
    long t = 0;  // t for Pauli checks, s for deletion checks
    RadicalSum residual;
    bool passed = false;
};

struct DeletionKrausIndex {
    long s = 0;  // number of deletions
    long a = 0;  // 0 <= a <= s, operator G^a F^{s-a}
};

namespace detail {

// sum_j C(n-w, j) / sqrt(C(n, j+a) C(n, j+b)) * x_{j+a} y_{j+b}
// where w plays the role of 2t (Pauli) or s (deletion). Terms whose
// coefficient index is out of range, or whose binomial weight vanishes,
// are skipped before any division.
inline RadicalSum weighted_cross_sum(const PICode& code, long w, long a, long b,
                                     const std::vector<Radical>& x,
                                     const std::vector<Radical>& y, bool subtract_yy,
                                     const std::vector<Radical>& x2,
                                     const std::vector<Radical>& y2) {
    const long n = code.n;
    RadicalSum out;
    for (long j = 0; j <= n - w; ++j) {
        if (j + a > n || j + b > n) continue;
        Radical prod = x[j + a] * y[j + b];
        if (subtract_yy) {
            Radical prod2 = x2[j + a] * y2[j + b];
            if (prod.is_zero() && prod2.is_zero()) continue;
            Int cja = binom_int(n, j + a), cjb = binom_int(n, j + b);
            Rational weight(binom_int(n - w, j));
            Radical inv_sqrt = sqrt_canonical(Rational(1) / Rational(cja * cjb));
            out.add((weight * inv_sqrt) * prod);
            out.add((weight * inv_sqrt) * (-prod2));
        } else {
            if (prod.is_zero()) continue;
            Int cja = binom_int(n, j + a), cjb = binom_int(n, j + b);
            Rational weight(binom_int(n - w, j));
            Radical inv_sqrt = sqrt_canonical(Rational(1) / Rational(cja * cjb));
            out.add((weight * inv_sqrt) * prod);
        }
    }
    return out;
}

}  // namespace detail

// Condition (C3) residual: sum_j C(n-2t, j)/sqrt(C(n,j+a)C(n,j+b)) a_{j+a} b_{j+b}.
inline RadicalSum c3_residual(const PICode& code, long t, long a, long b) {
    if (t < 0 || a < 0 || b < 0 || a > 2 * t || b > 2 * t)
        throw std::invalid_argument("c3_residual: need 0 <= a,b <= 2t");
    if (code.n < 2 * t) throw std::invalid_argument("c3_residual: n < 2t");
    return detail::weighted_cross_sum(code, 2 * t, a, b, code.alpha, code.beta, false, {}, {});
}

// Condition (C4) residual: integrand alpha alpha - beta beta.
inline RadicalSum c4_residual(const PICode& code, long t, long a, long b) {
    if (t < 0 || a < 0 || b < 0 || a > 2 * t || b > 2 * t)
        throw std::invalid_argument("c4_residual: need 0 <= a,b <= 2t");
    if (code.n < 2 * t) throw std::invalid_argument("c4_residual: n < 2t");
    return detail::weighted_cross_sum(code, 2 * t, a, b, code.alpha, code.alpha, true,
                                      code.beta, code.beta);
}

namespace detail {

inline std::vector<ConditionReport> verify_conditions(const PICode& code, long w) {
    // w = 2t for Pauli checks, w = s for deletions; reports carry w back in
    // the t slot so both flavors serialize identically.
    if (w < 0 || code.n < w) throw std::invalid_argument("verify: need 0 <= w <= n");
    std::vector<ConditionReport> reports;
    auto [c1, c2a, c2b] = code_inner_products(code);
    reports.push_back({"C1", 0, 0, w, c1, c1.is_zero()});
    reports.push_back({"C2", 0, 0, w, c2a, c2a.is_zero()});
    reports.push_back({"C2", 1, 0, w, c2b, c2b.is_zero()});
    for (long a = 0; a <= w; ++a) {
        for (long b = 0; b <= w; ++b) {
            RadicalSum r3 = weighted_cross_sum(code, w, a, b, code.alpha, code.beta,
                                               false, {}, {});
            reports.push_back({"C3", a, b, w, r3, r3.is_zero()});
            RadicalSum r4 = weighted_cross_sum(code, w, a, b, code.alpha, code.alpha,
                                               true, code.beta, code.beta);
            reports.push_back({"C4", a, b, w, r4, r4.is_zero()});
        }
    }
    return reports;
}

}  // namespace detail

inline std::vector<ConditionReport> verify_pauli(const PICode& code, long t) {
    auto reports = detail::verify_conditions(code, 2 * t);
    for (auto& r : reports) r.t = t;
    return reports;
}

inline std::vector<ConditionReport> verify_deletion(const PICode& code, long s) {
    return detail::verify_conditions(code, s);
}

inline bool all_passed(const std::vector<ConditionReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

// E_a |c_i> for the s-deletion Kraus operator: each weight-w component maps
// to weight w-a with factor sqrt(C(n-s, w-a)/C(n, w)).
inline std::pair<std::vector<Radical>, std::vector<Radical>> deletion_kraus_action(
    const PICode& code, const DeletionKrausIndex& idx) {
    if (idx.a < 0 || idx.a > idx.s || idx.s > code.n)
        throw std::invalid_argument("deletion_kraus_action: need 0 <= a <= s <= n");
    const long n = code.n, s = idx.s, a = idx.a;
    std::vector<Radical> img0(n - s + 1), img1(n - s + 1);
    for (long w = 0; w <= n; ++w) {
        Int num = binom_int(n - s, w - a);
        if (num == 0) continue;
        Radical factor = sqrt_canonical(Rational(num) / Rational(binom_int(n, w)));
        if (!code.alpha[w].is_zero()) img0[w - a] = code.alpha[w] * factor;
        if (!code.beta[w].is_zero()) img1[w - a] = code.beta[w] * factor;
    }
    return {img0, img1};
}

}  // namespace piqec
