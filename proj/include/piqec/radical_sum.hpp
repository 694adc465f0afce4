// Finite sums of canonical radicals with pairwise distinct squarefree
// radicands. Square roots of distinct squarefree integers are linearly
// independent over Q, so the sum is zero iff the term map is empty.
#pragma once

#include <cmath>
#include <map>

#include "piqec/radical.hpp"

namespace piqec {

class RadicalSum {
  public:
    RadicalSum() = default;
    explicit RadicalSum(const Radical& r) { add(r); }

    void add(const Radical& r) {
        if (r.is_zero()) return;
        auto it = terms_.find(r.rad);
        if (it == terms_.end()) {
            terms_.emplace(r.rad, r.coef);
        } else {
            it->second += r.coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    RadicalSum& operator+=(const Radical& r) {
        add(r);
        return *this;
    }
    RadicalSum& operator+=(const RadicalSum& s) {
        for (const auto& [rad, coef] : s.terms_) add(Radical(coef, rad));
        return *this;
    }
    RadicalSum& operator-=(const Radical& r) {
        add(-r);
        return *this;
    }

    RadicalSum operator-() const {
        RadicalSum out;
        for (const auto& [rad, coef] : terms_) out.add(Radical(-coef, rad));
        return out;
    }

    // Canonical |.|: flips the overall sign so the lexicographically first
    // term has a positive coefficient. Used to compare residuals that agree
    // up to a global sign.
    RadicalSum abs_canonical() const {
        if (terms_.empty()) return {};
        return terms_.begin()->second > 0 ? *this : -*this;
    }

    double to_double() const {
        double v = 0;
        for (const auto& [rad, coef] : terms_) v += coef.get_d() * std::sqrt(rad.get_d());
        return v;
    }

    const std::map<Int, Rational>& terms() const { return terms_; }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Int, Rational> terms_;
};

inline RadicalSum radical_sum_add(RadicalSum s, const Radical& t) {
    s.add(t);
    return s;
}

inline bool radical_sum_is_zero(const RadicalSum& s) { return s.is_zero(); }

}  // namespace piqec
