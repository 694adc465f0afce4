// Brute-force dense reference implementation: 2^n state vectors, explicit
// Pauli action, partial-trace and Kraus-form deletions, and a numerical
// Knill-Laflamme Gram check. Everything here is double precision and exists
// to cross-validate the exact symbolic modules at small n.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "piqec/picode.hpp"

namespace piqec::oracle {

using Complex = std::complex<double>;

inline constexpr long kMaxQubits = 24;  // 2^24 amplitudes, memory guard

struct DenseState {
    long n = 0;
    std::vector<Complex> amp;  // 2^n entries, qubit i <-> bit (i-1)

    double norm() const {
        double s = 0;
        for (const auto& a : amp) s += std::norm(a);
        return std::sqrt(s);
    }
};

inline Complex inner(const DenseState& x, const DenseState& y) {
    if (x.n != y.n) throw std::invalid_argument("inner: dimension mismatch");
    Complex s = 0;
    for (std::size_t i = 0; i < x.amp.size(); ++i) s += std::conj(x.amp[i]) * y.amp[i];
    return s;
}

// Square matrix of order 2^n, row-major.
struct DenseMatrix {
    long n = 0;
    std::vector<Complex> data;

    Complex& at(std::size_t r, std::size_t c) { return data[(r << n) | c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return data[(r << n) | c]; }

    Complex trace() const {
        Complex t = 0;
        const std::size_t dim = std::size_t(1) << n;
        for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
        return t;
    }
};

inline double max_entry_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

// Pauli placement list: distinct 1-based positions with X/Y/Z labels.
struct PauliSpec {
    std::vector<std::pair<long, char>> ops;
};

// Deletion of the positions in E (1-based), i.e. a partial trace.
struct DeletionSet {
    std::vector<long> positions;
};

// Single deletion Kraus operator A_{E,<c|}: bra <c_i| applied at position e_i.
struct DeletionBra {
    std::vector<long> positions;
    std::vector<int> bits;  // same length as positions
};

using DenseOperatorSpec = std::variant<PauliSpec, DeletionSet, DeletionBra>;

inline DenseState expand_dicke(long n, long w) {
    if (n < 0 || n > kMaxQubits) throw std::invalid_argument("expand_dicke: n out of range");
    if (w < 0 || w > n) throw std::invalid_argument("expand_dicke: need 0 <= w <= n");
    DenseState st;
    st.n = n;
    st.amp.assign(std::size_t(1) << n, Complex(0));
    double a = 1.0 / std::sqrt(binom_int(n, w).get_d());
    for (std::size_t x = 0; x < st.amp.size(); ++x)
        if (std::popcount(x) == static_cast<int>(w)) st.amp[x] = a;
    return st;
}

inline std::pair<DenseState, DenseState> expand_code(const PICode& code) {
    if (code.n > kMaxQubits) throw std::invalid_argument("expand_code: n over guard");
    DenseState c0, c1;
    c0.n = c1.n = code.n;
    c0.amp.assign(std::size_t(1) << code.n, Complex(0));
    c1.amp.assign(std::size_t(1) << code.n, Complex(0));
    for (long w = 0; w <= code.n; ++w) {
        double a = code.alpha[w].to_double();
        double b = code.beta[w].to_double();
        if (a == 0 && b == 0) continue;
        double inv = 1.0 / std::sqrt(binom_int(code.n, w).get_d());
        for (std::size_t x = 0; x < c0.amp.size(); ++x) {
            if (std::popcount(x) != static_cast<int>(w)) continue;
            c0.amp[x] += a * inv;
            c1.amp[x] += b * inv;
        }
    }
    return {c0, c1};
}

inline DenseState apply_pauli(const DenseState& state, const PauliSpec& spec) {
    DenseState out = state;
    for (auto [pos, p] : spec.ops) {
        if (pos < 1 || pos > state.n) throw std::invalid_argument("apply_pauli: bad position");
        const std::size_t mask = std::size_t(1) << (pos - 1);
        DenseState next;
        next.n = out.n;
        next.amp.assign(out.amp.size(), Complex(0));
        for (std::size_t x = 0; x < out.amp.size(); ++x) {
            const Complex& a = out.amp[x];
            if (a == Complex(0)) continue;
            switch (p) {
                case 'X':
                    next.amp[x ^ mask] += a;
                    break;
                case 'Y':
                    // Y|0> = i|1>, Y|1> = -i|0>
                    next.amp[x ^ mask] += (x & mask) ? Complex(0, -1) * a : Complex(0, 1) * a;
                    break;
                case 'Z':
                    next.amp[x] += (x & mask) ? -a : a;
                    break;
                default:
                    throw std::invalid_argument("apply_pauli: unknown Pauli label");
            }
        }
        out = std::move(next);
    }
    return out;
}

namespace detail {

// Inserts bits of `ins` at the (sorted, 1-based) positions into index x over
// the remaining qubits, producing a full n-qubit basis index.
inline std::size_t insert_bits(std::size_t x, const std::vector<long>& sorted_positions,
                               std::size_t ins) {
    std::size_t full = x;
    for (std::size_t k = 0; k < sorted_positions.size(); ++k) {
        const int bitpos = static_cast<int>(sorted_positions[k]) - 1;
        const std::size_t low = full & ((std::size_t(1) << bitpos) - 1);
        const std::size_t high = full >> bitpos;
        full = (high << (bitpos + 1)) | (((ins >> k) & 1) << bitpos) | low;
    }
    return full;
}

inline std::vector<long> sorted_positions(std::vector<long> positions, long n) {
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1 || positions[i] > n)
            throw std::invalid_argument("deletion positions out of range");
        if (i > 0 && positions[i] == positions[i - 1])
            throw std::invalid_argument("deletion positions must be distinct");
    }
    return positions;
}

}  // namespace detail

// A_{E,<c|} |psi>: contracts the qubits at E against the bra <c|.
inline DenseState apply_deletion_bra(const DenseState& state, const DeletionBra& spec) {
    auto pos = detail::sorted_positions(spec.positions, state.n);
    const long t = static_cast<long>(pos.size());
    std::size_t ins = 0;
    {
        // carry the bits along with the position sort
        std::vector<std::pair<long, int>> pb;
        for (std::size_t i = 0; i < spec.positions.size(); ++i)
            pb.emplace_back(spec.positions[i], spec.bits[i]);
        std::sort(pb.begin(), pb.end());
        for (std::size_t i = 0; i < pb.size(); ++i)
            if (pb[i].second) ins |= std::size_t(1) << i;
    }
    DenseState out;
    out.n = state.n - t;
    out.amp.assign(std::size_t(1) << out.n, Complex(0));
    for (std::size_t x = 0; x < out.amp.size(); ++x)
        out.amp[x] = state.amp[detail::insert_bits(x, pos, ins)];
    return out;
}

inline DenseMatrix delete_partial_trace(const DenseState& state,
                                        const std::vector<long>& E) {
    auto pos = detail::sorted_positions(E, state.n);
    const long t = static_cast<long>(pos.size());
    DenseMatrix rho;
    rho.n = state.n - t;
    const std::size_t dim = std::size_t(1) << rho.n;
    rho.data.assign(dim * dim, Complex(0));
    for (std::size_t z = 0; z < (std::size_t(1) << t); ++z) {
        for (std::size_t r = 0; r < dim; ++r) {
            const Complex ar = state.amp[detail::insert_bits(r, pos, z)];
            if (ar == Complex(0)) continue;
            for (std::size_t c = 0; c < dim; ++c)
                rho.at(r, c) += ar * std::conj(state.amp[detail::insert_bits(c, pos, z)]);
        }
    }
    return rho;
}

// Kraus form of the same deletion: sum_c A_{E,<c|} rho A^dagger.
inline DenseMatrix delete_kraus(const DenseState& state, const std::vector<long>& E) {
    auto pos = detail::sorted_positions(E, state.n);
    const long t = static_cast<long>(pos.size());
    DenseMatrix rho;
    rho.n = state.n - t;
    const std::size_t dim = std::size_t(1) << rho.n;
    rho.data.assign(dim * dim, Complex(0));
    for (std::size_t z = 0; z < (std::size_t(1) << t); ++z) {
        DeletionBra bra;
        bra.positions = pos;
        bra.bits.resize(pos.size());
        for (std::size_t k = 0; k < pos.size(); ++k) bra.bits[k] = (z >> k) & 1;
        DenseState proj = apply_deletion_bra(state, bra);
        for (std::size_t r = 0; r < dim; ++r) {
            if (proj.amp[r] == Complex(0)) continue;
            for (std::size_t c = 0; c < dim; ++c)
                rho.at(r, c) += proj.amp[r] * std::conj(proj.amp[c]);
        }
    }
    return rho;
}

inline DenseState apply_operator(const DenseState& state, const DenseOperatorSpec& spec) {
    if (std::holds_alternative<PauliSpec>(spec))
        return apply_pauli(state, std::get<PauliSpec>(spec));
    if (std::holds_alternative<DeletionBra>(spec))
        return apply_deletion_bra(state, std::get<DeletionBra>(spec));
    throw std::invalid_argument("apply_operator: DeletionSet is not a pure-state operator");
}

struct GramCheckResult {
    bool passed = false;
    double max_offdiag = 0;        // largest |<c_i|A^dag B|c_j>|, i != j
    double max_diag_mismatch = 0;  // largest |<c_0|A^dag B|c_0> - <c_1|A^dag B|c_1>|
};

// Numerical Knill-Laflamme check over an explicit error list. Operators must
// all map to the same output dimension (Paulis, or bra-form deletions of a
// common size).
inline GramCheckResult kl_gram_check(const PICode& code,
                                     const std::vector<DenseOperatorSpec>& errors,
                                     double tol = 1e-10) {
    auto [c0, c1] = expand_code(code);
    std::vector<DenseState> img0, img1;
    img0.reserve(errors.size());
    img1.reserve(errors.size());
    for (const auto& e : errors) {
        img0.push_back(apply_operator(c0, e));
        img1.push_back(apply_operator(c1, e));
    }
    GramCheckResult res;
    for (std::size_t a = 0; a < errors.size(); ++a) {
        for (std::size_t b = 0; b < errors.size(); ++b) {
            Complex m01 = inner(img0[a], img1[b]);
            Complex m10 = inner(img1[a], img0[b]);
            Complex d00 = inner(img0[a], img0[b]);
            Complex d11 = inner(img1[a], img1[b]);
            res.max_offdiag = std::max({res.max_offdiag, std::abs(m01), std::abs(m10)});
            res.max_diag_mismatch = std::max(res.max_diag_mismatch, std::abs(d00 - d11));
        }
    }
    res.passed = res.max_offdiag < tol && res.max_diag_mismatch < tol;
    return res;
}

// All weight <= t Pauli placements (including identity) on n qubits.
inline std::vector<DenseOperatorSpec> pauli_error_set(long n, long t) {
    std::vector<DenseOperatorSpec> out;
    const char labels[3] = {'X', 'Y', 'Z'};
    // enumerate supports of each weight, then label assignments
    auto emit = [&](auto&& self, long start, long remaining, PauliSpec& cur) -> void {
        if (!cur.ops.empty()) out.push_back(cur);
        if (remaining == 0) return;
        for (long p = start; p <= n; ++p) {
            for (char l : labels) {
                cur.ops.emplace_back(p, l);
                self(self, p + 1, remaining - 1, cur);
                cur.ops.pop_back();
            }
        }
    };
    PauliSpec cur;
    out.push_back(PauliSpec{});  // identity
    emit(emit, 1, t, cur);
    return out;
}

// The 2^s bra-form deletion operators on the first s positions.
inline std::vector<DenseOperatorSpec> deletion_bra_set(long s) {
    std::vector<DenseOperatorSpec> out;
    for (std::size_t c = 0; c < (std::size_t(1) << s); ++c) {
        DeletionBra bra;
        for (long k = 0; k < s; ++k) {
            bra.positions.push_back(k + 1);
            bra.bits.push_back((c >> k) & 1);
        }
        out.push_back(bra);
    }
    return out;
}

}  // namespace piqec::oracle
