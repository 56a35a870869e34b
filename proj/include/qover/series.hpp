#pragma once

// Truncated formal power series over arbitrary-precision integers, with the
// single-factor product expansion primitives used by partition generating
// functions. Strict truncation: arithmetic never consults or produces indices
// above trunc_order.

#include <stdexcept>
#include <utility>
#include <vector>

#include "qover/numeric.hpp"

namespace qover {

// coeffs[n] is the coefficient of q^n, 0 <= n <= trunc_order.
struct BigSeries {
    long trunc_order = 0;
    std::vector<BigInt> coeffs;

    BigSeries() : coeffs(1) {}
    explicit BigSeries(long N) : trunc_order(N), coeffs(static_cast<size_t>(N) + 1) {
        if (N < 0) throw std::invalid_argument("BigSeries: negative truncation order");
    }

    static BigSeries one(long N) {
        BigSeries s(N);
        s.coeffs[0] = 1;
        return s;
    }

    BigInt& operator[](long n) { return coeffs[static_cast<size_t>(n)]; }
    const BigInt& operator[](long n) const { return coeffs[static_cast<size_t>(n)]; }

    bool operator==(const BigSeries&) const = default;
};

inline BigSeries series_mul(const BigSeries& a, const BigSeries& b) {
    if (a.trunc_order != b.trunc_order)
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    const long N = a.trunc_order;
    BigSeries out(N);
    for (long i = 0; i <= N; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (long k = 0; i + k <= N; ++k)
            if (b.coeffs[k] != 0) out.coeffs[i + k] += a.coeffs[i] * b.coeffs[k];
    }
    return out;
}

namespace detail {

// In-place multiply by (1 - q^s): descending index order keeps the update exact.
inline void mul_one_minus_qs(std::vector<BigInt>& c, long s, long N) {
    for (long i = N; i >= s; --i) c[i] -= c[i - s];
}

// In-place multiply by (1 - q^s)^{-1} = 1 + q^s + q^{2s} + ...: ascending order.
inline void mul_inv_one_minus_qs(std::vector<BigInt>& c, long s, long N) {
    for (long i = s; i <= N; ++i) c[i] += c[i - s];
}

// In-place multiply by (1 + q^s): descending order.
inline void mul_one_plus_qs(std::vector<BigInt>& c, long s, long N) {
    for (long i = N; i >= s; --i) c[i] += c[i - s];
}

}  // namespace detail

// (q^a; q^a)_inf^{-e} truncated at N; negative e gives the direct product.
inline BigSeries expand_inverse_pochhammer(long a, long e, long N) {
    if (a < 1) throw std::invalid_argument("expand_inverse_pochhammer: a must be >= 1");
    BigSeries s = BigSeries::one(N);
    for (long m = a; m <= N; m += a) {
        for (long t = 0; t < e; ++t) detail::mul_inv_one_minus_qs(s.coeffs, m, N);
        for (long t = 0; t < -e; ++t) detail::mul_one_minus_qs(s.coeffs, m, N);
    }
    return s;
}

// prod_{n>=1} (1 + q^n)^j truncated at N.
inline BigSeries expand_overline_factor(long j, long N) {
    if (j < 1) throw std::invalid_argument("expand_overline_factor: j must be >= 1");
    BigSeries s = BigSeries::one(N);
    for (long m = 1; m <= N; ++m)
        for (long t = 0; t < j; ++t) detail::mul_one_plus_qs(s.coeffs, m, N);
    return s;
}

}  // namespace qover
