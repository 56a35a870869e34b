#pragma once

// Laurent polynomials in a root-of-unity variable zeta over arbitrary-precision
// integers, and truncated q-series whose coefficients are such polynomials.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "qover/numeric.hpp"
#include "qover/series.hpp"

namespace qover {

// Dense coefficients on the exponent window [lo, lo + coeffs.size() - 1].
// Canonical form: the zero polynomial stores an empty list with lo == 0;
// otherwise the first and last stored coefficients are nonzero.
struct ZetaPoly {
    long lo = 0;
    std::vector<BigInt> coeffs;

    ZetaPoly() = default;
    ZetaPoly(long lo_, std::vector<BigInt> c) : lo(lo_), coeffs(std::move(c)) { normalize(); }

    static ZetaPoly constant(BigInt v) {
        ZetaPoly p;
        if (v != 0) p.coeffs.push_back(std::move(v));
        return p;
    }

    static ZetaPoly monomial(long e, BigInt v = BigInt(1)) {
        ZetaPoly p;
        if (v != 0) {
            p.lo = e;
            p.coeffs.push_back(std::move(v));
        }
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    long hi() const { return lo + static_cast<long>(coeffs.size()) - 1; }

    void normalize() {
        size_t head = 0;
        while (head < coeffs.size() && coeffs[head] == 0) ++head;
        size_t tail = coeffs.size();
        while (tail > head && coeffs[tail - 1] == 0) --tail;
        if (head == tail) {
            coeffs.clear();
            lo = 0;
            return;
        }
        if (head > 0 || tail < coeffs.size()) {
            coeffs = std::vector<BigInt>(coeffs.begin() + head, coeffs.begin() + tail);
            lo += static_cast<long>(head);
        }
    }

    BigInt coeff(long e) const {
        if (is_zero() || e < lo || e > hi()) return 0;
        return coeffs[static_cast<size_t>(e - lo)];
    }

    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    bool operator==(const ZetaPoly&) const = default;
};

inline ZetaPoly zeta_shift(const ZetaPoly& p, long d) {
    ZetaPoly out = p;
    if (!out.is_zero()) out.lo += d;
    return out;
}

// dst += zeta^d * src, growing dst's window as needed.
inline void zeta_add_shifted(ZetaPoly& dst, const ZetaPoly& src, long d) {
    if (src.is_zero()) return;
    const long slo = src.lo + d;
    const long shi = src.hi() + d;
    if (dst.is_zero()) {
        dst.lo = slo;
        dst.coeffs = src.coeffs;
        return;
    }
    long nlo = std::min(dst.lo, slo);
    long nhi = std::max(dst.hi(), shi);
    if (nlo < dst.lo || nhi > dst.hi()) {
        std::vector<BigInt> grown(static_cast<size_t>(nhi - nlo + 1));
        for (long e = dst.lo; e <= dst.hi(); ++e)
            grown[static_cast<size_t>(e - nlo)] = std::move(dst.coeffs[static_cast<size_t>(e - dst.lo)]);
        dst.coeffs = std::move(grown);
        dst.lo = nlo;
    }
    for (long e = slo; e <= shi; ++e)
        dst.coeffs[static_cast<size_t>(e - dst.lo)] += src.coeffs[static_cast<size_t>(e - slo)];
    dst.normalize();
}

inline void zeta_sub(ZetaPoly& dst, const ZetaPoly& src) {
    if (src.is_zero()) return;
    ZetaPoly neg = src;
    for (auto& c : neg.coeffs) c = -c;
    zeta_add_shifted(dst, neg, 0);
}

inline ZetaPoly zeta_add(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly out = a;
    zeta_add_shifted(out, b, 0);
    return out;
}

inline ZetaPoly zeta_mul(const ZetaPoly& a, const ZetaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZetaPoly out;
    out.lo = a.lo + b.lo;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t k = 0; k < b.coeffs.size(); ++k)
            if (b.coeffs[k] != 0) out.coeffs[i + k] += a.coeffs[i] * b.coeffs[k];
    }
    out.normalize();
    return out;
}

// p(zeta^{-1}): exponent reversal.
inline ZetaPoly zeta_reverse(const ZetaPoly& p) {
    if (p.is_zero()) return {};
    ZetaPoly out;
    out.lo = -p.hi();
    out.coeffs.assign(p.coeffs.rbegin(), p.coeffs.rend());
    return out;
}

// Truncated q-series with ZetaPoly coefficients; coeffs[n] is H_n(zeta).
struct ZetaSeries {
    long trunc_order = 0;
    std::vector<ZetaPoly> coeffs;

    ZetaSeries() : coeffs(1) {}
    explicit ZetaSeries(long N) : trunc_order(N), coeffs(static_cast<size_t>(N) + 1) {
        if (N < 0) throw std::invalid_argument("ZetaSeries: negative truncation order");
    }

    static ZetaSeries one(long N) {
        ZetaSeries s(N);
        s.coeffs[0] = ZetaPoly::constant(1);
        return s;
    }

    BigSeries at_one() const {
        BigSeries out(trunc_order);
        for (long n = 0; n <= trunc_order; ++n) out.coeffs[static_cast<size_t>(n)] = coeffs[static_cast<size_t>(n)].at_one();
        return out;
    }

    bool operator==(const ZetaSeries&) const = default;
};

inline ZetaSeries zeta_series_mul(const ZetaSeries& a, const ZetaSeries& b) {
    if (a.trunc_order != b.trunc_order)
        throw std::invalid_argument("zeta_series_mul: mismatched truncation orders");
    const long N = a.trunc_order;
    ZetaSeries out(N);
    for (long i = 0; i <= N; ++i) {
        const ZetaPoly& ai = a.coeffs[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (long k = 0; i + k <= N; ++k) {
            const ZetaPoly& bk = b.coeffs[static_cast<size_t>(k)];
            if (bk.is_zero()) continue;
            zeta_add_shifted(out.coeffs[static_cast<size_t>(i + k)], zeta_mul(ai, bk), 0);
        }
    }
    return out;
}

}  // namespace qover
