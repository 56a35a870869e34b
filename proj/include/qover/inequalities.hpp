#pragma once

// Inequality checkers over exact coefficient sequences: log-concavity fronts,
// Jensen-polynomial hyperbolicity (higher-order Turan), Bessenrodt-Ono scans,
// and a truncated entire-function Laguerre check.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qover/numeric.hpp"
#include "qover/series.hpp"

namespace qover {

struct CoeffSequence {
    std::vector<BigInt> values;
    std::string label;

    long size() const { return static_cast<long>(values.size()); }
    const BigInt& at(long n) const {
        if (n < 0 || n >= size()) throw std::out_of_range("CoeffSequence: index out of range");
        return values[static_cast<size_t>(n)];
    }
};

inline CoeffSequence sequence_from_series(const BigSeries& s, std::string label) {
    return {s.coeffs, std::move(label)};
}

// J^{d,n}(x) = sum_i binom(d,i) a(n+i) x^i.
struct JensenPoly {
    long degree = 0;
    long shift = 0;
    std::vector<BigInt> coefficients;
};

inline JensenPoly jensen_poly(const CoeffSequence& seq, long d, long n) {
    if (d < 1) throw std::invalid_argument("jensen_poly: degree must be >= 1");
    if (n < 0 || n + d >= seq.size()) throw std::out_of_range("jensen_poly: shift out of range");
    JensenPoly p{d, n, {}};
    p.coefficients.reserve(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) p.coefficients.push_back(binomial(d, i) * seq.at(n + i));
    return p;
}

namespace detail {

using RatPoly = std::vector<Rational>;  // index = degree

inline void ratpoly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly ratpoly_derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    ratpoly_trim(d);
    return d;
}

// Remainder of a by b (b nonzero), for the Sturm chain.
inline RatPoly ratpoly_rem(RatPoly a, const RatPoly& b) {
    ratpoly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const size_t offset = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[offset + i] -= factor * b[i];
        ratpoly_trim(a);
    }
    return a;
}

inline RatPoly ratpoly_gcd(RatPoly a, RatPoly b) {
    ratpoly_trim(a);
    ratpoly_trim(b);
    while (!b.empty()) {
        RatPoly r = ratpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline RatPoly ratpoly_div_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = a, quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    ratpoly_trim(rem);
    while (rem.size() >= b.size() && !rem.empty()) {
        const Rational factor = rem.back() / b.back();
        const size_t offset = rem.size() - b.size();
        quo[offset] = factor;
        for (size_t i = 0; i < b.size(); ++i) rem[offset + i] -= factor * b[i];
        ratpoly_trim(rem);
    }
    if (!rem.empty()) throw std::logic_error("ratpoly_div_exact: nonzero remainder");
    ratpoly_trim(quo);
    return quo;
}

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Number of distinct real roots via sign variations of the Sturm chain at
// -infinity and +infinity (leading-coefficient parity).
inline long sturm_distinct_real_roots(const RatPoly& p) {
    std::vector<RatPoly> chain{p, ratpoly_derivative(p)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        RatPoly r = ratpoly_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&chain](int at_infinity) {
        long v = 0;
        int prev = 0;
        for (const RatPoly& q : chain) {
            if (q.empty()) continue;
            int s = sign_of(q.back());
            if (at_infinity < 0 && (q.size() - 1) % 2 == 1) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return variations(-1) - variations(+1);
}

}  // namespace detail

// Exact all-real-roots decision: discriminant for degree <= 3, Sturm count on
// the squarefree part for degree >= 4. Leading zeros reduce the degree first.
inline bool is_hyperbolic(const JensenPoly& p) {
    std::vector<BigInt> c = p.coefficients;
    while (!c.empty() && c.back() == 0) c.pop_back();
    const long deg = static_cast<long>(c.size()) - 1;
    if (deg <= 1) return true;
    if (deg == 2) {
        const BigInt &a2 = c[2], &a1 = c[1], &a0 = c[0];
        return a1 * a1 - 4 * a2 * a0 >= 0;
    }
    if (deg == 3) {
        const BigInt &a = c[3], &b = c[2], &cc = c[1], &d = c[0];
        const BigInt disc = 18 * a * b * cc * d - 4 * b * b * b * d + b * b * cc * cc -
                            4 * a * cc * cc * cc - 27 * a * a * d * d;
        return disc >= 0;
    }
    detail::RatPoly rp;
    rp.reserve(c.size());
    for (const BigInt& v : c) rp.emplace_back(v);
    const detail::RatPoly g = detail::ratpoly_gcd(rp, detail::ratpoly_derivative(rp));
    const detail::RatPoly squarefree =
        (g.size() <= 1) ? rp : detail::ratpoly_div_exact(rp, g);
    return detail::sturm_distinct_real_roots(squarefree) ==
           static_cast<long>(squarefree.size()) - 1;
}

// Smallest n0 >= 1 with a(n)^2 > a(n-1) a(n+1) for all n0 <= n <= len-2;
// nullopt when not attained in range.
inline std::optional<long> log_concavity_front(const CoeffSequence& seq) {
    if (seq.size() < 3) throw std::invalid_argument("log_concavity_front: need length >= 3");
    const long last = seq.size() - 2;
    long front = last + 1;
    for (long n = last; n >= 1; --n) {
        if (seq.at(n) * seq.at(n) > seq.at(n - 1) * seq.at(n + 1))
            front = n;
        else
            break;
    }
    if (front > last) return std::nullopt;
    return front;
}

// Smallest m0 >= 1 such that J^{d, m-1} is hyperbolic for all m0 <= m <= len-d
// (the centred convention under which order 2 reduces to log-concavity);
// nullopt when not attained.
inline std::optional<long> turan_threshold(const CoeffSequence& seq, long order) {
    if (order < 2) throw std::invalid_argument("turan_threshold: order must be >= 2");
    if (seq.size() < order + 1) throw std::invalid_argument("turan_threshold: sequence too short");
    const long last = seq.size() - order;
    long front = last + 1;
    for (long m = last; m >= 1; --m) {
        if (is_hyperbolic(jensen_poly(seq, order, m - 1)))
            front = m;
        else
            break;
    }
    if (front > last) return std::nullopt;
    return front;
}

// Pairs 2 <= n1 <= n2 with n1+n2 <= cap violating a(n1) a(n2) > a(n1+n2):
// strict violations (<) and boundary equalities reported separately.
struct BOScanResult {
    std::vector<std::pair<long, long>> strict_violations;
    std::vector<std::pair<long, long>> equalities;
};

inline BOScanResult bessenrodt_ono_scan(const CoeffSequence& seq, long cap) {
    if (cap >= seq.size()) throw std::invalid_argument("bessenrodt_ono_scan: cap exceeds sequence range");
    BOScanResult result;
    for (long n1 = 2; 2 * n1 <= cap; ++n1) {
        for (long n2 = n1; n1 + n2 <= cap; ++n2) {
            const BigInt lhs = seq.at(n1) * seq.at(n2);
            const BigInt& rhs = seq.at(n1 + n2);
            if (lhs < rhs)
                result.strict_violations.emplace_back(n1, n2);
            else if (lhs == rhs)
                result.equalities.emplace_back(n1, n2);
        }
    }
    return result;
}

struct LaguerreResult {
    bool ok = false;
    PrecReal first_failure_x;  // meaningful only when !ok

    explicit operator bool() const { return ok; }
};

namespace detail {

// r-th derivative of E_T(x) = sum_{n<=T} a(n) x^n / n! evaluated at x.
inline PrecReal truncated_entire_derivative(const CoeffSequence& seq, long T, long r,
                                            const PrecReal& x) {
    PrecReal sum = 0, power = 1, factorial = 1;
    for (long n = r; n <= T; ++n) {
        sum += to_prec(seq.at(n)) * power / factorial;
        power *= x;
        factorial *= (n - r + 1);
    }
    return sum;
}

}  // namespace detail

// L_m[E_T](x) = (E^{(m+1)})^2 - E^{(m)} E^{(m+2)} >= 0 at each grid point, for
// the truncated entire function; truncation admissible at x only when
// a(T) x^T / T! < 1e-20 * E_T(x).
inline LaguerreResult laguerre_check(const CoeffSequence& seq, long order,
                                     const std::vector<PrecReal>& grid, long T) {
    if (order < 0) throw std::invalid_argument("laguerre_check: order must be >= 0");
    if (T + 2 >= seq.size()) throw std::invalid_argument("laguerre_check: need T + 2 < length");
    for (const PrecReal& x : grid) {
        if (x < 0) throw std::invalid_argument("laguerre_check: grid points must be >= 0");
        const PrecReal e0 = detail::truncated_entire_derivative(seq, T, 0, x);
        PrecReal tail = to_prec(seq.at(T));
        for (long n = 1; n <= T; ++n) tail *= x / n;
        if (!(tail < PrecReal("1e-20") * e0))
            throw std::domain_error("laguerre_check: grid point outside the validated radius");
        const PrecReal em = detail::truncated_entire_derivative(seq, T, order, x);
        const PrecReal em1 = detail::truncated_entire_derivative(seq, T, order + 1, x);
        const PrecReal em2 = detail::truncated_entire_derivative(seq, T, order + 2, x);
        const PrecReal lhs = em1 * em1 - em * em2;
        PrecReal scale = em1 * em1 + abs(em * em2);
        if (scale < 1) scale = 1;
        if (lhs < -PrecReal("1e-30") * scale) return {false, x};
    }
    return {true, PrecReal(0)};
}

}  // namespace qover
