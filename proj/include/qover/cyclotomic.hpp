#pragma once

// Exact cyclotomic arithmetic: Phi_b construction by recursive exact division,
// reduction of Laurent polynomials modulo Phi_b, exact divisibility tests and
// quotients, and rational-coordinate field elements for root-of-unity work.

#include <stdexcept>
#include <vector>

#include "qover/numeric.hpp"
#include "qover/zeta_series.hpp"

namespace qover {

// Ordinary integer polynomial, coeffs[i] = coefficient of x^i; trailing zeros
// trimmed (zero polynomial stores an empty list).
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    BigInt coeff(long i) const {
        if (i < 0 || i > degree()) return 0;
        return coeffs[static_cast<size_t>(i)];
    }

    bool operator==(const IntPoly&) const = default;
};

inline IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t k = 0; k < b.coeffs.size(); ++k)
            out.coeffs[i + k] += a.coeffs[i] * b.coeffs[k];
    }
    out.normalize();
    return out;
}

// Exact division of integer polynomials with monic divisor; throws when the
// remainder is nonzero.
inline IntPoly intpoly_div_exact(IntPoly num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("intpoly_div_exact: division by zero");
    if (den.coeffs.back() != 1)
        throw std::invalid_argument("intpoly_div_exact: divisor must be monic");
    const long dd = den.degree();
    IntPoly quo;
    if (num.degree() < dd) {
        if (!num.is_zero()) throw std::domain_error("intpoly_div_exact: nonzero remainder");
        return quo;
    }
    quo.coeffs.assign(static_cast<size_t>(num.degree() - dd) + 1, BigInt(0));
    for (long d = num.degree(); d >= dd; --d) {
        BigInt c = num.coeff(d);
        if (c == 0) continue;
        quo.coeffs[static_cast<size_t>(d - dd)] = c;
        for (long i = 0; i <= dd; ++i) num.coeffs[static_cast<size_t>(d - dd + i)] -= c * den.coeff(i);
    }
    num.normalize();
    if (!num.is_zero()) throw std::domain_error("intpoly_div_exact: nonzero remainder");
    quo.normalize();
    return quo;
}

// The b-th cyclotomic polynomial: (x^b - 1) / prod of Phi_d over proper divisors.
inline IntPoly cyclotomic_poly(long b) {
    if (b < 1) throw std::invalid_argument("cyclotomic_poly: b must be >= 1");
    IntPoly xb1;
    xb1.coeffs.assign(static_cast<size_t>(b) + 1, BigInt(0));
    xb1.coeffs[0] = -1;
    xb1.coeffs[static_cast<size_t>(b)] = 1;
    IntPoly divisor_product(std::vector<BigInt>{1});
    for (long d = 1; d < b; ++d)
        if (b % d == 0) divisor_product = intpoly_mul(divisor_product, cyclotomic_poly(d));
    return intpoly_div_exact(std::move(xb1), divisor_product);
}

// Element of Q(zeta_b) in the power basis 1, x, ..., x^{phi(b)-1} modulo Phi_b.
struct CycloElem {
    long b = 1;
    std::vector<Rational> coords;

    CycloElem() : coords(1) {}
    explicit CycloElem(long b_) : b(b_), coords(static_cast<size_t>(euler_phi(b_))) {
        if (b_ < 1) throw std::invalid_argument("CycloElem: b must be >= 1");
    }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coords.size(); ++i)
            if (coords[i] != 0) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("CycloElem: value is not rational");
        return coords[0];
    }

    bool operator==(const CycloElem&) const = default;
};

namespace detail {

// Reduces an ordinary polynomial (coefficients of x^0..x^deg, rationals) in
// place modulo the monic Phi_b, leaving degree < phi(b).
inline void reduce_poly_mod_phi(std::vector<Rational>& c, const IntPoly& phi) {
    const long dd = phi.degree();
    for (long d = static_cast<long>(c.size()) - 1; d >= dd; --d) {
        Rational top = c[static_cast<size_t>(d)];
        if (top == 0) continue;
        c[static_cast<size_t>(d)] = 0;
        for (long i = 0; i < dd; ++i)
            c[static_cast<size_t>(d - dd + i)] -= top * Rational(phi.coeff(i));
    }
    c.resize(static_cast<size_t>(dd));
}

}  // namespace detail

inline CycloElem cyclo_add(const CycloElem& a, const CycloElem& b) {
    if (a.b != b.b) throw std::invalid_argument("cyclo_add: mismatched moduli");
    CycloElem out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

inline CycloElem cyclo_scale(const CycloElem& a, const Rational& s) {
    CycloElem out = a;
    for (auto& c : out.coords) c *= s;
    return out;
}

// Multiply by x^m in Q(zeta_b); exponent taken mod b.
inline CycloElem cyclo_mul_root_power(const CycloElem& a, long m) {
    m %= a.b;
    if (m < 0) m += a.b;
    const IntPoly phi = cyclotomic_poly(a.b);
    std::vector<Rational> c(a.coords.size() + static_cast<size_t>(m));
    for (size_t i = 0; i < a.coords.size(); ++i) c[i + static_cast<size_t>(m)] = a.coords[i];
    detail::reduce_poly_mod_phi(c, phi);
    CycloElem out(a.b);
    out.coords = std::move(c);
    return out;
}

// Shifts Laurent input to nonnegative exponents by zeta^s (s the smallest
// multiple of b with s >= -lo), then reduces modulo Phi_b.
inline CycloElem reduce_mod_phi(const ZetaPoly& p, long b) {
    if (b < 1) throw std::invalid_argument("reduce_mod_phi: b must be >= 1");
    CycloElem out(b);
    if (p.is_zero()) return out;
    long s = 0;
    if (p.lo < 0) s = ((-p.lo) + b - 1) / b * b;
    const IntPoly phi = cyclotomic_poly(b);
    std::vector<Rational> c(static_cast<size_t>(p.hi() + s) + 1);
    for (long e = p.lo; e <= p.hi(); ++e) c[static_cast<size_t>(e + s)] = Rational(p.coeff(e));
    detail::reduce_poly_mod_phi(c, phi);
    out.coords = std::move(c);
    return out;
}

inline bool divides_exactly(const ZetaPoly& p, long b) { return reduce_mod_phi(p, b).is_zero(); }

// Exact Laurent quotient p / Phi_b; error when not divisible.
inline ZetaPoly laurent_quotient(const ZetaPoly& p, long b) {
    if (b < 1) throw std::invalid_argument("laurent_quotient: b must be >= 1");
    if (p.is_zero()) return {};
    long s = 0;
    if (p.lo < 0) s = ((-p.lo) + b - 1) / b * b;
    IntPoly shifted;
    shifted.coeffs.assign(static_cast<size_t>(p.hi() + s) + 1, BigInt(0));
    for (long e = p.lo; e <= p.hi(); ++e) shifted.coeffs[static_cast<size_t>(e + s)] = p.coeff(e);
    shifted.normalize();
    IntPoly quo;
    try {
        quo = intpoly_div_exact(std::move(shifted), cyclotomic_poly(b));
    } catch (const std::domain_error&) {
        throw std::domain_error(
            "laurent_quotient: not divisible by Phi_b; the congruence/crank claim fails at this coefficient");
    }
    ZetaPoly out;
    out.lo = -s;
    out.coeffs = std::move(quo.coeffs);
    out.normalize();
    return out;
}

// Substitutes zeta -> x^k in Q(zeta_b) (exponents mod b) and reduces.
inline CycloElem evaluate_at_root(const ZetaPoly& p, long b, long k) {
    if (b < 1) throw std::invalid_argument("evaluate_at_root: b must be >= 1");
    CycloElem out(b);
    if (p.is_zero()) return out;
    std::vector<Rational> c(static_cast<size_t>(b));
    for (long e = p.lo; e <= p.hi(); ++e) {
        BigInt v = p.coeff(e);
        if (v == 0) continue;
        long fold = static_cast<long>(((static_cast<long long>(e) * k) % b + b) % b);
        c[static_cast<size_t>(fold)] += Rational(v);
    }
    detail::reduce_poly_mod_phi(c, cyclotomic_poly(b));
    out.coords = std::move(c);
    return out;
}

}  // namespace qover
