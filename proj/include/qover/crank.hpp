#pragma once

// Crank-spec ingestion and validation, exact expansion of the two-variable
// generating function H^c(zeta; q), dual-method multisection (residue
// bucketing vs exact root-of-unity averaging), equidistribution deviation, and
// cyclotomic divisibility certification.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qover/cyclotomic.hpp"
#include "qover/numeric.hpp"
#include "qover/partitions.hpp"
#include "qover/series.hpp"
#include "qover/zeta_series.hpp"

namespace qover {

struct CrankSpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Post-cancellation crank generating function
//   H^c(zeta;q) = prod_j F1(1;q^{b_j})^{c_j} / prod_j F1(zeta^{+-d_j};q)^{f_j}
// with F1(zeta;q) = prod_{n>=1}(1 - zeta q^n). A denominator entry with d = 0
// denotes the zeta-independent factor F1(1;q); d >= 1 denotes the paired
// product over both signs.
struct CrankSpec {
    ColourParams params;
    std::vector<std::pair<long, long>> numerators;    // (b, c)
    std::vector<std::pair<long, long>> denominators;  // (d, f)
};

inline void validate_crank_structure(const CrankSpec& spec) {
    for (const auto& [b, c] : spec.numerators) {
        if (b < 1) throw CrankSpecError("crank spec: numerator base must be >= 1");
        if (c < 0) throw CrankSpecError("crank spec: numerator exponent must be >= 0");
    }
    bool has_zeta_denominator = false;
    long g = 0;
    for (const auto& [d, f] : spec.denominators) {
        if (d < 0) throw CrankSpecError("crank spec: denominator d must be >= 0");
        if (f < 0) throw CrankSpecError("crank spec: denominator exponent must be >= 0");
        if (d >= 1 && f >= 1) {
            has_zeta_denominator = true;
            g = gcd_long(g, d);
        }
    }
    if (!has_zeta_denominator)
        throw CrankSpecError("crank spec: need at least one denominator with d >= 1 and f >= 1");
    if (g != 1)
        throw CrankSpecError("gcd(d_j) != 1: essentially-equidistributed regime unsupported");
}

inline CrankSpec parse_crank_spec(const nlohmann::json& doc) {
    if (!doc.is_object()) throw CrankSpecError("crank spec: top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "k" && key != "j" && key != "numerators" && key != "denominators")
            throw CrankSpecError("crank spec: unknown field '" + key + "'");
    }
    if (!doc.contains("k") || !doc.contains("j") || !doc.contains("numerators") ||
        !doc.contains("denominators"))
        throw CrankSpecError("crank spec: fields k, j, numerators, denominators are required");
    CrankSpec spec;
    try {
        spec.params = ColourParams(doc.at("k").get<long>(), doc.at("j").get<long>());
    } catch (const std::invalid_argument& e) {
        throw CrankSpecError(std::string("crank spec: ") + e.what());
    }
    auto read_pairs = [](const nlohmann::json& arr, const char* what) {
        if (!arr.is_array()) throw CrankSpecError(std::string("crank spec: ") + what + " must be an array");
        std::vector<std::pair<long, long>> out;
        for (const auto& item : arr) {
            if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
                !item[1].is_number_integer())
                throw CrankSpecError(std::string("crank spec: each ") + what +
                                     " entry must be a pair of integers");
            out.emplace_back(item[0].get<long>(), item[1].get<long>());
        }
        return out;
    };
    spec.numerators = read_pairs(doc.at("numerators"), "numerators");
    spec.denominators = read_pairs(doc.at("denominators"), "denominators");
    validate_crank_structure(spec);
    return spec;
}

inline CrankSpec load_crank_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CrankSpecError("crank spec: cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw CrankSpecError("crank spec: parse error in '" + path + "': " + e.what());
    }
    return parse_crank_spec(doc);
}

// Full-Laurent expansion: coefficient n is the Laurent polynomial H_n^c(zeta).
inline ZetaSeries crank_series_laurent(const CrankSpec& spec, long N) {
    validate_crank_structure(spec);
    if (N < 0) throw std::invalid_argument("crank_series_laurent: N must be >= 0");
    ZetaSeries H = ZetaSeries::one(N);
    auto& c = H.coeffs;
    for (const auto& [b, cnt] : spec.numerators)
        for (long m = b; m <= N; m += b)
            for (long t = 0; t < cnt; ++t)
                for (long i = N; i >= m; --i) zeta_sub(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)]);
    for (const auto& [d, f] : spec.denominators) {
        for (long m = 1; m <= N; ++m) {
            if (d == 0) {
                for (long t = 0; t < f; ++t)
                    for (long i = m; i <= N; ++i)
                        zeta_add_shifted(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], 0);
            } else {
                for (long t = 0; t < f; ++t)
                    for (long i = m; i <= N; ++i)
                        zeta_add_shifted(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], d);
                for (long t = 0; t < f; ++t)
                    for (long i = m; i <= N; ++i)
                        zeta_add_shifted(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], -d);
            }
        }
    }
    return H;
}

namespace detail {

// Compact expansion with zeta-exponents reduced mod b: coefficient n is the
// vector of bucket sums over exponent classes 0..b-1.
inline std::vector<std::vector<BigInt>> crank_series_modb(const CrankSpec& spec, long b, long N) {
    validate_crank_structure(spec);
    if (b < 1) throw std::invalid_argument("crank_series_modb: b must be >= 1");
    std::vector<std::vector<BigInt>> c(static_cast<size_t>(N) + 1,
                                       std::vector<BigInt>(static_cast<size_t>(b)));
    c[0][0] = 1;
    auto add_rot = [b](std::vector<BigInt>& dst, const std::vector<BigInt>& src, long r, int sign) {
        for (long t = 0; t < b; ++t) {
            long u = t + r;
            if (u >= b) u -= b;
            if (sign > 0)
                dst[static_cast<size_t>(u)] += src[static_cast<size_t>(t)];
            else
                dst[static_cast<size_t>(u)] -= src[static_cast<size_t>(t)];
        }
    };
    for (const auto& [base, cnt] : spec.numerators)
        for (long m = base; m <= N; m += base)
            for (long t = 0; t < cnt; ++t)
                for (long i = N; i >= m; --i)
                    add_rot(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], 0, -1);
    for (const auto& [d, f] : spec.denominators) {
        const long rp = ((d % b) + b) % b;
        const long rm = (b - rp) % b;
        for (long m = 1; m <= N; ++m) {
            if (d == 0) {
                for (long t = 0; t < f; ++t)
                    for (long i = m; i <= N; ++i)
                        add_rot(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], 0, +1);
            } else {
                for (long t = 0; t < f; ++t)
                    for (long i = m; i <= N; ++i)
                        add_rot(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], rp, +1);
                for (long t = 0; t < f; ++t)
                    for (long i = m; i <= N; ++i)
                        add_rot(c[static_cast<size_t>(i)], c[static_cast<size_t>(i - m)], rm, +1);
            }
        }
    }
    return c;
}

}  // namespace detail

// True when the zeta = 1 specialization of the spec's product equals the
// coloured overpartition series; carries the first mismatching index.
struct ValidationResult {
    bool ok = false;
    long first_mismatch = -1;

    explicit operator bool() const { return ok; }
};

inline ValidationResult validate_crank(const CrankSpec& spec, long N) {
    validate_crank_structure(spec);
    if (N < 1) throw std::invalid_argument("validate_crank: N must be >= 1");
    BigSeries specialized = BigSeries::one(N);
    for (const auto& [b, cnt] : spec.numerators)
        for (long m = b; m <= N; m += b)
            for (long t = 0; t < cnt; ++t) detail::mul_one_minus_qs(specialized.coeffs, m, N);
    for (const auto& [d, f] : spec.denominators) {
        const long e = (d == 0) ? f : 2 * f;
        for (long m = 1; m <= N; ++m)
            for (long t = 0; t < e; ++t) detail::mul_inv_one_minus_qs(specialized.coeffs, m, N);
    }
    const BigSeries expected = coloured_overpartition_series(spec.params, N);
    for (long n = 0; n <= N; ++n)
        if (specialized[n] != expected[n]) return {false, n};
    return {true, -1};
}

struct MultisectionRow {
    long a = 0;
    long b = 1;
    BigSeries counts;
};

// Residue-bucket multisection: row a row holds sums of Laurent coefficients of
// H_n over zeta-exponents congruent to a mod b.
inline std::vector<MultisectionRow> multisect_bucket(const CrankSpec& spec, long b, long N) {
    if (b < 1) throw std::invalid_argument("multisect_bucket: b must be >= 1");
    const ZetaSeries H = crank_series_laurent(spec, N);
    std::vector<MultisectionRow> rows(static_cast<size_t>(b));
    for (long a = 0; a < b; ++a) rows[static_cast<size_t>(a)] = {a, b, BigSeries(N)};
    for (long n = 0; n <= N; ++n) {
        const ZetaPoly& p = H.coeffs[static_cast<size_t>(n)];
        if (p.is_zero()) continue;
        for (long e = p.lo; e <= p.hi(); ++e) {
            const long a = ((e % b) + b) % b;
            rows[static_cast<size_t>(a)].counts[n] += p.coeff(e);
        }
    }
    return rows;
}

// Root-of-unity multisection via the splitting identity
//   pbar^c(a,b;n) = (1/b) [ pbar(n) + sum_{k=1}^{b-1} zeta_b^{-ak} H_n(zeta_b^k) ],
// evaluated with exact rationals in Q(zeta_b); certifies every output integral.
inline std::vector<MultisectionRow> multisect_roots(const CrankSpec& spec, long b, long N) {
    if (b < 2) throw std::invalid_argument("multisect_roots: b must be >= 2");
    const auto reduced = detail::crank_series_modb(spec, b, N);
    const IntPoly phi = cyclotomic_poly(b);
    const long deg = phi.degree();
    std::vector<MultisectionRow> rows(static_cast<size_t>(b));
    for (long a = 0; a < b; ++a) rows[static_cast<size_t>(a)] = {a, b, BigSeries(N)};
    for (long n = 0; n <= N; ++n) {
        BigInt pbar_n = 0;
        for (const auto& v : reduced[static_cast<size_t>(n)]) pbar_n += v;
        std::vector<CycloElem> evals(static_cast<size_t>(b));
        for (long k = 1; k < b; ++k)
            evals[static_cast<size_t>(k)] =
                evaluate_at_root(ZetaPoly(0, reduced[static_cast<size_t>(n)]), b, k);
        for (long a = 0; a < b; ++a) {
            std::vector<Rational> acc(static_cast<size_t>(deg + b));
            acc[0] = Rational(pbar_n);
            for (long k = 1; k < b; ++k) {
                const long r = (b - static_cast<long>((static_cast<long long>(a) * k) % b)) % b;
                const auto& coords = evals[static_cast<size_t>(k)].coords;
                for (long i = 0; i < deg; ++i)
                    acc[static_cast<size_t>(i + r)] += coords[static_cast<size_t>(i)];
            }
            detail::reduce_poly_mod_phi(acc, phi);
            for (long i = 1; i < deg; ++i)
                if (acc[static_cast<size_t>(i)] != 0)
                    throw std::logic_error("multisect_roots: non-rational splitting value");
            const Rational value = acc[0] / b;
            if (boost::multiprecision::denominator(value) != 1)
                throw std::logic_error("multisect_roots: non-integer splitting value");
            rows[static_cast<size_t>(a)].counts[n] = boost::multiprecision::numerator(value);
        }
    }
    return rows;
}

// max_a | b * pbar^c(a,b;n) / pbar(n) - 1 |, exact until the final conversion.
inline std::vector<PrecReal> equidistribution_deviations(const CrankSpec& spec, long b,
                                                         const std::vector<long>& ns) {
    if (b < 1) throw std::invalid_argument("equidistribution_deviations: b must be >= 1");
    long maxn = 0;
    for (long n : ns) {
        if (n < 0) throw std::invalid_argument("equidistribution_deviations: n must be >= 0");
        maxn = std::max(maxn, n);
    }
    const auto reduced = detail::crank_series_modb(spec, b, maxn);
    std::vector<PrecReal> out;
    out.reserve(ns.size());
    for (long n : ns) {
        BigInt pbar_n = 0;
        for (const auto& v : reduced[static_cast<size_t>(n)]) pbar_n += v;
        if (pbar_n <= 0)
            throw std::invalid_argument("equidistribution_deviations: pbar(n) must be positive");
        Rational worst = 0;
        for (long a = 0; a < b; ++a) {
            Rational dev = Rational(b * reduced[static_cast<size_t>(n)][static_cast<size_t>(a)], pbar_n) - 1;
            if (dev < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
        out.push_back(to_prec(worst));
    }
    return out;
}

inline PrecReal equidistribution_deviation(const CrankSpec& spec, long b, long n) {
    return equidistribution_deviations(spec, b, {n})[0];
}

struct CertifyResult {
    bool ok = false;
    long first_failure = -1;

    explicit operator bool() const { return ok; }
};

// True iff Phi_ell divides H_n^c(zeta) for every n = delta, delta+ell, ... <= N.
inline CertifyResult certify_phi_divisibility(const CrankSpec& spec, long ell, long delta, long N) {
    if (delta < 0 || delta >= ell)
        throw std::invalid_argument("certify_phi_divisibility: delta must lie in [0, ell)");
    const ZetaSeries H = crank_series_laurent(spec, N);
    for (long n = delta; n <= N; n += ell)
        if (!divides_exactly(H.coeffs[static_cast<size_t>(n)], ell)) return {false, n};
    return {true, -1};
}

// Exact Laurent quotient H_n^c(zeta) / Phi_ell at one index of the progression.
inline ZetaPoly quotient_coefficients(const CrankSpec& spec, long ell, long delta, long n) {
    if (delta < 0 || delta >= ell)
        throw std::invalid_argument("quotient_coefficients: delta must lie in [0, ell)");
    if (n % ell != delta)
        throw std::invalid_argument("quotient_coefficients: n is not on the progression");
    const ZetaSeries H = crank_series_laurent(spec, n);
    return laurent_quotient(H.coeffs[static_cast<size_t>(n)], ell);
}

}  // namespace qover
