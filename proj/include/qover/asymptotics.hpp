#pragma once

// Closed-form main term C(k,j;n), the generic Wright circle-method expansion
// engine, and numerical major-arc building blocks: eta-quotient approximants,
// the F1 root-of-unity asymptotic, weight-2 Lerch/dilogarithm evaluation, and
// the minor-arc bound with its constant-search helper.

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qover/numeric.hpp"
#include "qover/partitions.hpp"

namespace qover {

// Parameters of the expansion c(n) = n^{(-2B-3)/4} e^{2 sqrt(A n)} sum_r p_r n^{-r/2}.
struct WrightParams {
    PrecReal A;
    PrecReal B;
    std::vector<PrecReal> alphas;
    long depth = 1;
};

// Cone |y| <= M x (equivalently |arg z| <= theta) in the right half-plane.
struct ConeDomain {
    PrecReal M;
    PrecReal theta;

    ConeDomain(PrecReal M_, PrecReal theta_) : M(std::move(M_)), theta(std::move(theta_)) {
        if (M <= 0) throw std::invalid_argument("ConeDomain: aperture M must be positive");
        if (theta < 0 || theta >= prec_pi() / 2)
            throw std::invalid_argument("ConeDomain: theta must lie in [0, pi/2)");
    }

    static ConeDomain from_aperture(PrecReal M_) {
        return ConeDomain(M_, atan(M_));
    }

    bool contains(const PrecComplex& z) const {
        const PrecReal x = z.real();
        if (x <= 0) return false;
        PrecReal y = z.imag();
        if (y < 0) y = -y;
        return y <= M * x && atan(y / x) <= theta;
    }
};

// C(k,j;n) = (2k+j)^{(k+1)/4} / (2^{(2k+j+3)/2} 3^{(k+1)/4} n^{(k+3)/4}) e^{pi sqrt((2k+j)n/3)},
// assembled in log domain.
inline PrecReal main_term(const ColourParams& params, long n) {
    if (n < 1) throw std::invalid_argument("main_term: n must be >= 1");
    const PrecReal k = params.k, j = params.j, nn = n;
    const PrecReal tk = 2 * k + j;
    PrecReal log_c = (k + 1) / 4 * log(tk) - (tk + 3) / 2 * log(PrecReal(2)) -
                     (k + 1) / 4 * log(PrecReal(3)) - (k + 3) / 4 * log(nn) +
                     prec_pi() * sqrt(tk * nn / 3);
    return exp(log_c);
}

struct RatioRow {
    long n = 0;
    PrecReal ratio;
};

// Exact pbar values against the main term, one row per requested n.
inline std::vector<RatioRow> ratio_report(const ColourParams& params, const std::vector<long>& ns) {
    long maxn = 1;
    for (long n : ns) {
        if (n < 1) throw std::invalid_argument("ratio_report: n must be >= 1");
        maxn = std::max(maxn, n);
    }
    const BigSeries series = coloured_overpartition_series(params, maxn);
    std::vector<RatioRow> rows;
    rows.reserve(ns.size());
    for (long n : ns) {
        const PrecReal log_ratio = log(to_prec(series[n])) - log(main_term(params, n));
        rows.push_back({n, exp(log_ratio)});
    }
    return rows;
}

namespace detail {

inline bool is_nonpositive_integer(const PrecReal& x) {
    if (x > 0) return false;
    const PrecReal nearest = round(x);
    PrecReal diff = x - nearest;
    if (diff < 0) diff = -diff;
    return diff < PrecReal("1e-40");
}

}  // namespace detail

// Raw expansion coefficients p_r = sum_{j<=r} alpha_j c_{j,r-j} with
//   c_{j,r} = ((-1/(4 sqrt A))^r sqrt(A)^{j+B+1/2} / (2 sqrt pi))
//             * Gamma(j+B+3/2+r) / (r! Gamma(j+B+3/2-r)).
// Reciprocal-gamma convention: a pole in the denominator gamma zeroes the
// coefficient; a pole in the numerator is a parameter error.
inline std::vector<PrecReal> wright_p_terms(const WrightParams& wp) {
    if (wp.A <= 0) throw std::invalid_argument("wright_p_terms: A must be positive");
    if (wp.alphas.empty()) throw std::invalid_argument("wright_p_terms: alphas must be nonempty");
    if (wp.depth < 1) throw std::invalid_argument("wright_p_terms: depth must be >= 1");
    if (wp.depth > static_cast<long>(wp.alphas.size()))
        throw std::invalid_argument("wright_p_terms: depth exceeds the supplied alpha coefficients");
    const PrecReal sqrtA = sqrt(wp.A);
    const PrecReal half = PrecReal(1) / 2;
    std::vector<PrecReal> p(static_cast<size_t>(wp.depth), PrecReal(0));
    for (long r_total = 0; r_total < wp.depth; ++r_total) {
        for (long a = 0; a <= r_total; ++a) {
            const long r = r_total - a;
            const PrecReal base = PrecReal(a) + wp.B + 1 + half;  // j + B + 3/2
            const PrecReal num_arg = base + r;
            const PrecReal den_arg = base - r;
            if (detail::is_nonpositive_integer(num_arg))
                throw std::domain_error("wright_p_terms: gamma pole in the numerator");
            if (detail::is_nonpositive_integer(den_arg)) continue;
            PrecReal c = pow(-1 / (4 * sqrtA), r) * pow(sqrtA, PrecReal(a) + wp.B + half) /
                         (2 * sqrt(prec_pi()));
            c *= boost::math::tgamma(num_arg) /
                 (boost::math::tgamma(PrecReal(r) + 1) * boost::math::tgamma(den_arg));
            p[static_cast<size_t>(r_total)] += wp.alphas[static_cast<size_t>(a)] * c;
        }
    }
    return p;
}

inline PrecReal wright_expansion(const WrightParams& wp, long n) {
    if (n < 1) throw std::invalid_argument("wright_expansion: n must be >= 1");
    const std::vector<PrecReal> p = wright_p_terms(wp);
    const PrecReal nn = n;
    PrecReal series = 0;
    for (size_t r = 0; r < p.size(); ++r)
        series += p[r] * exp(-PrecReal(static_cast<long>(r)) / 2 * log(nn));
    const PrecReal log_prefactor = (-2 * wp.B - 3) / 4 * log(nn) + 2 * sqrt(wp.A * nn);
    return exp(log_prefactor) * series;
}

// Wright parameters that reproduce main_term at depth 1.
inline WrightParams main_term_wright_params(const ColourParams& params) {
    const PrecReal k = params.k, j = params.j;
    WrightParams wp;
    wp.A = (2 * k + j) * prec_pi() * prec_pi() / 12;
    wp.B = k / 2;
    wp.alphas = {exp(-j / 2 * log(PrecReal(2)) - k / 2 * log(2 * prec_pi()))};
    wp.depth = 1;
    return wp;
}

// 2^{-j/2} (z/2pi)^{k/2} exp(pi^2 (2k+j) / (12 z)), principal branch.
inline PrecComplex major_arc_value(const ColourParams& params, const PrecComplex& z) {
    if (z.real() <= 0) throw std::domain_error("major_arc_value: Re(z) must be positive");
    const PrecReal k = params.k, j = params.j;
    const PrecComplex log_pow = PrecComplex(k / 2) * log(z / (2 * prec_pi()));
    const PrecComplex arc = PrecComplex(prec_pi() * prec_pi() * (2 * k + j) / 12) / z;
    return exp(PrecComplex(-j / 2 * log(PrecReal(2))) + log_pow + arc);
}

// sqrt(z/2pi) exp(pi^2/(6z)): approximates (e^{-z}; e^{-z})_inf^{-1}.
inline PrecComplex eta_major(const PrecComplex& z) {
    if (z.real() <= 0) throw std::domain_error("eta_major: Re(z) must be positive");
    return sqrt(z / (2 * prec_pi())) * exp(PrecComplex(prec_pi() * prec_pi() / 6) / z);
}

// x^{1/2} exp(pi^2/(6x) - C/x) with x = Re(z).
inline PrecReal minor_arc_bound(const PrecComplex& z, const PrecReal& c_const) {
    const PrecReal x = z.real();
    if (x <= 0) throw std::domain_error("minor_arc_bound: Re(z) must be positive");
    return sqrt(x) * exp(prec_pi() * prec_pi() / (6 * x) - c_const / x);
}

namespace detail {

// log |(e^{-z}; e^{-z})_inf^{-1}|, truncated where factors are negligible.
inline PrecReal log_abs_partition_product(const PrecComplex& z) {
    const PrecReal x = z.real();
    const long cutoff = static_cast<long>(static_cast<double>((kWorkingDigits + 5) *
                                          log(PrecReal(10)) / x)) + 1;
    PrecReal acc = 0;
    PrecComplex t = exp(-z), tn = 1;
    for (long n = 1; n <= cutoff; ++n) {
        tn *= t;
        acc -= log(abs(PrecComplex(1) - tn));
    }
    return acc;
}

}  // namespace detail

// Largest constant (scaled slightly inward) for which the minor-arc bound
// dominates |(q;q)_inf^{-1}| on a y-grid over M x <= y < pi at fixed x.
inline PrecReal minor_arc_constant_search(const PrecReal& x, const PrecReal& aperture_m,
                                          long samples = 32) {
    if (x <= 0) throw std::invalid_argument("minor_arc_constant_search: x must be positive");
    if (samples < 2) throw std::invalid_argument("minor_arc_constant_search: need >= 2 samples");
    const PrecReal y0 = aperture_m * x;
    if (y0 >= prec_pi())
        throw std::invalid_argument("minor_arc_constant_search: aperture leaves no minor arc");
    const PrecReal log_bound0 = log(x) / 2 + prec_pi() * prec_pi() / (6 * x);
    PrecReal best;
    bool first = true;
    for (long i = 0; i < samples; ++i) {
        const PrecReal y = y0 + (prec_pi() - y0) * i / samples;
        const PrecReal candidate = x * (log_bound0 - detail::log_abs_partition_product(PrecComplex(x, y)));
        if (first || candidate < best) {
            best = candidate;
            first = false;
        }
    }
    if (best <= 0) return 0;
    return best * PrecReal("0.999");
}

// Re Li2(e^{i theta}) = pi^2/6 - theta(2 pi - theta)/4 on [0, 2 pi].
inline PrecReal li2_unit(const PrecReal& theta) {
    if (theta < 0 || theta > 2 * prec_pi())
        throw std::domain_error("li2_unit: theta must lie in [0, 2 pi]");
    return prec_pi() * prec_pi() / 6 - theta * (2 * prec_pi() - theta) / 4;
}

// Li2(zeta) = zeta Phi(zeta, 2, 1) for zeta = e^{2 pi i num/den}, by direct
// series; the tail after T terms is bounded by 2 / (|1-zeta| (T+1)^2) via
// summation by parts, which fixes T for the requested tolerance.
inline PrecComplex lerch_weight2(long zeta_num, long zeta_den,
                                 const PrecReal& tail_tol = PrecReal("5e-12")) {
    if (zeta_den < 1) throw std::invalid_argument("lerch_weight2: zeta_den must be >= 1");
    const long a = ((zeta_num % zeta_den) + zeta_den) % zeta_den;
    if (a == 0) return PrecComplex(prec_pi() * prec_pi() / 6);
    const PrecReal ang = 2 * prec_pi() * a / zeta_den;
    const PrecComplex step(cos(ang), sin(ang));
    const PrecReal gap = abs(PrecComplex(1) - step);
    const PrecReal t_real = sqrt(2 / (gap * tail_tol));
    const long T = static_cast<long>(static_cast<double>(t_real)) + 1;
    PrecComplex acc = 0, zpow = 1;
    for (long n = 1; n <= T; ++n) {
        zpow *= step;
        acc += zpow * (1 / PrecReal(static_cast<long long>(n) * n));
    }
    return acc;
}

// (1 - zeta)^{-1/2} exp(-Li2(zeta)/z): approximates F1(zeta; e^{-z}) for a
// primitive root zeta != 1.
inline PrecComplex f1_major_arc(long zeta_num, long zeta_den, const PrecComplex& z) {
    if (zeta_den < 1) throw std::invalid_argument("f1_major_arc: zeta_den must be >= 1");
    const long a = ((zeta_num % zeta_den) + zeta_den) % zeta_den;
    if (a == 0) throw std::domain_error("f1_major_arc: zeta = 1 requires a root of order >= 2");
    if (z.real() <= 0) throw std::domain_error("f1_major_arc: Re(z) must be positive");
    const PrecReal ang = 2 * prec_pi() * a / zeta_den;
    const PrecComplex zeta(cos(ang), sin(ang));
    const PrecComplex li2 = lerch_weight2(zeta_num, zeta_den);
    return exp(PrecComplex(PrecReal(-1) / 2) * log(PrecComplex(1) - zeta) - li2 / z);
}

}  // namespace qover
