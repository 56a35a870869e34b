#pragma once

// Independent truncated-product oracles for the major-arc approximants. Each
// evaluates the defining infinite product directly at q = e^{-z}, cutting off
// once the remaining factors differ from 1 by less than 10^{-(digits+5)}.

#include "qover/numeric.hpp"
#include "qover/partitions.hpp"

namespace qover_test {

inline long oracle_cutoff(const qover::PrecComplex& z) {
    const qover::PrecReal x = z.real();
    return static_cast<long>(static_cast<double>(
               (qover::kWorkingDigits + 5) * log(qover::PrecReal(10)) / x)) +
           1;
}

// prod_{n>=1} (1 - q^n)^{-1}, q = e^{-z}.
inline qover::PrecComplex oracle_partition_product(const qover::PrecComplex& z) {
    qover::PrecComplex prod = 1, t = exp(-z), tn = 1;
    const long cut = oracle_cutoff(z);
    for (long n = 1; n <= cut; ++n) {
        tn *= t;
        prod /= qover::PrecComplex(1) - tn;
    }
    return prod;
}

// prod_{n>=1} (1 + q^n)^j (1 - q^n)^{-k}, q = e^{-z}.
inline qover::PrecComplex oracle_h_product(const qover::ColourParams& params,
                                           const qover::PrecComplex& z) {
    qover::PrecComplex prod = 1, t = exp(-z), tn = 1;
    const long cut = oracle_cutoff(z);
    for (long n = 1; n <= cut; ++n) {
        tn *= t;
        for (long i = 0; i < params.j; ++i) prod *= qover::PrecComplex(1) + tn;
        for (long i = 0; i < params.k; ++i) prod /= qover::PrecComplex(1) - tn;
    }
    return prod;
}

// prod_{n>=1} (1 - zeta q^n) for zeta = e^{2 pi i num/den}, q = e^{-z}.
inline qover::PrecComplex oracle_f1_product(long num, long den, const qover::PrecComplex& z) {
    const qover::PrecReal ang = 2 * qover::prec_pi() * num / den;
    const qover::PrecComplex zeta(cos(ang), sin(ang));
    qover::PrecComplex prod = 1, t = exp(-z), tn = 1;
    const long cut = oracle_cutoff(z);
    for (long n = 1; n <= cut; ++n) {
        tn *= t;
        prod *= qover::PrecComplex(1) - zeta * tn;
    }
    return prod;
}

inline qover::PrecReal rel_err(const qover::PrecComplex& approx, const qover::PrecComplex& exact) {
    return abs(approx / exact - qover::PrecComplex(1));
}

inline qover::PrecReal rel_err(const qover::PrecReal& approx, const qover::PrecReal& exact) {
    qover::PrecReal d = approx / exact - 1;
    if (d < 0) d = -d;
    return d;
}

}  // namespace qover_test
