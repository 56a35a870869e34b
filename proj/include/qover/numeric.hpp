#pragma once

// Arithmetic substrate: arbitrary-precision integers/rationals and fixed
// 50-digit floating types. Exponentially large quantities are handled in log
// domain by callers, so nothing here depends on hardware float range.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using PrecReal = boost::multiprecision::cpp_bin_float_50;
using PrecComplex = boost::multiprecision::cpp_complex_50;

inline constexpr int kWorkingDigits = 50;
inline constexpr int kMinWorkingDigits = 30;

inline PrecReal prec_pi() { return boost::math::constants::pi<PrecReal>(); }

inline PrecReal to_prec(const BigInt& v) { return PrecReal(v); }

inline PrecReal to_prec(const Rational& v) {
    return PrecReal(boost::multiprecision::numerator(v)) /
           PrecReal(boost::multiprecision::denominator(v));
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long euler_phi(long b) {
    long result = b, m = b;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace qover
