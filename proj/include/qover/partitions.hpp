#pragma once

// Exact (k,j)-coloured overpartition counts via dual product-form expansion,
// an independent combinatorial enumeration oracle, and residue-class
// congruence scanning.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qover/numeric.hpp"
#include "qover/series.hpp"

namespace qover {

// k colours, of which the first j may have their first occurrence of any part
// size overlined; standing hypothesis 0 < j <= k.
struct ColourParams {
    long k = 1;
    long j = 1;

    ColourParams() = default;
    ColourParams(long k_, long j_) : k(k_), j(j_) {
        if (j < 1 || j > k)
            throw std::invalid_argument("ColourParams: require 0 < j <= k");
    }
};

struct CongruenceClaim {
    ColourParams params;
    long ell = 5;
    long delta = 0;
    long verified_up_to = 0;
};

// Coefficients of prod (1+q^n)^j / (1-q^n)^k, cross-checked internally against
// the equivalent form (q^2;q^2)^j / (q;q)^{k+j}.
inline BigSeries coloured_overpartition_series(const ColourParams& params, long N) {
    if (N < 0) throw std::invalid_argument("coloured_overpartition_series: N must be >= 0");
    BigSeries direct = BigSeries::one(N);
    for (long m = 1; m <= N; ++m) {
        for (long t = 0; t < params.j; ++t) detail::mul_one_plus_qs(direct.coeffs, m, N);
        for (long t = 0; t < params.k; ++t) detail::mul_inv_one_minus_qs(direct.coeffs, m, N);
    }
    BigSeries rewritten = series_mul(expand_inverse_pochhammer(2, -params.j, N),
                                     expand_inverse_pochhammer(1, params.k + params.j, N));
    if (!(direct == rewritten))
        throw std::logic_error("coloured_overpartition_series: product forms disagree");
    return direct;
}

namespace detail {

// Number of ways to place colour multiplicities summing to t at one part size,
// weighting each occupied overlinable colour by 2 (overline the first
// occurrence or not).
inline std::vector<BigInt> colour_weights(const ColourParams& params, long tmax) {
    std::vector<BigInt> w(static_cast<size_t>(tmax) + 1);
    w[0] = 1;
    for (long c = 0; c < params.k; ++c) {
        std::vector<BigInt> next(w.size());
        const bool overlinable = c < params.j;
        for (long t = 0; t <= tmax; ++t) {
            if (w[static_cast<size_t>(t)] == 0) continue;
            for (long m = 0; t + m <= tmax; ++m) {
                BigInt add = w[static_cast<size_t>(t)];
                if (overlinable && m >= 1) add *= 2;
                next[static_cast<size_t>(t + m)] += add;
            }
        }
        w = std::move(next);
    }
    return w;
}

inline BigInt enumerate_rec(long remaining, long max_size, const std::vector<BigInt>& weights,
                            std::map<std::pair<long, long>, BigInt>& memo) {
    if (remaining == 0) return 1;
    if (max_size == 0) return 0;
    auto key = std::make_pair(remaining, max_size);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (long t = 0; t * max_size <= remaining; ++t) {
        BigInt sub = enumerate_rec(remaining - t * max_size, max_size - 1, weights, memo);
        if (sub != 0) total += weights[static_cast<size_t>(t)] * sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

// Direct combinatorial count, independent of any series arithmetic: recursion
// over part sizes with per-size colour multiplicity weights.
inline BigInt enumerate_coloured_overpartitions(const ColourParams& params, long n) {
    if (n < 0) throw std::invalid_argument("enumerate_coloured_overpartitions: n must be >= 0");
    if (n == 0) return 1;
    const std::vector<BigInt> weights = detail::colour_weights(params, n);
    std::map<std::pair<long, long>, BigInt> memo;
    return detail::enumerate_rec(n, n, weights, memo);
}

// Every delta in [0, ell) with pbar(ell*n + delta) divisible by ell for all
// tested indices up to N. Candidates, not proofs.
inline std::vector<CongruenceClaim> scan_congruences(const ColourParams& params, long ell, long N) {
    if (!is_small_prime(ell) || ell < 5)
        throw std::invalid_argument("scan_congruences: ell must be a prime >= 5");
    if (N < ell) throw std::invalid_argument("scan_congruences: N < ell leaves no testable case");
    const BigSeries series = coloured_overpartition_series(params, N);
    std::vector<CongruenceClaim> claims;
    for (long delta = 0; delta < ell; ++delta) {
        bool all_divisible = true;
        for (long n = delta; n <= N; n += ell) {
            if (series[n] % ell != 0) {
                all_divisible = false;
                break;
            }
        }
        if (all_divisible) claims.push_back({params, ell, delta, N});
    }
    return claims;
}

}  // namespace qover
