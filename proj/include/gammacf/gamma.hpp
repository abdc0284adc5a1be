#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace gammacf {

// B_0, B_1, B_2, ... with B_1 = -1/2, from the defining recurrence
// sum_{k<=n} C(n+1,k) B_k = 0. Exact and cached.
inline const rational& bernoulli(long n) {
    static std::vector<rational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        rational sum(0);
        mpz_t binom;
        mpz_init(binom);
        for (long k = 0; k < m; ++k) {
            mpz_bin_uiui(binom, static_cast<unsigned long>(m) + 1,
                         static_cast<unsigned long>(k));
            rational c;
            mpq_set_z(c.raw(), binom);
            sum += c * cache[static_cast<size_t>(k)];
        }
        mpz_clear(binom);
        cache.push_back(rational(-1, m + 1) * sum);
    }
    return cache[static_cast<size_t>(n)];
}

struct lgamma_result {
    bigfloat value;
    long digits_valid;
};

namespace detail {

inline void require_positive(const rational& z, const std::string& what) {
    if (z.sign() > 0) return;
    if (z.is_integer()) throw pole_argument(what);
    throw nonpositive_argument(what);
}

}  // namespace detail

// log Gamma(z) for rational z > 0 by the divergent-series bound: raise the
// argument until the tail bound beats the target, sum the asymptotic series,
// then step back down through log z terms. digits_valid reports what the
// evaluated tail bound actually guarantees.
inline lgamma_result lgamma_stirling(const rational& z, long digits) {
    detail::require_positive(z, "log gamma argument " + z.to_string());
    long wp = digits + 25;
    bigfloat target("1e" + std::to_string(-(digits + 10)), wp);

    // Raise z so the asymptotic series can reach the target at all: the
    // smallest term of the series at argument Z has size about e^(-2 pi Z).
    rational zmin(4 * (10 + digits), 7);  // ~ (digits+10)/1.75
    long k = 0;
    rational Z = z;
    while (Z < zmin) {
        Z += rational(1);
        ++k;
    }

    bigfloat Zf(Z, wp);
    bigfloat lnZ = Zf.log();
    bigfloat two_pi = bigfloat(2, wp) * bigfloat::pi(wp);
    bigfloat S = (Zf - bigfloat(rational(1, 2), wp)) * lnZ - Zf +
                 two_pi.log() / bigfloat(2, wp);

    bigfloat Z2 = Zf * Zf;
    bigfloat zpow = Zf;  // Z^(2n-1)
    bigfloat bound = bigfloat::infinity(wp);
    for (long n = 1; n <= 2000; ++n) {
        rational c = bernoulli(2 * n) / rational(2 * n * (2 * n - 1));
        S += bigfloat(c, wp) / zpow;
        zpow = zpow * Z2;
        rational cb = bernoulli(2 * n + 2).abs() / rational((2 * n + 2) * (2 * n + 1));
        bound = bigfloat(cb, wp) / zpow;
        if (bound <= target) break;
    }

    for (long i = 0; i < k; ++i) S -= bigfloat(z + rational(i), wp).log();

    long digits_valid = digits + 10;
    if (bound > target) {
        // Did not reach the target; report what the last bound supports.
        digits_valid = 1;
        bigfloat ten(10, wp);
        while (digits_valid < digits + 10 &&
               bound <= bigfloat("1e" + std::to_string(-(digits_valid + 1)), wp))
            ++digits_valid;
    }
    return {S, digits_valid};
}

// Gamma(z) = lim n! n^z / (z (z+1) ... (z+n)), evaluated at finite n.
// Converges like n^-1, so it is a deliberately independent low-accuracy
// check, not a working evaluator.
inline bigfloat euler_product_gamma(const rational& z, long n, long digits) {
    detail::require_positive(z, "gamma argument " + z.to_string());
    long wp = digits + 15;
    bigfloat zf(z, wp);
    bigfloat nf(n, wp);
    bigfloat acc = (zf * nf.log()).exp() / zf;  // n^z / z
    for (long kk = 1; kk <= n; ++kk)
        acc = acc * bigfloat(kk, wp) / (zf + bigfloat(kk, wp));
    return acc;
}

// A signed gamma factor: mult counts how often Gamma(arg) appears, negative
// for denominator factors.
struct gamma_term {
    rational arg;
    long mult = 1;
};

// exp(sum mult * log Gamma(arg)); every argument must be positive.
inline bigfloat gamma_product(const std::vector<gamma_term>& terms, long digits) {
    long wp = digits + 25;
    bigfloat acc(0, wp);
    for (const auto& t : terms) {
        if (t.mult == 0) continue;
        auto lg = lgamma_stirling(t.arg, digits + 10);
        acc += bigfloat(t.mult, wp) * lg.value;
    }
    return acc.exp();
}

}  // namespace gammacf
