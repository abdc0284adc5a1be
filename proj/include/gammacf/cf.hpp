#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace gammacf {

// Produces the partial quotient (a_n, b_n) for raw index n >= 1.
template <class K>
using term_fn = std::function<std::pair<K, K>(long)>;

// b0 + K(a_n / b_n), optionally finite with the given number of terms.
template <class K>
struct continued_fraction {
    K b0{};
    term_fn<K> terms;
    std::optional<long> depth;
};

// One coefficient template: a polynomial in the index variable whose
// coefficients are expressions in the bound parameters, divided by another.
// An empty denominator list means the constant 1.
struct coefficient_template {
    std::vector<expression> num_coeffs;
    std::vector<expression> den_coeffs;

    static coefficient_template from_strings(const std::vector<std::string>& num,
                                             const std::vector<std::string>& den = {}) {
        coefficient_template t;
        for (const auto& s : num) t.num_coeffs.push_back(expression::parse(s));
        for (const auto& s : den) t.den_coeffs.push_back(expression::parse(s));
        return t;
    }
};

// Declarative continued fraction: b0 plus a periodic family of coefficient
// templates, optionally preceded by explicit head terms. The template for a
// term at position n past the head is selected by (n - head_size) mod period
// and evaluated at the index j = n - head_size. An optional front records how
// the fraction's value F enters the identity it came from: the identity value
// is scale / F, and `moebius` marks identities whose gamma side is the cayley
// wrap (1 - P)/(1 + P) of a gamma-product P rather than P itself.
struct cf_spec {
    std::vector<std::string> parameters;
    expression b0;
    long period = 1;
    std::vector<coefficient_template> a_case;
    std::vector<coefficient_template> b_case;
    std::vector<std::pair<expression, expression>> head;
    struct front_spec {
        expression scale;
        bool moebius = false;
    };
    std::optional<front_spec> front;
    std::optional<long> depth;
};

namespace detail {

template <class K>
struct bound_template {
    std::vector<K> num, den;

    K eval_at(long j) const {
        K n = horner(num, j);
        if (den.empty()) return n;
        K d = horner(den, j);
        if (d == K(rational(0))) throw template_denominator_zero(j);
        return n / d;
    }

  private:
    static K horner(const std::vector<K>& c, long j) {
        K x = K(rational(j));
        K acc = K(rational(0));
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
};

template <class K>
bound_template<K> bind_template(const coefficient_template& t,
                                const std::map<std::string, K>& env) {
    bound_template<K> b;
    for (const auto& e : t.num_coeffs) b.num.push_back(e.eval(env));
    for (const auto& e : t.den_coeffs) b.den.push_back(e.eval(env));
    if (b.num.empty()) throw config_error("coefficient template has no numerator");
    return b;
}

}  // namespace detail

// Instantiates the spec's terms over the field K (rational for numeric work,
// rational_function with x bound to the identity for symbolic work). All
// parameters referenced by the spec's expressions must be bound.
template <class K>
continued_fraction<K> bind_cf(const cf_spec& spec, const std::map<std::string, K>& env) {
    if (spec.period < 1) throw config_error("cf_spec: period must be at least 1");
    bool head_only = spec.a_case.empty() && spec.b_case.empty();
    if (head_only) {
        // A finite fraction may live entirely in its explicit head.
        if (!spec.depth || *spec.depth > static_cast<long>(spec.head.size()))
            throw config_error("cf_spec: templates required past the head");
    } else if (spec.a_case.size() != static_cast<size_t>(spec.period) ||
               spec.b_case.size() != static_cast<size_t>(spec.period))
        throw config_error("cf_spec: one a and one b template required per residue");

    continued_fraction<K> cf;
    cf.b0 = spec.b0.empty() ? K(rational(0)) : spec.b0.eval(env);
    cf.depth = spec.depth;

    std::vector<detail::bound_template<K>> a_bound, b_bound;
    for (long r = 0; !head_only && r < spec.period; ++r) {
        a_bound.push_back(detail::bind_template(spec.a_case[static_cast<size_t>(r)], env));
        b_bound.push_back(detail::bind_template(spec.b_case[static_cast<size_t>(r)], env));
    }
    std::vector<std::pair<K, K>> head;
    for (const auto& [ea, eb] : spec.head) head.emplace_back(ea.eval(env), eb.eval(env));

    long H = static_cast<long>(head.size());
    long P = spec.period;
    cf.terms = [a_bound, b_bound, head, H, P](long n) -> std::pair<K, K> {
        if (n < 1) throw config_error("term index must be positive");
        if (n <= H) return head[static_cast<size_t>(n - 1)];
        if (a_bound.empty()) throw config_error("term index past the finite head");
        long j = n - H;
        size_t r = static_cast<size_t>(j % P);
        return {a_bound[r].eval_at(j), b_bound[r].eval_at(j)};
    };
    return cf;
}

// ---------------------------------------------------------------------------
// Exact approximants.

template <class K>
struct approximant_pair {
    K A, B;
};

// A_0..A_N, B_0..B_N of b0 + K(a/b) by the standard three-term recurrence.
template <class K>
std::vector<approximant_pair<K>> approximants_exact(const continued_fraction<K>& cf, long N) {
    if (cf.depth && N > *cf.depth) N = *cf.depth;
    std::vector<approximant_pair<K>> out;
    out.reserve(static_cast<size_t>(N) + 1);
    K Am1 = K(rational(1)), A0 = cf.b0;
    K Bm1 = K(rational(0)), B0 = K(rational(1));
    out.push_back({A0, B0});
    for (long n = 1; n <= N; ++n) {
        auto [a, b] = cf.terms(n);
        K A1 = b * A0 + a * Am1;
        K B1 = b * B0 + a * Bm1;
        out.push_back({A1, B1});
        Am1 = std::move(A0);
        A0 = std::move(A1);
        Bm1 = std::move(B0);
        B0 = std::move(B1);
    }
    return out;
}

template <class K>
K approximant_value(const continued_fraction<K>& cf, long n) {
    auto ab = approximants_exact(cf, n);
    const auto& last = ab.back();
    if (last.B == K(rational(0))) throw zero_denominator_b(n);
    return last.A / last.B;
}

// (A_n + r A_{n-1}) / (B_n + r B_{n-1})
template <class K>
K modified_approximant(const continued_fraction<K>& cf, long n, const K& r) {
    if (n < 1) throw config_error("modified approximant needs n >= 1");
    auto ab = approximants_exact(cf, n);
    K den = ab[static_cast<size_t>(n)].B + r * ab[static_cast<size_t>(n) - 1].B;
    if (den == K(rational(0))) throw zero_denominator_b(n);
    return (ab[static_cast<size_t>(n)].A + r * ab[static_cast<size_t>(n) - 1].A) / den;
}

// ---------------------------------------------------------------------------
// Numeric evaluation.

struct eval_options {
    long digits = 40;
    std::optional<rational> tol;  // default 10^(5 - digits)
    long max_terms = 100000;
};

struct eval_report {
    bigfloat value;
    long terms_used = 0;
    bigfloat error_estimate;
    bool converged = false;
};

namespace detail {

// Gaussian elimination with partial pivoting; solves in place.
inline std::vector<bigfloat> solve_linear(std::vector<std::vector<bigfloat>> M,
                                          std::vector<bigfloat> rhs) {
    size_t S = M.size();
    for (size_t col = 0; col < S; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < S; ++r)
            if (M[r][col].abs() > M[piv][col].abs()) piv = r;
        if (M[piv][col].is_zero()) throw domain_violation("singular extrapolation system");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = col + 1; r < S; ++r) {
            if (M[r][col].is_zero()) continue;
            bigfloat f = M[r][col] / M[col][col];
            for (size_t c = col; c < S; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<bigfloat> x(S, bigfloat(0, rhs[0].digits()));
    for (size_t r = S; r-- > 0;) {
        bigfloat acc = rhs[r];
        for (size_t c = r + 1; c < S; ++c) acc -= M[r][c] * x[c];
        x[r] = acc / M[r][r];
    }
    return x;
}

// Extrapolates samples f(n_i), n_i = start + i*step, against the model
// f(n) = L + sum_j c_j n^-(p+j) + sum_j d_j n^-(2p+j); returns L.
inline bigfloat richardson(const std::vector<bigfloat>& f, long start, long step,
                           const bigfloat& p, long J1, long J2) {
    size_t S = static_cast<size_t>(1 + J1 + J2);
    if (f.size() < S) throw domain_violation("not enough extrapolation samples");
    long wp = f[0].digits();
    bigfloat two(2, wp);
    std::vector<std::vector<bigfloat>> M(S);
    std::vector<bigfloat> rhs(S, bigfloat(0, wp));
    for (size_t i = 0; i < S; ++i) {
        bigfloat n(start + static_cast<long>(i) * step, wp);
        bigfloat ln = n.log();
        M[i].push_back(bigfloat(1, wp));
        for (long j = 0; j < J1; ++j)
            M[i].push_back(((-(p + bigfloat(j, wp))) * ln).exp());
        for (long j = 0; j < J2; ++j)
            M[i].push_back(((-(two * p + bigfloat(j, wp))) * ln).exp());
        rhs[i] = f[i];
    }
    return solve_linear(std::move(M), std::move(rhs))[0];
}

}  // namespace detail

// Evaluates a continued fraction with exact rational terms to the requested
// precision. Finite fractions are evaluated directly. Infinite fractions
// first try plain approximant doubling; when the tail decays too slowly for
// that (the gamma-ratio families decay algebraically, like n^-p), the value
// is extrapolated: two Richardson solves on disjoint sample windows pin the
// decay exponent p by a secant iteration, and an independent third
// extrapolation on a coarser grid supplies the error estimate.
inline eval_report evaluate(const continued_fraction<rational>& cf,
                            const eval_options& opts = {}) {
    long wp = opts.digits + 40;
    bigfloat tol = opts.tol ? bigfloat(*opts.tol, wp)
                            : bigfloat("1e" + std::to_string(5 - opts.digits), wp);

    eval_report rep;
    rep.value = bigfloat(0, wp);
    rep.error_estimate = bigfloat(0, wp);

    // Forward recurrence state, renormalized by powers of two to keep
    // exponents bounded; renormalization cancels in every reported ratio.
    bigfloat Am1(1, wp), A0(cf.b0, wp), Bm1(0, wp), B0(1, wp);
    long n_done = 0;
    auto step_to = [&](long target) {
        for (long n = n_done + 1; n <= target; ++n) {
            auto [ar, br] = cf.terms(n);
            bigfloat a(ar, wp), b(br, wp);
            bigfloat A1 = b * A0 + a * Am1;
            bigfloat B1 = b * B0 + a * Bm1;
            Am1 = std::move(A0);
            A0 = std::move(A1);
            Bm1 = std::move(B0);
            B0 = std::move(B1);
            long e = B0.exponent2();
            if (e > 16384 || e < -16384) {
                Am1 = Am1.ldexp(-e);
                A0 = A0.ldexp(-e);
                Bm1 = Bm1.ldexp(-e);
                B0 = B0.ldexp(-e);
            }
        }
        n_done = target;
    };
    auto value_now = [&]() {
        if (B0.is_zero()) throw zero_denominator_b(n_done);
        return A0 / B0;
    };

    if (cf.depth) {
        long N = std::min(*cf.depth, opts.max_terms);
        step_to(N);
        rep.value = value_now();
        rep.terms_used = N;
        rep.converged = (N == *cf.depth);
        if (!rep.converged) rep.error_estimate = bigfloat::infinity(wp);
        return rep;
    }

    // Extrapolation windows: w1 and w2 pin p, chk cross-checks the value.
    // Every sample index is even: for positive fractions consecutive
    // approximants straddle the limit, and the smooth n^-p model only holds
    // along one parity class.
    const long J1 = 10, J2 = 6;
    long s = std::min<long>(200, std::max<long>(2, (opts.max_terms / 47) & ~1L));
    long n0 = 10 * s;
    bool extrapolate = 47 * s <= opts.max_terms;

    // The recurrence only runs forward, so doubling probes and window samples
    // are gathered in a single ascending sweep; the doubling probes both feed
    // the coarse exponent estimate and allow an early exit for fractions that
    // converge geometrically.
    std::vector<bigfloat> doubling, w1(17, bigfloat(0, wp)), w2(17, bigfloat(0, wp)),
        chk(12, bigfloat(0, wp));
    std::vector<std::tuple<long, std::vector<bigfloat>*, size_t>> wanted;
    for (long i = 0, n = 16; n <= std::min<long>(8192, opts.max_terms); n *= 2, ++i)
        wanted.emplace_back(n, nullptr, i);
    if (extrapolate) {
        for (long i = 0; i <= 16; ++i) wanted.emplace_back(n0 + i * s, &w1, i);
        for (long i = 0; i <= 11; ++i) wanted.emplace_back(n0 + 3 * s + 2 * i * s, &chk, i);
        for (long i = 0; i <= 16; ++i) wanted.emplace_back(n0 + 21 * s + i * s, &w2, i);
    }
    std::sort(wanted.begin(), wanted.end(),
              [](const auto& l, const auto& r) { return std::get<0>(l) < std::get<0>(r); });
    for (const auto& [target, vec, slot] : wanted) {
        if (target > n_done) step_to(target);
        bigfloat f = value_now();
        if (vec) {
            (*vec)[slot] = f;
            continue;
        }
        if (!doubling.empty()) {
            bigfloat diff = (f - doubling.back()).abs();
            if (diff <= tol) {
                rep.value = f;
                rep.error_estimate = diff;
                rep.terms_used = n_done;
                rep.converged = true;
                return rep;
            }
        }
        doubling.push_back(f);
    }
    rep.terms_used = n_done;

    if (!extrapolate || doubling.size() < 3) {
        // Budget too small to extrapolate; report the best value seen.
        rep.value = value_now();
        rep.error_estimate =
            doubling.size() >= 2
                ? (doubling.back() - doubling[doubling.size() - 2]).abs()
                : bigfloat::infinity(wp);
        rep.converged = false;
        return rep;
    }

    // Coarse decay exponent from the last three doubling samples.
    size_t k = doubling.size();
    bigfloat d1 = (doubling[k - 2] - doubling[k - 3]).abs();
    bigfloat d2 = (doubling[k - 1] - doubling[k - 2]).abs();
    bigfloat p_hat(5, wp);
    if (!d1.is_zero() && !d2.is_zero() && d2 < d1)
        p_hat = (d1 / d2).log() / bigfloat(2, wp).log();

    auto disagreement = [&](const bigfloat& p) {
        return detail::richardson(w1, n0, s, p, J1, J2) -
               detail::richardson(w2, n0 + 21 * s, s, p, J1, J2);
    };

    // Secant refinement of p.
    bigfloat p0 = p_hat, p1 = p_hat + p_hat * bigfloat(rational(1, 20), wp) +
                              bigfloat(rational(1, 100), wp);
    bigfloat g0 = disagreement(p0), g1 = disagreement(p1);
    bigfloat p_tiny("1e-25", wp);
    for (int it = 0; it < 60; ++it) {
        if ((p1 - p0).abs() < p_tiny) break;
        bigfloat dg = g1 - g0;
        if (dg.is_zero()) break;
        bigfloat p2 = p1 - g1 * (p1 - p0) / dg;
        if (p2 <= bigfloat(rational(1, 2), wp)) p2 = (p1 + bigfloat(1, wp)) / bigfloat(2, wp);
        p0 = p1;
        g0 = g1;
        p1 = p2;
        g1 = disagreement(p1);
    }

    bigfloat v = detail::richardson(w1, n0, s, p1, J1, J2);
    bigfloat v_chk = detail::richardson(chk, n0 + 3 * s, 2 * s, p1,
                                        std::max(J1 - 3, 2L), std::max(J2 - 2, 1L));
    rep.value = v;
    rep.error_estimate = bigfloat(8, wp) * (v - v_chk).abs();
    rep.converged = rep.error_estimate <= tol;
    return rep;
}

}  // namespace gammacf
