#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "series.hpp"

namespace gammacf {

// A target function known only through its shift ratio f(x)/f(x+shift),
// an exact rational function tending to 1 at infinity. The ratio fixes
// everything about f except an overall constant, so the leading constant
// must come from the caller whenever absolute values matter; the leading
// order is recomputed from the ratio and cross-checked against the hint.
struct shift_ratio_target {
    rational_function ratio;
    long shift = 1;
    std::optional<long> leading_order;
    std::optional<rational> leading_constant;
};

// One correction level: lambda / phi(x) with phi monic of positive degree.
// tie records that some phi coefficient was unconstrained at the order it
// was meant to control and was fixed to the lexicographically-first value,
// zero.
struct correction_term {
    rational lambda;
    polynomial<rational> phi;
    bool tie = false;

    long kappa() const { return phi.degree(); }
};

// Accumulated correction levels plus the decay exponent of the remaining
// error f - MC_k. exact means the folded levels reproduce the target's
// shift ratio identically, so no further correction exists.
struct mc_expansion {
    std::vector<correction_term> terms;
    long rate = 0;
    bool exact = false;
};

// Folds the correction levels into one rational function, deepest first.
inline rational_function mc_fold(const std::vector<correction_term>& terms) {
    if (terms.empty()) throw config_error("mc_fold: no correction levels");
    rational_function acc;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        acc = rational_function(polynomial<rational>(it->lambda)) /
              (rational_function(it->phi) + acc);
    return acc;
}

// MC(x+h)/MC(x) as an exact rational function.
inline rational_function mc_shift_ratio(const std::vector<correction_term>& terms, long h) {
    rational_function f = mc_fold(terms);
    rational hh(h);
    return rational_function(f.num().shift(hh) * f.den(), f.den().shift(hh) * f.num());
}

// Expansion of ln(f(x)/f(x+h)) + ln(MC_k(x+h)/MC_k(x)) through order T.
// With no correction levels yet this is just the log of the target ratio.
inline series1x residual_series(const shift_ratio_target& target, const mc_expansion& partial,
                                long T) {
    series1x d = series_from_rational(target.ratio, T).log();
    if (!partial.terms.empty())
        d = d + series_from_rational(mc_shift_ratio(partial.terms, target.shift), T).log();
    return d;
}

namespace mc_detail {

constexpr long truncation_cap = 512;

inline rational rbinom(long n, long k) {
    rational r(1);
    for (long i = 1; i <= k; ++i) r = r * rational(n - k + i, i);
    return r;
}

inline rational rpow(const rational& b, long e) {
    rational r(1);
    for (long i = 0; i < e; ++i) r = r * b;
    return r;
}

// Recovers E from D(x) = E(x) - E(x+h): expanding (x+h)^-j coefficient-wise
// leaves a triangular system once the x^-1 term is gone. E comes back known
// through one order less than D.
inline series1x e_from_d(const series1x& d, long h) {
    if (d.known(1) && !d.coeff(1).is_zero())
        throw domain_violation("shift residual keeps a first-order term");
    long T = d.truncation();
    if (T < 2) return series1x::zero(T - 1);
    std::vector<rational> e(static_cast<size_t>(T), rational(0));  // e[j] at x^-j
    for (long t = 2; t <= T; ++t) {
        rational tot = d.coeff(t);
        for (long j = 1; j <= t - 2; ++j) {
            long i = t - j;
            rational sgn((i % 2 == 1) ? 1 : -1);
            tot = tot - e[static_cast<size_t>(j)] * sgn * rbinom(j + i - 1, i) *
                            rpow(rational(h), i);
        }
        e[static_cast<size_t>(t - 1)] = tot / (rational(t - 1) * rational(h));
    }
    return series1x::from_coeffs(1, {e.begin() + 1, e.end()}, T - 1);
}

// Caches the log of the target ratio at one truncation; evaluates the
// residual E for candidate level stacks against it.
struct residual_probe {
    const shift_ratio_target* target;
    long T;
    series1x base;

    residual_probe(const shift_ratio_target& t, long truncation)
        : target(&t), T(truncation), base(series_from_rational(t.ratio, truncation).log()) {}

    series1x d(const std::vector<correction_term>& terms) const {
        if (terms.empty()) return base;
        return base +
               series_from_rational(mc_shift_ratio(terms, target->shift), T).log();
    }
    series1x e(const std::vector<correction_term>& terms) const {
        return e_from_d(d(terms), target->shift);
    }
};

// Fits the coefficients of terms[level].phi below its leading monomial so
// that E's coefficient at base_order + s vanishes, s = 1..kappa; the slot
// for x^(kappa-s) controls order base_order + s. Each slot is solved
// affinely from two probes and the zero is re-verified. A slot with no
// effect at its order is left at zero: a tie when the order is already
// clean, otherwise the rate simply stops improving there. Returns false
// when a needed coefficient lies beyond the truncation.
inline bool fit_phi(const residual_probe& probe, std::vector<correction_term>& terms,
                    size_t level, long base_order, bool& tie) {
    long kappa = terms[level].phi.degree();
    std::vector<rational> c(static_cast<size_t>(kappa) + 1, rational(0));
    for (long i = 0; i <= kappa; ++i) c[static_cast<size_t>(i)] = terms[level].phi.coeff(i);
    auto apply = [&] { terms[level].phi = polynomial<rational>(std::vector<rational>(c)); };
    for (long s = 1; s <= kappa; ++s) {
        size_t idx = static_cast<size_t>(kappa - s);
        long order = base_order + s;
        series1x e0 = probe.e(terms);
        if (!e0.known(order)) return false;
        rational a0 = e0.coeff(order);
        rational saved = c[idx];
        c[idx] = saved + rational(1);
        apply();
        rational slope = probe.e(terms).coeff(order) - a0;
        if (slope.is_zero()) {
            c[idx] = saved;
            apply();
            if (a0.is_zero()) tie = true;
            continue;
        }
        c[idx] = saved - a0 / slope;
        apply();
        if (!probe.e(terms).coeff(order).is_zero())
            throw search_exhausted("coefficient match is not affine at order " +
                                   std::to_string(order));
    }
    return true;
}

// First level: the leading order comes off the ratio's log, the constant
// from the caller's hint, and phi's lower coefficients from the greedy fit.
inline std::optional<correction_term> try_level0(const shift_ratio_target& target, long T) {
    residual_probe probe(target, T);
    rational k0r = probe.base.coeff(1) / rational(target.shift);
    if (!k0r.is_integer() || k0r.to_long() < 1)
        throw domain_violation("shift ratio implies a non-vanishing target");
    long k0 = k0r.to_long();
    if (target.leading_order && *target.leading_order != k0)
        throw domain_violation("leading-order hint disagrees with the ratio");
    rational lam0 = target.leading_constant.value_or(rational(1));
    if (lam0.is_zero()) throw config_error("leading constant must be nonzero");
    std::vector<correction_term> terms{{lam0, polynomial<rational>::monomial(k0), false}};
    bool tie = false;
    if (!fit_phi(probe, terms, 0, 0, tie)) return std::nullopt;
    terms[0].tie = tie;
    return terms[0];
}

// Level k >= 1: the smallest kappa whose correction enters exactly at the
// residual's leading order nu is the only one that can raise the rate;
// lambda follows affinely, then phi's coefficients clear nu+1..nu+kappa.
inline std::optional<correction_term> try_next(const shift_ratio_target& target,
                                               const mc_expansion& partial, long max_kappa,
                                               long T) {
    residual_probe probe(target, T);
    std::vector<correction_term> terms = partial.terms;
    series1x e0 = probe.e(terms);
    auto nu_opt = e0.valuation();
    if (!nu_opt) {
        // MC(x+h)/MC(x) against f(x)/f(x+h): exactness means they cancel.
        if (mc_shift_ratio(terms, target.shift) * target.ratio ==
            rational_function(rational(1)))
            throw search_exhausted("target already exactly represented");
        return std::nullopt;  // residual invisible at this truncation
    }
    long nu = *nu_opt;
    bool beyond_truncation = false;
    for (long kap = 1; kap <= max_kappa; ++kap) {
        terms.push_back({rational(1), polynomial<rational>::monomial(kap), false});
        series1x e1 = probe.e(terms);
        auto entry = (e1 - e0).valuation();
        if (!entry) {
            beyond_truncation = true;
            terms.pop_back();
            continue;
        }
        if (*entry != nu) {
            terms.pop_back();
            continue;
        }
        terms.back().lambda = rational(2);
        rational a1 = e1.coeff(nu);
        rational slope = probe.e(terms).coeff(nu) - a1;
        if (slope.is_zero()) {
            terms.pop_back();
            continue;
        }
        rational lam = rational(1) - a1 / slope;
        if (lam.is_zero()) {
            terms.pop_back();
            continue;
        }
        terms.back().lambda = lam;
        if (!probe.e(terms).coeff(nu).is_zero())
            throw search_exhausted("leading coefficient is not affine in lambda");
        bool tie = false;
        if (!fit_phi(probe, terms, terms.size() - 1, nu, tie)) return std::nullopt;
        terms.back().tie = tie;
        return terms.back();
    }
    if (beyond_truncation) return std::nullopt;
    throw search_exhausted("no kappa <= " + std::to_string(max_kappa) +
                           " improves the rate");
}

inline long default_truncation(size_t levels) {
    return 2 * (static_cast<long>(levels) + 2) + 8;
}

}  // namespace mc_detail

struct search_limits {
    long max_kappa = 4;
    long truncation = 0;  // 0: derive from the level count
};

// Finds the next correction level for the target given the levels so far.
// The truncation escalates internally whenever the decision needs orders
// the current series cannot see.
inline correction_term next_correction(const shift_ratio_target& target,
                                       const mc_expansion& partial,
                                       search_limits limits = {}) {
    long T = limits.truncation > 0 ? limits.truncation
                                   : mc_detail::default_truncation(partial.terms.size());
    if (T < 8) T = 8;
    for (; T <= mc_detail::truncation_cap; T *= 2) {
        std::optional<correction_term> got =
            partial.terms.empty() ? mc_detail::try_level0(target, T)
                                  : mc_detail::try_next(target, partial, limits.max_kappa, T);
        if (got) return *got;
    }
    throw search_exhausted("residual not resolvable within truncation " +
                           std::to_string(mc_detail::truncation_cap));
}

namespace mc_detail {

// rate(f - MC_k) = kappa_0 + valuation(E_k); escalate until the valuation
// is visible or the representation proves exact.
inline void update_rate(const shift_ratio_target& target, mc_expansion& out, long seed) {
    long k0 = out.terms.front().kappa();
    long T = seed < 8 ? 8 : seed;
    for (; T <= truncation_cap; T *= 2) {
        residual_probe probe(target, T);
        if (auto v = probe.e(out.terms).valuation()) {
            out.rate = k0 + *v;
            return;
        }
        if (mc_shift_ratio(out.terms, target.shift) * target.ratio ==
            rational_function(rational(1))) {
            out.exact = true;
            return;
        }
    }
    throw search_exhausted("achieved rate not visible within truncation " +
                           std::to_string(truncation_cap));
}

}  // namespace mc_detail

// Builds depth+1 correction levels (or stops early on an exact
// representation), tracking the achieved rate. Deterministic: identical
// inputs give identical expansions.
inline mc_expansion discover(const shift_ratio_target& target, long depth, long T = 0) {
    if (depth < 0) throw config_error("discover: negative depth");
    search_limits limits;
    limits.truncation = T > 0 ? T : 2 * depth + 8;
    mc_expansion out;
    for (long k = 0; k <= depth; ++k) {
        long before = out.rate;
        out.terms.push_back(next_correction(target, out, limits));
        mc_detail::update_rate(target, out, limits.truncation);
        if (out.exact) break;
        if (k > 0 && out.rate <= before)
            throw search_exhausted("rate failed to increase at level " + std::to_string(k));
    }
    return out;
}

// A per-residue rational function of the index m, the closed-form shape the
// discovered coefficient sequences are fitted into.
struct fitted_form {
    polynomial<rational> num;
    polynomial<rational> den;  // monic
};

struct coefficient_rule {
    long period = 1;
    std::vector<fitted_form> classes;  // indexed by m mod period

    rational value_at(long m) const {
        const fitted_form& f =
            classes[static_cast<size_t>(((m % period) + period) % period)];
        rational dv = f.den.eval(rational(m));
        if (dv.is_zero()) throw template_denominator_zero(m);
        return f.num.eval(rational(m)) / dv;
    }
};

namespace mc_detail {

// Reduced row echelon form over the rationals; returns the pivot column of
// each pivot row in order.
inline std::vector<long> rref(std::vector<std::vector<rational>>& m) {
    std::vector<long> pivots;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t pr = 0;
    for (size_t col = 0; col < cols && pr < rows; ++col) {
        size_t sel = pr;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        rational lead = m[pr][col];
        for (size_t j = col; j < cols; ++j) m[pr][j] = m[pr][j] / lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || m[i][col].is_zero()) continue;
            rational f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[pr][j];
        }
        pivots.push_back(static_cast<long>(col));
        ++pr;
    }
    return pivots;
}

// Tries denominators of increasing degree; the first kernel vector that
// reproduces every sample exactly wins. Returns nothing when no shape fits.
inline std::optional<fitted_form> fit_class(
    const std::vector<std::pair<long, rational>>& samples, long max_degree) {
    long dn = max_degree;
    for (long dd = 0; dd <= max_degree; ++dd) {
        size_t cols = static_cast<size_t>(dn + dd + 2);
        std::vector<std::vector<rational>> sys;
        sys.reserve(samples.size());
        for (const auto& [m, v] : samples) {
            std::vector<rational> row(cols, rational(0));
            rational p(1);
            for (long i = 0; i <= dn; ++i) {
                row[static_cast<size_t>(i)] = p;
                p = p * rational(m);
            }
            p = rational(1);
            for (long i = 0; i <= dd; ++i) {
                row[static_cast<size_t>(dn + 1 + i)] = rational(0) - v * p;
                p = p * rational(m);
            }
            sys.push_back(std::move(row));
        }
        std::vector<long> pivots = rref(sys);
        std::vector<bool> is_pivot(cols, false);
        for (long pc : pivots) is_pivot[static_cast<size_t>(pc)] = true;
        for (size_t free_col = 0; free_col < cols; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<rational> sol(cols, rational(0));
            sol[free_col] = rational(1);
            for (size_t r = 0; r < pivots.size(); ++r)
                sol[static_cast<size_t>(pivots[r])] = rational(0) - sys[r][free_col];
            polynomial<rational> num(
                std::vector<rational>(sol.begin(), sol.begin() + dn + 1));
            polynomial<rational> den(
                std::vector<rational>(sol.begin() + dn + 1, sol.end()));
            if (den.degree() < 0) continue;
            polynomial<rational> g = gcd(num, den);
            if (g.degree() > 0) {
                num = divide(num, g).first;
                den = divide(den, g).first;
            }
            rational lead = den.coeff(den.degree());
            num = (rational(1) / lead) * num;
            den = (rational(1) / lead) * den;
            bool ok = true;
            for (const auto& [m, v] : samples) {
                rational dv = den.eval(rational(m));
                if (dv.is_zero() || !(num.eval(rational(m)) == v * dv)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return fitted_form{std::move(num), std::move(den)};
        }
    }
    return std::nullopt;
}

}  // namespace mc_detail

// Fits the sampled values to one rational function of m per residue class.
// The fit is exact: every provided sample must be reproduced, otherwise the
// rule is rejected.
inline coefficient_rule fit_coefficient_rule(const std::map<long, rational>& values,
                                             long max_degree, long period = 1) {
    if (period < 1) throw config_error("fit: period must be positive");
    if (max_degree < 0) throw config_error("fit: negative degree bound");
    std::vector<std::vector<std::pair<long, rational>>> classes(
        static_cast<size_t>(period));
    for (const auto& [m, v] : values)
        classes[static_cast<size_t>(((m % period) + period) % period)].push_back({m, v});
    coefficient_rule rule;
    rule.period = period;
    for (long r = 0; r < period; ++r) {
        const auto& samples = classes[static_cast<size_t>(r)];
        if (samples.empty())
            throw no_exact_fit("no samples for residue class " + std::to_string(r));
        auto got = mc_detail::fit_class(samples, max_degree);
        if (!got)
            throw no_exact_fit("no rational rule of degree <= " +
                               std::to_string(max_degree) + " matches residue class " +
                               std::to_string(r));
        rule.classes.push_back(std::move(*got));
    }
    return rule;
}

}  // namespace gammacf
