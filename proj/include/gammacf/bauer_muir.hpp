#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cf.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace gammacf {

// phi_m = a_m - r_{m-1} (b_m + r_m) for m = 1..N. Zero entries are returned,
// not thrown; the transform is the place that refuses them.
template <class K>
std::vector<K> adjoint_factors(const continued_fraction<K>& cf,
                               const std::function<K(long)>& r, long N) {
    std::vector<K> out;
    out.reserve(static_cast<size_t>(N));
    K rprev = r(0);
    for (long m = 1; m <= N; ++m) {
        auto [a, b] = cf.terms(m);
        K rm = r(m);
        out.push_back(a - rprev * (b + rm));
        rprev = std::move(rm);
    }
    return out;
}

// The transform against a modifying sequence r_0, r_1, ...:
//   b0' = b0 + r_0;  a1' = phi_1, b1' = b_1 + r_1;
//   m >= 2: a_m' = a_{m-1} phi_m / phi_{m-1},
//           b_m' = b_m + r_m - r_{m-2} phi_m / phi_{m-1}.
// Defined only while no adjoint factor vanishes; a vanishing phi_m raises
// adjoint_zero(m), eagerly for m <= N when a depth N is requested. The n-th
// approximant of the transform equals the modified approximant
// (A_n + r_n A_{n-1})/(B_n + r_n B_{n-1}) of the original.
template <class K>
continued_fraction<K> bauer_muir_transform(const continued_fraction<K>& cf,
                                           const std::function<K(long)>& r,
                                           std::optional<long> N = std::nullopt) {
    continued_fraction<K> out;
    out.b0 = cf.b0 + r(0);
    out.depth = cf.depth;
    term_fn<K> terms = cf.terms;
    auto phi = [terms, r](long m) -> K {
        auto [a, b] = terms(m);
        return a - r(m - 1) * (b + r(m));
    };
    if (N) {
        K zero(rational(0));
        for (long m = 1; m <= *N; ++m)
            if (phi(m) == zero) throw adjoint_zero(m);
        if (!out.depth || *out.depth > *N) out.depth = *N;
    }
    out.terms = [terms, r, phi](long m) -> std::pair<K, K> {
        K zero(rational(0));
        K pm = phi(m);
        if (pm == zero) throw adjoint_zero(m);
        if (m == 1) return {pm, terms(1).second + r(1)};
        K pprev = phi(m - 1);
        if (pprev == zero) throw adjoint_zero(m - 1);
        K q = pm / pprev;
        auto [am1, bm1] = terms(m - 1);
        K b = terms(m).second + r(m) - r(m - 2) * q;
        return {am1 * q, b};
    };
    return out;
}

template <class K>
struct constancy_report {
    bool constant_by_parity = false;
    K even_value;  // phi_{2m} when constant along that class
    K odd_value;   // phi_{2m-1} when constant along that class
    bool ratio_alternates = false;  // phi_{m+1}/phi_m == -1 throughout
};

// Exact parity-class comparison of an adjoint sequence phi_1, phi_2, ...
template <class K>
constancy_report<K> verify_constancy(const std::vector<K>& phi) {
    constancy_report<K> rep{true, K(rational(0)), K(rational(0)), !phi.empty()};
    if (phi.empty()) return rep;
    rep.odd_value = phi[0];
    if (phi.size() > 1) rep.even_value = phi[1];
    for (size_t i = 2; i < phi.size(); ++i)
        if (!(phi[i] == phi[i - 2])) {
            rep.constant_by_parity = false;
            break;
        }
    K zero(rational(0));
    for (size_t i = 0; i + 1 < phi.size(); ++i)
        if (phi[i] == zero || !(phi[i + 1] == zero - phi[i])) {
            rep.ratio_alternates = false;
            break;
        }
    if (phi.back() == zero) rep.ratio_alternates = false;
    return rep;
}

template <class K>
constancy_report<K> verify_constancy(const continued_fraction<K>& cf,
                                     const std::function<K(long)>& r, long N) {
    return verify_constancy(adjoint_factors(cf, r, 2 * N));
}

// Parity-quadratic modifying factors:
//   r_{2m} = even[0] m^2 + even[1] m + even[2],
//   r_{2m-1} = odd[0] m^2 + odd[1] m + odd[2].
struct modifying_factors {
    std::array<rational_function, 3> even;
    std::array<rational_function, 3> odd;

    bool operator==(const modifying_factors&) const = default;
};

template <class K>
std::function<K(long)> quadratic_modifier(std::array<K, 3> even, std::array<K, 3> odd) {
    return [even, odd](long m) -> K {
        const auto& c = (m % 2 == 0) ? even : odd;
        K k(rational(m % 2 == 0 ? m / 2 : (m + 1) / 2));
        return (c[0] * k + c[1]) * k + c[2];
    };
}

inline std::function<rational_function(long)> to_modifier(const modifying_factors& mf) {
    return quadratic_modifier<rational_function>(mf.even, mf.odd);
}

// ---------------------------------------------------------------------------
// Solving for modifying factors that make both adjoint parity classes
// constant. Unknowns are ordered u1, v1, w1, u2, v2, w2 where
// r_{2m} = u1 m^2 + v1 m + w1 and r_{2m-1} = u2 m^2 + v2 m + w2; the
// equations are [m^k] phi_{2m} = 0 and [m^k] phi_{2m-1} = 0 for k >= 1.
// The system is bilinear across the two coefficient triples; repeated row
// reduction over the monomial basis exposes short highest-degree equations
// to branch on, and back-substitution finishes each branch.

namespace bm_detail {

constexpr size_t NV = 6;
using mono = std::array<uint8_t, NV>;

// Sparse polynomial in the six unknowns over the field of rational functions.
struct mpoly {
    std::map<mono, rational_function> t;

    static mpoly constant(const rational_function& c) {
        mpoly p;
        if (!c.is_zero()) p.t.emplace(mono{}, c);
        return p;
    }
    static mpoly variable(size_t v) {
        mpoly p;
        mono m{};
        m[v] = 1;
        p.t.emplace(m, rational_function(rational(1)));
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const {
        return t.empty() || (t.size() == 1 && t.begin()->first == mono{});
    }
    rational_function constant_value() const {
        return t.empty() ? rational_function() : t.begin()->second;
    }

    void add_term(const mono& m, const rational_function& c) {
        auto [it, fresh] = t.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        } else if (c.is_zero()) {
            t.erase(it);
        }
    }

    friend mpoly operator+(const mpoly& a, const mpoly& b) {
        mpoly r = a;
        for (const auto& [m, c] : b.t) r.add_term(m, c);
        return r;
    }
    friend mpoly operator-(const mpoly& a, const mpoly& b) {
        mpoly r = a;
        for (const auto& [m, c] : b.t)
            r.add_term(m, rational_function(rational(-1)) * c);
        return r;
    }
    friend mpoly operator*(const mpoly& a, const mpoly& b) {
        mpoly r;
        for (const auto& [ma, ca] : a.t)
            for (const auto& [mb, cb] : b.t) {
                mono m;
                for (size_t i = 0; i < NV; ++i) {
                    int e = ma[i] + mb[i];
                    if (e > 200) throw domain_violation("unknown degree blow-up");
                    m[i] = static_cast<uint8_t>(e);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }
    mpoly scaled(const rational_function& c) const {
        mpoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : t) r.t.emplace(m, c * cc);
        return r;
    }

    long degree_in(size_t v) const {
        long d = 0;
        for (const auto& [m, c] : t) d = std::max<long>(d, m[v]);
        return d;
    }
    bool contains(size_t v) const { return degree_in(v) > 0; }

    // Coefficient of x_v^k, with the v exponent stripped.
    mpoly coeff_in(size_t v, long k) const {
        mpoly r;
        for (const auto& [m, c] : t)
            if (m[v] == k) {
                mono mm = m;
                mm[v] = 0;
                r.t.emplace(mm, c);
            }
        return r;
    }

    // Variables that actually occur.
    std::array<bool, NV> vars() const {
        std::array<bool, NV> out{};
        for (const auto& [m, c] : t)
            for (size_t i = 0; i < NV; ++i)
                if (m[i]) out[i] = true;
        return out;
    }

    mpoly substitute(size_t v, const mpoly& val) const {
        long d = degree_in(v);
        std::vector<mpoly> pow(static_cast<size_t>(d) + 1);
        pow[0] = constant(rational_function(rational(1)));
        for (long e = 1; e <= d; ++e) pow[static_cast<size_t>(e)] = pow[e - 1] * val;
        mpoly r;
        for (const auto& [m, c] : t) {
            mono mm = m;
            mm[v] = 0;
            mpoly base;
            base.t.emplace(mm, c);
            r = r + base * pow[m[v]];
        }
        return r;
    }

    rational_function eval(const std::array<rational_function, NV>& point) const {
        rational_function acc;
        for (const auto& [m, c] : t) {
            rational_function term = c;
            for (size_t i = 0; i < NV; ++i)
                for (uint8_t e = 0; e < m[i]; ++e) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }
};

// Total degree first, then lexicographic, both descending: row reduction
// works on the highest-degree monomials first.
struct mono_order {
    static int total(const mono& m) {
        int s = 0;
        for (auto e : m) s += e;
        return s;
    }
    bool operator()(const mono& a, const mono& b) const {
        int ta = total(a), tb = total(b);
        if (ta != tb) return ta > tb;
        return a > b;
    }
};

// Reduced row echelon form over the coefficient field, rows = equations,
// columns = monomials. Row operations preserve the solution set exactly and
// leave short equations (single products, univariate pieces) to branch on.
inline void row_reduce(std::vector<mpoly>& eqs) {
    std::set<mono, mono_order> cols;
    for (const auto& e : eqs)
        for (const auto& [m, c] : e.t) cols.insert(m);
    size_t pivot = 0;
    for (const mono& col : cols) {
        if (pivot >= eqs.size()) break;
        size_t found = eqs.size();
        for (size_t i = pivot; i < eqs.size(); ++i)
            if (eqs[i].t.count(col)) {
                found = i;
                break;
            }
        if (found == eqs.size()) continue;
        std::swap(eqs[pivot], eqs[found]);
        eqs[pivot] =
            eqs[pivot].scaled(rational_function(rational(1)) / eqs[pivot].t.at(col));
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (i == pivot) continue;
            auto it = eqs[i].t.find(col);
            if (it == eqs[i].t.end()) continue;
            eqs[i] = eqs[i] - eqs[pivot].scaled(it->second);
        }
        ++pivot;
    }
    std::erase_if(eqs, [](const mpoly& e) { return e.is_zero(); });
}

struct solver {
    std::vector<mpoly> original;
    mpoly const_even, const_odd;
    std::vector<std::array<rational_function, NV>> solutions;
    long nodes = 0;

    using assignment = std::array<std::optional<rational_function>, NV>;
    using relation = std::tuple<size_t, mpoly, mpoly>;  // A x_v + B = 0, A != 0

    void search(std::vector<mpoly> eqs, assignment asg, std::vector<relation> deferred,
                int depth) {
        if (++nodes > 50000 || depth > 80) return;

        row_reduce(eqs);
        std::vector<mpoly> live;
        for (auto& e : eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) return;  // nonzero constant: dead branch
            live.push_back(std::move(e));
        }
        if (live.empty()) {
            leaf(asg, deferred);
            return;
        }
        std::stable_sort(live.begin(), live.end(),
                         [](const mpoly& a, const mpoly& b) { return a.t.size() < b.t.size(); });

        // A single-monomial equation forces one of its variables to zero.
        for (const auto& e : live) {
            if (e.t.size() != 1) continue;
            const mono& m = e.t.begin()->first;
            for (size_t v = 0; v < NV; ++v) {
                if (!m[v]) continue;
                auto next = substitute_all(live, v, mpoly{});
                auto a2 = asg;
                a2[v] = rational_function(rational(0));
                search(std::move(next), a2, deferred, depth + 1);
            }
            return;
        }

        // Linear in some variable with a constant coefficient: substitute.
        for (size_t ei = 0; ei < live.size(); ++ei) {
            for (size_t v = 0; v < NV; ++v) {
                if (live[ei].degree_in(v) != 1) continue;
                mpoly A = live[ei].coeff_in(v, 1);
                if (!A.is_constant()) continue;
                mpoly B = live[ei].coeff_in(v, 0);
                mpoly val = B.scaled(rational_function(rational(-1)) / A.constant_value());
                auto next = substitute_all(live, v, val);
                next.erase(next.begin() + static_cast<long>(ei));
                deferred.emplace_back(v, A, B);
                search(std::move(next), asg, deferred, depth + 1);
                return;
            }
        }

        // Univariate quadratic over the coefficient field: take exact roots.
        for (size_t ei = 0; ei < live.size(); ++ei) {
            const auto& e = live[ei];
            auto vs = e.vars();
            size_t v = NV, count = 0;
            for (size_t i = 0; i < NV; ++i)
                if (vs[i]) {
                    v = i;
                    ++count;
                }
            if (count != 1 || e.degree_in(v) != 2) continue;
            rational_function c2 = e.coeff_in(v, 2).constant_value();
            rational_function c1 = e.coeff_in(v, 1).constant_value();
            rational_function c0 = e.coeff_in(v, 0).constant_value();
            auto s = sqrt_exact(c1 * c1 - rational_function(rational(4)) * c2 * c0);
            if (!s) return;  // no root in the field: dead branch
            for (int sign : {+1, -1}) {
                rational_function root =
                    (rational_function(rational(0)) - c1 +
                     rational_function(rational(sign)) * *s) /
                    (rational_function(rational(2)) * c2);
                auto next = substitute_all(live, v, mpoly::constant(root));
                next.erase(next.begin() + static_cast<long>(ei));
                auto a2 = asg;
                a2[v] = root;
                search(std::move(next), a2, deferred, depth + 1);
            }
            return;
        }

        // Linear in some variable with a polynomial coefficient A: either
        // A = 0 (then also B = 0), or A != 0 and the variable is eliminated
        // from the rest by pseudo-remainders against A x_v + B.
        for (size_t ei = 0; ei < live.size(); ++ei) {
            for (size_t v = 0; v < NV; ++v) {
                if (live[ei].degree_in(v) != 1) continue;
                mpoly A = live[ei].coeff_in(v, 1);
                mpoly B = live[ei].coeff_in(v, 0);

                auto zero_branch = live;
                zero_branch[ei] = A;
                zero_branch.push_back(B);
                search(std::move(zero_branch), asg, deferred, depth + 1);

                std::vector<mpoly> reduced;
                for (size_t j = 0; j < live.size(); ++j) {
                    if (j == ei) continue;
                    reduced.push_back(pseudo_reduce(live[j], A, B, v));
                }
                deferred.emplace_back(v, A, B);
                search(std::move(reduced), asg, deferred, depth + 1);
                return;
            }
        }
        // Nothing applicable; this branch is abandoned (the leaf check keeps
        // anything reported fully verified against the original system).
    }

    static std::vector<mpoly> substitute_all(const std::vector<mpoly>& eqs, size_t v,
                                             const mpoly& val) {
        std::vector<mpoly> out;
        out.reserve(eqs.size());
        for (const auto& e : eqs) out.push_back(e.substitute(v, val));
        return out;
    }

    // Eliminates x_v from e using A x_v + B = 0 with A != 0.
    static mpoly pseudo_reduce(mpoly e, const mpoly& A, const mpoly& B, size_t v) {
        mpoly L = A * mpoly::variable(v) + B;
        long d;
        while ((d = e.degree_in(v)) >= 1) {
            mpoly C = e.coeff_in(v, d);
            mpoly shift;
            mono m{};
            m[v] = static_cast<uint8_t>(d - 1);
            shift.t.emplace(m, rational_function(rational(1)));
            e = A * e - C * shift * L;
        }
        return e;
    }

    void leaf(assignment asg, const std::vector<relation>& deferred) {
        std::array<rational_function, NV> point;
        std::array<bool, NV> set{};
        for (size_t v = 0; v < NV; ++v)
            if (asg[v]) {
                point[v] = *asg[v];
                set[v] = true;
            }
        // Later relations never mention earlier deferred variables, so the
        // reverse sweep can evaluate each one completely; still-free
        // variables default to zero.
        for (auto it = deferred.rbegin(); it != deferred.rend(); ++it) {
            const auto& [v, A, B] = *it;
            for (size_t u = 0; u < NV; ++u)
                if (!set[u] && u != v && (A.contains(u) || B.contains(u))) {
                    point[u] = rational_function(rational(0));
                    set[u] = true;
                }
            rational_function a = A.eval(point);
            if (a.is_zero()) return;  // premise A != 0 fails on this branch
            point[v] = (rational_function(rational(0)) - B.eval(point)) / a;
            set[v] = true;
        }
        for (size_t v = 0; v < NV; ++v)
            if (!set[v]) point[v] = rational_function(rational(0));

        for (const auto& e : original)
            if (!e.eval(point).is_zero()) return;
        // A vanishing constant leaves no usable transform.
        if (const_even.eval(point).is_zero() || const_odd.eval(point).is_zero()) return;
        for (const auto& s : solutions)
            if (s == point) return;
        solutions.push_back(point);
    }
};

// Dense polynomials in the index m with mpoly coefficients.
using vecpoly = std::vector<mpoly>;

inline vecpoly vp_add(const vecpoly& a, const vecpoly& b) {
    vecpoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] + b[i];
    }
    return r;
}
inline vecpoly vp_sub(const vecpoly& a, const vecpoly& b) {
    vecpoly nb(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        nb[i] = mpoly::constant(rational_function(rational(0))) - b[i];
    return vp_add(a, nb);
}
inline vecpoly vp_mul(const vecpoly& a, const vecpoly& b) {
    if (a.empty() || b.empty()) return {};
    vecpoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}
inline vecpoly vp_lift(const polynomial<rational_function>& p) {
    vecpoly r;
    for (long i = 0; i <= p.degree(); ++i) r.push_back(mpoly::constant(p.coeff(i)));
    if (r.empty()) r.push_back(mpoly{});
    return r;
}

}  // namespace bm_detail

// Finds every parity-quadratic modifying sequence (over the rational
// functions in x) that makes both adjoint parity classes constant and
// nonzero. Inputs are the term templates as polynomials in the parity index:
// a_{2m} = a_even(m), a_{2m-1} = a_odd(m), likewise b. Throws
// no_solution_found when the search returns nothing.
inline std::vector<modifying_factors> solve_modifying_factors(
    const polynomial<rational_function>& a_even, const polynomial<rational_function>& a_odd,
    const polynomial<rational_function>& b_even,
    const polynomial<rational_function>& b_odd) {
    using namespace bm_detail;
    auto var = [](size_t v) { return mpoly::variable(v); };

    // r_even(m), r_odd(m), r_even(m-1)
    vecpoly re{var(2), var(1), var(0)};
    vecpoly ro{var(5), var(4), var(3)};
    vecpoly re1{var(2) - var(1) + var(0),
                var(1) - (mpoly::constant(rational_function(rational(2))) * var(0)),
                var(0)};

    vecpoly p_even = vp_sub(vp_lift(a_even), vp_mul(ro, vp_add(vp_lift(b_even), re)));
    vecpoly p_odd = vp_sub(vp_lift(a_odd), vp_mul(re1, vp_add(vp_lift(b_odd), ro)));

    solver s;
    for (size_t k = 1; k < p_even.size(); ++k) s.original.push_back(p_even[k]);
    for (size_t k = 1; k < p_odd.size(); ++k) s.original.push_back(p_odd[k]);
    s.const_even = p_even.empty() ? mpoly{} : p_even[0];
    s.const_odd = p_odd.empty() ? mpoly{} : p_odd[0];

    s.search(s.original, {}, {}, 0);

    std::vector<modifying_factors> out;
    for (const auto& p : s.solutions) {
        modifying_factors mf{{p[0], p[1], p[2]}, {p[3], p[4], p[5]}};
        // Self-consistency: every candidate must pass the exact constancy
        // check against the term templates before being reported.
        continued_fraction<rational_function> probe;
        probe.b0 = rational_function();
        probe.terms = [a_even, a_odd, b_even, b_odd](long n) {
            rational_function m(rational(n % 2 == 0 ? n / 2 : (n + 1) / 2));
            if (n % 2 == 0) return std::pair{a_even.eval(m), b_even.eval(m)};
            return std::pair{a_odd.eval(m), b_odd.eval(m)};
        };
        auto rep = verify_constancy<rational_function>(probe, to_modifier(mf), 8);
        if (!rep.constant_by_parity || rep.even_value.is_zero() || rep.odd_value.is_zero())
            continue;
        out.push_back(std::move(mf));
    }
    std::sort(out.begin(), out.end(), [](const modifying_factors& l, const modifying_factors& r) {
        auto key = [](const modifying_factors& m) {
            std::string k;
            for (const auto& c : m.even) k += c.to_string() + "|";
            for (const auto& c : m.odd) k += c.to_string() + "|";
            return k;
        };
        return key(l) < key(r);
    });
    if (out.empty()) throw no_solution_found();
    return out;
}

// Same, reading the per-parity templates off a symbolic fraction whose terms
// must be polynomial in m of degree <= 3 per parity class.
inline std::vector<modifying_factors> solve_modifying_factors(
    const continued_fraction<rational_function>& cf) {
    if (cf.depth && *cf.depth < 14)
        throw domain_violation("fraction too short to sample parity templates");
    auto fit = [&](bool even, bool want_a) {
        std::vector<std::pair<rational_function, rational_function>> pts;
        for (long m = 1; m <= 5; ++m) {
            auto [a, b] = cf.terms(even ? 2 * m : 2 * m - 1);
            pts.emplace_back(rational_function(rational(m)), want_a ? a : b);
        }
        auto p = interpolate(pts);
        if (p.degree() > 3)
            throw domain_violation("term template degree exceeds 3 in the index");
        for (long m = 6; m <= 7; ++m) {
            auto [a, b] = cf.terms(even ? 2 * m : 2 * m - 1);
            if (!(p.eval(rational_function(rational(m))) == (want_a ? a : b)))
                throw domain_violation("terms are not polynomial in the index");
        }
        return p;
    };
    return solve_modifying_factors(fit(true, true), fit(false, true), fit(true, false),
                                   fit(false, false));
}

}  // namespace gammacf
