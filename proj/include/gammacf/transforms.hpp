#pragma once

#include <map>
#include <memory>
#include <utility>

#include "cf.hpp"
#include "errors.hpp"

namespace gammacf {

// a'_m = c_m c_{m-1} a_m, b'_m = c_m b_m with c_0 = 1. Every approximant is
// unchanged up to the common factor c_1...c_n of A_n and B_n.
template <class K>
continued_fraction<K> equivalence_transform(const continued_fraction<K>& cf,
                                            std::function<K(long)> c) {
    continued_fraction<K> out;
    out.b0 = cf.b0;
    out.depth = cf.depth;
    term_fn<K> terms = cf.terms;
    out.terms = [terms, c](long n) -> std::pair<K, K> {
        K cn = c(n);
        if (cn == K(rational(0))) throw zero_factor(n);
        K cp = n == 1 ? K(rational(1)) : c(n - 1);
        auto [a, b] = terms(n);
        return {cn * cp * a, cn * b};
    };
    return out;
}

// Even part: the fraction whose approximants are f_0, f_2, f_4, ... of the
// original. Requires b_{2m} != 0; the term cache keeps the two source terms
// each contracted term reuses.
template <class K>
continued_fraction<K> even_part(const continued_fraction<K>& cf) {
    continued_fraction<K> out;
    out.b0 = cf.b0;
    if (cf.depth) out.depth = *cf.depth / 2;

    struct state {
        term_fn<K> terms;
        std::map<long, std::pair<K, K>> cache;
        std::pair<K, K> at(long n) {
            auto it = cache.find(n);
            if (it != cache.end()) return it->second;
            auto t = terms(n);
            cache.emplace(n, t);
            if (cache.size() > 8) cache.erase(cache.begin());
            return t;
        }
    };
    auto st = std::make_shared<state>();
    st->terms = cf.terms;

    out.terms = [st](long m) -> std::pair<K, K> {
        K zero(rational(0));
        if (m == 1) {
            auto [a1, b1] = st->at(1);
            auto [a2, b2] = st->at(2);
            return {a1 * b2, a2 + b1 * b2};
        }
        auto [a2m2, b2m2] = st->at(2 * m - 2);
        auto [a2m1, b2m1] = st->at(2 * m - 1);
        auto [a2m, b2m] = st->at(2 * m);
        if (b2m2 == zero) throw contraction_undefined(m);
        K ratio = a2m1 * b2m / b2m2;
        return {K(rational(0)) - a2m2 * ratio, a2m + b2m1 * b2m + ratio};
    };
    return out;
}

// Prepends the cayley step: if F = b0 + K(a/b) then
// (1 - F)/(1 + F) = -1 + 2/((1 + b0) + K(a/b)). The map v -> (1-v)/(1+v) is
// an involution, so wrapping the wrapped fraction returns to the original
// value.
template <class K>
continued_fraction<K> moebius_wrap(const continued_fraction<K>& cf) {
    continued_fraction<K> out;
    out.b0 = K(rational(-1));
    if (cf.depth) out.depth = *cf.depth + 1;
    K b1 = K(rational(1)) + cf.b0;
    term_fn<K> terms = cf.terms;
    out.terms = [terms, b1](long n) -> std::pair<K, K> {
        if (n == 1) return {K(rational(2)), b1};
        return terms(n - 1);
    };
    return out;
}

// (1 - v)/(1 + v)
template <class K>
K moebius_value(const K& v) {
    K one(rational(1));
    if (v == K(rational(0)) - one) throw pole_at_minus_one();
    return (one - v) / (one + v);
}

}  // namespace gammacf
