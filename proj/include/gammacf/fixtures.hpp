#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cf.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "io.hpp"
#include "rational.hpp"

// Built-in catalog of gamma-ratio identities. Each fixture pairs a product
// of gamma factors with the continued fraction that equals it, and carries
// the scaffolding the identity rests on: a companion fraction related by
// even-part contraction, the quadratic modifying factors of both derivation
// stages together with their adjoint constants, the shift recurrence the
// value satisfies, domain constraints, and a numeric evaluation grid.
//
// Coefficient templates are written in the raw term index: the template
// selected for residue 0 is evaluated at even indices 2m, the one for
// residue 1 at odd indices 2m - 1. Comments give the factored form in m;
// the expanded coefficient lists below are generated from it and checked
// term by term in the test suite.

namespace gammacf {

struct gamma_factor {
    expression argument;     // gamma argument in the fixture parameters
    long multiplicity = 1;   // negative multiplicities divide
};

// One derivation stage: the fraction the modifying factors transform and
// the closed form of the adjoint constant at even slots. Odd slots carry
// the negated constant; an empty closed form asserts constancy only.
struct stage_record {
    std::string label;
    cf_spec base;
    factor_spec factors;
    expression adjoint_even;
};

// The value ratio F(x) / F(x + shift) as num / den. When on_cayley is set
// the ratio holds for (F - s)/(F + s) instead, s the bound front scale.
struct recurrence_record {
    expression num;
    expression den;
    long shift = 2;
    bool on_cayley = false;
};

struct theorem_fixture {
    std::string id;
    bool conjecture = false;       // numerically supported, not derived here
    bool evaluation_only = false;  // reachable by id, outside the default suite
    cf_spec fraction;
    std::optional<cf_spec> companion;
    // +1: companion is the fraction's even part; -1: the fraction is the
    // even part of the rescaled companion; 0: no contraction recorded
    // (companions, when present, then share their even part).
    int contraction = 0;
    // Equivalence factors (even, odd slots, in the index m) applied to the
    // companion before contracting; empty expressions mean factor one.
    std::array<expression, 2> companion_rescale;
    std::vector<gamma_factor> gamma;
    std::vector<stage_record> stages;
    std::optional<recurrence_record> recurrence;
    std::vector<expression> domain_positive;  // each must evaluate > 0
    // First quick_points entries form the fast suite; the rest fill the grid.
    std::vector<std::map<std::string, rational>> grid;
    static constexpr long quick_points = 3;
};

// scale / (b0 + K) rewritten with leading term zero, so contraction
// identities can carry a front scale through term-by-term comparisons.
template <typename K>
continued_fraction<K> front_wrap(const continued_fraction<K>& cf, const K& scale) {
    continued_fraction<K> out;
    out.b0 = K(rational(0));
    if (cf.depth) out.depth = *cf.depth + 1;
    continued_fraction<K> inner = cf;
    out.terms = [inner, scale](long n) -> std::pair<K, K> {
        if (n == 1) return {scale, inner.b0};
        return inner.terms(n - 1);
    };
    return out;
}

namespace detail {

inline expression ex(const std::string& s) { return expression::parse(s); }

inline coefficient_template tpl(const std::vector<std::string>& num,
                                const std::vector<std::string>& den = {}) {
    return coefficient_template::from_strings(num, den);
}

inline factor_spec factors(const std::array<std::string, 3>& even,
                           const std::array<std::string, 3>& odd) {
    factor_spec f;
    for (size_t i = 0; i < 3; ++i) {
        f.even[i] = ex(even[i]);
        f.odd[i] = ex(odd[i]);
    }
    return f;
}

inline stage_record stage(std::string label, cf_spec base, factor_spec f,
                          const std::string& adjoint_even = "") {
    stage_record s;
    s.label = std::move(label);
    s.base = std::move(base);
    s.factors = std::move(f);
    if (!adjoint_even.empty()) s.adjoint_even = ex(adjoint_even);
    return s;
}

inline cf_spec make_cf(std::vector<std::string> params, const std::string& b0,
                       std::vector<coefficient_template> a,
                       std::vector<coefficient_template> b,
                       std::optional<std::pair<std::string, bool>> front = {}) {
    cf_spec s;
    s.parameters = std::move(params);
    s.b0 = ex(b0);
    s.period = static_cast<long>(a.size());
    s.a_case = std::move(a);
    s.b_case = std::move(b);
    if (front) s.front = cf_spec::front_spec{ex(front->first), front->second};
    return s;
}

inline std::vector<gamma_factor> gammas(
    std::initializer_list<std::pair<const char*, long>> fs) {
    std::vector<gamma_factor> v;
    for (const auto& [src, mult] : fs) v.push_back({ex(src), mult});
    return v;
}

inline recurrence_record recurrence(const std::string& num, const std::string& den,
                                    long shift = 2, bool on_cayley = false) {
    return recurrence_record{ex(num), ex(den), shift, on_cayley};
}

// Cross of x values and parameter sets. The first three entries pair
// x_k with set_{k mod #sets} so a short prefix already varies everything.
inline std::vector<std::map<std::string, rational>> cross_grid(
    const std::vector<rational>& xs,
    const std::vector<std::map<std::string, rational>>& sets) {
    std::vector<std::map<std::string, rational>> g;
    auto put = [&](size_t i, size_t s) {
        auto point = sets[s];
        point.emplace("x", xs[i]);
        for (const auto& seen : g)
            if (seen == point) return;
        g.push_back(std::move(point));
    };
    size_t total = xs.size() * sets.size();
    for (size_t k = 0; k < 3 && k < total; ++k) put(k % xs.size(), k % sets.size());
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t s = 0; s < sets.size(); ++s) put(i, s);
    return g;
}

inline std::vector<rational> default_xs() {
    return {rational(5, 2), rational(3), rational(7), rational(21, 2)};
}

inline std::vector<std::map<std::string, rational>> ab_sets() {
    return {{{"alpha", rational(1, 3)}, {"beta", rational(1, 5)}},
            {{"alpha", rational(1, 2)}, {"beta", rational(1, 3)}},
            {{"alpha", rational(1, 3)}, {"beta", rational(1, 3)}}};
}

inline std::vector<std::map<std::string, rational>> x_only_sets() {
    return {std::map<std::string, rational>{}};
}

const std::vector<std::string> xab = {"x", "alpha", "beta"};

// ---------------------------------------------------------------------------
// First family: three period-two fractions with the same gamma ratio and the
// same even part.  Shared pieces first.

inline std::vector<gamma_factor> t1_gamma() {
    return gammas({{"(x + alpha)/2", 1},
                   {"(x - alpha - beta + 1)/2", 1},
                   {"(x + beta)/2", 1},
                   {"(x - alpha + 2)/2", -1},
                   {"(x + alpha + beta + 1)/2", -1},
                   {"(x - beta + 2)/2", -1}});
}

inline recurrence_record t1_recurrence() {
    return recurrence("(x + alpha)*(x + 1 - alpha - beta)*(x + beta)",
                      "(x + 2 - alpha)*(x + 1 + alpha + beta)*(x + 2 - beta)");
}

// Shared even part: period one, a_m = p_m, b_m = x^2 + q_m with
//   p_m = -(2m - alpha - beta)(2m - 2 + alpha + beta)
//          ((2m - 1)^2 - alpha^2)((2m - 1)^2 - beta^2) / (16 (2m - 1)^2)
//   q_m = (4m^2 + alpha - alpha^2 + beta - beta^2 - alpha beta)/2
//         + alpha beta (alpha + beta - 1) / (2 (2m - 1)(2m + 1)).
inline cf_spec t1_pq_spec() {
    return make_cf(
        xab,
        "(x^2 + (alpha + beta - alpha^2 - beta^2 - alpha^2*beta - alpha*beta^2)/2)/2",
        {tpl({"alpha^4*beta^2 - alpha^4 + 2*alpha^3*beta^3 - 2*alpha^3*beta^2 - "
              "2*alpha^3*beta + 2*alpha^3 + alpha^2*beta^4 - 2*alpha^2*beta^3 - "
              "2*alpha^2*beta^2 + 2*alpha^2*beta + alpha^2 - 2*alpha*beta^3 + "
              "2*alpha*beta^2 + 2*alpha*beta - 2*alpha - beta^4 + 2*beta^3 + "
              "beta^2 - 2*beta",
              "4*alpha^4 + 8*alpha^3*beta - 8*alpha^3 + 12*alpha^2*beta^2 - "
              "8*alpha^2*beta - 12*alpha^2 + 8*alpha*beta^3 - 8*alpha*beta^2 - "
              "16*alpha*beta + 16*alpha + 4*beta^4 - 8*beta^3 - 12*beta^2 + "
              "16*beta + 4",
              "-4*alpha^4 - 8*alpha^3*beta + 8*alpha^3 - 12*alpha^2*beta^2 + "
              "8*alpha^2*beta + 44*alpha^2 - 8*alpha*beta^3 + 8*alpha*beta^2 + "
              "48*alpha*beta - 48*alpha - 4*beta^4 + 8*beta^3 + 44*beta^2 - "
              "48*beta - 36",
              "-64*alpha^2 - 64*alpha*beta + 64*alpha - 64*beta^2 + 64*beta + 128",
              "32*alpha^2 + 32*alpha*beta - 32*alpha + 32*beta^2 - 32*beta - 224",
              "192", "-64"},
             {"16", "-64", "64"})},
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha + beta^2 - beta - 2*x^2",
              "0",
              "-4*alpha^2 - 4*alpha*beta + 4*alpha - 4*beta^2 + 4*beta + 8*x^2 - 4",
              "0", "16"},
             {"-2", "0", "8"})},
        {{"2", false}});
}

// a_{2m} = (2m - 2 + alpha + beta)(2m - 1 - alpha)(2m - 1 - beta)/4
// a_{2m-1} = (2m - alpha - beta)(2m - 1 + alpha)(2m - 1 + beta)/4
// against b_{2m} = x^2 - 1, b_{2m-1} = 2m - 1.
inline cf_spec t1j1_base() {
    return make_cf(
        xab, "(x^2 - 1)/2",
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha + beta^2 - beta - 2",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta + 5", "-4", "1"},
             {"4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta", "1", "1"},
             {"4"})},
        {tpl({"x^2 - 1"}), tpl({"0", "1"})});
}

// Same numerators against d_{2m} = -(4m^2 + rho), d_{2m-1} = 2m - 1,
// rho = x^2 + 2x + 2 + alpha - alpha^2 + beta - alpha beta - beta^2.
inline cf_spec t1j1_dcf() {
    return make_cf(
        xab,
        "-(x^2 + 2*x + 2 + alpha - alpha^2 + beta - alpha*beta - beta^2)/2",
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha + beta^2 - beta - 2",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta + 5", "-4", "1"},
             {"4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta", "1", "1"},
             {"4"})},
        {tpl({"alpha^2 + alpha*beta - alpha + beta^2 - beta - x^2 - 2*x - 2",
              "0", "-1"}),
         tpl({"0", "1"})});
}

inline theorem_fixture theorem1_j1() {
    theorem_fixture f;
    f.id = "theorem1-j1";
    // display form divides the base terms by 2m - 1.
    f.fraction = make_cf(
        xab, "(x^2 - 1)/2",
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha + beta^2 - beta - 2",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta + 5", "-4", "1"},
             {"-4", "4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta", "1", "1"},
             {"0", "4"})},
        {tpl({"x^2 - 1"}), tpl({"1"})}, {{"2", false}});
    f.companion = t1_pq_spec();
    f.contraction = +1;
    f.gamma = t1_gamma();
    f.stages = {
        stage("stage1", t1j1_base(),
              factors({"0", "1 + x", "(1 - x^2)/2"},
                      {"2/(1 + x)", "-(3 + x)/(1 + x)",
                       "(2 + 2*x + x^2 + alpha - alpha^2 + beta - alpha*beta - "
                       "beta^2)/(2*(1 + x))"}),
              "-(x + alpha)*(x + beta)*(x + 1 - alpha - beta)/4"),
        // alternate factor tuple with the same base; only constancy is known.
        stage("stage1-alt", t1j1_base(),
              factors({"0", "1 - x", "(1 - x^2)/2"},
                      {"2/(1 - x)", "(x - 3)/(1 - x)",
                       "(x^2 - 2*x + 2 + alpha - alpha^2 + beta - alpha*beta - "
                       "beta^2)/(2*(1 - x))"})),
        stage("stage2", t1j1_dcf(),
              factors({"2", "1 - x",
                       "(2 + 2*x + x^2 + alpha - alpha^2 + beta - alpha*beta - "
                       "beta^2)/2"},
                      {"0", "-1", "(3 + x)/2"}),
              "(2 + x - alpha)*(2 + x - beta)*(1 + x + alpha + beta)/4"),
    };
    f.recurrence = t1_recurrence();
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

// a_{2m} = (2m - 2 + alpha + beta)(2m - 1 + alpha)(2m - 1 + beta)/4
// a_{2m-1} = (2m - alpha - beta)(2m - 1 - alpha)(2m - 1 - beta)/4
// against b_{2m} = x^2 - (1 - alpha - beta)^2, b_{2m-1} = 2m - 1.
inline cf_spec t1j2_base() {
    return make_cf(
        xab, "(x^2 - (1 - alpha - beta)^2)/2",
        {tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 4*alpha*beta + 3*alpha - "
              "beta^2 + 3*beta - 2",
              "alpha^2 + 3*alpha*beta - 5*alpha + beta^2 - 5*beta + 5",
              "2*alpha + 2*beta - 4", "1"},
             {"4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "alpha^2 + 3*alpha*beta - alpha + beta^2 - beta",
              "-2*alpha - 2*beta + 1", "1"},
             {"4"})},
        {tpl({"-alpha^2 - 2*alpha*beta + 2*alpha - beta^2 + 2*beta + x^2 - 1"}),
         tpl({"0", "1"})});
}

inline cf_spec t1j2_dcf() {
    return make_cf(
        xab, "-((x + 1)^2 + 1 - alpha - beta + alpha*beta)/2",
        {tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 4*alpha*beta + 3*alpha - "
              "beta^2 + 3*beta - 2",
              "alpha^2 + 3*alpha*beta - 5*alpha + beta^2 - 5*beta + 5",
              "2*alpha + 2*beta - 4", "1"},
             {"4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "alpha^2 + 3*alpha*beta - alpha + beta^2 - beta",
              "-2*alpha - 2*beta + 1", "1"},
             {"4"})},
        {tpl({"-alpha*beta + alpha + beta - x^2 - 2*x - 2", "0", "-1"}),
         tpl({"0", "1"})});
}

inline theorem_fixture theorem1_j2() {
    theorem_fixture f;
    f.id = "theorem1-j2";
    f.fraction = make_cf(
        xab, "(x^2 - (1 - alpha - beta)^2)/2",
        {tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 4*alpha*beta + 3*alpha - "
              "beta^2 + 3*beta - 2",
              "alpha^2 + 3*alpha*beta - 5*alpha + beta^2 - 5*beta + 5",
              "2*alpha + 2*beta - 4", "1"},
             {"-4", "4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "alpha^2 + 3*alpha*beta - alpha + beta^2 - beta",
              "-2*alpha - 2*beta + 1", "1"},
             {"0", "4"})},
        {tpl({"-alpha^2 - 2*alpha*beta + 2*alpha - beta^2 + 2*beta + x^2 - 1"}),
         tpl({"1"})},
        {{"2", false}});
    f.companion = t1_pq_spec();
    f.contraction = +1;
    f.gamma = t1_gamma();
    f.stages = {
        stage("stage1", t1j2_base(),
              factors({"0", "x + 1 - alpha - beta",
                       "-(x^2 - (1 - alpha - beta)^2)/2"},
                      {"2/(x + 1 - alpha - beta)",
                       "-1 - 2/(x + 1 - alpha - beta)",
                       "((x + 1)^2 + 1 - alpha - beta + alpha*beta)/"
                       "(2*(x + 1 - alpha - beta))"}),
              "-(x + 1)*(x + alpha)*(x + beta)/4"),
        stage("stage2", t1j2_dcf(),
              factors({"2", "-(x - 1 + alpha + beta)",
                       "((x + 1)^2 + 1 - alpha - beta + alpha*beta)/2"},
                      {"0", "-1", "1 + (x + 1 - alpha - beta)/2"}),
              "(x + 1)*(x + 2 - alpha)*(x + 2 - beta)/4"),
    };
    f.recurrence = t1_recurrence();
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

// a_{2m} = (2m - alpha - beta)(2m - 1 + alpha)(2m - 1 - beta)/4
// a_{2m-1} = (2m - 2 + alpha + beta)(2m - 1 - alpha)(2m - 1 + beta)/4
// against b_{2m} = x^2 - beta^2, b_{2m-1} = 2m - 1.
inline cf_spec t1j3_base() {
    return make_cf(
        xab, "(x^2 - beta^2)/2",
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha - beta^2 - beta",
              "-alpha^2 - alpha*beta + alpha + beta^2 + 3*beta + 1",
              "-2*beta - 2", "1"},
             {"4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "-alpha^2 - alpha*beta + alpha + beta^2 - beta", "2*beta - 1", "1"},
             {"4"})},
        {tpl({"-beta^2 + x^2"}), tpl({"0", "1"})});
}

inline cf_spec t1j3_dcf() {
    return make_cf(
        xab, "-(x^2 + 2*x + 1 + alpha - alpha^2 + beta - alpha*beta)/2",
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha - beta^2 - beta",
              "-alpha^2 - alpha*beta + alpha + beta^2 + 3*beta + 1",
              "-2*beta - 2", "1"},
             {"4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "-alpha^2 - alpha*beta + alpha + beta^2 - beta", "2*beta - 1", "1"},
             {"4"})},
        {tpl({"alpha^2 + alpha*beta - alpha - beta - x^2 - 2*x - 1", "0", "-1"}),
         tpl({"0", "1"})});
}

inline theorem_fixture theorem1_j3() {
    theorem_fixture f;
    f.id = "theorem1-j3";
    f.fraction = make_cf(
        xab, "(x^2 - beta^2)/2",
        {tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha - beta^2 - beta",
              "-alpha^2 - alpha*beta + alpha + beta^2 + 3*beta + 1",
              "-2*beta - 2", "1"},
             {"-4", "4"}),
         tpl({"-alpha^2*beta - alpha*beta^2 + alpha*beta",
              "-alpha^2 - alpha*beta + alpha + beta^2 - beta", "2*beta - 1", "1"},
             {"0", "4"})},
        {tpl({"-beta^2 + x^2"}), tpl({"1"})}, {{"2", false}});
    f.companion = t1_pq_spec();
    f.contraction = +1;
    f.gamma = t1_gamma();
    f.stages = {
        stage("stage1", t1j3_base(),
              factors({"0", "x + beta", "(beta^2 - x^2)/2"},
                      {"2/(x + beta)", "-(2 + x + beta)/(x + beta)",
                       "(1 + 2*x + x^2 + alpha - alpha^2 + beta - alpha*beta)/"
                       "(2*(x + beta))"}),
              "-(x + 1)*(x + alpha)*(x + 1 - alpha - beta)/4"),
        stage("stage2", t1j3_dcf(),
              factors({"2", "beta - x",
                       "(1 + 2*x + x^2 + alpha - alpha^2 + beta - alpha*beta)/2"},
                      {"0", "-1", "(2 + x + beta)/2"}),
              "(1 + x)*(2 + x - alpha)*(1 + x + alpha + beta)/4"),
    };
    f.recurrence = t1_recurrence();
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

// ---------------------------------------------------------------------------
// Second fixture: same quarter products, constant-x partial denominators.
// a_{2m} = (2m - alpha - beta)(2m - 1 + alpha)(2m - 1 + beta)/4
// a_{2m-1} = (2m - 2 + alpha + beta)(2m - 1 - alpha)(2m - 1 - beta)/4.

inline cf_spec t2_base() {
    return make_cf(
        xab, "x/2",
        {tpl({"-alpha^2*beta + alpha^2 - alpha*beta^2 + 2*alpha*beta - alpha + "
              "beta^2 - beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta + 1", "-2", "1"},
             {"4"}),
         tpl({"alpha^2*beta + alpha*beta^2 - alpha*beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta", "-1", "1"},
             {"4"})},
        {tpl({"x"}), tpl({"0", "x"})});
}

inline cf_spec t2_dcf() {
    return make_cf(
        xab, "(-(x - 1)^2 + alpha^2 - alpha + alpha*beta + beta^2 - beta)/2",
        {tpl({"-alpha^2*beta + alpha^2 - alpha*beta^2 + 2*alpha*beta - alpha + "
              "beta^2 - beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta + 1", "-2", "1"},
             {"4"}),
         tpl({"alpha^2*beta + alpha*beta^2 - alpha*beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta", "-1", "1"},
             {"4"})},
        {tpl({"alpha^2 + alpha*beta - alpha + beta^2 - beta - x^2 + 2*x - 1",
              "0", "-1"}),
         tpl({"0", "1"})});
}

inline theorem_fixture theorem2() {
    theorem_fixture f;
    f.id = "theorem2";
    f.fraction = make_cf(
        xab, "x/2",
        {tpl({"-alpha^2*beta + alpha^2 - alpha*beta^2 + 2*alpha*beta - alpha + "
              "beta^2 - beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta + 1", "-2", "1"},
             {"-4", "4"}),
         tpl({"alpha^2*beta + alpha*beta^2 - alpha*beta",
              "-alpha^2 - alpha*beta + alpha - beta^2 + beta", "-1", "1"},
             {"0", "4"})},
        {tpl({"x"}), tpl({"x"})}, {{"1", false}});
    f.gamma = gammas({{"(x - alpha + 1)/2", 1},
                      {"(x + alpha + beta)/2", 1},
                      {"(x - beta + 1)/2", 1},
                      {"(x + alpha + 1)/2", -1},
                      {"(x - alpha - beta + 2)/2", -1},
                      {"(x + beta + 1)/2", -1}});
    f.stages = {
        stage("stage1", t2_base(),
              factors({"0", "-1", "-x/2"},
                      {"-2", "2 - x",
                       "(-(x - 1)^2 + alpha^2 - alpha + alpha*beta + beta^2 - "
                       "beta)/2"}),
              "(x - 1 + alpha)*(x - alpha - beta)*(x - 1 + beta)/4"),
        stage("stage2", t2_dcf(),
              factors({"2", "x",
                       "((x - 1)^2 - alpha^2 + alpha - alpha*beta - beta^2 + "
                       "beta)/2"},
                      {"0", "-1", "1 - x/2"}),
              "-(x - 1 - alpha)*(x - 2 + alpha + beta)*(x - 1 - beta)/4"),
    };
    f.recurrence = recurrence("(x + 1 - alpha)*(x + alpha + beta)*(x + 1 - beta)",
                              "(x + 1 + alpha)*(x + 2 - alpha - beta)*(x + 1 + beta)");
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

// ---------------------------------------------------------------------------
// Third and fourth fixtures share their numerators
// a_{2m} = (2m - alpha - beta)(2m - alpha)(2m - beta)/4
// a_{2m-1} = (2m - 2 + alpha + beta)(2m - 2 + alpha)(2m - 2 + beta)/4
// and swap which parity of slots carries omega = x + 2 - 2 alpha - 2 beta.

inline cf_spec t3_base() {
    return make_cf(
        xab, "(x + 2 - 2*alpha - 2*beta)/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "-2*alpha - 2*beta", "1"},
             {"4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 3*alpha*beta + 2*alpha - "
              "beta^2 + 2*beta - 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "2*alpha + 2*beta - 3", "1"},
             {"4"})},
        {tpl({"-2*alpha - 2*beta + x + 2"}), tpl({"0", "x"})});
}

inline cf_spec t3_dcf() {
    return make_cf(
        xab, "((x - alpha - beta)^2 + alpha*beta)/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "-2*alpha - 2*beta", "1"},
             {"4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 3*alpha*beta + 2*alpha - "
              "beta^2 + 2*beta - 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "2*alpha + 2*beta - 3", "1"},
             {"4"})},
        {tpl({"-alpha^2 - 3*alpha*beta + 2*alpha*x - beta^2 + 2*beta*x - x^2",
              "0", "-1"}),
         tpl({"0", "1"})});
}

inline theorem_fixture theorem3() {
    theorem_fixture f;
    f.id = "theorem3";
    f.fraction = make_cf(
        xab, "(x + 2 - 2*alpha - 2*beta)/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "-2*alpha - 2*beta", "1"},
             {"-4", "4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 3*alpha*beta + 2*alpha - "
              "beta^2 + 2*beta - 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "2*alpha + 2*beta - 3", "1"},
             {"0", "4"})},
        {tpl({"-2*alpha - 2*beta + x + 2"}), tpl({"x"})}, {{"1", false}});
    f.gamma = gammas({{"(x - 2*alpha - beta + 2)/2", 1},
                      {"(x + 2)/2", 1},
                      {"(x - alpha - 2*beta + 2)/2", 1},
                      {"(x - alpha + 2)/2", -1},
                      {"(x - 2*alpha - 2*beta + 4)/2", -1},
                      {"(x - beta + 2)/2", -1}});
    f.stages = {
        stage("stage1", t3_base(),
              factors({"0", "-(x + 2 - 2*alpha - 2*beta)/x",
                       "-(x + 2 - 2*alpha - 2*beta)/2"},
                      {"-2*x/(x + 2 - 2*alpha - 2*beta)",
                       "-x + 2*x/(x + 2 - 2*alpha - 2*beta)",
                       "-x*((x - alpha - beta)^2 + alpha*beta)/"
                       "(2*(x + 2 - 2*alpha - 2*beta))"}),
              "(x - alpha)*(x - alpha - beta)*(x - beta)/4"),
        stage("stage2", t3_dcf(),
              factors({"2", "x", "((x - alpha - beta)^2 + alpha*beta)/2"},
                      {"0", "-1", "alpha + beta - x/2"}),
              "-(x - alpha - 2*beta)*(x - alpha - beta)*(x - 2*alpha - beta)/4"),
    };
    f.recurrence =
        recurrence("(x + 2 - alpha - 2*beta)*(x + 2)*(x + 2 - 2*alpha - beta)",
                   "(x + 2 - alpha)*(x + 4 - 2*alpha - 2*beta)*(x + 2 - beta)");
    f.domain_positive = {ex("x - 1 + alpha + beta")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

inline cf_spec t4_base() {
    return make_cf(
        xab, "x/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "-2*alpha - 2*beta", "1"},
             {"4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 3*alpha*beta + 2*alpha - "
              "beta^2 + 2*beta - 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "2*alpha + 2*beta - 3", "1"},
             {"4"})},
        {tpl({"x"}), tpl({"0", "-2*alpha - 2*beta + x + 2"})});
}

inline cf_spec t4_dcf() {
    return make_cf(
        xab, "((x - alpha + 2)^2 + (-4 - 2*x + 3*alpha)*beta + beta^2)/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "-2*alpha - 2*beta", "1"},
             {"4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 3*alpha*beta + 2*alpha - "
              "beta^2 + 2*beta - 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "2*alpha + 2*beta - 3", "1"},
             {"4"})},
        {tpl({"alpha^2 + 3*alpha*beta - 2*alpha*x - 4*alpha + beta^2 - 2*beta*x - "
              "4*beta + x^2 + 4*x + 4",
              "0", "1"}),
         tpl({"0", "-1"})});
}

inline theorem_fixture theorem4() {
    theorem_fixture f;
    f.id = "theorem4";
    f.fraction = make_cf(
        xab, "x/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "-2*alpha - 2*beta", "1"},
             {"-4", "4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - 3*alpha*beta + 2*alpha - "
              "beta^2 + 2*beta - 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "2*alpha + 2*beta - 3", "1"},
             {"0", "4"})},
        {tpl({"x"}), tpl({"-2*alpha - 2*beta + x + 2"})}, {{"1", false}});
    f.gamma = gammas({{"(x - 2*alpha - beta + 2)/2", 1},
                      {"x/2", 1},
                      {"(x - alpha - 2*beta + 2)/2", 1},
                      {"(x - alpha + 2)/2", -1},
                      {"(x - 2*alpha - 2*beta + 2)/2", -1},
                      {"(x - beta + 2)/2", -1}});
    f.stages = {
        stage("stage1", t4_base(),
              factors({"0", "x/(x + 2 - 2*alpha - 2*beta)", "-x/2"},
                      {"2*(x + 2 - 2*alpha - 2*beta)/x",
                       "-(2 + x)*(x + 2 - 2*alpha - 2*beta)/x",
                       "((x - alpha + 2)^2 + (-4 - 2*x + 3*alpha)*beta + beta^2)*"
                       "(x + 2 - 2*alpha - 2*beta)/(2*x)"}),
              "-(x + 2 - alpha - 2*beta)*(x + 2 - alpha - beta)*"
              "(x + 2 - 2*alpha - beta)/4"),
        stage("stage2", t4_dcf(),
              factors({"-2", "x + 2 - 2*alpha - 2*beta",
                       "-((x - alpha + 2)^2 + (-4 - 2*x + 3*alpha)*beta + "
                       "beta^2)/2"},
                      {"0", "1", "-1 - x/2"}),
              "(x + 2 - alpha)*(x + 2 - alpha - beta)*(x + 2 - beta)/4"),
    };
    f.recurrence =
        recurrence("(x + 2 - alpha - 2*beta)*x*(x + 2 - 2*alpha - beta)",
                   "(x + 2 - alpha)*(x + 2 - 2*alpha - 2*beta)*(x + 2 - beta)");
    f.domain_positive = {ex("x - 1 + alpha + beta")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

// ---------------------------------------------------------------------------
// Fifth fixture: the gamma side enters through (1 - P)/(1 + P) and the
// fraction's front scale is sigma = alpha beta (alpha + beta)/4.  The
// period-two companion
//   a_{2m} = (2m + alpha)(2m - alpha - beta)(2m + beta)/4,  b_{2m} = (2m + 1)(x^2 - 1)
//   a_{2m-1} = (2m - alpha)(2m + alpha + beta)(2m - beta)/4, b_{2m-1} = 1
// contracts onto the period-one display form after dividing even slots by 2m + 1.

inline cf_spec t5_ab_spec() {
    return make_cf(
        xab, "x^2 - 1 - alpha*beta*(alpha + beta)/4",
        {tpl({"-alpha^2*beta - alpha*beta^2", "-alpha^2 - alpha*beta - beta^2",
              "0", "1"},
             {"4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - alpha*beta - beta^2 + 1",
              "-alpha^2 - alpha*beta - beta^2 + 3", "3", "1"},
             {"4"})},
        {tpl({"x^2 - 1", "x^2 - 1"}), tpl({"1"})},
        {{"alpha*beta*(alpha + beta)/4", true}});
}

inline cf_spec t5_dcf() {
    return make_cf(
        xab, "(x + 3)/2",
        {tpl({"-alpha^2*beta - alpha*beta^2", "-alpha^2 - alpha*beta - beta^2",
              "0", "1"},
             {"4"}),
         tpl({"alpha^2*beta - alpha^2 + alpha*beta^2 - alpha*beta - beta^2 + 1",
              "-alpha^2 - alpha*beta - beta^2 + 3", "3", "1"},
             {"4"})},
        {tpl({"1", "1"}),
         tpl({"alpha^2 + alpha*beta + beta^2 - x^2 - 2*x - 2", "-2", "-1"})});
}

inline theorem_fixture theorem5() {
    theorem_fixture f;
    f.id = "theorem5";
    // period one: a_m = -((2m)^2 - alpha^2)((2m)^2 - (alpha + beta)^2)
    //                    ((2m)^2 - beta^2) / (16 (2m - 1)(2m + 1)),
    // b_m = x^2 + (4m^2 + 4m + 2 - alpha^2 - alpha beta - beta^2)/2.
    f.fraction = make_cf(
        xab, "x^2 + 1 - (alpha^2 + alpha*beta + beta^2)/2",
        {tpl({"alpha^4*beta^2 + 2*alpha^3*beta^3 + alpha^2*beta^4", "0",
              "-4*alpha^4 - 8*alpha^3*beta - 12*alpha^2*beta^2 - 8*alpha*beta^3 - "
              "4*beta^4",
              "0", "32*alpha^2 + 32*alpha*beta + 32*beta^2", "0", "-64"},
             {"-16", "0", "64"})},
        {tpl({"-alpha^2 - alpha*beta - beta^2 + 2*x^2 + 2", "4", "4"}, {"2"})},
        {{"alpha*beta*(alpha + beta)/4", true}});
    f.companion = t5_ab_spec();
    f.contraction = -1;
    f.companion_rescale = {ex("1/(m + 1)"), ex("1")};
    f.gamma = gammas({{"(x - alpha + 1)/2", 1},
                      {"(x + alpha + beta + 1)/2", 1},
                      {"(x - beta + 1)/2", 1},
                      {"(x + alpha + 1)/2", -1},
                      {"(x - alpha - beta + 1)/2", -1},
                      {"(x + beta + 1)/2", -1}});
    f.stages = {
        stage("stage1", t5_ab_spec(),
              factors({"2*(1 + x)", "3 + 2*x - x^2",
                       "(1 + x)*(3 + x^2 - alpha^2 - alpha*beta - beta^2)/2"},
                      {"0", "1/(1 + x)", "-1/2"}),
              "(x + 1 + alpha)*(x + 1 - alpha - beta)*(x + 1 + beta)/4"),
        stage("stage2", t5_dcf(),
              factors({"0", "-1", "(x - 1)/2"},
                      {"2", "-x - 1",
                       "((x + 1)^2 - alpha^2 - alpha*beta - beta^2)/2"}),
              "-(x + 1 - alpha)*(x + 1 + alpha + beta)*(x + 1 - beta)/4"),
    };
    f.recurrence =
        recurrence("(x + 1 + alpha)*(x + 1 - alpha - beta)*(x + 1 + beta)",
                   "(x + 1 - alpha)*(x + 1 + alpha + beta)*(x + 1 - beta)", 2, true);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

// ---------------------------------------------------------------------------
// Corollaries: cube identities at alpha = beta = 1/3, and the related
// one-parameter pair obtained by shifting the first family by 2/3.

inline theorem_fixture cor1() {
    theorem_fixture f;
    f.id = "cor1";
    // kappa_{2m} = 2 (3m - 2)(3m - 1)^2 / (27 (2m - 1)),
    // kappa_{2m-1} = 2 (3m - 1)(3m - 2)^2 / (27 (2m - 1)).
    f.fraction = make_cf(
        {"x"}, "(x^2 - 1/9)/2",
        {tpl({"-16", "60", "-72", "27"}, {"-108", "108"}),
         tpl({"1", "-3", "-9", "27"}, {"0", "108"})},
        {tpl({"x^2 - 1/9"}), tpl({"1"})}, {{"2", false}});
    // same value through nu_{2m} = 2 (3m - 2)^3 / (27 (2m - 1)),
    // nu_{2m-1} = 2 (3m - 1)^3 / (27 (2m - 1)); the two share their even part.
    f.companion = make_cf(
        {"x"}, "(x^2 - 1)/2",
        {tpl({"-64", "144", "-108", "27"}, {"-108", "108"}),
         tpl({"1", "9", "27", "27"}, {"0", "108"})},
        {tpl({"x^2 - 1"}), tpl({"1"})}, {{"2", false}});
    f.contraction = 0;
    f.gamma = gammas({{"(x + 1/3)/2", 3}, {"(x + 5/3)/2", -3}});
    f.recurrence = recurrence("(x + 1/3)^3", "(x + 5/3)^3");
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), x_only_sets());
    return f;
}

inline theorem_fixture cor2() {
    theorem_fixture f;
    f.id = "cor2";
    // kappa_{2m} = 2 (3m - 1)^3 / (27 (2m - 1)),
    // kappa_{2m-1} = 2 (3m - 2)^3 / (27 (2m - 1)).
    f.fraction = make_cf(
        {"x"}, "x/2",
        {tpl({"-8", "36", "-54", "27"}, {"-108", "108"}),
         tpl({"-1", "9", "-27", "27"}, {"0", "108"})},
        {tpl({"x"}), tpl({"x"})}, {{"1", false}});
    f.gamma = gammas({{"(x + 2/3)/2", 3}, {"(x + 4/3)/2", -3}});
    f.recurrence = recurrence("(x + 2/3)^3", "(x + 4/3)^3");
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), x_only_sets());
    return f;
}

// kappa_{2m} = (2m - 4/3)((2m - 2/3)^2 - alpha^2) / (4 (2m - 1)),
// kappa_{2m-1} = (2m - 2/3)((2m - 4/3)^2 - alpha^2) / (4 (2m - 1)),
// shared by the next two fixtures, which swap the x - 2/3 slots.

inline std::vector<coefficient_template> cor3_a_cases() {
    return {tpl({"36*alpha^2 - 16", "60 - 27*alpha^2", "-72", "27"},
                {"-108", "108"}),
            tpl({"1 - 9*alpha^2", "-27*alpha^2 - 3", "-9", "27"}, {"0", "108"})};
}

inline theorem_fixture cor3a() {
    theorem_fixture f;
    f.id = "cor3a";
    f.fraction = make_cf({"x", "alpha"}, "(x - 2/3)/2", cor3_a_cases(),
                         {tpl({"x - 2/3"}), tpl({"x"})}, {{"1", false}});
    f.gamma = gammas({{"(x - alpha)/2", 1},
                      {"(x + 2)/2", 1},
                      {"(x + alpha)/2", 1},
                      {"(x - alpha + 4/3)/2", -1},
                      {"(x + 4/3)/2", -1},
                      {"(x + alpha + 4/3)/2", -1}});
    f.recurrence = recurrence("(x - alpha)*(x + 2)*(x + alpha)",
                              "(x + alpha + 4/3)*(x + 4/3)*(x - alpha + 4/3)");
    f.domain_positive = {ex("x + 1/3")};
    f.grid = cross_grid(default_xs(), {{{"alpha", rational(1, 3)}},
                                       {{"alpha", rational(1, 2)}}});
    return f;
}

inline theorem_fixture cor3b() {
    theorem_fixture f;
    f.id = "cor3b";
    f.fraction = make_cf({"x", "alpha"}, "x/2", cor3_a_cases(),
                         {tpl({"x"}), tpl({"x - 2/3"})}, {{"1", false}});
    f.gamma = gammas({{"(x - alpha)/2", 1},
                      {"x/2", 1},
                      {"(x + alpha)/2", 1},
                      {"(x - alpha + 4/3)/2", -1},
                      {"(x - 2/3)/2", -1},
                      {"(x + alpha + 4/3)/2", -1}});
    f.recurrence = recurrence("(x - alpha)*x*(x + alpha)",
                              "(x + alpha + 4/3)*(x - 2/3)*(x - alpha + 4/3)");
    f.domain_positive = {ex("x + 1/3")};
    f.grid = cross_grid(default_xs(), {{{"alpha", rational(1, 3)}},
                                       {{"alpha", rational(1, 2)}}});
    return f;
}

// Squared-gamma quotient with a_m = (2m - 1)^2 against b_m = 2x; the
// front scale 4 makes the value at x = 1 equal to pi.
inline theorem_fixture bauer1872() {
    theorem_fixture f;
    f.id = "bauer1872";
    f.fraction = make_cf({"x"}, "x", {tpl({"1", "-4", "4"})}, {tpl({"2*x"})},
                         {{"4", false}});
    f.gamma = gammas({{"(x + 1)/4", 2}, {"(x + 3)/4", -2}});
    f.recurrence = recurrence("(x + 1)^2", "(x + 3)^2", 4);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), x_only_sets());
    return f;
}

// ---------------------------------------------------------------------------
// Conjectural fixtures: numerically supported identities in the same shape,
// gamma side through (1 - P)/(1 + P).

inline theorem_fixture conj1() {
    theorem_fixture f;
    f.id = "conj1";
    f.conjecture = true;
    // a_{2m} = ((2m)^2 - (alpha + beta)^2)/4,
    // a_{2m-1} = ((2m-1)^2 - alpha^2)((2m-1)^2 - beta^2)/(4 (2m-1)^2),
    // b_{2m} = x - alpha beta/(2(2m+1)), b_{2m-1} = x + alpha beta/(2(2m-1)).
    f.fraction = make_cf(
        xab, "x - alpha*beta/2",
        {tpl({"-alpha^2 - 2*alpha*beta - beta^2", "0", "1"}, {"4"}),
         tpl({"alpha^2*beta^2", "0", "-alpha^2 - beta^2", "0", "1"},
             {"0", "0", "4"})},
        {tpl({"2*x - alpha*beta", "2*x"}, {"2", "2"}),
         tpl({"alpha*beta", "2*x"}, {"0", "2"})},
        {{"(alpha + beta)/2", true}});
    f.gamma = gammas({{"(x - alpha + 3/2)/2", 1},
                      {"(x + alpha + beta + 1/2)/2", 1},
                      {"(x - beta + 3/2)/2", 1},
                      {"(x + alpha + 3/2)/2", -1},
                      {"(x - alpha - beta + 1/2)/2", -1},
                      {"(x + beta + 3/2)/2", -1}});
    f.recurrence = recurrence(
        "(x + alpha + 3/2)*(x - alpha - beta + 1/2)*(x + beta + 3/2)",
        "(x - alpha + 3/2)*(x + alpha + beta + 1/2)*(x - beta + 3/2)", 2, true);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

inline theorem_fixture conj2() {
    theorem_fixture f;
    f.id = "conj2";
    f.conjecture = true;
    // same numerators as conj1 with the sign of alpha beta flipped in b.
    f.fraction = make_cf(
        xab, "x + alpha*beta/2",
        {tpl({"-alpha^2 - 2*alpha*beta - beta^2", "0", "1"}, {"4"}),
         tpl({"alpha^2*beta^2", "0", "-alpha^2 - beta^2", "0", "1"},
             {"0", "0", "4"})},
        {tpl({"2*x + alpha*beta", "2*x"}, {"2", "2"}),
         tpl({"-alpha*beta", "2*x"}, {"0", "2"})},
        {{"-(alpha + beta)/2", true}});
    f.gamma = gammas({{"(x - alpha + 1/2)/2", 1},
                      {"(x + alpha + beta + 3/2)/2", 1},
                      {"(x - beta + 1/2)/2", 1},
                      {"(x + alpha + 1/2)/2", -1},
                      {"(x - alpha - beta + 3/2)/2", -1},
                      {"(x + beta + 1/2)/2", -1}});
    f.recurrence = recurrence(
        "(x + alpha + 1/2)*(x - alpha - beta + 3/2)*(x + beta + 1/2)",
        "(x - alpha + 1/2)*(x + alpha + beta + 3/2)*(x - beta + 1/2)", 2, true);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

inline theorem_fixture conj3() {
    theorem_fixture f;
    f.id = "conj3";
    f.conjecture = true;
    // a_{2m} = (2m)^2 - l^2, a_{2m-1} = ((2m-1)^2 - n^2)((2m-1)^2 - eta^2)/(2m-1)^2,
    // b_{2m} = x - n eta/(2m+1), b_{2m-1} = x + n eta/(2m-1); eta = 0 collapses
    // the odd numerators to (2m-1)^2 - n^2 and every b to x.
    f.fraction = make_cf(
        {"x", "l", "n", "eta"}, "x - n*eta",
        {tpl({"-l^2", "0", "1"}),
         tpl({"eta^2*n^2", "0", "-eta^2 - n^2", "0", "1"}, {"0", "0", "1"})},
        {tpl({"-eta*n + x", "x"}, {"1", "1"}), tpl({"eta*n", "x"}, {"0", "1"})},
        {{"l", true}});
    f.gamma = gammas({{"(x + l + n + eta + 1)/4", 1},
                      {"(x + l - n - eta + 1)/4", 1},
                      {"(x - l + n - eta + 3)/4", 1},
                      {"(x - l - n + eta + 3)/4", 1},
                      {"(x + l + n - eta + 3)/4", -1},
                      {"(x + l - n + eta + 3)/4", -1},
                      {"(x - l + n + eta + 1)/4", -1},
                      {"(x - l - n - eta + 1)/4", -1}});
    f.recurrence = recurrence(
        "(x + l + n - eta + 3)*(x + l - n + eta + 3)*(x - l + n + eta + 1)*"
        "(x - l - n - eta + 1)",
        "(x + l + n + eta + 1)*(x + l - n - eta + 1)*(x - l + n - eta + 3)*"
        "(x - l - n + eta + 3)",
        4, true);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(
        default_xs(),
        {{{"l", rational(1, 3)}, {"n", rational(1, 5)}, {"eta", rational(1, 7)}},
         {{"l", rational(1, 2)}, {"n", rational(1, 4)}, {"eta", rational(0)}}});
    return f;
}

// ---------------------------------------------------------------------------
// Two more fractions with the same gamma side as the fifth fixture, produced
// by its first derivation stage; evaluation-only, outside the default suite.

inline theorem_fixture theorem5_f1() {
    theorem_fixture f;
    f.id = "theorem5-f1";
    f.evaluation_only = true;
    // a_{2m} = (2m + alpha)(2m + alpha + beta)(2m - beta)/4,
    // b_{2m} = (2m + 1)(x^2 - (1 - alpha)^2);
    // a_{2m-1} = (2m - alpha)(2m - alpha - beta)(2m + beta)/4.
    f.fraction = make_cf(
        xab, "x^2 - (1 - alpha)^2 - alpha*beta*(alpha + beta)/4",
        {tpl({"-alpha^2*beta - alpha*beta^2", "alpha^2 - alpha*beta - beta^2",
              "2*alpha", "1"},
             {"4"}),
         tpl({"alpha^2*beta + alpha^2 + alpha*beta^2 - alpha*beta - 2*alpha - "
              "beta^2 + 1",
              "alpha^2 - alpha*beta - 4*alpha - beta^2 + 3", "3 - 2*alpha", "1"},
             {"4"})},
        {tpl({"-alpha^2 + 2*alpha + x^2 - 1", "-alpha^2 + 2*alpha + x^2 - 1"}),
         tpl({"1"})},
        {{"alpha*beta*(alpha + beta)/4", true}});
    f.gamma = gammas({{"(x - alpha + 1)/2", 1},
                      {"(x + alpha + beta + 1)/2", 1},
                      {"(x - beta + 1)/2", 1},
                      {"(x + alpha + 1)/2", -1},
                      {"(x - alpha - beta + 1)/2", -1},
                      {"(x + beta + 1)/2", -1}});
    f.recurrence =
        recurrence("(x + 1 + alpha)*(x + 1 - alpha - beta)*(x + 1 + beta)",
                   "(x + 1 - alpha)*(x + 1 + alpha + beta)*(x + 1 - beta)", 2, true);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

inline theorem_fixture theorem5_f2() {
    theorem_fixture f;
    f.id = "theorem5-f2";
    f.evaluation_only = true;
    // a_{2m} = (2m + alpha)(2m + alpha + beta)(2m + beta)/4,
    // b_{2m} = (2m + 1)(x^2 - (1 - alpha - beta)^2);
    // a_{2m-1} = (2m - alpha)(2m - alpha - beta)(2m - beta)/4.
    f.fraction = make_cf(
        xab, "x^2 - (1 - alpha - beta)^2 + alpha*beta*(alpha + beta)/4",
        {tpl({"alpha^2*beta + alpha*beta^2", "alpha^2 + 3*alpha*beta + beta^2",
              "2*alpha + 2*beta", "1"},
             {"4"}),
         tpl({"-alpha^2*beta + alpha^2 - alpha*beta^2 + 3*alpha*beta - 2*alpha + "
              "beta^2 - 2*beta + 1",
              "alpha^2 + 3*alpha*beta - 4*alpha + beta^2 - 4*beta + 3",
              "-2*alpha - 2*beta + 3", "1"},
             {"4"})},
        {tpl({"-alpha^2 - 2*alpha*beta + 2*alpha - beta^2 + 2*beta + x^2 - 1",
              "-alpha^2 - 2*alpha*beta + 2*alpha - beta^2 + 2*beta + x^2 - 1"}),
         tpl({"1"})},
        {{"alpha*beta*(alpha + beta)/4", true}});
    f.gamma = gammas({{"(x - alpha + 1)/2", 1},
                      {"(x + alpha + beta + 1)/2", 1},
                      {"(x - beta + 1)/2", 1},
                      {"(x + alpha + 1)/2", -1},
                      {"(x - alpha - beta + 1)/2", -1},
                      {"(x + beta + 1)/2", -1}});
    f.recurrence =
        recurrence("(x + 1 + alpha)*(x + 1 - alpha - beta)*(x + 1 + beta)",
                   "(x + 1 - alpha)*(x + 1 + alpha + beta)*(x + 1 - beta)", 2, true);
    f.domain_positive = {ex("x")};
    f.grid = cross_grid(default_xs(), ab_sets());
    return f;
}

}  // namespace detail

inline const std::vector<theorem_fixture>& fixture_catalog() {
    static const std::vector<theorem_fixture> catalog = [] {
        std::vector<theorem_fixture> v;
        v.push_back(detail::theorem1_j1());
        v.push_back(detail::theorem1_j2());
        v.push_back(detail::theorem1_j3());
        v.push_back(detail::theorem2());
        v.push_back(detail::theorem3());
        v.push_back(detail::theorem4());
        v.push_back(detail::theorem5());
        v.push_back(detail::cor1());
        v.push_back(detail::cor2());
        v.push_back(detail::cor3a());
        v.push_back(detail::cor3b());
        v.push_back(detail::bauer1872());
        v.push_back(detail::conj1());
        v.push_back(detail::conj2());
        v.push_back(detail::conj3());
        v.push_back(detail::theorem5_f1());
        v.push_back(detail::theorem5_f2());
        return v;
    }();
    return catalog;
}

inline const theorem_fixture& fixture_by_id(const std::string& id) {
    for (const auto& f : fixture_catalog())
        if (f.id == id) return f;
    throw config_error("unknown fixture '" + id + "'");
}

}  // namespace gammacf
