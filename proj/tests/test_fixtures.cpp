#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gammacf/bauer_muir.hpp>
#include <gammacf/cf.hpp>
#include <gammacf/errors.hpp>
#include <gammacf/fixtures.hpp>
#include <gammacf/io.hpp>
#include <gammacf/transforms.hpp>

using gammacf::approximant_value;
using gammacf::bind_cf;
using gammacf::bind_factors;
using gammacf::cf_spec;
using gammacf::config_error;
using gammacf::continued_fraction;
using gammacf::equivalence_transform;
using gammacf::even_part;
using gammacf::expression;
using gammacf::fixture_by_id;
using gammacf::fixture_catalog;
using gammacf::front_wrap;
using gammacf::load_cf_spec;
using gammacf::modifying_factors;
using gammacf::rational;
using gammacf::rational_function;
using gammacf::save_cf_spec;
using gammacf::stage_record;
using gammacf::theorem_fixture;
using gammacf::to_modifier;
using gammacf::verify_constancy;
using gammacf::x_env;

namespace {

using rf = rational_function;
using term = std::pair<rf, rf>;

rf c(long v) { return rf(rational(v)); }
rf c(const rational& v) { return rf(v); }

const rf X = rf::x();
const rf A = c(rational(1, 3));
const rf B = c(rational(1, 5));

const std::map<std::string, rational> ab_bind = {{"alpha", rational(1, 3)},
                                                 {"beta", rational(1, 5)}};

// Independent generator written against the parity index: both slot
// functions receive 2m, so 2m - 1 is the raw index at odd slots.
continued_fraction<rf> parity_cf(rf b0, std::function<term(const rf&)> even,
                                 std::function<term(const rf&)> odd) {
    continued_fraction<rf> cf;
    cf.b0 = std::move(b0);
    cf.terms = [even, odd](long n) -> term {
        rf e = c(n % 2 == 0 ? n : n + 1);
        return n % 2 == 0 ? even(e) : odd(e);
    };
    return cf;
}

// Period-one generator receiving the raw index m.
continued_fraction<rf> index_cf(rf b0, std::function<term(const rf&)> all) {
    continued_fraction<rf> cf;
    cf.b0 = std::move(b0);
    cf.terms = [all](long n) -> term { return all(c(n)); };
    return cf;
}

void check_terms(const cf_spec& spec, const std::map<std::string, rational>& bind,
                 const continued_fraction<rf>& want, long N = 24) {
    auto cf = bind_cf(spec, x_env(bind));
    REQUIRE(cf.b0 == want.b0);
    for (long n = 1; n <= N; ++n) {
        INFO("term " << n);
        auto got = cf.terms(n);
        auto expect = want.terms(n);
        REQUIRE(got.first == expect.first);
        REQUIRE(got.second == expect.second);
    }
}

const stage_record& stage_by_label(const theorem_fixture& f, const std::string& label) {
    for (const auto& s : f.stages)
        if (s.label == label) return s;
    throw config_error("no stage " + label);
}

// Quarter product with the display-form divisor 2m - 1 = e - 1.
rf qk(const rf& f1, const rf& f2, const rf& f3, const rf& e) {
    return f1 * f2 * f3 / (c(4) * (e - c(1)));
}

// Plain quarter product used by the derivation-stage fractions.
rf qp(const rf& f1, const rf& f2, const rf& f3) { return f1 * f2 * f3 / c(4); }

}  // namespace

TEST_CASE("catalog lists every fixture once with coherent metadata") {
    const auto& cat = fixture_catalog();
    const std::vector<std::string> ids = {
        "theorem1-j1", "theorem1-j2", "theorem1-j3", "theorem2", "theorem3",
        "theorem4",    "theorem5",    "cor1",        "cor2",     "cor3a",
        "cor3b",       "bauer1872",   "conj1",       "conj2",    "conj3",
        "theorem5-f1", "theorem5-f2"};
    REQUIRE(cat.size() == ids.size());
    for (size_t i = 0; i < ids.size(); ++i) CHECK(cat[i].id == ids[i]);
    CHECK(&fixture_by_id("theorem2") == &cat[3]);
    CHECK_THROWS_AS(fixture_by_id("theorem9"), config_error);

    for (const auto& f : cat) {
        INFO("fixture " << f.id);
        CHECK(f.conjecture == (f.id.rfind("conj", 0) == 0));
        CHECK(f.evaluation_only == (f.id == "theorem5-f1" || f.id == "theorem5-f2"));
        REQUIRE(f.grid.size() >= static_cast<size_t>(theorem_fixture::quick_points));
        long mult = 0;
        for (const auto& g : f.gamma) mult += g.multiplicity;
        CHECK(mult == 0);
        for (const auto& point : f.grid) {
            std::map<std::string, rf> env;
            for (const auto& [name, v] : point) env.emplace(name, rf(v));
            for (const auto& d : f.domain_positive)
                CHECK(d.eval(point).sign() > 0);
            for (const auto& g : f.gamma)
                CHECK(g.argument.eval(point).sign() > 0);
        }
    }

    // the quick prefix varies x and the parameter set together.
    const auto& t1 = fixture_by_id("theorem1-j1");
    REQUIRE(t1.grid.size() == 12);
    CHECK(t1.grid[0].at("x") == rational(5, 2));
    CHECK(t1.grid[0].at("alpha") == rational(1, 3));
    CHECK(t1.grid[1].at("alpha") == rational(1, 2));
    CHECK(t1.grid[2].at("beta") == rational(1, 3));
    CHECK(fixture_by_id("bauer1872").grid.size() == 4);
    CHECK(fixture_by_id("cor3a").grid.size() == 8);
    CHECK(fixture_by_id("conj3").grid.size() == 8);
}

TEST_CASE("first-family terms match their factored forms") {
    const rf w1 = X * X - c(1);
    const rf w2 = X * X - (c(1) - A - B) * (c(1) - A - B);
    const rf w3 = X * X - B * B;

    const auto& j1 = fixture_by_id("theorem1-j1");
    check_terms(j1.fraction, ab_bind,
                parity_cf((X * X - c(1)) / c(2),
                          [&](const rf& e) -> term {
                              return {qk(e - c(2) + A + B, e - c(1) - A, e - c(1) - B, e), w1};
                          },
                          [&](const rf& e) -> term {
                              return {qk(e - A - B, e - c(1) + A, e - c(1) + B, e), c(1)};
                          }));

    const auto& j2 = fixture_by_id("theorem1-j2");
    check_terms(j2.fraction, ab_bind,
                parity_cf(w2 / c(2),
                          [&](const rf& e) -> term {
                              return {qk(e - c(2) + A + B, e - c(1) + A, e - c(1) + B, e), w2};
                          },
                          [&](const rf& e) -> term {
                              return {qk(e - A - B, e - c(1) - A, e - c(1) - B, e), c(1)};
                          }));

    const auto& j3 = fixture_by_id("theorem1-j3");
    check_terms(j3.fraction, ab_bind,
                parity_cf(w3 / c(2),
                          [&](const rf& e) -> term {
                              return {qk(e - A - B, e - c(1) + A, e - c(1) - B, e), w3};
                          },
                          [&](const rf& e) -> term {
                              return {qk(e - c(2) + A + B, e - c(1) - A, e - c(1) + B, e), c(1)};
                          }));

    // shared even part: a_m = p_m against b_m = x^2 + q_m.
    auto pq = [&](const rf& m) -> term {
        rf t = c(2) * m - c(1);
        rf p = c(-1) * (c(2) * m - A - B) * (c(2) * m - c(2) + A + B) *
               (t * t - A * A) * (t * t - B * B) / (c(16) * t * t);
        rf q = (c(4) * m * m + A - A * A + B - B * B - A * B) / c(2) +
               A * B * (A + B - c(1)) / (c(2) * t * (c(2) * m + c(1)));
        return {p, X * X + q};
    };
    rf q0 = (A + B - A * A - B * B - A * A * B - A * B * B) / c(2);
    REQUIRE(j1.companion);
    check_terms(*j1.companion, ab_bind, index_cf((X * X + q0) / c(2), pq));
    // at (1/3, 1/5) the leading constant is 13/75; all three share the form.
    CHECK(q0 == c(rational(13, 75)));
    CHECK(save_cf_spec(*j1.companion) == save_cf_spec(*j2.companion));
    CHECK(save_cf_spec(*j1.companion) == save_cf_spec(*j3.companion));

    // derivation-stage fractions: numerators undivided, 2m - 1 in b.
    const rf rho1 = X * X + c(2) * X + c(2) + A - A * A + B - A * B - B * B;
    check_terms(stage_by_label(j1, "stage1").base, ab_bind,
                parity_cf((X * X - c(1)) / c(2),
                          [&](const rf& e) -> term {
                              return {qp(e - c(2) + A + B, e - c(1) - A, e - c(1) - B), w1};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - A - B, e - c(1) + A, e - c(1) + B), e - c(1)};
                          }));
    check_terms(stage_by_label(j1, "stage2").base, ab_bind,
                parity_cf(c(-1) * rho1 / c(2),
                          [&](const rf& e) -> term {
                              return {qp(e - c(2) + A + B, e - c(1) - A, e - c(1) - B),
                                      c(-1) * (e * e + rho1)};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - A - B, e - c(1) + A, e - c(1) + B), e - c(1)};
                          }));

    const rf h2 = (X + c(1)) * (X + c(1)) + c(1) - A - B + A * B;
    check_terms(stage_by_label(j2, "stage2").base, ab_bind,
                parity_cf(c(-1) * h2 / c(2),
                          [&](const rf& e) -> term {
                              return {qp(e - c(2) + A + B, e - c(1) + A, e - c(1) + B),
                                      c(-1) * (e * e + h2)};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - A - B, e - c(1) - A, e - c(1) - B), e - c(1)};
                          }));

    const rf rho3 = X * X + c(2) * X + c(1) + A - A * A + B - A * B;
    check_terms(stage_by_label(j3, "stage2").base, ab_bind,
                parity_cf(c(-1) * rho3 / c(2),
                          [&](const rf& e) -> term {
                              return {qp(e - A - B, e - c(1) + A, e - c(1) - B),
                                      c(-1) * (e * e + rho3)};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - c(2) + A + B, e - c(1) - A, e - c(1) + B),
                                      e - c(1)};
                          }));
}

TEST_CASE("second-family terms match their factored forms") {
    const auto& f = fixture_by_id("theorem2");
    check_terms(f.fraction, ab_bind,
                parity_cf(X / c(2),
                          [&](const rf& e) -> term {
                              return {qk(e - A - B, e - c(1) + A, e - c(1) + B, e), X};
                          },
                          [&](const rf& e) -> term {
                              return {qk(e - c(2) + A + B, e - c(1) - A, e - c(1) - B, e), X};
                          }));
    check_terms(stage_by_label(f, "stage1").base, ab_bind,
                parity_cf(X / c(2),
                          [&](const rf& e) -> term {
                              return {qp(e - A - B, e - c(1) + A, e - c(1) + B), X};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - c(2) + A + B, e - c(1) - A, e - c(1) - B),
                                      (e - c(1)) * X};
                          }));
    const rf w2 = (A * A - A + A * B + B * B - B - (X - c(1)) * (X - c(1))) / c(2);
    check_terms(stage_by_label(f, "stage2").base, ab_bind,
                parity_cf(w2,
                          [&](const rf& e) -> term {
                              return {qp(e - A - B, e - c(1) + A, e - c(1) + B),
                                      c(2) * w2 - e * e};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - c(2) + A + B, e - c(1) - A, e - c(1) - B),
                                      e - c(1)};
                          }));
}

TEST_CASE("third- and fourth-family terms match their factored forms") {
    const rf om = X + c(2) - c(2) * A - c(2) * B;
    auto a_even = [&](const rf& e) { return qp(e - A - B, e - A, e - B); };
    auto a_odd = [&](const rf& e) {
        return qp(e - c(2) + A + B, e - c(2) + A, e - c(2) + B);
    };

    const auto& t3 = fixture_by_id("theorem3");
    check_terms(t3.fraction, ab_bind,
                parity_cf(om / c(2),
                          [&](const rf& e) -> term {
                              return {a_even(e) / (e - c(1)), om};
                          },
                          [&](const rf& e) -> term {
                              return {a_odd(e) / (e - c(1)), X};
                          }));
    check_terms(stage_by_label(t3, "stage1").base, ab_bind,
                parity_cf(om / c(2),
                          [&](const rf& e) -> term { return {a_even(e), om}; },
                          [&](const rf& e) -> term {
                              return {a_odd(e), (e - c(1)) * X};
                          }));
    const rf h3 = (X - A - B) * (X - A - B) + A * B;
    check_terms(stage_by_label(t3, "stage2").base, ab_bind,
                parity_cf(h3 / c(2),
                          [&](const rf& e) -> term {
                              return {a_even(e), c(-1) * (e * e + h3)};
                          },
                          [&](const rf& e) -> term { return {a_odd(e), e - c(1)}; }));

    const auto& t4 = fixture_by_id("theorem4");
    check_terms(t4.fraction, ab_bind,
                parity_cf(X / c(2),
                          [&](const rf& e) -> term {
                              return {a_even(e) / (e - c(1)), X};
                          },
                          [&](const rf& e) -> term {
                              return {a_odd(e) / (e - c(1)), om};
                          }));
    check_terms(stage_by_label(t4, "stage1").base, ab_bind,
                parity_cf(X / c(2),
                          [&](const rf& e) -> term { return {a_even(e), X}; },
                          [&](const rf& e) -> term {
                              return {a_odd(e), (e - c(1)) * om};
                          }));
    const rf h4 = (X - A + c(2)) * (X - A + c(2)) +
                  (c(-4) - c(2) * X + c(3) * A) * B + B * B;
    check_terms(stage_by_label(t4, "stage2").base, ab_bind,
                parity_cf(h4 / c(2),
                          [&](const rf& e) -> term {
                              return {a_even(e), e * e + h4};
                          },
                          [&](const rf& e) -> term {
                              return {a_odd(e), c(1) - e};
                          }));
}

TEST_CASE("fifth-family terms match their factored forms") {
    const rf sg = A * B * (A + B) / c(4);
    const auto& t5 = fixture_by_id("theorem5");

    auto kl = [&](const rf& m) -> term {
        rf e = c(2) * m;
        rf a = c(-1) * (e * e - A * A) * (e * e - (A + B) * (A + B)) *
               (e * e - B * B) / (c(16) * (e - c(1)) * (e + c(1)));
        rf b = X * X + (e * e + c(2) * e + c(2) - A * A - A * B - B * B) / c(2);
        return {a, b};
    };
    check_terms(t5.fraction, ab_bind,
                index_cf(X * X + c(1) - (A * A + A * B + B * B) / c(2), kl));
    CHECK(t5.fraction.front);
    CHECK(t5.fraction.front->moebius);
    CHECK(t5.fraction.front->scale.eval(x_env(ab_bind)) == sg);

    auto ab_even = [&](const rf& e) -> term {
        return {qp(e + A, e - A - B, e + B), (e + c(1)) * (X * X - c(1))};
    };
    auto ab_odd = [&](const rf& e) -> term {
        return {qp(e - A, e + A + B, e - B), c(1)};
    };
    REQUIRE(t5.companion);
    check_terms(*t5.companion, ab_bind,
                parity_cf(X * X - c(1) - sg, ab_even, ab_odd));

    const rf rho5 = (X + c(1)) * (X + c(1)) - A * A - A * B - B * B;
    check_terms(stage_by_label(t5, "stage2").base, ab_bind,
                parity_cf((X + c(3)) / c(2),
                          [&](const rf& e) -> term {
                              return {qp(e + A, e - A - B, e + B), e + c(1)};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - A, e + A + B, e - B),
                                      c(-1) * (e * e + rho5)};
                          }));

    const auto& f1 = fixture_by_id("theorem5-f1");
    check_terms(f1.fraction, ab_bind,
                parity_cf(X * X - (c(1) - A) * (c(1) - A) - sg,
                          [&](const rf& e) -> term {
                              return {qp(e + A, e + A + B, e - B),
                                      (e + c(1)) * (X * X - (c(1) - A) * (c(1) - A))};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - A, e - A - B, e + B), c(1)};
                          }));

    const auto& f2 = fixture_by_id("theorem5-f2");
    const rf w = X * X - (c(1) - A - B) * (c(1) - A - B);
    check_terms(f2.fraction, ab_bind,
                parity_cf(w + sg,
                          [&](const rf& e) -> term {
                              return {qp(e + A, e + A + B, e + B), (e + c(1)) * w};
                          },
                          [&](const rf& e) -> term {
                              return {qp(e - A, e - A - B, e - B), c(1)};
                          }));
}

TEST_CASE("corollary and squared-gamma terms match their factored forms") {
    const std::map<std::string, rational> none;
    auto cube = [&](long p, long q, const rf& e) {
        // 2 (3m + p)(3m + q)^2 / (27 (2m - 1)) written through e = 2m.
        rf t1 = (c(3) * e + c(2 * p)) / c(2);
        rf t2 = (c(3) * e + c(2 * q)) / c(2);
        return c(2) * t1 * t2 * t2 / (c(27) * (e - c(1)));
    };

    const auto& k1 = fixture_by_id("cor1");
    check_terms(k1.fraction, none,
                parity_cf((X * X - c(rational(1, 9))) / c(2),
                          [&](const rf& e) -> term {
                              return {cube(-2, -1, e), X * X - c(rational(1, 9))};
                          },
                          [&](const rf& e) -> term {
                              return {cube(-1, -2, e), c(1)};
                          }));
    REQUIRE(k1.companion);
    check_terms(*k1.companion, none,
                parity_cf((X * X - c(1)) / c(2),
                          [&](const rf& e) -> term {
                              return {cube(-2, -2, e), X * X - c(1)};
                          },
                          [&](const rf& e) -> term {
                              return {cube(-1, -1, e), c(1)};
                          }));

    const auto& k2 = fixture_by_id("cor2");
    check_terms(k2.fraction, none,
                parity_cf(X / c(2),
                          [&](const rf& e) -> term { return {cube(-1, -1, e), X}; },
                          [&](const rf& e) -> term { return {cube(-2, -2, e), X}; }));
    // leading numerator 2/27.
    auto cf2 = bind_cf(k2.fraction, x_env(none));
    CHECK(cf2.terms(1).first == c(rational(2, 27)));

    const std::map<std::string, rational> a_bind = {{"alpha", rational(1, 3)}};
    const rf A3 = c(rational(1, 3));
    auto c3_even = [&](const rf& e) {
        return (e - c(rational(4, 3))) *
               ((e - c(rational(2, 3))) * (e - c(rational(2, 3))) - A3 * A3) /
               (c(4) * (e - c(1)));
    };
    auto c3_odd = [&](const rf& e) {
        return (e - c(rational(2, 3))) *
               ((e - c(rational(4, 3))) * (e - c(rational(4, 3))) - A3 * A3) /
               (c(4) * (e - c(1)));
    };
    check_terms(fixture_by_id("cor3a").fraction, a_bind,
                parity_cf((X - c(rational(2, 3))) / c(2),
                          [&](const rf& e) -> term {
                              return {c3_even(e), X - c(rational(2, 3))};
                          },
                          [&](const rf& e) -> term { return {c3_odd(e), X}; }));
    check_terms(fixture_by_id("cor3b").fraction, a_bind,
                parity_cf(X / c(2),
                          [&](const rf& e) -> term { return {c3_even(e), X}; },
                          [&](const rf& e) -> term {
                              return {c3_odd(e), X - c(rational(2, 3))};
                          }));

    check_terms(fixture_by_id("bauer1872").fraction, none,
                index_cf(X, [&](const rf& m) -> term {
                    return {(c(2) * m - c(1)) * (c(2) * m - c(1)), c(2) * X};
                }));
}

TEST_CASE("conjecture terms match their factored forms") {
    auto conj_a_even = [&](const rf& e) { return (e * e - (A + B) * (A + B)) / c(4); };
    auto conj_a_odd = [&](const rf& e) {
        rf t = e - c(1);
        return (t * t - A * A) * (t * t - B * B) / (c(4) * t * t);
    };

    check_terms(fixture_by_id("conj1").fraction, ab_bind,
                parity_cf(X - A * B / c(2),
                          [&](const rf& e) -> term {
                              return {conj_a_even(e), X - A * B / (c(2) * (e + c(1)))};
                          },
                          [&](const rf& e) -> term {
                              return {conj_a_odd(e), X + A * B / (c(2) * (e - c(1)))};
                          }));
    check_terms(fixture_by_id("conj2").fraction, ab_bind,
                parity_cf(X + A * B / c(2),
                          [&](const rf& e) -> term {
                              return {conj_a_even(e), X + A * B / (c(2) * (e + c(1)))};
                          },
                          [&](const rf& e) -> term {
                              return {conj_a_odd(e), X - A * B / (c(2) * (e - c(1)))};
                          }));
    CHECK(fixture_by_id("conj1").fraction.front->scale.eval(x_env(ab_bind)) ==
          (A + B) / c(2));
    CHECK(fixture_by_id("conj2").fraction.front->scale.eval(x_env(ab_bind)) ==
          c(-1) * (A + B) / c(2));

    const std::map<std::string, rational> lne = {
        {"l", rational(1, 3)}, {"n", rational(1, 5)}, {"eta", rational(1, 7)}};
    const rf L = c(rational(1, 3)), N = c(rational(1, 5)), H = c(rational(1, 7));
    check_terms(fixture_by_id("conj3").fraction, lne,
                parity_cf(X - N * H,
                          [&](const rf& e) -> term {
                              return {e * e - L * L, X - N * H / (e + c(1))};
                          },
                          [&](const rf& e) -> term {
                              rf t = e - c(1);
                              return {(t * t - N * N) * (t * t - H * H) / (t * t),
                                      X + N * H / t};
                          }));
}

TEST_CASE("conjecture ladder at eta zero reduces to the classical form") {
    const std::map<std::string, rational> bind = {
        {"l", rational(1, 2)}, {"n", rational(1, 4)}, {"eta", rational(0)}};
    const rf L = c(rational(1, 2)), N = c(rational(1, 4));
    check_terms(fixture_by_id("conj3").fraction, bind,
                parity_cf(X,
                          [&](const rf& e) -> term { return {e * e - L * L, X}; },
                          [&](const rf& e) -> term {
                              rf t = e - c(1);
                              return {t * t - N * N, X};
                          }));
}

TEST_CASE("display forms are index rescalings of their stage bases") {
    // c_n = 1/n at odd n moves 2m - 1 from b into the a divisors.
    std::function<rf(long)> odd_recip = [](long n) {
        return n % 2 ? c(rational(1, n)) : c(1);
    };
    for (const char* id : {"theorem1-j1", "theorem1-j2", "theorem1-j3", "theorem2",
                           "theorem3", "theorem4"}) {
        INFO("fixture " << id);
        const auto& f = fixture_by_id(id);
        auto base = bind_cf(stage_by_label(f, "stage1").base, x_env(ab_bind));
        auto display = bind_cf(f.fraction, x_env(ab_bind));
        auto rescaled = equivalence_transform(base, odd_recip);
        REQUIRE(display.b0 == rescaled.b0);
        for (long n = 1; n <= 24; ++n) {
            INFO("term " << n);
            CHECK(display.terms(n) == rescaled.terms(n));
        }
    }
}

TEST_CASE("derivation stages carry parity-constant adjoints") {
    for (const auto& f : fixture_catalog()) {
        auto bind = f.grid.front();
        bind.erase("x");
        auto env = x_env(bind);
        for (const auto& s : f.stages) {
            INFO("fixture " << f.id << " " << s.label);
            auto cf = bind_cf(s.base, env);
            auto r = to_modifier(bind_factors(s.factors, bind));
            auto rep = verify_constancy(cf, r, 25);
            REQUIRE(rep.constant_by_parity);
            REQUIRE(rep.ratio_alternates);
            CHECK(rep.odd_value == c(-1) * rep.even_value);
            if (!s.adjoint_even.empty())
                CHECK(rep.even_value == s.adjoint_even.eval(env));
        }
    }

    // unmodified fractions have index-varying adjoints.
    const auto& j1 = fixture_by_id("theorem1-j1");
    auto cf = bind_cf(stage_by_label(j1, "stage1").base, x_env(ab_bind));
    std::function<rf(long)> zero = [](long) { return rf(rational(0)); };
    CHECK_FALSE(verify_constancy(cf, zero, 8).constant_by_parity);
}

TEST_CASE("second-stage factors join the slot relation at the first index") {
    // d_1 + gamma_1 for the fifth family collapses to
    // -(7 + 4x + x^2 - alpha^2 - alpha beta - beta^2)/2.
    const auto& t5 = fixture_by_id("theorem5");
    const auto& s2 = stage_by_label(t5, "stage2");
    auto cf = bind_cf(s2.base, x_env(ab_bind));
    auto mf = bind_factors(s2.factors, ab_bind);
    rf gamma1 = mf.odd[0] + mf.odd[1] + mf.odd[2];
    rf want = c(-1) *
              (c(7) + c(4) * X + X * X - A * A - A * B - B * B) / c(2);
    CHECK(cf.terms(1).second + gamma1 == want);
}

TEST_CASE("even parts contract the fractions onto their companions") {
    for (const char* id : {"theorem1-j1", "theorem1-j2", "theorem1-j3"}) {
        INFO("fixture " << id);
        const auto& f = fixture_by_id(id);
        rf scale = f.fraction.front->scale.eval(x_env(ab_bind));
        auto wrapped = front_wrap(bind_cf(f.fraction, x_env(ab_bind)), scale);
        auto contracted = even_part(wrapped);
        auto want = front_wrap(bind_cf(*f.companion, x_env(ab_bind)), scale);
        REQUIRE(contracted.b0 == want.b0);
        for (long n = 1; n <= 11; ++n) {
            INFO("term " << n);
            CHECK(contracted.terms(n) == want.terms(n));
        }
    }

    // approximants line up two-to-one across the contraction.
    {
        const auto& f = fixture_by_id("theorem1-j1");
        rf scale = f.fraction.front->scale.eval(x_env(ab_bind));
        auto wrapped = front_wrap(bind_cf(f.fraction, x_env(ab_bind)), scale);
        auto want = front_wrap(bind_cf(*f.companion, x_env(ab_bind)), scale);
        for (long n : {4L, 7L, 10L})
            CHECK(approximant_value(want, n) == approximant_value(wrapped, 2 * n));
    }

    // fifth family contracts the rescaled two-term form onto the display form.
    {
        const auto& f = fixture_by_id("theorem5");
        rf scale = f.fraction.front->scale.eval(x_env(ab_bind));
        std::function<rf(long)> rescale = [&](long n) -> rf {
            const expression& e = n % 2 == 0 ? f.companion_rescale[0] : f.companion_rescale[1];
            std::map<std::string, rf> env{{"m", c(n)}};
            return e.eval(env);
        };
        auto companion = bind_cf(*f.companion, x_env(ab_bind));
        auto contracted = even_part(front_wrap(equivalence_transform(companion, rescale), scale));
        auto want = front_wrap(bind_cf(f.fraction, x_env(ab_bind)), scale);
        REQUIRE(contracted.b0 == want.b0);
        for (long n = 1; n <= 11; ++n) {
            INFO("term " << n);
            CHECK(contracted.terms(n) == want.terms(n));
        }
    }

    // the two cube fractions share one even part.
    {
        const auto& f = fixture_by_id("cor1");
        rf scale = f.fraction.front->scale.eval(x_env({}));
        auto lhs = even_part(front_wrap(bind_cf(f.fraction, x_env({})), scale));
        auto rhs = even_part(front_wrap(bind_cf(*f.companion, x_env({})), scale));
        REQUIRE(lhs.b0 == rhs.b0);
        for (long n = 1; n <= 11; ++n) {
            INFO("term " << n);
            CHECK(lhs.terms(n) == rhs.terms(n));
        }
    }
}

TEST_CASE("gamma factors evaluate to the stated arguments") {
    std::map<std::string, rational> point = {
        {"x", rational(5, 2)}, {"alpha", rational(1, 3)}, {"beta", rational(1, 5)}};
    const auto& t1 = fixture_by_id("theorem1-j1");
    std::vector<std::pair<rational, long>> want = {
        {rational(17, 12), 1}, {rational(89, 60), 1},  {rational(27, 20), 1},
        {rational(25, 12), -1}, {rational(121, 60), -1}, {rational(43, 20), -1}};
    REQUIRE(t1.gamma.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        CHECK(t1.gamma[i].argument.eval(point) == want[i].first);
        CHECK(t1.gamma[i].multiplicity == want[i].second);
    }

    const auto& bauer = fixture_by_id("bauer1872");
    CHECK(bauer.gamma[0].argument.eval(point) == rational(7, 8));
    CHECK(bauer.gamma[0].multiplicity == 2);
    CHECK(bauer.gamma[1].argument.eval(point) == rational(11, 8));
    CHECK(bauer.gamma[1].multiplicity == -2);
}

TEST_CASE("front wrap turns a scale into a leading term") {
    continued_fraction<rational> cf;
    cf.b0 = rational(5);
    cf.terms = [](long n) -> std::pair<rational, rational> {
        return {rational(n), rational(n + 1)};
    };
    auto wrapped = front_wrap(cf, rational(3));
    CHECK(wrapped.b0 == rational(0));
    for (long n = 0; n <= 5; ++n)
        CHECK(approximant_value(wrapped, n + 1) ==
              rational(3) / approximant_value(cf, n));
}

TEST_CASE("fixture documents round-trip") {
    for (const auto& f : fixture_catalog()) {
        INFO("fixture " << f.id);
        std::string doc = save_cf_spec(f.fraction);
        CHECK(save_cf_spec(load_cf_spec(doc)) == doc);
        if (f.companion) {
            std::string cdoc = save_cf_spec(*f.companion);
            CHECK(save_cf_spec(load_cf_spec(cdoc)) == cdoc);
        }
    }
}
