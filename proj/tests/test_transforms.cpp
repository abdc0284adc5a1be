#include <catch2/catch_amalgamated.hpp>

#include <gammacf/transforms.hpp>

using namespace gammacf;

namespace {

cf_spec simple_spec() {
    // 1 + K(1/2)
    cf_spec s;
    s.b0 = expression::parse("1");
    s.period = 1;
    s.a_case = {coefficient_template::from_strings({"1"})};
    s.b_case = {coefficient_template::from_strings({"2"})};
    return s;
}

cf_spec mixed_spec() {
    // a_j = j + 1; b alternates between 3 (odd j) and j (even j).
    cf_spec s;
    s.b0 = expression::parse("2");
    s.period = 2;
    s.a_case = {coefficient_template::from_strings({"1", "1"}),
                coefficient_template::from_strings({"1", "1"})};
    s.b_case = {coefficient_template::from_strings({"0", "1"}),
                coefficient_template::from_strings({"3"})};
    return s;
}

}  // namespace

TEST_CASE("equivalence transform preserves approximants") {
    auto cf = bind_cf<rational>(mixed_spec(), {});
    auto scaled = equivalence_transform<rational>(
        cf, [](long n) { return rational(1, n % 3 + 1); });
    for (long n = 0; n <= 7; ++n)
        CHECK(approximant_value(cf, n) == approximant_value(scaled, n));

    auto bad = equivalence_transform<rational>(cf, [](long n) { return rational(n - 2); });
    CHECK_THROWS_AS(bad.terms(2), zero_factor);
}

TEST_CASE("even part approximants") {
    for (const auto& spec : {simple_spec(), mixed_spec()}) {
        auto cf = bind_cf<rational>(spec, {});
        auto even = even_part(cf);
        CHECK(even.b0 == cf.b0);
        for (long m = 1; m <= 8; ++m)
            CHECK(approximant_value(even, m) == approximant_value(cf, 2 * m));
    }
}

TEST_CASE("even part respects finite depth") {
    auto spec = mixed_spec();
    spec.depth = 11;
    auto even = even_part(bind_cf<rational>(spec, {}));
    CHECK(even.depth.value() == 5);
}

TEST_CASE("contraction undefined when an even b vanishes") {
    cf_spec s;
    s.b0 = expression::parse("0");
    s.period = 1;
    s.a_case = {coefficient_template::from_strings({"1"})};
    s.b_case = {coefficient_template::from_strings({"2", "-1"})};  // 0 at j = 2
    auto even = even_part(bind_cf<rational>(s, {}));
    CHECK_NOTHROW(even.terms(1));
    try {
        even.terms(2);
        FAIL("expected contraction_undefined");
    } catch (const contraction_undefined& e) {
        CHECK(e.index == 2);
    }
}

TEST_CASE("moebius wrap matches the value map") {
    auto cf = bind_cf<rational>(mixed_spec(), {});
    auto wrapped = moebius_wrap(cf);
    for (long n = 0; n <= 6; ++n) {
        rational f = approximant_value(cf, n);
        CHECK(approximant_value(wrapped, n + 1) == moebius_value(f));
    }
    // Involution at the term level: wrapping twice restores every value.
    auto twice = moebius_wrap(wrapped);
    for (long n = 0; n <= 5; ++n)
        CHECK(approximant_value(twice, n + 2) == approximant_value(cf, n));
}

TEST_CASE("moebius value") {
    CHECK(moebius_value(rational(1, 3)) == rational(1, 2));
    CHECK_THROWS_AS(moebius_value(rational(-1)), pole_at_minus_one);

    auto x = rational_function::x();
    CHECK(moebius_value(moebius_value(x)) == x);
}
