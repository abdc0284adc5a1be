#include <catch2/catch_amalgamated.hpp>

#include <mpfr.h>

#include <gammacf/gamma.hpp>

#include "reference_values.hpp"
#include "test_support.hpp"

using namespace gammacf;
using testsup::close;
using testsup::ref;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == rational(1));
    CHECK(bernoulli(1) == rational(-1, 2));
    CHECK(bernoulli(3) == rational(0));
    CHECK(bernoulli(7) == rational(0));
    for (size_t i = 0; i < std::size(testref::bernoulli_even); ++i) {
        rational want(std::string(testref::bernoulli_even[i]));
        CHECK(bernoulli(2 * static_cast<long>(i) + 2) == want);
    }
}

TEST_CASE("log gamma against fixed values") {
    struct row {
        rational z;
        const char* want;
    };
    for (const auto& [z, want] : {row{rational(1, 10), testref::lgamma_1_10},
                                  row{rational(1, 3), testref::lgamma_1_3},
                                  row{rational(5, 4), testref::lgamma_5_4},
                                  row{rational(7, 2), testref::lgamma_7_2},
                                  row{rational(41, 2), testref::lgamma_41_2}}) {
        auto r = lgamma_stirling(z, 50);
        CHECK(r.digits_valid >= 50);
        CHECK(close(r.value, ref(want), -48));
    }
}

TEST_CASE("log gamma recurrence") {
    // log Gamma(z+1) = log Gamma(z) + log z, spot-checked across (0, 20).
    for (long i = 1; i <= 20; ++i) {
        rational z(7 * i + 3, 8);  // 10/8, 17/8, ..., well spread in (1, 18)
        auto a = lgamma_stirling(z + rational(1), 45);
        auto b = lgamma_stirling(z, 45);
        bigfloat lhs = a.value - b.value - bigfloat(z, 70).log();
        CHECK(close(lhs, bigfloat(0, 70), -43));
    }
}

TEST_CASE("log gamma against mpfr") {
    bigfloat z(rational(7, 2), 70);
    bigfloat m(0, 70);
    int sign = 0;
    mpfr_lgamma(m.raw(), &sign, z.raw(), MPFR_RNDN);
    CHECK(sign == 1);
    CHECK(close(lgamma_stirling(rational(7, 2), 55).value, m, -55));
}

TEST_CASE("euler product limit") {
    // Converges like 1/n; at n = 10^4 expect 4-5 correct digits.
    bigfloat g = euler_product_gamma(rational(1, 2), 10000, 30);
    CHECK(close(g, ref(testref::gamma_1_2), -4));
    CHECK_FALSE(close(g, ref(testref::gamma_1_2), -9));

    bigfloat g13 = euler_product_gamma(rational(1, 3), 10000, 30);
    CHECK(close(g13, ref(testref::gamma_1_3), -4));
}

TEST_CASE("gamma product") {
    // Gamma(1/2)^2 = pi
    bigfloat v = gamma_product({{rational(1, 2), 2}}, 40);
    CHECK(close(v, bigfloat::pi(80), -38));

    // Reflection-free spot check: Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)
    bigfloat w = gamma_product({{rational(1, 3), 1}, {rational(2, 3), 1}}, 40);
    bigfloat want = bigfloat(2, 80) * bigfloat::pi(80) / bigfloat(3, 80).sqrt();
    CHECK(close(w, want, -38));

    CHECK(close(gamma_product({{rational(5, 4), 1}}, 40), ref(testref::gamma_5_4), -38));
}

TEST_CASE("gamma argument domain") {
    CHECK_THROWS_AS(lgamma_stirling(rational(0), 30), pole_argument);
    CHECK_THROWS_AS(lgamma_stirling(rational(-2), 30), pole_argument);
    CHECK_THROWS_AS(lgamma_stirling(rational(-1, 2), 30), nonpositive_argument);
    CHECK_THROWS_AS(gamma_product({{rational(-3), 1}}, 30), pole_argument);
    CHECK_THROWS_AS(euler_product_gamma(rational(-5, 2), 100, 30), nonpositive_argument);
}
