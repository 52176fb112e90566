#include <catch2/catch_amalgamated.hpp>

#include "krall/sampler.hpp"
#include "krall/scalar.hpp"

using namespace krall;

namespace {

// Independent oracle: S(k,j) = (1/j!) sum_i (-1)^i C(j,i) (j-i)^k.
Scalar stirling2_oracle(int k, int j) {
    Scalar sum(0);
    for (int i = 0; i <= j; ++i) {
        Scalar term = binomial_general(Scalar(j), i) * pow_scalar(Scalar(j - i), k);
        sum += (i % 2 != 0) ? -term : term;
    }
    return sum / Scalar(factorial(j));
}

} // namespace

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(ratio(7, 3), 0) == 1);
    CHECK(rising_factorial(ratio(1, 2), 3) == ratio(15, 8));
    CHECK(rising_factorial(Scalar(-2), 3) == 0);
    CHECK(rising_factorial(Scalar(3), 2) == 12);
}

TEST_CASE("generalized binomial") {
    CHECK(binomial_general(Scalar(5), 2) == 10);
    // direct product oracle: (-1/2)(-3/2)/2
    CHECK(binomial_general(ratio(-1, 2), 2) == ratio(-1, 2) * ratio(-3, 2) / 2);
    CHECK(binomial_general(ratio(-1, 2), 2) == ratio(3, 8));
    CHECK(binomial_general(Scalar(3), 5) == 0);
    CHECK(binomial_general(ratio(22, 7), 0) == 1);
}

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == stirling2_oracle(3, 2));
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 4) == 1);
    CHECK_THROWS_AS(stirling2(2, 3), invalid_parameter);
    for (int k = 0; k <= 9; ++k)
        for (int j = 0; j <= k; ++j)
            CHECK(stirling2(k, j) == stirling2_oracle(k, j));
}

TEST_CASE("scalar field axioms on random rationals") {
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 50; ++i) {
        const Scalar a = sampler.rational(), b = sampler.rational(), c = sampler.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        const Scalar nz = sampler.nonzero_rational();
        CHECK(nz * (1 / nz) == 1);
    }
}

TEST_CASE("rising factorial splits multiplicatively") {
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 30; ++i) {
        const Scalar q = sampler.rational();
        const int j = sampler.integer(0, 6), k = sampler.integer(0, 6);
        CHECK(rising_factorial(q, j + k) == rising_factorial(q, j) * rising_factorial(q + j, k));
    }
}

TEST_CASE("gamma sign on rational arguments") {
    CHECK(gamma_sign(ratio(1, 2)) == 1);
    CHECK(gamma_sign(Scalar(3)) == 1);
    CHECK(gamma_sign(ratio(-1, 2)) == -1);
    CHECK(gamma_sign(ratio(-3, 2)) == 1);
    CHECK(gamma_sign(ratio(-5, 2)) == -1);
    CHECK_THROWS_AS(gamma_sign(Scalar(0)), invalid_parameter);
    CHECK_THROWS_AS(gamma_sign(Scalar(-2)), invalid_parameter);
}

TEST_CASE("ratio string round trip") {
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 100; ++i) {
        const Scalar q = sampler.rational(1000);
        CHECK(parse_scalar(format_ratio(q)) == q);
    }
    CHECK(format_ratio(Scalar(2)) == "2/1");
    CHECK(parse_scalar("6/4") == ratio(3, 2));
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK_THROWS_AS(parse_scalar("1/0"), invalid_parameter);
    CHECK_THROWS_AS(parse_scalar("1/-2"), invalid_parameter);
    CHECK_THROWS_AS(parse_scalar("x"), invalid_parameter);
    CHECK_THROWS_AS(parse_scalar("1/2/3"), invalid_parameter);
}

TEST_CASE("decimal approximation rounds half to even") {
    CHECK(approx_decimal(Scalar(0)) == "0");
    CHECK(approx_decimal(ratio(1, 2)) == "5.00000000000e-01");
    CHECK(approx_decimal(Scalar(1000)) == "1.00000000000e+03");
    CHECK(approx_decimal(ratio(-1, 3)) == "-3.33333333333e-01");
    CHECK(approx_decimal(ratio(2, 3)) == "6.66666666667e-01");
    // ties: 12-digit mantissa ending exactly in .5 ulp
    CHECK(approx_decimal(parse_scalar("1000000000005/1000000000000")) == "1.00000000000e+00");
    CHECK(approx_decimal(parse_scalar("1000000000015/1000000000000")) == "1.00000000002e+00");
    CHECK(approx_decimal(ratio(1, 1024), 3) == "9.77e-04");
    // rounding up across a power of ten
    CHECK(approx_decimal(parse_scalar("99999999999995/10000000000000")) == "1.00000000000e+01");
}

TEST_CASE("integer helpers") {
    CHECK(is_integer(Scalar(4)));
    CHECK(!is_integer(ratio(1, 2)));
    CHECK(is_nonneg_integer(Scalar(0)));
    CHECK(!is_nonneg_integer(Scalar(-1)));
    CHECK(to_long(Scalar(12)) == 12);
    CHECK_THROWS_AS(to_integer(ratio(1, 2)), invalid_parameter);
    CHECK(pow_scalar(ratio(2, 3), -2) == ratio(9, 4));
    CHECK(pow_scalar(Scalar(5), 0) == 1);
    CHECK_THROWS_AS(pow_scalar(Scalar(0), -1), invalid_parameter);
}
