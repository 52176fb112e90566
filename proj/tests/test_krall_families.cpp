#include <catch2/catch_amalgamated.hpp>

#include "krall/krall_families.hpp"
#include "krall/sampler.hpp"

using namespace krall;

namespace {

// The determinantal form of the degenerate one-delta Krall-Jacobi family:
// rows built from P^{alpha,kappa} with the index pattern of the identity
// that defines it.  Used for the proportionality check.
Poly degenerate_kj_determinant(int n, const Scalar& alpha, int kappa) {
    const Scalar ka(kappa);
    const Scalar nak = alpha + n + ka;
    return cofactor_det3(
        jacobi(n, alpha, ka), jacobi(n - 1, alpha, ka), n >= 2 ? jacobi(n - 2, alpha, ka) : Poly::zero(),
        rising_factorial(ka + n - 1, 2) / rising_factorial(nak - 1, 2), (ka + n - 1) / (nak - 1),
        Scalar(1), Scalar(1), Scalar(-n) / (n + ka),
        rising_factorial(Scalar(n - 1), 2) / rising_factorial(ka + n - 1, 2));
}

bool proportional(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        return p.is_zero() && q.is_zero();
    return p * q.leading_coeff() == q * p.leading_coeff();
}

} // namespace

TEST_CASE("delta mass values") {
    const DeltaMass u = ratio(1, 2);
    CHECK(!u.is_infinite());
    CHECK(u.value() == ratio(1, 2));
    CHECK(DeltaMass::infinity().is_infinite());
    CHECK_THROWS_AS(DeltaMass::infinity().value(), unsupported_parameter);
    CHECK(parse_delta_mass("inf").is_infinite());
    CHECK(parse_delta_mass("3/4").value() == ratio(3, 4));
    CHECK(DeltaMass::infinity().str() == "inf");
}

TEST_CASE("krall laguerre expansion") {
    CHECK(krall_laguerre(0, 1, Scalar(1)) == Poly::one());
    CHECK(krall_laguerre(1, 1, Scalar(1)) == Poly({ratio(1, 2), Scalar(-1)}));
    CHECK(krall_laguerre(2, 1, DeltaMass::infinity()) ==
          laguerre(2, Scalar(1)) - ratio(3, 2) * laguerre(1, Scalar(1)));
    // u -> 0 collapses to the classical parameter shift
    CHECK(krall_laguerre_coeff(1, 1, Scalar(0)) == -1);
    CHECK(krall_laguerre(1, 1, Scalar(0)) == laguerre(1, Scalar(0)));
    // coefficient denominator (kappa-1)! + u (n)_kappa can vanish
    CHECK_THROWS_AS(krall_laguerre(1, 1, Scalar(-1)), degenerate_parameters);
}

TEST_CASE("krall laguerre u=inf coefficient is the exact limit along u = 2^t") {
    for (int kappa = 1; kappa <= 3; ++kappa) {
        for (int n = 1; n <= 6; ++n) {
            const Scalar limit = krall_laguerre_coeff(n, kappa, DeltaMass::infinity());
            Scalar prev_gap(-1);
            for (int t = 1; t <= 30; ++t) {
                const Scalar gap =
                    abs(krall_laguerre_coeff(n, kappa, Scalar(Integer(1) << t)) - limit);
                if (t > 1)
                    CHECK(gap < prev_gap);
                prev_gap = gap;
            }
            CHECK(prev_gap < ratio(1, 1000000));
        }
    }
}

TEST_CASE("krall meixner I expansion") {
    // n=1, a=1/2, c=4, kappa=1: the dual polynomial is m_1^{1/a,2-c}(z) = z - 4,
    // so the correction coefficient is a(-2-4)/((1-a)(-1-4)) = 6/5.
    const Scalar a = ratio(1, 2), c = Scalar(4);
    const Poly dual = meixner(1, 1 / a, 2 - c);
    CHECK(dual == Poly({Scalar(-4), Scalar(1)}));
    const Scalar coeff = a * dual(Scalar(-2)) / ((1 - a) * dual(Scalar(-1)));
    CHECK(coeff == ratio(6, 5));
    CHECK(krall_meixner_i(1, a, c, 1) == meixner(1, a, c) + coeff * meixner(0, a, c));
    CHECK(krall_meixner_i(1, a, c, 1) == Poly({ratio(-14, 5), Scalar(1)}));
    CHECK(krall_meixner_i(0, a, c, 1) == Poly::one());
    // vanishing denominator: m_1^{1/a,2-c}(-1) = 0 at c = 1 + a
    CHECK_THROWS_AS(krall_meixner_i(1, a, 1 + a, 1), degenerate_parameters);
}

TEST_CASE("krall meixner II expansion") {
    const Scalar a = ratio(1, 2), c = Scalar(4);
    CHECK(krall_meixner_ii(0, a, c, 2) == Poly::one());
    // kappa = 1 coefficient from the closed form of m_1^{a,2-c}
    const Poly dual = meixner(1, a, 2 - c);
    CHECK(dual == Poly({(c - 2) / (1 / a - 1), Scalar(1)}));
    const Scalar coeff = dual(Scalar(-2)) / ((1 - a) * dual(Scalar(-1)));
    CHECK(krall_meixner_ii(1, a, c, 1) == meixner(1, a, c) + coeff * meixner(0, a, c));
    CHECK(krall_meixner_ii(1, a, c, 1).degree() == std::optional<int>(1));
}

TEST_CASE("krall jacobi I expansion") {
    // n=1, alpha=1, kappa=1, u=1: 2^{alpha+kappa} Gamma(kappa) = 4 and the
    // coefficient is 2(4+6)/(3(4+2)) = 10/9.
    CHECK(krall_jacobi_i(1, Scalar(1), 1, Scalar(1)) ==
          jacobi(1, Scalar(1), Scalar(1)) + ratio(10, 9) * Poly::one());
    CHECK(krall_jacobi_i(1, Scalar(1), 1, DeltaMass::infinity()) ==
          jacobi(1, Scalar(1), Scalar(1)) + Scalar(2) * Poly::one());
    CHECK(krall_jacobi_i(0, Scalar(2), 3, Scalar(1)) == Poly::one());
    // finite u requires integer alpha >= 0; u = inf does not
    CHECK_THROWS_AS(krall_jacobi_i(1, ratio(1, 2), 1, Scalar(1)), unsupported_parameter);
    CHECK(krall_jacobi_i(1, ratio(1, 2), 1, DeltaMass::infinity()).degree() ==
          std::optional<int>(1));
}

TEST_CASE("krall jacobi I degenerate family is proportional to its determinant form") {
    for (int n = 2; n <= 5; ++n)
        for (int alpha = 0; alpha <= 2; ++alpha)
            for (int kappa = 1; kappa <= 2; ++kappa) {
                const Poly mine =
                    krall_jacobi_i(n, Scalar(alpha), kappa, DeltaMass::infinity());
                const Poly det = degenerate_kj_determinant(n, Scalar(alpha + 1), kappa);
                CHECK(proportional(mine, det));
            }
}

TEST_CASE("krall jacobi II expansion") {
    CHECK(krall_jacobi_ii(0, 1, 1, Scalar(1), Scalar(1)) == Poly::one());
    CHECK(krall_jacobi_ii(0, 2, 1, DeltaMass::infinity(), DeltaMass::infinity()) == Poly::one());
    CHECK(krall_jacobi_ii(2, 1, 1, Scalar(1), Scalar(1)).degree() == std::optional<int>(2));
    CHECK(krall_jacobi_ii(1, 2, 1, Scalar(1), Scalar(2)).degree() == std::optional<int>(1));
    // mixed finite/infinite weights are not a family
    CHECK_THROWS_AS(krall_jacobi_ii(2, 1, 1, Scalar(1), DeltaMass::infinity()),
                    unsupported_parameter);
    // u = v = inf rows for n >= 2
    const int n = 2, kappa = 1, sigma = 2;
    const Poly expect = cofactor_det3(
        jacobi(n, Scalar(kappa), Scalar(sigma)), jacobi(n - 1, Scalar(kappa), Scalar(sigma)),
        jacobi(n - 2, Scalar(kappa), Scalar(sigma)), Scalar(1), Scalar(n) / (n + kappa),
        rising_factorial(Scalar(n - 1), 2) / rising_factorial(Scalar(n + kappa - 1), 2),
        Scalar(1), Scalar(-n) / (n + sigma),
        rising_factorial(Scalar(n - 1), 2) / rising_factorial(Scalar(n + sigma - 1), 2));
    CHECK(krall_jacobi_ii(n, kappa, sigma, DeltaMass::infinity(), DeltaMass::infinity()) ==
          expect);
}

TEST_CASE("krall hahn I expansion") {
    // kappa=1: R_1^{-b,-a,a+b+N}(z) = z - (a+b+N)(1-b), evaluated at
    // theta_{-n-1}^{-a-b} over theta_{-n}^{-a-b}.
    const Scalar a = ratio(1, 2), b = Scalar(3), N = Scalar(6);
    CHECK(theta_value(Scalar(-1), -a - b) == a + b);
    const Poly r1 = dual_hahn(1, -b, -a, a + b + N);
    CHECK(r1 == Poly({-(a + b + N) * (1 - b), Scalar(1)}));
    const Scalar coeff =
        (1 + a) * r1(theta_value(Scalar(-2), -a - b)) / ((1 + a + b) * r1(theta_value(Scalar(-1), -a - b)));
    CHECK(coeff == ratio(56, 135));
    CHECK(krall_hahn_i(1, a, b, N, 1) == hahn(1, a, b, N) + coeff * hahn(0, a, b, N));
    CHECK(krall_hahn_i(0, a, b, N, 1) == Poly::one());
    // theta_{-1} = a+b = 0 makes R_1 vanish at the denominator point
    CHECK_THROWS_AS(krall_hahn_i(1, Scalar(-1), Scalar(1), N, 1), degenerate_parameters);
}

TEST_CASE("krall hahn II expansion") {
    const Scalar a(3), b(3), N(8);
    const Poly p0 = krall_hahn_ii(0, a, b, N, 1, 1);
    CHECK(p0.degree() == std::optional<int>(0));
    CHECK(!p0.is_zero());
    CHECK(krall_hahn_ii(2, a, b, N, 1, 1).degree() == std::optional<int>(2));
    CHECK(krall_hahn_ii(1, a, b, N, 1, 2).degree() == std::optional<int>(1));
    // the S-entry swaps parameter roles exactly as printed
    const Scalar s_swapped = krall_hahn_s(b, a, N, 2, 3);
    CHECK(s_swapped == dual_hahn(2, -a, -b, a + b + N)(theta_value(Scalar(-4), -a - b)));
}

TEST_CASE("every constructor returns degree exactly n") {
    const Scalar a = ratio(1, 2), c = Scalar(5), alpha = Scalar(1);
    for (int n = 0; n <= 8; ++n) {
        CHECK(krall_laguerre(n, 2, ratio(1, 2)).degree() == std::optional<int>(n));
        CHECK(krall_laguerre(n, 2, DeltaMass::infinity()).degree() == std::optional<int>(n));
        CHECK(krall_meixner_i(n, a, c, 2).degree() == std::optional<int>(n));
        CHECK(krall_meixner_ii(n, a, Scalar(4), 2).degree() == std::optional<int>(n));
        CHECK(krall_jacobi_i(n, alpha, 2, Scalar(1)).degree() == std::optional<int>(n));
        CHECK(krall_jacobi_ii(n, 2, 1, Scalar(1), Scalar(2)).degree() == std::optional<int>(n));
        CHECK(krall_hahn_i(n, a, Scalar(3), Scalar(10), 1).degree() == std::optional<int>(n));
        CHECK(krall_hahn_ii(n, Scalar(3), Scalar(3), Scalar(10), 1, 1).degree() ==
              std::optional<int>(n));
    }
}
