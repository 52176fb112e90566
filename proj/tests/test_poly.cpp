#include <catch2/catch_amalgamated.hpp>

#include "krall/poly.hpp"
#include "krall/sampler.hpp"

using namespace krall;

namespace {

Poly random_poly(RationalSampler& sampler, int max_degree) {
    std::vector<Scalar> c(static_cast<size_t>(sampler.integer(0, max_degree)) + 1);
    for (auto& v : c)
        v = sampler.rational();
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    const Poly xp1({Scalar(1), Scalar(1)});
    const Poly xm1({Scalar(-1), Scalar(1)});
    CHECK(xp1 * xm1 == Poly({Scalar(-1), Scalar(0), Scalar(1)}));
    CHECK(Poly::zero() * xp1 == Poly::zero());
    CHECK(Poly::monomial(2) * ratio(1, 2) == Poly({Scalar(0), Scalar(0), ratio(1, 2)}));
    CHECK(xp1 - xp1 == Poly::zero());
}

TEST_CASE("zero polynomial has no degree") {
    CHECK(!Poly::zero().degree().has_value());
    CHECK(Poly::zero().is_zero());
    CHECK(Poly({Scalar(0), Scalar(0)}).is_zero());
    CHECK(Poly::one().degree() == std::optional<int>(0));
    CHECK(Poly::monomial(3).degree() == std::optional<int>(3));
    // trailing zeros trim
    CHECK(Poly({Scalar(1), Scalar(2), Scalar(0)}).degree() == std::optional<int>(1));
}

TEST_CASE("degree contract of multiplication") {
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 30; ++i) {
        Poly p = random_poly(sampler, 5), q = random_poly(sampler, 5);
        if (p.is_zero() || q.is_zero()) {
            CHECK((p * q).is_zero());
        } else {
            CHECK(*(p * q).degree() == *p.degree() + *q.degree());
        }
    }
}

TEST_CASE("affine composition") {
    // p = x under x -> (1-x) N/2 at N = 10
    const Scalar N(10);
    const AffineMap m{-N / 2, N / 2};
    CHECK(compose_affine(Poly::x(), m) == Poly({N / 2, -N / 2}));
    CHECK(compose_affine(Poly::monomial(2), AffineMap::identity()) == Poly::monomial(2));
    CHECK(compose_affine(Poly({Scalar(1), Scalar(1)}), AffineMap{Scalar(2), Scalar(0)}) ==
          Poly({Scalar(1), Scalar(2)}));
}

TEST_CASE("composition of affine maps matches nested substitution") {
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 20; ++i) {
        const AffineMap m1{sampler.nonzero_rational(), sampler.rational()};
        const AffineMap m2{sampler.nonzero_rational(), sampler.rational()};
        const Poly p = random_poly(sampler, 4);
        CHECK(compose_affine(p, m1.after(m2)) == compose_affine(compose_affine(p, m1), m2));
        CHECK(m1.after(m2)(ratio(3, 7)) == m1(m2(ratio(3, 7))));
    }
}

TEST_CASE("affine composition distributes over products") {
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 20; ++i) {
        const AffineMap m{sampler.rational(), sampler.rational()};
        const Poly p = random_poly(sampler, 4), q = random_poly(sampler, 4);
        CHECK(compose_affine(p * q, m) == compose_affine(p, m) * compose_affine(q, m));
        CHECK(compose_affine(p + q, m) == compose_affine(p, m) + compose_affine(q, m));
    }
}

TEST_CASE("exact evaluation") {
    CHECK(Poly({Scalar(-1), Scalar(0), Scalar(1)})(Scalar(1)) == 0);
    CHECK(Poly::one()(ratio(355, 113)) == 1);
    // x(x+4) at -2
    CHECK(Poly({Scalar(0), Scalar(4), Scalar(1)})(Scalar(-2)) == -4);
    RationalSampler sampler(resolve_seed());
    for (int i = 0; i < 20; ++i) {
        const Poly p = random_poly(sampler, 5), q = random_poly(sampler, 5);
        const Scalar x = sampler.rational();
        CHECK((p * q)(x) == p(x) * q(x));
    }
}

TEST_CASE("polynomial composition") {
    const Poly q({Scalar(1), Scalar(2)}); // 2x + 1
    const Poly p({Scalar(0), Scalar(0), Scalar(1)});
    CHECK(compose(p, q) == q * q);
    CHECK(compose(Poly::one(), q) == Poly::one());
    CHECK(compose(Poly::zero(), q) == Poly::zero());
}

TEST_CASE("monomial to falling factorial change of basis") {
    // sum_j S(k,j) x(x-1)...(x-j+1) reproduces x^k
    for (int k = 0; k <= 12; ++k) {
        Poly sum;
        for (int j = 0; j <= k; ++j)
            sum += stirling2(k, j) * falling_factorial_poly(j);
        CHECK(sum == Poly::monomial(k));
    }
}

TEST_CASE("sup norm") {
    CHECK(sup_norm(Poly::zero()) == 0);
    CHECK(sup_norm(Poly({ratio(-3, 2), Scalar(1)})) == ratio(3, 2));
    CHECK(sup_distance(Poly::x(), Poly::x()) == 0);
    CHECK(sup_distance(Poly({Scalar(1)}), Poly({Scalar(0), Scalar(1)})) == 1);
}

TEST_CASE("cofactor determinant against scalar expansion") {
    // all-entries-scalar determinant versus the textbook formula
    const Scalar a(2), b(3), c(5), d(7), e(11), f(13), g(17), h(19), i(23);
    const Poly det = cofactor_det3(Poly(a), Poly(b), Poly(c), d, e, f, g, h, i);
    const Scalar want = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    CHECK(det == Poly(want));
}
