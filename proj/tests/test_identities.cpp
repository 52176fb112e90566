#include <catch2/catch_amalgamated.hpp>

#include "krall/identities.hpp"

using namespace krall;

TEST_CASE("laguerre parameter-lowering identity, explicit case") {
    // L_2^1 - L_1^1 = x^2/2 - 2x + 1 = L_2^0
    const Poly diff = laguerre(2, Scalar(1)) - laguerre(1, Scalar(1));
    CHECK(diff == Poly({Scalar(1), Scalar(-2), ratio(1, 2)}));
    CHECK(diff == laguerre(2, Scalar(0)));
    IdentityParams p;
    p.alpha = Scalar(1);
    CHECK(check_identity(IdentityId::f1lag, p, 2));
}

TEST_CASE("lambda-theta factorization, one-factor case") {
    // -lambda_1(theta_x) = -x(x+u+1) = (-x)_1 (x+u+1)_1
    const Scalar u = ratio(4, 3);
    const Poly lhs = -compose(lambda_poly(1, u), theta_poly(u));
    CHECK(lhs == Poly({Scalar(0), -(u + 1), Scalar(-1)}));
    IdentityParams p;
    p.u = u;
    CHECK(check_identity(IdentityId::lth, p, 1));
}

TEST_CASE("determinantal jacobi identity, explicit case") {
    IdentityParams p;
    p.alpha = Scalar(2);
    p.beta = Scalar(2);
    CHECK(check_identity(IdentityId::lagder2, p, 3));
    CHECK(check_identity(IdentityId::jaci, p, 3));
}

TEST_CASE("excluded parameters raise") {
    IdentityParams p;
    p.alpha = Scalar(-2);
    p.beta = Scalar(0); // n + alpha + beta = 0 at n = 2
    CHECK_THROWS_AS(check_identity(IdentityId::lagder, p, 2), invalid_parameter);
    CHECK_THROWS_AS(check_identity(IdentityId::lagder2, p, 2), invalid_parameter);
}

TEST_CASE("jacobi reflection for a sweep of degrees") {
    IdentityParams p;
    p.alpha = ratio(3, 4);
    p.beta = ratio(-2, 5);
    for (int n = 0; n <= 10; ++n)
        CHECK(check_identity(IdentityId::jacobi_reflection, p, n));
}

TEST_CASE("full identity suite on random admissible draws") {
    for (IdentityId id : all_identities()) {
        const auto result = run_identity_suite(id, 20, 12, resolve_seed());
        INFO("identity " << identity_name(id)
                         << (result.witness ? " witness " + *result.witness : std::string()));
        CHECK(result.pass);
    }
}

TEST_CASE("identity names round trip") {
    for (IdentityId id : all_identities())
        CHECK(identity_from_name(identity_name(id)) == id);
    CHECK(!identity_from_name("nonsense").has_value());
}
