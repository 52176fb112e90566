#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krall/families.hpp"
#include "krall/sampler.hpp"

namespace krall {

// Catalog of polynomial identities among the classical families.  Each entry
// is checked as an exact Poly equality after full expansion.
enum class IdentityId {
    f1lag,             // L_n^{alpha-1} = L_n^alpha - L_{n-1}^alpha
    mxttrr,            // Meixner three-term recurrence
    lagttrr,           // Laguerre three-term recurrence
    lagder,            // Jacobi beta-lowering contiguous relation
    lagdere,           // Jacobi alpha-lowering contiguous relation
    lagder2,           // both parameters lowered, 3x3 determinant form
    jaci,              // mixed lowering, 3x3 determinant form
    lth,               // lambda_j^u(theta^u_x) factorization
    jacobi_reflection, // P_n^{a,b}(-x) = (-1)^n P_n^{b,a}(x)
};

inline const char* identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::f1lag: return "f1lag";
    case IdentityId::mxttrr: return "mxttrr";
    case IdentityId::lagttrr: return "lagttrr";
    case IdentityId::lagder: return "Lagder";
    case IdentityId::lagdere: return "Lagdere";
    case IdentityId::lagder2: return "Lagder2";
    case IdentityId::jaci: return "jaci";
    case IdentityId::lth: return "lth";
    case IdentityId::jacobi_reflection: return "jacobi_reflection";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (IdentityId id : {IdentityId::f1lag, IdentityId::mxttrr, IdentityId::lagttrr,
                          IdentityId::lagder, IdentityId::lagdere, IdentityId::lagder2,
                          IdentityId::jaci, IdentityId::lth, IdentityId::jacobi_reflection}) {
        if (name == identity_name(id))
            return id;
    }
    return std::nullopt;
}

// Parameter assignment for an identity check; only the fields the identity
// uses are read.
struct IdentityParams {
    Scalar a{0};
    Scalar c{0};
    Scalar alpha{0};
    Scalar beta{0};
    Scalar u{0};
};

namespace detail {

inline void require_nonzero(const Scalar& v, const char* what) {
    if (v == 0)
        throw invalid_parameter(std::string("identity inapplicable: ") + what + " vanishes");
}

} // namespace detail

// True iff both sides of the identity agree as exact polynomials.  Throws
// invalid_parameter when the parameters hit one of the identity's excluded
// denominators.
inline bool check_identity(IdentityId id, const IdentityParams& p, int n) {
    using namespace detail;
    switch (id) {
    case IdentityId::f1lag: {
        return laguerre(n, p.alpha - 1) ==
               laguerre(n, p.alpha) - laguerre_or_zero(n - 1, p.alpha);
    }
    case IdentityId::mxttrr: {
        require_nonzero(p.a - 1, "a-1");
        require_nonzero(p.a, "a");
        const Poly mn = meixner(n, p.a, p.c);
        const Poly lhs = Poly::x() * mn;
        const Poly rhs = Scalar(n + 1) * meixner(n + 1, p.a, p.c) -
                         ((p.a + 1) * n + p.a * p.c) / (p.a - 1) * mn +
                         p.a * (p.c + n - 1) / pow_scalar(p.a - 1, 2) *
                             (n == 0 ? Poly::zero() : meixner(n - 1, p.a, p.c));
        return lhs == rhs;
    }
    case IdentityId::lagttrr: {
        const Poly ln = laguerre(n, p.alpha);
        const Poly lhs = Poly::x() * ln;
        const Poly rhs = Scalar(-(n + 1)) * laguerre(n + 1, p.alpha) +
                         (p.alpha + 2 * n + 1) * ln -
                         (p.alpha + n) * laguerre_or_zero(n - 1, p.alpha);
        return lhs == rhs;
    }
    case IdentityId::lagder: {
        require_nonzero(p.alpha + p.beta + n, "n+alpha+beta");
        const Scalar nab = p.alpha + p.beta + n;
        const Poly lhs = (2 * n + p.alpha + p.beta) / nab * jacobi(n, p.alpha, p.beta - 1);
        const Poly rhs = jacobi(n, p.alpha, p.beta) +
                         (p.alpha + n) / nab * jacobi_or_zero(n - 1, p.alpha, p.beta);
        return lhs == rhs;
    }
    case IdentityId::lagdere: {
        require_nonzero(p.alpha + p.beta + n, "n+alpha+beta");
        const Scalar nab = p.alpha + p.beta + n;
        const Poly lhs = (2 * n + p.alpha + p.beta) / nab * jacobi(n, p.alpha - 1, p.beta);
        const Poly rhs = jacobi(n, p.alpha, p.beta) -
                         (p.beta + n) / nab * jacobi_or_zero(n - 1, p.alpha, p.beta);
        return lhs == rhs;
    }
    case IdentityId::lagder2: {
        const Scalar nab = p.alpha + p.beta + n;
        require_nonzero(nab, "n+alpha+beta");
        require_nonzero(nab - 1, "n+alpha+beta-1");
        const Poly lhs = rising_factorial(2 * n + p.alpha + p.beta - 2, 3) /
                         (nab * pow_scalar(nab - 1, 2)) *
                         jacobi(n, p.alpha - 1, p.beta - 1);
        const Scalar d2 = rising_factorial(nab - 1, 2);
        const Poly rhs = cofactor_det3(
            jacobi(n, p.alpha, p.beta), jacobi_or_zero(n - 1, p.alpha, p.beta),
            jacobi_or_zero(n - 2, p.alpha, p.beta),
            rising_factorial(p.beta + n - 1, 2) / d2, (p.beta + n - 1) / (nab - 1), Scalar(1),
            rising_factorial(p.alpha + n - 1, 2) / d2, -(p.alpha + n - 1) / (nab - 1), Scalar(1));
        return lhs == rhs;
    }
    case IdentityId::jaci: {
        const Scalar nab = p.alpha + p.beta + n;
        require_nonzero(nab, "n+alpha+beta");
        require_nonzero(nab - 1, "n+alpha+beta-1");
        require_nonzero(p.beta + n, "n+beta");
        require_nonzero(p.beta + n - 1, "n+beta-1");
        require_nonzero(2 * n + p.alpha + p.beta, "2n+alpha+beta");
        require_nonzero(2 * n + p.alpha + p.beta - 2, "2n+alpha+beta-2");
        const Poly lhs = (Scalar(n) / (p.beta + n) * jacobi(n, p.alpha - 1, p.beta) +
                          jacobi_or_zero(n - 1, p.alpha - 1, p.beta)) *
                         (Scalar(1) / rising_factorial(nab - 1, 2));
        const Scalar d2 = rising_factorial(nab - 1, 2);
        const Poly det = cofactor_det3(
            jacobi(n, p.alpha, p.beta), jacobi_or_zero(n - 1, p.alpha, p.beta),
            jacobi_or_zero(n - 2, p.alpha, p.beta),
            rising_factorial(p.beta + n - 1, 2) / d2, (p.beta + n - 1) / (nab - 1), Scalar(1),
            Scalar(1), Scalar(-n) / (p.beta + n),
            rising_factorial(Scalar(n - 1), 2) / rising_factorial(p.beta + n - 1, 2));
        const Poly rhs =
            det * (Scalar(1) / ((2 * n + p.alpha + p.beta) * (2 * n + p.alpha + p.beta - 2)));
        return lhs == rhs;
    }
    case IdentityId::lth: {
        // n plays the role of the index j here.
        const Poly lhs = compose(lambda_poly(n, p.u), theta_poly(p.u)) *
                         (n % 2 != 0 ? Scalar(-1) : Scalar(1));
        const Poly minus_x({Scalar(0), Scalar(-1)});
        const Poly x_shift({p.u + 1, Scalar(1)});
        const Poly rhs = rising_factorial_poly(minus_x, n) * rising_factorial_poly(x_shift, n);
        return lhs == rhs;
    }
    case IdentityId::jacobi_reflection: {
        const Poly lhs = compose_affine(jacobi(n, p.alpha, p.beta), {Scalar(-1), Scalar(0)});
        const Poly rhs = jacobi(n, p.beta, p.alpha) * (n % 2 != 0 ? Scalar(-1) : Scalar(1));
        return lhs == rhs;
    }
    }
    throw invalid_parameter("unknown identity");
}

struct IdentitySuiteResult {
    IdentityId id;
    int draws = 0;
    bool pass = true;
    std::optional<std::string> witness; // parameter assignment of first failure
};

// Runs `draws` random admissible parameter draws for one identity.
// Rejection-samples away from the identity's excluded set.
inline IdentitySuiteResult run_identity_suite(IdentityId id, int draws, int max_n,
                                              std::uint64_t seed) {
    RationalSampler sampler(seed);
    IdentitySuiteResult result{id, draws, true, std::nullopt};
    const int min_n = (id == IdentityId::lagder2 || id == IdentityId::jaci) ? 2 : 0;
    const int lth_max = max_n < 8 ? max_n : 8;
    for (int i = 0; i < draws; ++i) {
        IdentityParams p;
        int n = 0;
        for (int tries = 0;; ++tries) {
            if (tries > 1000)
                throw invalid_parameter("admissible parameter rejection sampling stalled");
            p.a = sampler.rational();
            p.c = sampler.rational();
            p.alpha = sampler.rational();
            p.beta = sampler.rational();
            p.u = sampler.rational();
            n = id == IdentityId::lth ? sampler.integer(0, lth_max)
                                      : sampler.integer(min_n, max_n);
            try {
                if (!check_identity(id, p, n)) {
                    result.pass = false;
                    if (!result.witness)
                        result.witness = "n=" + std::to_string(n) + " a=" + format_ratio(p.a) +
                                         " c=" + format_ratio(p.c) +
                                         " alpha=" + format_ratio(p.alpha) +
                                         " beta=" + format_ratio(p.beta) +
                                         " u=" + format_ratio(p.u);
                }
                break;
            } catch (const invalid_parameter&) {
                continue; // excluded parameters; redraw
            }
        }
    }
    return result;
}

inline std::vector<IdentityId> all_identities() {
    return {IdentityId::f1lag,   IdentityId::mxttrr,  IdentityId::lagttrr,
            IdentityId::lagder,  IdentityId::lagdere, IdentityId::lagder2,
            IdentityId::jaci,    IdentityId::lth,     IdentityId::jacobi_reflection};
}

} // namespace krall
