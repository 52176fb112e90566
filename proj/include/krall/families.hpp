#pragma once

#include <utility>
#include <variant>

#include "krall/poly.hpp"

namespace krall {

// ---------------------------------------------------------------------------
// Classical families.  Each constructor expands the defining terminating sum
// with exact term ratios; no recurrence is used here (recurrences are checked
// against these definitions in the identity catalog and the test suite).
// ---------------------------------------------------------------------------

// Meixner polynomial m_n^{a,c}, normalized with leading coefficient 1/n!.
//   m_n^{a,c}(x) = a^n/(1-a)^n * sum_j a^{-j} C(x, j) C(-x-c, n-j)
inline Poly meixner(int n, const Scalar& a, const Scalar& c) {
    if (n < 0)
        throw invalid_parameter("meixner needs n >= 0");
    if (a == 0 || a == 1)
        throw invalid_parameter("meixner requires a not in {0, 1}");
    const Poly x = Poly::x();
    const Poly minus_x_minus_c({-c, Scalar(-1)});
    Poly sum;
    for (int j = 0; j <= n; ++j) {
        Poly term = binomial_poly(x, j) * binomial_poly(minus_x_minus_c, n - j);
        sum += term * pow_scalar(a, n - j);
    }
    return sum * pow_scalar(1 - a, -static_cast<long>(n));
}

// Laguerre polynomial L_n^alpha.
//   L_n^alpha(x) = sum_j (-x)^j / j! * C(n+alpha, n-j)
inline Poly laguerre(int n, const Scalar& alpha) {
    if (n < 0)
        throw invalid_parameter("laguerre needs n >= 0");
    Poly sum;
    for (int j = 0; j <= n; ++j) {
        Scalar coeff = binomial_general(alpha + n, n - j) / Scalar(factorial(j));
        if (j % 2 != 0)
            coeff = -coeff;
        sum += Poly::monomial(j, coeff);
    }
    return sum;
}

// Jacobi polynomial P_n^{alpha,beta}, standard normalization.
//   P_n(x) = 2^{-n} sum_j C(n+alpha, j) C(n+beta, n-j) (x-1)^{n-j} (x+1)^j
inline Poly jacobi(int n, const Scalar& alpha, const Scalar& beta) {
    if (n < 0)
        throw invalid_parameter("jacobi needs n >= 0");
    const Poly xm1({Scalar(-1), Scalar(1)});
    const Poly xp1({Scalar(1), Scalar(1)});
    Poly sum;
    for (int j = 0; j <= n; ++j) {
        Scalar coeff = binomial_general(alpha + n, j) * binomial_general(beta + n, n - j);
        sum += coeff * (pow(xm1, n - j) * pow(xp1, j));
    }
    return sum * pow_scalar(Scalar(2), -static_cast<long>(n));
}

// Hahn polynomial h_n^{a,b,N}.  The 3F2 sum is evaluated as n+1 exact terms
// with the prefactor folded in:
//   h_n(x) = (1/n!) sum_j (-n)_j (-x)_j (n+a+b+1)_j (a+j+1)_{n-j} / ((-N)_j j!)
inline Poly hahn(int n, const Scalar& a, const Scalar& b, const Scalar& N) {
    if (n < 0)
        throw invalid_parameter("hahn needs n >= 0");
    const Poly minus_x({Scalar(0), Scalar(-1)});
    Poly sum;
    for (int j = 0; j <= n; ++j) {
        const Scalar den = rising_factorial(-N, j) * Scalar(factorial(j));
        if (den == 0)
            throw invalid_parameter("hahn: zero denominator in series term (n > N)");
        Scalar coeff = rising_factorial(Scalar(-n), j) * rising_factorial(a + b + n + 1, j) *
                       rising_factorial(a + j + 1, n - j) / den;
        sum += coeff * rising_factorial_poly(minus_x, j);
    }
    return sum * ratio(Integer(1), factorial(n));
}

// lambda_j^u(x) = prod_{i=0}^{j-1} (x - i(u+i+1)), degree j.
inline Poly lambda_poly(int j, const Scalar& u) {
    if (j < 0)
        throw invalid_parameter("lambda_poly needs j >= 0");
    Poly r = Poly::one();
    for (int i = 0; i < j; ++i)
        r = r * Poly({Scalar(-i) * (u + i + 1), Scalar(1)});
    return r;
}

// theta^u(x) = x(x+u+1), degree 2.
inline Poly theta_poly(const Scalar& u) {
    return Poly({Scalar(0), u + 1, Scalar(1)});
}

inline Scalar theta_value(const Scalar& x, const Scalar& u) {
    return x * (x + u + 1);
}

inline std::pair<Poly, Poly> structural_polys(int j, const Scalar& u) {
    return {lambda_poly(j, u), theta_poly(u)};
}

// Dual Hahn polynomial R_n^{a,b,N}, expanded out of the lambda basis;
// always a polynomial of degree n in x.
//   R_n(x) = sum_j (-n)_j (-N+j)_{n-j} (a+j+1)_{n-j} / ((-1)^j j!) lambda_j^{a+b}(x)
inline Poly dual_hahn(int n, const Scalar& a, const Scalar& b, const Scalar& N) {
    if (n < 0)
        throw invalid_parameter("dual_hahn needs n >= 0");
    Poly sum;
    for (int j = 0; j <= n; ++j) {
        Scalar coeff = rising_factorial(Scalar(-n), j) * rising_factorial(j - N, n - j) *
                       rising_factorial(a + j + 1, n - j) / Scalar(factorial(j));
        if (j % 2 != 0)
            coeff = -coeff;
        sum += coeff * lambda_poly(j, a + b);
    }
    return sum;
}

// Tagged family selector.  Parameters are stored exactly; validity windows
// are checked by the constructors at use, not here, so degenerate-limit
// studies can still build off-window polynomials.
struct MeixnerFamily {
    Scalar a, c;
};
struct LaguerreFamily {
    Scalar alpha;
};
struct JacobiFamily {
    Scalar alpha, beta;
};
struct HahnFamily {
    Scalar a, b, N;
};
struct DualHahnFamily {
    Scalar a, b, N;
};

using FamilyId =
    std::variant<MeixnerFamily, LaguerreFamily, JacobiFamily, HahnFamily, DualHahnFamily>;

inline Poly build(const FamilyId& id, int n) {
    return std::visit(
        [n](const auto& f) -> Poly {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, MeixnerFamily>)
                return meixner(n, f.a, f.c);
            else if constexpr (std::is_same_v<T, LaguerreFamily>)
                return laguerre(n, f.alpha);
            else if constexpr (std::is_same_v<T, JacobiFamily>)
                return jacobi(n, f.alpha, f.beta);
            else if constexpr (std::is_same_v<T, HahnFamily>)
                return hahn(n, f.a, f.b, f.N);
            else
                return dual_hahn(n, f.a, f.b, f.N);
        },
        id);
}

namespace detail {

// negative-index convention: lower terms in the expansions are zero
inline Poly laguerre_or_zero(int n, const Scalar& alpha) {
    return n < 0 ? Poly::zero() : laguerre(n, alpha);
}

inline Poly meixner_or_zero(int n, const Scalar& a, const Scalar& c) {
    return n < 0 ? Poly::zero() : meixner(n, a, c);
}

inline Poly jacobi_or_zero(int n, const Scalar& alpha, const Scalar& beta) {
    return n < 0 ? Poly::zero() : jacobi(n, alpha, beta);
}

inline Poly hahn_or_zero(int n, const Scalar& a, const Scalar& b, const Scalar& N) {
    return n < 0 ? Poly::zero() : hahn(n, a, b, N);
}

} // namespace detail

} // namespace krall
