#pragma once

#include <optional>
#include <string>

#include "krall/families.hpp"

namespace krall {

// Delta-mass parameter: a finite positive scalar or the distinguished value
// infinity.  Infinity is a first-class family, not a large number: the
// degenerate expansion coefficients are the exact algebraic limits of the
// finite-u ratios.
class DeltaMass {
public:
    DeltaMass(Scalar v) : value_(std::move(v)) {} // NOLINT: implicit by design
    DeltaMass(long v) : value_(Scalar(v)) {}      // NOLINT
    static DeltaMass infinity() { return DeltaMass(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Scalar& value() const {
        if (!value_)
            throw unsupported_parameter("delta mass is infinite");
        return *value_;
    }

    std::string str() const { return value_ ? format_ratio(*value_) : "inf"; }

    bool operator==(const DeltaMass&) const = default;

private:
    DeltaMass() = default;
    std::optional<Scalar> value_;
};

inline DeltaMass parse_delta_mass(const std::string& text) {
    if (text == "inf" || text == "infinity")
        return DeltaMass::infinity();
    return DeltaMass(parse_scalar(text));
}

// Ratio multiplying L_{n-1}^kappa in the Krall-Laguerre expansion (with its
// sign): -[(k-1)! + u (n+1)_k] / [(k-1)! + u (n)_k], and its exact u -> oo
// limit -(n+kappa)/n.
inline Scalar krall_laguerre_coeff(int n, int kappa, const DeltaMass& u) {
    if (n < 1 || kappa < 1)
        throw invalid_parameter("krall_laguerre_coeff needs n >= 1, kappa >= 1");
    if (u.is_infinite())
        return -Scalar(n + kappa) / Scalar(n);
    const Scalar g = Scalar(factorial(kappa - 1));
    const Scalar den = g + u.value() * rising_factorial(Scalar(n), kappa);
    if (den == 0)
        throw degenerate_parameters("krall_laguerre: coefficient denominator vanishes");
    return -(g + u.value() * rising_factorial(Scalar(n + 1), kappa)) / den;
}

// Krall-Laguerre polynomial L_n^{kappa;u} = L_n^kappa + c L_{n-1}^kappa.
inline Poly krall_laguerre(int n, int kappa, const DeltaMass& u) {
    if (n < 0 || kappa < 1)
        throw invalid_parameter("krall_laguerre needs n >= 0, kappa >= 1");
    const Scalar alpha(kappa);
    if (n == 0)
        return laguerre(0, alpha);
    return laguerre(n, alpha) + krall_laguerre_coeff(n, kappa, u) * laguerre(n - 1, alpha);
}

// First Krall-Meixner family:
//   m_n^{a,c} + a m_k^{1/a,2-c}(-n-1) / ((1-a) m_k^{1/a,2-c}(-n)) m_{n-1}^{a,c}
inline Poly krall_meixner_i(int n, const Scalar& a, const Scalar& c, int kappa) {
    if (n < 0 || kappa < 1)
        throw invalid_parameter("krall_meixner_i needs n >= 0, kappa >= 1");
    if (n == 0)
        return meixner(0, a, c);
    const Poly dual = meixner(kappa, 1 / a, 2 - c);
    const Scalar den = dual(Scalar(-n));
    if (den == 0)
        throw degenerate_parameters("krall_meixner_i: m_k^{1/a,2-c}(-n) vanishes");
    const Scalar coeff = a * dual(Scalar(-n - 1)) / ((1 - a) * den);
    return meixner(n, a, c) + coeff * meixner(n - 1, a, c);
}

// Second Krall-Meixner family; the dual polynomial keeps parameter a.
//   m_n^{a,c} + m_k^{a,2-c}(-n-1) / ((1-a) m_k^{a,2-c}(-n)) m_{n-1}^{a,c}
inline Poly krall_meixner_ii(int n, const Scalar& a, const Scalar& c, int kappa) {
    if (n < 0 || kappa < 1)
        throw invalid_parameter("krall_meixner_ii needs n >= 0, kappa >= 1");
    if (n == 0)
        return meixner(0, a, c);
    const Poly dual = meixner(kappa, a, 2 - c);
    const Scalar den = dual(Scalar(-n));
    if (den == 0)
        throw degenerate_parameters("krall_meixner_ii: m_k^{a,2-c}(-n) vanishes");
    const Scalar coeff = dual(Scalar(-n - 1)) / ((1 - a) * den);
    return meixner(n, a, c) + coeff * meixner(n - 1, a, c);
}

// Ratio multiplying P_{n-1}^{alpha,kappa} in the one-delta Krall-Jacobi
// expansion, and its exact u -> oo limit.  Finite u requires integer
// alpha >= 0 so that 2^{alpha+kappa} stays rational.
inline Scalar krall_jacobi_i_coeff(int n, const Scalar& alpha, int kappa, const DeltaMass& u) {
    if (n < 1 || kappa < 1)
        throw invalid_parameter("krall_jacobi_i_coeff needs n >= 1, kappa >= 1");
    if (u.is_infinite()) {
        const Scalar den = (alpha + n + kappa) * rising_factorial(Scalar(n), kappa) *
                           rising_factorial(alpha + n, kappa);
        if (den == 0)
            throw degenerate_parameters("krall_jacobi_i: degenerate u=inf coefficient");
        return (alpha + n) * rising_factorial(Scalar(n + 1), kappa) *
               rising_factorial(alpha + n + 1, kappa) / den;
    }
    if (!is_nonneg_integer(alpha))
        throw unsupported_parameter(
            "krall_jacobi_i with finite u needs integer alpha >= 0 (2^alpha otherwise irrational)");
    const Scalar g = pow_scalar(Scalar(2), to_long(alpha) + kappa) * Scalar(factorial(kappa - 1));
    const Scalar den = (alpha + n + kappa) *
                       (g + u.value() * rising_factorial(Scalar(n), kappa) *
                                rising_factorial(alpha + n, kappa));
    if (den == 0)
        throw degenerate_parameters("krall_jacobi_i: coefficient denominator vanishes");
    return (alpha + n) *
           (g + u.value() * rising_factorial(Scalar(n + 1), kappa) *
                    rising_factorial(alpha + n + 1, kappa)) /
           den;
}

// One-delta Krall-Jacobi polynomial P_n^{alpha,kappa;u}.
inline Poly krall_jacobi_i(int n, const Scalar& alpha, int kappa, const DeltaMass& u) {
    if (n < 0 || kappa < 1)
        throw invalid_parameter("krall_jacobi_i needs n >= 0, kappa >= 1");
    const Scalar beta(kappa);
    if (n == 0)
        return jacobi(0, alpha, beta);
    return jacobi(n, alpha, beta) +
           krall_jacobi_i_coeff(n, alpha, kappa, u) * jacobi(n - 1, alpha, beta);
}

// T_sigma^kappa(n) = 2^{kappa+sigma} (kappa-1)! / (n+sigma+1)_kappa.
inline Scalar krall_jacobi_t(int kappa, int sigma, int n) {
    const Scalar den = rising_factorial(Scalar(n + sigma + 1), kappa);
    if (den == 0)
        throw degenerate_parameters("T_sigma^kappa: Pochhammer denominator vanishes");
    return pow_scalar(Scalar(2), kappa + sigma) * Scalar(factorial(kappa - 1)) / den;
}

// Two-delta Krall-Jacobi polynomial, expanded as a 3x3 determinant in three
// consecutive Jacobi polynomials.  u, v must be both finite or both
// infinite; n = 0 returns 1 and the u = v = oo case uses the stated initial
// values for n = 1.
inline Poly krall_jacobi_ii(int n, int kappa, int sigma, const DeltaMass& u, const DeltaMass& v) {
    if (n < 0 || kappa < 1 || sigma < 1)
        throw invalid_parameter("krall_jacobi_ii needs n >= 0, kappa >= 1, sigma >= 1");
    if (u.is_infinite() != v.is_infinite())
        throw unsupported_parameter("krall_jacobi_ii: weights must be both finite or both infinite");
    const Scalar ka(kappa), sg(sigma);
    if (n == 0)
        return Poly::one();

    if (u.is_infinite()) {
        if (n == 1) {
            const Scalar t_ks = krall_jacobi_t(kappa, sigma, -1) / rising_factorial(Scalar(2), kappa);
            const Scalar t_sk = krall_jacobi_t(sigma, kappa, -1) / rising_factorial(Scalar(2), sigma);
            const Scalar lead = t_sk / (1 + ka) + t_ks / (1 + sg);
            const Scalar tail = t_sk - t_ks;
            return lead * jacobi(1, ka, sg) - Poly(tail);
        }
        return cofactor_det3(
            jacobi(n, ka, sg), jacobi(n - 1, ka, sg), detail::jacobi_or_zero(n - 2, ka, sg),
            Scalar(1), Scalar(n) / (n + ka),
            rising_factorial(Scalar(n - 1), 2) / rising_factorial(ka + n - 1, 2), Scalar(1),
            Scalar(-n) / (n + sg),
            rising_factorial(Scalar(n - 1), 2) / rising_factorial(sg + n - 1, 2));
    }

    const Scalar pk = rising_factorial(Scalar(n + 1), kappa);
    const Scalar ps = rising_factorial(Scalar(n + 1), sigma);
    const Scalar r20 = u.value() + krall_jacobi_t(kappa, sigma, n) / pk;
    const Scalar r21 = u.value() * n / (n + ka) + krall_jacobi_t(kappa, sigma, n - 1) / pk;
    const Scalar r22 = u.value() * rising_factorial(Scalar(n - 1), 2) / rising_factorial(ka + n - 1, 2) +
                       krall_jacobi_t(kappa, sigma, n - 2) / pk;
    const Scalar r30 = v.value() + krall_jacobi_t(sigma, kappa, n) / ps;
    const Scalar r31 = -v.value() * n / (n + sg) - krall_jacobi_t(sigma, kappa, n - 1) / ps;
    const Scalar r32 = v.value() * rising_factorial(Scalar(n - 1), 2) / rising_factorial(sg + n - 1, 2) +
                       krall_jacobi_t(sigma, kappa, n - 2) / ps;
    Poly result = cofactor_det3(jacobi(n, ka, sg), jacobi(n - 1, ka, sg),
                                detail::jacobi_or_zero(n - 2, ka, sg), r20, r21, r22, r30, r31, r32);
    if (result.degree() != std::optional<int>(n))
        throw degenerate_parameters("krall_jacobi_ii: degree drop");
    return result;
}

// S^{a,b,N}_kappa(n) = R_kappa^{-b,-a,a+b+N}(theta^{-a-b}_{-n-1}), the dual
// Hahn value entering both Krall-Hahn expansions.
inline Scalar krall_hahn_s(const Scalar& a, const Scalar& b, const Scalar& N, int kappa, int n) {
    const Scalar point = theta_value(Scalar(-n - 1), -a - b);
    return dual_hahn(kappa, -b, -a, a + b + N)(point);
}

// Krall-Hahn I polynomial h_n^{a,b,N;kappa}, two consecutive Hahn polynomials.
inline Poly krall_hahn_i(int n, const Scalar& a, const Scalar& b, const Scalar& N, int kappa) {
    if (n < 0 || kappa < 1)
        throw invalid_parameter("krall_hahn_i needs n >= 0, kappa >= 1");
    if (n == 0)
        return hahn(0, a, b, N);
    const Scalar num = krall_hahn_s(a, b, N, kappa, n);     // R_k(theta_{-n-1})
    const Scalar den = krall_hahn_s(a, b, N, kappa, n - 1); // R_k(theta_{-n})
    if (den == 0 || a + b + n == 0)
        throw degenerate_parameters("krall_hahn_i: coefficient denominator vanishes");
    const Scalar coeff = (a + n) * num / ((a + b + n) * den);
    return hahn(n, a, b, N) + coeff * hahn(n - 1, a, b, N);
}

// Krall-Hahn II polynomial, 3x3 determinant in three consecutive Hahn
// polynomials with S-entries at shifted indices (h_{-1} = h_{-2} = 0).
inline Poly krall_hahn_ii(int n, const Scalar& a, const Scalar& b, const Scalar& N, int kappa,
                          int sigma) {
    if (n < 0 || kappa < 1 || sigma < 1)
        throw invalid_parameter("krall_hahn_ii needs n >= 0, kappa >= 1, sigma >= 1");
    const Scalar d1 = a + b + n - 1;
    const Scalar d2 = rising_factorial(d1, 2);
    if (d1 == 0 || d2 == 0)
        throw degenerate_parameters("krall_hahn_ii: row denominator vanishes");
    const Scalar r20 = rising_factorial(b + n - 1, 2) / d2 * krall_hahn_s(b, a, N, kappa, n);
    const Scalar r21 = (b + n - 1) / d1 * krall_hahn_s(b, a, N, kappa, n - 1);
    const Scalar r22 = krall_hahn_s(b, a, N, kappa, n - 2);
    const Scalar r30 = rising_factorial(a + n - 1, 2) / d2 * krall_hahn_s(a, b, N, sigma, n);
    const Scalar r31 = -(a + n - 1) / d1 * krall_hahn_s(a, b, N, sigma, n - 1);
    const Scalar r32 = krall_hahn_s(a, b, N, sigma, n - 2);
    Poly result = cofactor_det3(hahn(n, a, b, N), detail::hahn_or_zero(n - 1, a, b, N),
                                detail::hahn_or_zero(n - 2, a, b, N), r20, r21, r22, r30, r31, r32);
    if (result.degree() != std::optional<int>(n))
        throw degenerate_parameters("krall_hahn_ii: degree drop");
    return result;
}

} // namespace krall
