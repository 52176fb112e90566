#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krall/scalar.hpp"

namespace krall {

// x |-> scale * x + offset.
struct AffineMap {
    Scalar scale{1};
    Scalar offset{0};

    static AffineMap identity() { return {}; }

    // (this . other)(x) = this(other(x)).
    AffineMap after(const AffineMap& other) const {
        return {scale * other.scale, scale * other.offset + offset};
    }

    Scalar operator()(const Scalar& x) const { return scale * x + offset; }

    bool operator==(const AffineMap&) const = default;
};

// Dense univariate polynomial over Scalar, ascending coefficient order.
// The zero polynomial is the empty coefficient sequence; its degree is
// reported as an empty optional rather than -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Scalar constant) {
        if (constant != 0)
            coeffs_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Scalar(1)); }
    static Poly x() { return Poly({Scalar(0), Scalar(1)}); }
    static Poly monomial(int k, Scalar coeff = Scalar(1)) {
        if (coeff == 0 || k < 0)
            return Poly();
        std::vector<Scalar> c(static_cast<size_t>(k) + 1, Scalar(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<int> degree() const {
        if (coeffs_.empty())
            return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    // Coefficient of x^i; zero beyond the degree.
    Scalar coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return Scalar(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    Scalar leading_coeff() const {
        return coeffs_.empty() ? Scalar(0) : coeffs_.back();
    }

    bool operator==(const Poly&) const = default;

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Scalar& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }

    // Exact Horner evaluation.
    Scalar operator()(const Scalar& x) const {
        Scalar r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

// p(q(x)), expanded exactly (Horner in the polynomial ring).
inline Poly compose(const Poly& p, const Poly& q) {
    Poly r;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * q + Poly(*it);
    return r;
}

// p(scale*x + offset).
inline Poly compose_affine(const Poly& p, const AffineMap& m) {
    return compose(p, Poly({m.offset, m.scale}));
}

inline Poly pow(const Poly& p, int k) {
    if (k < 0)
        throw invalid_parameter("negative polynomial power");
    Poly r = Poly::one();
    for (int i = 0; i < k; ++i)
        r = r * p;
    return r;
}

// prod_{i=0}^{k-1} (base + i), a polynomial rising factorial.
inline Poly rising_factorial_poly(const Poly& base, int k) {
    Poly r = Poly::one();
    for (int i = 0; i < k; ++i)
        r = r * (base + Poly(Scalar(i)));
    return r;
}

// x (x-1) ... (x-j+1).
inline Poly falling_factorial_poly(int j) {
    Poly r = Poly::one();
    for (int i = 0; i < j; ++i)
        r = r * Poly({Scalar(-i), Scalar(1)});
    return r;
}

// binomial(upper, k) with a polynomial upper argument.
inline Poly binomial_poly(const Poly& upper, int k) {
    Poly r = Poly::one();
    for (int i = 0; i < k; ++i)
        r = r * (upper - Poly(Scalar(i)));
    return r * (Scalar(1) / Scalar(factorial(k)));
}

// Determinant of a 3x3 matrix whose first row holds polynomials and whose
// lower rows are scalars, expanded by cofactors along the first row.
inline Poly cofactor_det3(const Poly& p0, const Poly& p1, const Poly& p2,
                          const Scalar& r20, const Scalar& r21, const Scalar& r22,
                          const Scalar& r30, const Scalar& r31, const Scalar& r32) {
    return p0 * (r21 * r32 - r22 * r31) - p1 * (r20 * r32 - r22 * r30) +
           p2 * (r20 * r31 - r21 * r30);
}

// Max |coefficient|; the convergence metric used throughout.
inline Scalar sup_norm(const Poly& p) {
    Scalar m(0);
    for (const auto& c : p.coefficients())
        if (abs(c) > m)
            m = abs(c);
    return m;
}

inline Scalar sup_distance(const Poly& p, const Poly& q) {
    return sup_norm(p - q);
}

inline std::string to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    const auto& c = p.coefficients();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + format_ratio(c[i]) + ")";
        if (i == 1)
            s += "*x";
        else if (i > 1)
            s += "*x^" + std::to_string(i);
    }
    return s;
}

} // namespace krall
