#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "krall/errors.hpp"

namespace krall {

// Exact arbitrary-precision rational scalar.  cpp_rational keeps the
// canonical form we rely on everywhere: denominator > 0 and gcd(num, den)
// = 1 after every operation, so equality is structural.
using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Scalar ratio(Integer num, Integer den) {
    if (den == 0)
        throw invalid_parameter("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(std::move(num), std::move(den));
}

inline Scalar ratio(long long num, long long den) {
    return ratio(Integer(num), Integer(den));
}

inline bool is_integer(const Scalar& q) { return denominator(q) == 1; }

inline bool is_nonneg_integer(const Scalar& q) {
    return is_integer(q) && numerator(q) >= 0;
}

inline Integer to_integer(const Scalar& q) {
    if (!is_integer(q))
        throw invalid_parameter("expected an integer, got " + q.str());
    return numerator(q);
}

inline long to_long(const Scalar& q) {
    return static_cast<long>(to_integer(q));
}

// Exact power with integer exponent (negative exponents invert).
inline Scalar pow_scalar(const Scalar& q, long e) {
    using boost::multiprecision::pow;
    if (e == 0)
        return Scalar(1);
    if (e < 0) {
        if (q == 0)
            throw invalid_parameter("0 raised to a negative power");
        return pow_scalar(Scalar(1) / q, -e);
    }
    const auto ue = static_cast<unsigned>(e);
    return ratio(pow(numerator(q), ue), pow(denominator(q), ue));
}

inline Integer factorial(int n) {
    if (n < 0)
        throw invalid_parameter("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// Pochhammer symbol (q)_k = q (q+1) ... (q+k-1); empty product for k = 0.
inline Scalar rising_factorial(const Scalar& q, int k) {
    if (k < 0)
        throw invalid_parameter("rising_factorial with negative k");
    Scalar r(1);
    for (int i = 0; i < k; ++i)
        r *= q + i;
    return r;
}

// q (q-1) ... (q-k+1).
inline Scalar falling_factorial(const Scalar& q, int k) {
    if (k < 0)
        throw invalid_parameter("falling_factorial with negative k");
    Scalar r(1);
    for (int i = 0; i < k; ++i)
        r *= q - i;
    return r;
}

// Generalized binomial coefficient with rational upper argument.
inline Scalar binomial_general(const Scalar& q, int k) {
    if (k < 0)
        throw invalid_parameter("binomial_general with negative k");
    return falling_factorial(q, k) / Scalar(factorial(k));
}

// Stirling number of the second kind: x^k = sum_j S(k,j) x(x-1)...(x-j+1).
inline Scalar stirling2(int k, int j) {
    if (k < 0 || j < 0 || j > k)
        throw invalid_parameter("stirling2 requires 0 <= j <= k");
    // S(k,j) = j S(k-1,j) + S(k-1,j-1), row by row.
    std::vector<Integer> row{1}; // k = 0
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<Integer> next(static_cast<size_t>(kk) + 1, Integer(0));
        for (int jj = 1; jj <= kk; ++jj) {
            Integer v = jj < static_cast<int>(row.size()) ? row[jj] * jj : Integer(0);
            v += row[jj - 1];
            next[jj] = v;
        }
        next[0] = 0;
        row = std::move(next);
    }
    return Scalar(row[j]);
}

// Sign of Gamma at a rational non-pole argument.
inline int gamma_sign(const Scalar& q) {
    if (q > 0)
        return 1;
    if (is_integer(q))
        throw invalid_parameter("Gamma pole at " + q.str());
    // Gamma alternates sign on (-m-1, -m); count reflections.
    Integer m = Integer(-numerator(q)) / denominator(q); // floor(-q) since -q > 0
    Integer cl = m + 1;                                  // ceil(-q), -q non-integer
    return (cl % 2 == 0) ? 1 : -1;
}

// Strict "p/q" parser; also accepts a bare integer.
inline Scalar parse_scalar(const std::string& text) {
    auto fail = [&] { throw invalid_parameter("cannot parse rational '" + text + "'"); };
    std::size_t pos = 0;
    auto read_int = [&]() -> Integer {
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail();
        Integer v(text.substr(start, pos - start));
        return negative ? -v : v;
    };
    Integer num = read_int();
    Integer den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/')
            fail();
        ++pos;
        den = read_int();
        if (pos != text.size())
            fail();
        if (den <= 0)
            fail();
    }
    return ratio(std::move(num), std::move(den));
}

// Canonical serialization: always "p/q", including "2/1".
inline std::string format_ratio(const Scalar& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Decimal approximation with `digits` significant digits, rounded
// half-even against the exact remainder.  For human scanning only.
inline std::string approx_decimal(const Scalar& q, int digits = 12) {
    if (digits < 1)
        throw invalid_parameter("approx_decimal needs at least one digit");
    if (q == 0)
        return "0";
    const bool negative = q < 0;
    const Integer p = abs(numerator(q));
    const Integer d = denominator(q);

    // Decimal exponent e with 10^e <= p/d < 10^{e+1}.
    long e = static_cast<long>(p.str().size()) - static_cast<long>(d.str().size());
    auto cmp_pow10 = [&](long k) {
        // sign of p/d - 10^k
        Integer lhs = p, rhs = d;
        if (k >= 0)
            rhs *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(k));
        else
            lhs *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-k));
        return lhs.compare(rhs);
    };
    while (cmp_pow10(e) < 0)
        --e;
    while (cmp_pow10(e + 1) >= 0)
        ++e;

    // First `digits` digits: floor(p/d * 10^{digits-1-e}) with remainder.
    long shift = digits - 1 - e;
    Integer lhs = p, rhs = d;
    if (shift >= 0)
        lhs *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift));
    else
        rhs *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-shift));
    Integer quotient = lhs / rhs;
    Integer remainder = lhs - quotient * rhs;

    // Round half to even.
    const int half = Integer(remainder * 2).compare(rhs);
    if (half > 0 || (half == 0 && quotient % 2 != 0))
        ++quotient;
    std::string mantissa = quotient.str();
    if (static_cast<int>(mantissa.size()) > digits) { // rounded up to next power
        mantissa = mantissa.substr(0, digits);
        ++e;
    }

    std::string out = negative ? "-" : "";
    out += mantissa.substr(0, 1);
    if (digits > 1)
        out += "." + mantissa.substr(1);
    out += "e";
    out += (e < 0) ? "-" : "+";
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2)
        es = "0" + es;
    out += es;
    return out;
}

} // namespace krall
