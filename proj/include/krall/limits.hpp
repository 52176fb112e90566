#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krall/krall_families.hpp"

namespace krall {

// ---------------------------------------------------------------------------
// Declarative limit cases: a source family evaluated along an exact
// parameter path indexed by t, an affine variable scaling, a normalization
// prefactor and a target polynomial.  Geometric paths (a_t = 1 - 2^-t,
// N_t = 2^t) keep all arithmetic rational and make the error ratios
// nominally constant.
// ---------------------------------------------------------------------------

enum class TargetKind { stated, oracle };

// a_t = 1 - 2^-t.
inline Scalar path_a(int t) {
    return Scalar(1) - ratio(Integer(1), Integer(1) << t);
}

// N_t = 2^t.
inline Scalar path_big_n(int t) {
    return Scalar(Integer(1) << t);
}

// x -> x / (1 - a_t), the discrete-to-continuous Meixner scaling.
inline AffineMap meixner_scaling(int t) {
    return {path_big_n(t), Scalar(0)};
}

// x -> (1 - x) N_t / 2, the Hahn-to-Jacobi scaling.
inline AffineMap hahn_scaling(int t) {
    const Scalar half_n = path_big_n(t) / 2;
    return {-half_n, half_n};
}

struct LimitParams {
    std::optional<Scalar> a, b, c, alpha, u, v, s;
    std::optional<int> kappa, sigma;
};

struct LimitCase {
    std::string id;
    std::string summary;
    TargetKind kind = TargetKind::stated;
    std::optional<Scalar> expected_rate; // error(t+1)/error(t) for large t
    int min_n = 0;
    int max_n = 4;
    int t_lo = 6;
    int t_hi = 20;
    std::vector<std::pair<std::string, std::string>> params; // echo for reports

    std::function<Poly(int n, int t)> family;      // F_n(params(t)), unscaled
    std::function<AffineMap(int t)> variable_map;  // x-substitution at step t
    std::function<Scalar(int n, int t)> prefactor; // normalization at step t
    std::function<Poly(int n)> target;
};

// prefactor(t) * (F_n(params(t)) composed with the variable map), exact.
inline Poly scaled_source(const LimitCase& cse, int n, int t) {
    try {
        const Scalar factor = cse.prefactor(n, t);
        if (factor == 0)
            throw degenerate_parameters("prefactor vanishes");
        return factor * compose_affine(cse.family(n, t), cse.variable_map(t));
    } catch (const path_degenerate&) {
        throw;
    } catch (const error& e) {
        throw path_degenerate(t, e.what());
    }
}

struct ConvergenceThresholds {
    Scalar final_error_max = ratio(1, 1000);
    int monotone_from = 8;
    Scalar rate_tolerance = ratio(1, 10); // relative deviation from expected_rate
};

struct ConvergenceReport {
    std::string case_id;
    int n = 0;
    int t_lo = 0, t_hi = 0;
    std::vector<Scalar> errors;                 // errors[i] at t = t_lo + i
    std::vector<std::optional<Scalar>> ratios;  // error(t+1)/error(t)
    int monotone_from = 0;                      // first t from which errors decrease
    bool monotone_ok = false;
    bool below_threshold = false;
    std::optional<bool> rate_ok;                // set when expected_rate is known
    bool pass = false;
    Scalar final_error;
};

// Exact evaluation along the path; tolerances enter only through the pass
// thresholds, never the arithmetic.
inline ConvergenceReport run_convergence(const LimitCase& cse, int n, int t_lo, int t_hi,
                                         const ConvergenceThresholds& thresholds = {}) {
    if (t_lo > t_hi)
        throw invalid_parameter("empty t range");
    ConvergenceReport report;
    report.case_id = cse.id;
    report.n = n;
    report.t_lo = t_lo;
    report.t_hi = t_hi;
    const Poly target = cse.target(n);
    for (int t = t_lo; t <= t_hi; ++t)
        report.errors.push_back(sup_distance(scaled_source(cse, n, t), target));
    for (size_t i = 0; i + 1 < report.errors.size(); ++i) {
        if (report.errors[i] != 0)
            report.ratios.push_back(report.errors[i + 1] / report.errors[i]);
        else
            report.ratios.push_back(std::nullopt);
    }
    // Decreasing means strictly smaller, or exactly converged (0 -> 0).
    auto decreasing_at = [&](size_t i) {
        return report.errors[i + 1] < report.errors[i] ||
               (report.errors[i] == 0 && report.errors[i + 1] == 0);
    };
    size_t first_bad = 0; // index after the last violation
    for (size_t i = 0; i + 1 < report.errors.size(); ++i)
        if (!decreasing_at(i))
            first_bad = i + 1;
    report.monotone_from = t_lo + static_cast<int>(first_bad);
    report.monotone_ok = report.monotone_from <= std::max(thresholds.monotone_from, t_lo);
    report.final_error = report.errors.back();
    report.below_threshold = report.final_error < thresholds.final_error_max;
    if (cse.expected_rate) {
        // vacuous when the tail is exactly converged
        if (!report.ratios.empty() && report.ratios.back()) {
            const Scalar ratio_dev = abs(*report.ratios.back() - *cse.expected_rate);
            report.rate_ok = ratio_dev <= *cse.expected_rate * thresholds.rate_tolerance;
        } else {
            report.rate_ok = true;
        }
    }
    report.pass = report.monotone_ok && report.below_threshold && report.rate_ok.value_or(true);
    return report;
}

// Richardson extrapolation per coefficient, assuming a geometric error with
// the observed ratio; exact on exactly-geometric data.  Requires the last
// two observed ratios to agree within 1%.
inline Poly extrapolate_target(const LimitCase& cse, int n, int t_hi) {
    if (t_hi < 4) // four consecutive samples needed
        throw invalid_parameter("extrapolation needs t_hi >= 4");
    const Poly p0 = scaled_source(cse, n, t_hi - 3);
    const Poly p1 = scaled_source(cse, n, t_hi - 2);
    const Poly p2 = scaled_source(cse, n, t_hi - 1);
    const Poly p3 = scaled_source(cse, n, t_hi);
    int degree = -1;
    for (const Poly* p : {&p0, &p1, &p2, &p3})
        degree = std::max(degree, p->degree().value_or(-1));
    std::vector<Scalar> coeffs(static_cast<size_t>(degree + 1), Scalar(0));
    for (int i = 0; i <= degree; ++i) {
        const Scalar d1 = p1.coeff(i) - p0.coeff(i);
        const Scalar d2 = p2.coeff(i) - p1.coeff(i);
        const Scalar d3 = p3.coeff(i) - p2.coeff(i);
        if (d3 == 0 && d2 == 0) {
            coeffs[static_cast<size_t>(i)] = p3.coeff(i); // already converged
            continue;
        }
        if (d1 == 0 || d2 == 0)
            throw cannot_extrapolate("difference sequence not geometric at coefficient " +
                                     std::to_string(i));
        const Scalar r1 = d2 / d1;
        const Scalar r2 = d3 / d2;
        if (abs(r2 - r1) * 100 > abs(r2))
            throw cannot_extrapolate("ratios not stabilized at coefficient " + std::to_string(i));
        if (abs(r2) >= 1)
            throw cannot_extrapolate("non-contracting ratio at coefficient " + std::to_string(i));
        coeffs[static_cast<size_t>(i)] = p3.coeff(i) + d3 * r2 / (1 - r2);
    }
    return Poly(std::move(coeffs));
}

struct TargetComparison {
    Poly extrapolated;
    Poly stated;
    Scalar sup_diff;
};

inline TargetComparison compare_with_stated_target(const LimitCase& cse, int n, int t_hi) {
    TargetComparison cmp;
    cmp.extrapolated = extrapolate_target(cse, n, t_hi);
    cmp.stated = cse.target(n);
    cmp.sup_diff = sup_distance(cmp.extrapolated, cmp.stated);
    return cmp;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace detail {

inline Scalar opt_or(const std::optional<Scalar>& v, const Scalar& dflt) {
    return v ? *v : dflt;
}

inline int opt_or(const std::optional<int>& v, int dflt) {
    return v ? *v : dflt;
}

inline void push_param(LimitCase& cse, const std::string& name, const Scalar& value) {
    cse.params.emplace_back(name, format_ratio(value));
}

inline void push_param(LimitCase& cse, const std::string& name, int value) {
    cse.params.emplace_back(name, std::to_string(value));
}

inline bool integer_in(const Scalar& v, int lo, int hi) {
    return is_integer(v) && v >= lo && v <= hi;
}

// Lambda_s^{p,q}(n) = (-1)^{s+p} (p+1)_{s-p} (n+q-1)_p (n+1)_p with integer
// p in [1, s]; the degenerate-limit normalization constant.
inline Scalar lambda_factor(int s, int p, const Scalar& q, int n) {
    Scalar r = rising_factorial(Scalar(p + 1), s - p) * rising_factorial(q + n - 1, p) *
               rising_factorial(Scalar(n + 1), p);
    return (s + p) % 2 != 0 ? -r : r;
}

} // namespace detail

inline std::vector<std::string> limit_case_ids() {
    return {"blmel",        "blmel3",          "blmeli-regular", "blmeli-degenerate",
            "limit1",       "limit2",          "lmk",            "lmk2",
            "lemma-2",      "blhj",            "blhj2",          "lhk",
            "lhk2",         "lhk3",            "lhj1-regular",   "lhj1-degenerate",
            "lemma-3.2",    "lhj2-1",          "lhj2-2",         "lhj2-3",
            "lhj2-4",       "lemma-3.4"};
}

// Builds one catalog case, with unset parameters taking the documented
// defaults.  Every produced parameter is a Scalar for every t.
inline LimitCase make_limit_case(const std::string& id, const LimitParams& p = {}) {
    using detail::integer_in;
    using detail::lambda_factor;
    using detail::opt_or;
    using detail::push_param;

    LimitCase cse;
    cse.id = id;
    cse.expected_rate = ratio(1, 2);

    auto meixner_side = [&] {
        cse.variable_map = meixner_scaling;
        cse.t_lo = 6;
        cse.t_hi = 20;
    };
    // Hahn-sourced paths also certify over [6, 20]: the coefficient growth in
    // N = 2^t is exact and stays cheap at these degrees.
    auto hahn_side = [&] {
        cse.variable_map = hahn_scaling;
        cse.t_lo = 6;
        cse.t_hi = 20;
    };
    auto scalar_sequence = [&](int kappa) {
        cse.variable_map = [](int) { return AffineMap::identity(); };
        cse.min_n = cse.max_n = kappa; // source/target do not depend on n
        cse.t_lo = 6;
    };
    auto meixner_prefactor = [](int n, int t) {
        return pow_scalar(path_a(t) - 1, n);
    };
    auto unit_prefactor = [](int, int) { return Scalar(1); };

    if (id == "blmel") {
        const Scalar alpha = opt_or(p.alpha, ratio(1, 2));
        push_param(cse, "alpha", alpha);
        cse.summary = "Meixner to Laguerre along a_t = 1 - 2^-t with c = alpha + 1";
        meixner_side();
        cse.family = [alpha](int n, int t) { return meixner(n, path_a(t), alpha + 1); };
        cse.prefactor = meixner_prefactor;
        cse.target = [alpha](int n) { return laguerre(n, alpha); };
    } else if (id == "blmel3") {
        cse.summary = "Meixner to Laguerre along the drifting path c = 2 + (1-a_t)^2";
        cse.max_n = 3;
        meixner_side();
        cse.family = [](int n, int t) {
            const Scalar a = path_a(t);
            return meixner(n, a, 2 + pow_scalar(1 - a, 2));
        };
        cse.prefactor = meixner_prefactor;
        cse.target = [](int n) { return laguerre(n, Scalar(1)); };
    } else if (id == "blmeli-regular") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar c = opt_or(p.c, Scalar(5));
        if (integer_in(c, 2, kappa + 1))
            throw invalid_parameter("blmeli-regular requires c not in {2..kappa+1}");
        push_param(cse, "kappa", kappa);
        push_param(cse, "c", c);
        cse.summary = "Krall-Meixner I with fixed c to the classical Laguerre family (c-2)";
        cse.max_n = 3;
        meixner_side();
        cse.family = [kappa, c](int n, int t) { return krall_meixner_i(n, path_a(t), c, kappa); };
        cse.prefactor = meixner_prefactor;
        cse.target = [c](int n) { return laguerre(n, c - 2); };
    } else if (id == "blmeli-degenerate") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar c = opt_or(p.c, Scalar(3));
        if (!integer_in(c, 2, kappa + 1))
            throw invalid_parameter("blmeli-degenerate requires integer c in {2..kappa+1}");
        push_param(cse, "kappa", kappa);
        push_param(cse, "c", c);
        cse.summary = "Krall-Meixner I with integer c in [2,kappa+1] to the u=inf Krall-Laguerre family";
        cse.max_n = 3;
        meixner_side();
        cse.family = [kappa, c](int n, int t) { return krall_meixner_i(n, path_a(t), c, kappa); };
        cse.prefactor = meixner_prefactor;
        const int cl = static_cast<int>(to_long(c));
        cse.target = [cl](int n) { return krall_laguerre(n, cl - 1, DeltaMass::infinity()); };
    } else if (id == "limit1") {
        const int kappa = opt_or(p.kappa, 1);
        const Scalar u = opt_or(p.u, Scalar(1));
        push_param(cse, "kappa", kappa);
        push_param(cse, "u", u);
        cse.summary = "Krall-Meixner I along c = kappa+1+(1-a)^kappa/u to Krall-Laguerre";
        meixner_side();
        cse.family = [kappa, u](int n, int t) {
            const Scalar a = path_a(t);
            return krall_meixner_i(n, a, kappa + 1 + pow_scalar(1 - a, kappa) / u, kappa);
        };
        cse.prefactor = meixner_prefactor;
        cse.target = [kappa, u](int n) { return krall_laguerre(n, kappa, u); };
    } else if (id == "limit2") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar u = opt_or(p.u, Scalar(1));
        push_param(cse, "kappa", kappa);
        push_param(cse, "u", u);
        cse.summary = "Krall-Meixner II along c = kappa+1+(a-1)^kappa/u to Krall-Laguerre";
        cse.max_n = 3;
        meixner_side();
        cse.family = [kappa, u](int n, int t) {
            const Scalar a = path_a(t);
            return krall_meixner_ii(n, a, kappa + 1 + pow_scalar(a - 1, kappa) / u, kappa);
        };
        cse.prefactor = meixner_prefactor;
        cse.target = [kappa, u](int n) { return krall_laguerre(n, kappa, u); };
    } else if (id == "lmk") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar c = opt_or(p.c, Scalar(5));
        if (integer_in(c, 2, kappa + 1))
            throw invalid_parameter("lmk requires c not in {2..kappa+1}");
        push_param(cse, "kappa", kappa);
        push_param(cse, "c", c);
        cse.summary = "(a-1)^kappa m_kappa^{1/a,2-c}(z) to the constant (-1)^kappa C(kappa+1-c,kappa)";
        cse.t_hi = 20;
        scalar_sequence(kappa);
        cse.family = [kappa, c](int, int t) { return meixner(kappa, 1 / path_a(t), 2 - c); };
        cse.prefactor = [kappa](int, int t) { return pow_scalar(path_a(t) - 1, kappa); };
        Scalar constant = binomial_general(Scalar(kappa + 1) - c, kappa);
        if (kappa % 2 != 0)
            constant = -constant;
        cse.target = [constant](int) { return Poly(constant); };
    } else if (id == "lmk2") {
        const int kappa = opt_or(p.kappa, 3);
        const Scalar c = opt_or(p.c, Scalar(3));
        if (!integer_in(c, 2, kappa + 1))
            throw invalid_parameter("lmk2 requires integer c in {2..kappa+1}");
        const int cl = static_cast<int>(to_long(c));
        push_param(cse, "kappa", kappa);
        push_param(cse, "c", c);
        cse.summary = "(a-1)^{kappa+1-c} m_kappa^{1/a,2-c}(z) to (-1)^{kappa+1-c} C(z,c-1)";
        cse.t_hi = 20;
        scalar_sequence(kappa);
        cse.family = [kappa, c](int, int t) { return meixner(kappa, 1 / path_a(t), 2 - c); };
        cse.prefactor = [kappa, cl](int, int t) {
            return pow_scalar(path_a(t) - 1, kappa + 1 - cl);
        };
        cse.target = [kappa, cl](int) {
            Poly b = binomial_poly(Poly::x(), cl - 1);
            return (kappa + 1 - cl) % 2 != 0 ? -b : b;
        };
    } else if (id == "lemma-2") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar u = opt_or(p.u, Scalar(1));
        push_param(cse, "kappa", kappa);
        push_param(cse, "u", u);
        cse.summary = "m_kappa^{1/a,1-kappa-(1-a)^kappa/u}(z) to (-1)^kappa/(kappa u) + (z-kappa+1)_kappa/kappa!";
        cse.kind = TargetKind::oracle;
        cse.t_hi = 20;
        scalar_sequence(kappa);
        cse.family = [kappa, u](int, int t) {
            const Scalar a = path_a(t);
            return meixner(kappa, 1 / a, 1 - kappa - pow_scalar(1 - a, kappa) / u);
        };
        cse.prefactor = unit_prefactor;
        cse.target = [kappa, u](int) {
            Poly r = rising_factorial_poly(Poly({Scalar(1 - kappa), Scalar(1)}), kappa) *
                     ratio(Integer(1), factorial(kappa));
            Scalar constant = 1 / (kappa * u);
            if (kappa % 2 != 0)
                constant = -constant;
            return r + Poly(constant);
        };
    } else if (id == "blhj") {
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, ratio(1, 2));
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Hahn to Jacobi under x -> (1-x)N/2";
        hahn_side();
        cse.family = [a, b](int n, int t) { return hahn(n, a, b, path_big_n(t)); };
        cse.prefactor = unit_prefactor;
        cse.target = [a, b](int n) { return jacobi(n, a, b); };
    } else if (id == "blhj2") {
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, ratio(1, 2));
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Hahn to Jacobi along drifting parameter paths phi_1, phi_2";
        hahn_side();
        cse.family = [a, b](int n, int t) {
            const Scalar N = path_big_n(t);
            return hahn(n, a + 1 / N, b + 2 / N, N);
        };
        cse.prefactor = unit_prefactor;
        cse.target = [a, b](int n) { return jacobi(n, a, b); };
    } else if (id == "lhk") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, Scalar(kappa) + ratio(1, 2));
        if (integer_in(b, 1, kappa))
            throw invalid_parameter("lhk requires b not in {1..kappa}");
        push_param(cse, "kappa", kappa);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "R_kappa^{-b,-a,a+b+N}(z)/N^kappa to the constant (b-kappa)_kappa";
        cse.t_hi = 14;
        scalar_sequence(kappa);
        cse.family = [a, b, kappa](int, int t) {
            return dual_hahn(kappa, -b, -a, a + b + path_big_n(t));
        };
        cse.prefactor = [kappa](int, int t) { return pow_scalar(path_big_n(t), -kappa); };
        const Scalar constant = rising_factorial(b - kappa, kappa);
        cse.target = [constant](int) { return Poly(constant); };
    } else if (id == "lhk2") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, Scalar((kappa + 1) / 2));
        if (!integer_in(b, 1, kappa))
            throw invalid_parameter("lhk2 requires integer b in {1..kappa}");
        const int bl = static_cast<int>(to_long(b));
        push_param(cse, "kappa", kappa);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "R_kappa^{-b,-a,a+b+N}(z)/N^{kappa-b} to a lambda polynomial, integer b";
        cse.t_hi = 14;
        scalar_sequence(kappa);
        cse.family = [a, b, kappa](int, int t) {
            return dual_hahn(kappa, -b, -a, a + b + path_big_n(t));
        };
        cse.prefactor = [kappa, bl](int, int t) {
            return pow_scalar(path_big_n(t), -(kappa - bl));
        };
        cse.target = [a, kappa, bl](int) {
            Scalar factor = rising_factorial(Scalar(bl + 1), kappa - bl);
            if ((bl + kappa) % 2 != 0)
                factor = -factor;
            return factor * lambda_poly(bl, -Scalar(bl) - a);
        };
    } else if (id == "lhk3") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar s = opt_or(p.s, Scalar(2));
        push_param(cse, "kappa", kappa);
        push_param(cse, "a", a);
        push_param(cse, "s", s);
        cse.summary = "R_kappa along b = kappa+s/N^kappa, psi(N) -> a, to (kappa-1)! s + lambda_kappa^{-kappa-a}(z)";
        cse.t_hi = 14;
        scalar_sequence(kappa);
        cse.family = [a, s, kappa](int, int t) {
            const Scalar N = path_big_n(t);
            const Scalar phi = kappa + s / pow_scalar(N, kappa);
            const Scalar psi = a + 1 / N;
            return dual_hahn(kappa, -phi, -psi, psi + phi + N);
        };
        cse.prefactor = unit_prefactor;
        cse.target = [a, s, kappa](int) {
            return lambda_poly(kappa, -Scalar(kappa) - a) +
                   Poly(Scalar(factorial(kappa - 1)) * s);
        };
    } else if (id == "lhj1-regular") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, Scalar(4));
        if (integer_in(b, 1, kappa))
            throw invalid_parameter("lhj1-regular requires b not in {1..kappa}");
        push_param(cse, "kappa", kappa);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Krall-Hahn I with fixed b to (2n+a+b)/(n+a+b) P_n^{a,b-1}";
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, b, kappa](int n, int t) {
            return krall_hahn_i(n, a, b, path_big_n(t), kappa);
        };
        cse.prefactor = unit_prefactor;
        cse.target = [a, b](int n) {
            return (2 * n + a + b) / (n + a + b) * jacobi(n, a, b - 1);
        };
    } else if (id == "lhj1-degenerate") {
        const int kappa = opt_or(p.kappa, 2);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, Scalar(1));
        if (!integer_in(b, 1, kappa))
            throw invalid_parameter("lhj1-degenerate requires integer b in {1..kappa}");
        const int bl = static_cast<int>(to_long(b));
        push_param(cse, "kappa", kappa);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Krall-Hahn I with integer b in [1,kappa] to the u=inf Krall-Jacobi family";
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, b, kappa](int n, int t) {
            return krall_hahn_i(n, a, b, path_big_n(t), kappa);
        };
        cse.prefactor = unit_prefactor;
        cse.target = [a, bl](int n) { return krall_jacobi_i(n, a, bl, DeltaMass::infinity()); };
    } else if (id == "lemma-3.2") {
        const Scalar a = opt_or(p.a, Scalar(1));
        const int kappa = opt_or(p.kappa, 2);
        const Scalar u = opt_or(p.u, Scalar(1));
        if (!is_integer(a))
            throw invalid_parameter("lemma-3.2 needs integer a (2^{a+kappa} must stay rational)");
        const long al = to_long(a);
        push_param(cse, "a", a);
        push_param(cse, "kappa", kappa);
        push_param(cse, "u", u);
        cse.summary = "Krall-Hahn I along b = kappa + 2^{a+kappa}/(u N^kappa) to Krall-Jacobi I";
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, al, u, kappa](int n, int t) {
            const Scalar N = path_big_n(t);
            const Scalar b = kappa + pow_scalar(Scalar(2), al + kappa) / (u * pow_scalar(N, kappa));
            return krall_hahn_i(n, a, b, N, kappa);
        };
        cse.prefactor = unit_prefactor;
        cse.target = [a, kappa, u](int n) { return krall_jacobi_i(n, a, kappa, u); };
    } else if (id == "lhj2-1") {
        const int kappa = opt_or(p.kappa, 2);
        const int sigma = opt_or(p.sigma, 1);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, ratio(5, 2));
        if (integer_in(a, 1, kappa) || integer_in(b, 1, sigma))
            throw invalid_parameter("lhj2-1 requires a not in {1..kappa} and b not in {1..sigma}");
        push_param(cse, "kappa", kappa);
        push_param(cse, "sigma", sigma);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Krall-Hahn II, off-window a and b, to a multiple of P_n^{a-1,b-1}";
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, b, kappa, sigma](int n, int t) {
            return krall_hahn_ii(n, a, b, path_big_n(t), kappa, sigma);
        };
        cse.prefactor = [a, b, kappa, sigma](int, int t) -> Scalar {
            return 1 / (rising_factorial(a - kappa, kappa) * rising_factorial(b - sigma, sigma) *
                        pow_scalar(path_big_n(t), kappa + sigma));
        };
        cse.target = [a, b](int n) {
            return rising_factorial(2 * n + a + b - 2, 3) /
                   ((n + a + b) * pow_scalar(n + a + b - 1, 2)) * jacobi(n, a - 1, b - 1);
        };
    } else if (id == "lhj2-2") {
        const int kappa = opt_or(p.kappa, 2);
        const int sigma = opt_or(p.sigma, 2);
        const Scalar a = opt_or(p.a, ratio(1, 2));
        const Scalar b = opt_or(p.b, Scalar(1));
        if (integer_in(a, 1, kappa) || !integer_in(b, 1, sigma))
            throw invalid_parameter("lhj2-2 requires a not in {1..kappa} and integer b in {1..sigma}");
        const int bl = static_cast<int>(to_long(b));
        push_param(cse, "kappa", kappa);
        push_param(cse, "sigma", sigma);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Krall-Hahn II, integer b in [1,sigma], to a multiple of the u=inf Krall-Jacobi family";
        cse.kind = TargetKind::oracle;
        cse.min_n = 1;
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, b, kappa, sigma](int n, int t) {
            return krall_hahn_ii(n, a, b, path_big_n(t), kappa, sigma);
        };
        cse.prefactor = [a, kappa, sigma, bl](int, int t) -> Scalar {
            return 1 / (rising_factorial(a - kappa, kappa) *
                        pow_scalar(path_big_n(t), kappa + sigma - bl));
        };
        cse.target = [a, b, bl, sigma](int n) {
            const Scalar factor = n * (2 * n + a + b - 2) * (2 * n + a + b) /
                                  ((n + b) * rising_factorial(a + b + n - 1, 2)) *
                                  lambda_factor(sigma, bl, a, n);
            return factor * krall_jacobi_i(n, a - 1, bl, DeltaMass::infinity());
        };
    } else if (id == "lhj2-3") {
        const int kappa = opt_or(p.kappa, 2);
        const int sigma = opt_or(p.sigma, 2);
        const Scalar a = opt_or(p.a, Scalar(1));
        const Scalar b = opt_or(p.b, ratio(1, 2));
        if (!integer_in(a, 1, kappa) || integer_in(b, 1, sigma))
            throw invalid_parameter("lhj2-3 requires integer a in {1..kappa} and b not in {1..sigma}");
        const int al = static_cast<int>(to_long(a));
        push_param(cse, "kappa", kappa);
        push_param(cse, "sigma", sigma);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Krall-Hahn II, integer a in [1,kappa], to a reflected multiple of the u=inf Krall-Jacobi family";
        cse.kind = TargetKind::oracle;
        cse.min_n = 1;
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, b, kappa, sigma](int n, int t) {
            return krall_hahn_ii(n, a, b, path_big_n(t), kappa, sigma);
        };
        cse.prefactor = [b, kappa, sigma, al](int, int t) -> Scalar {
            return 1 / (rising_factorial(b - sigma, sigma) *
                        pow_scalar(path_big_n(t), kappa + sigma - al));
        };
        cse.target = [a, b, al, kappa](int n) {
            Scalar factor = n * (2 * n + a + b - 2) * (2 * n + a + b) /
                            ((n + a) * rising_factorial(a + b + n - 1, 2)) *
                            lambda_factor(kappa, al, b, n);
            if (n % 2 != 0)
                factor = -factor; // the (-1)^n in the stated constant
            const Poly reflected = compose_affine(
                krall_jacobi_i(n, b - 1, al, DeltaMass::infinity()), {Scalar(-1), Scalar(0)});
            return factor * reflected;
        };
    } else if (id == "lhj2-4") {
        const int kappa = opt_or(p.kappa, 2);
        const int sigma = opt_or(p.sigma, 1);
        const Scalar a = opt_or(p.a, Scalar(1));
        const Scalar b = opt_or(p.b, Scalar(1));
        if (!integer_in(a, 1, kappa) || !integer_in(b, 1, sigma))
            throw invalid_parameter("lhj2-4 requires integer a in {1..kappa} and integer b in {1..sigma}");
        const int al = static_cast<int>(to_long(a));
        const int bl = static_cast<int>(to_long(b));
        push_param(cse, "kappa", kappa);
        push_param(cse, "sigma", sigma);
        push_param(cse, "a", a);
        push_param(cse, "b", b);
        cse.summary = "Krall-Hahn II, integer a and b, to a multiple of the u=v=inf two-delta Krall-Jacobi family";
        cse.kind = TargetKind::oracle;
        // With a and b both integers the n = 1 determinant drops degree
        // identically in N, so the degree-n assumption carves that index out.
        cse.min_n = 2;
        cse.max_n = 3;
        hahn_side();
        cse.family = [a, b, kappa, sigma](int n, int t) {
            return krall_hahn_ii(n, a, b, path_big_n(t), kappa, sigma);
        };
        cse.prefactor = [kappa, sigma, al, bl](int, int t) {
            return pow_scalar(path_big_n(t), -(kappa + sigma - al - bl));
        };
        cse.target = [a, b, al, bl, kappa, sigma](int n) {
            const Scalar factor = lambda_factor(kappa, al, b, n) * lambda_factor(sigma, bl, a, n);
            return factor *
                   krall_jacobi_ii(n, al, bl, DeltaMass::infinity(), DeltaMass::infinity());
        };
    } else if (id == "lemma-3.4") {
        const int kappa = opt_or(p.kappa, 1);
        const int sigma = opt_or(p.sigma, 1);
        const Scalar u = opt_or(p.u, Scalar(1));
        const Scalar v = opt_or(p.v, Scalar(2));
        push_param(cse, "kappa", kappa);
        push_param(cse, "sigma", sigma);
        push_param(cse, "u", u);
        push_param(cse, "v", v);
        cse.summary = "Krall-Hahn II along coupled a,b paths to the two-delta Krall-Jacobi family";
        cse.min_n = 1; // the stated normalization divides by zero at n = 0
        cse.max_n = 3;
        hahn_side();
        cse.family = [u, v, kappa, sigma](int n, int t) {
            const Scalar N = path_big_n(t);
            const Scalar two = pow_scalar(Scalar(2), kappa + sigma);
            const Scalar a = kappa + two / (u * pow_scalar(N, kappa));
            const Scalar b = sigma + two / (v * pow_scalar(N, sigma));
            return krall_hahn_ii(n, a, b, N, kappa, sigma);
        };
        cse.prefactor = [u, v, kappa, sigma](int n, int) -> Scalar {
            const Scalar den = rising_factorial(Scalar(n + 1), kappa) *
                               rising_factorial(Scalar(n + sigma - 1), kappa) *
                               rising_factorial(Scalar(n + 1), sigma) *
                               rising_factorial(Scalar(n + kappa - 1), sigma);
            if (den == 0)
                throw degenerate_parameters("lemma-3.4 normalization vanishes");
            return u * v / den;
        };
        cse.target = [u, v, kappa, sigma](int n) { return krall_jacobi_ii(n, kappa, sigma, u, v); };
    } else {
        throw invalid_parameter("unknown limit case '" + id + "'");
    }
    return cse;
}

inline std::vector<LimitCase> limit_catalog() {
    std::vector<LimitCase> cases;
    for (const auto& id : limit_case_ids())
        cases.push_back(make_limit_case(id));
    return cases;
}

} // namespace krall
