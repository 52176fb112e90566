#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "krall/krall_families.hpp"

namespace krall {

// ---------------------------------------------------------------------------
// Symbolic orthogonality measures: a base weight, an optional support shift
// (discrete bases; support starts at -shift), a polynomial Christoffel
// modifier and a list of Dirac point masses.  All inner products are exact
// rationals; normalization by the base total mass mu_0 removes the
// transcendental common factors, which never affect orthogonality.
// ---------------------------------------------------------------------------

struct LaguerreWeight {
    Scalar alpha;
    bool operator==(const LaguerreWeight&) const = default;
};
struct JacobiWeight {
    Scalar alpha, beta;
    bool operator==(const JacobiWeight&) const = default;
};
struct MeixnerWeight {
    Scalar a, c;
    bool operator==(const MeixnerWeight&) const = default;
};
struct HahnWeight {
    Scalar a, b;
    int points; // N; support 0..N
    bool operator==(const HahnWeight&) const = default;
};

using BaseWeight = std::variant<LaguerreWeight, JacobiWeight, MeixnerWeight, HahnWeight>;

struct PointMass {
    Scalar point, mass;
    bool operator==(const PointMass&) const = default;
};

class Measure {
public:
    explicit Measure(BaseWeight base, int support_shift = 0, Poly modifier = Poly::one(),
                     std::vector<PointMass> deltas = {})
        : base_(std::move(base)), shift_(support_shift), modifier_(std::move(modifier)),
          deltas_(std::move(deltas)), cache_(std::make_shared<MomentCache>()) {
        if (modifier_.is_zero())
            throw invalid_parameter("measure modifier must be nonzero");
        if (shift_ != 0 && !is_discrete())
            throw invalid_parameter("support shift applies to discrete bases only");
    }

    const BaseWeight& base() const { return base_; }
    int support_shift() const { return shift_; }
    const Poly& modifier() const { return modifier_; }
    const std::vector<PointMass>& deltas() const { return deltas_; }

    bool is_discrete() const {
        return std::holds_alternative<MeixnerWeight>(base_) ||
               std::holds_alternative<HahnWeight>(base_);
    }

    // Normalized base moments mu_k/mu_0, memoized behind a shared cache so
    // copies of a measure reuse the computation (mutex-guarded for
    // concurrent readers).
    std::vector<Scalar> normalized_moments(int k_max) const {
        std::scoped_lock lock(cache_->mu);
        auto& mom = cache_->moments;
        for (int k = static_cast<int>(mom.size()); k <= k_max; ++k)
            mom.push_back(base_moment(k));
        return {mom.begin(), mom.begin() + k_max + 1};
    }

private:
    struct MomentCache {
        std::mutex mu;
        std::vector<Scalar> moments;
    };

    Scalar base_moment(int k) const {
        return std::visit(
            [&](const auto& w) -> Scalar { return moment_of(w, k); }, base_);
    }

    static Scalar moment_of(const LaguerreWeight& w, int k) {
        if (w.alpha <= -1)
            throw invalid_parameter("laguerre moments diverge for alpha <= -1");
        return rising_factorial(w.alpha + 1, k);
    }

    static Scalar moment_of(const JacobiWeight& w, int k) {
        if (w.alpha <= -1 || w.beta <= -1)
            throw invalid_parameter("jacobi moments diverge unless alpha, beta > -1");
        // x = 1 - 2y with y Beta(alpha+1, beta+1) distributed.
        Scalar sum(0);
        for (int j = 0; j <= k; ++j) {
            const Scalar den = rising_factorial(w.alpha + w.beta + 2, j);
            sum += binomial_general(Scalar(k), j) * pow_scalar(Scalar(-2), j) *
                   rising_factorial(w.alpha + 1, j) / den;
        }
        return sum;
    }

    static Scalar moment_of(const MeixnerWeight& w, int k) {
        if (!(w.a > 0 && w.a < 1))
            throw invalid_parameter("meixner moments diverge unless 0 < a < 1");
        // Factorial moments: E[(x)_j falling] = (c)_j (a/(1-a))^j.
        const Scalar q = w.a / (1 - w.a);
        Scalar sum(0);
        for (int j = 0; j <= k; ++j)
            sum += stirling2(k, j) * rising_factorial(w.c, j) * pow_scalar(q, j);
        return sum;
    }

    static Scalar moment_of(const HahnWeight& w, int k) {
        Scalar mass(0), sum(0);
        for (int x = 0; x <= w.points; ++x) {
            const Scalar wx = binomial_general(w.a + x, x) *
                              binomial_general(w.b + w.points - x, w.points - x);
            mass += wx;
            sum += wx * pow_scalar(Scalar(x), k);
        }
        if (mass == 0)
            throw invalid_parameter("hahn weight has zero total mass");
        return sum / mass;
    }

    BaseWeight base_;
    int shift_;
    Poly modifier_;
    std::vector<PointMass> deltas_;
    std::shared_ptr<MomentCache> cache_;
};

// Pointwise rational part of the base weight at base-variable y >= 0
// (discrete bases).  For the Meixner base this omits the constant Gamma(c),
// whose sign is tracked separately.
inline Scalar discrete_base_weight(const BaseWeight& base, int y) {
    if (const auto* m = std::get_if<MeixnerWeight>(&base))
        return pow_scalar(m->a, y) * rising_factorial(m->c, y) / Scalar(factorial(y));
    if (const auto* h = std::get_if<HahnWeight>(&base)) {
        if (y < 0 || y > h->points)
            return Scalar(0);
        return binomial_general(h->a + y, y) *
               binomial_general(h->b + h->points - y, h->points - y);
    }
    throw invalid_parameter("pointwise weights are defined for discrete bases only");
}

// Sign of the omitted transcendental factor in the base total mass; the
// normalized inner products are exact up to this sign.
inline int base_mass_sign(const Measure& m) {
    if (const auto* w = std::get_if<MeixnerWeight>(&m.base()))
        return gamma_sign(w->c);
    if (const auto* w = std::get_if<HahnWeight>(&m.base())) {
        Scalar mass(0);
        for (int x = 0; x <= w->points; ++x)
            mass += discrete_base_weight(m.base(), x);
        if (mass == 0)
            throw invalid_parameter("hahn weight has zero total mass");
        return mass > 0 ? 1 : -1;
    }
    return 1; // laguerre/jacobi moments already require the positive window
}

// Absolute base total mass; rational only in the integer-parameter regime
// (this is what restricts exact delta support to those bases).
inline Scalar absolute_base_mass(const BaseWeight& base) {
    if (const auto* w = std::get_if<LaguerreWeight>(&base)) {
        if (!is_nonneg_integer(w->alpha))
            throw unsupported_parameter(
                "delta-augmented laguerre base needs integer alpha >= 0 (mu_0 = alpha!)");
        return Scalar(factorial(static_cast<int>(to_long(w->alpha))));
    }
    if (const auto* w = std::get_if<JacobiWeight>(&base)) {
        if (!is_nonneg_integer(w->alpha) || !is_nonneg_integer(w->beta))
            throw unsupported_parameter(
                "delta-augmented jacobi base needs integer alpha, beta >= 0");
        const int al = static_cast<int>(to_long(w->alpha));
        const int be = static_cast<int>(to_long(w->beta));
        return pow_scalar(Scalar(2), al + be + 1) * Scalar(factorial(al)) *
               Scalar(factorial(be)) / Scalar(factorial(al + be + 1));
    }
    if (const auto* w = std::get_if<HahnWeight>(&base)) {
        Scalar mass(0);
        for (int x = 0; x <= w->points; ++x)
            mass += discrete_base_weight(base, x);
        return mass;
    }
    throw unsupported_parameter("no exact absolute mass for this base");
}

// Exact inner product of p and q against the measure.  Without deltas the
// value is <p,q>/mu_0 of the base; with deltas the absolute value
// mu_0 <p,q>/mu_0 + sum of point-mass contributions.
inline Scalar inner_product(const Poly& p, const Poly& q, const Measure& m) {
    Poly r = p * q * m.modifier();
    if (m.support_shift() != 0)
        r = compose_affine(r, AffineMap{Scalar(1), Scalar(-m.support_shift())});
    const int k_max = r.degree().value_or(0);
    const auto moments = m.normalized_moments(k_max);
    Scalar relative(0);
    for (int k = 0; k <= k_max; ++k)
        relative += r.coeff(k) * moments[static_cast<size_t>(k)];
    if (m.deltas().empty())
        return relative;
    Scalar result = absolute_base_mass(m.base()) * relative;
    for (const auto& d : m.deltas())
        result += d.mass * p(d.point) * q(d.point);
    return result;
}

struct GramReport {
    int n_max = 0;
    std::vector<std::vector<Scalar>> matrix;
    bool off_diagonal_zero = true;
    bool diagonal_positive = true;
    std::vector<std::pair<int, int>> failures;
};

// All pairwise inner products of family(0..n_max), exact.  The diagonal sign
// is judged up to the (computable) sign of the omitted base mass factor.
inline GramReport gram_orthogonality_report(const Measure& m,
                                            const std::function<Poly(int)>& family, int n_max) {
    GramReport report;
    report.n_max = n_max;
    std::vector<Poly> polys;
    polys.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        polys.push_back(family(n));
    const int sign = m.deltas().empty() ? base_mass_sign(m) : 1;
    report.matrix.assign(static_cast<size_t>(n_max) + 1,
                         std::vector<Scalar>(static_cast<size_t>(n_max) + 1, Scalar(0)));
    for (int i = 0; i <= n_max; ++i) {
        for (int j = i; j <= n_max; ++j) {
            Scalar v = inner_product(polys[static_cast<size_t>(i)],
                                     polys[static_cast<size_t>(j)], m);
            report.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            report.matrix[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            if (i == j) {
                if (sign * v <= 0) {
                    report.diagonal_positive = false;
                    report.failures.emplace_back(i, j);
                }
            } else if (v != 0) {
                report.off_diagonal_zero = false;
                report.failures.emplace_back(i, j);
            }
        }
    }
    return report;
}

struct PositivityReport {
    bool positive = true;
    std::optional<Scalar> witness; // support point or delta location
    std::string detail;
};

// Exact positivity scan.  Discrete supports are sampled pointwise
// (exhaustively for Hahn); weights must be > 0 except at roots of the
// Christoffel modifier, which contribute legitimate zero masses.
// Continuous bases are checked through their parameter windows plus a
// modifier sample.
inline PositivityReport positivity_check(const Measure& m, int sample_count = 50) {
    PositivityReport report;
    for (const auto& d : m.deltas()) {
        if (d.mass < 0) {
            report.positive = false;
            report.witness = d.point;
            report.detail = "negative delta mass";
            return report;
        }
    }
    auto scan_discrete = [&](int count, int exhaustive_to) -> void {
        int sign = 1;
        if (const auto* w = std::get_if<MeixnerWeight>(&m.base())) {
            try {
                sign = gamma_sign(w->c);
            } catch (const invalid_parameter&) {
                report.positive = false;
                report.detail = "base weight hits a Gamma pole; measure undefined";
                return;
            }
        }
        const int last = exhaustive_to >= 0 ? exhaustive_to : count - 1;
        for (int i = 0; i <= last; ++i) {
            const int x = i - m.support_shift();
            const Scalar w = sign * m.modifier()(Scalar(x)) * discrete_base_weight(m.base(), i);
            if (w < 0) {
                report.positive = false;
                report.witness = Scalar(x);
                report.detail = "negative weight";
                return;
            }
            if (w == 0 && m.modifier()(Scalar(x)) != 0) {
                report.positive = false;
                report.witness = Scalar(x);
                report.detail = "zero weight away from the modifier roots";
                return;
            }
        }
    };

    if (const auto* w = std::get_if<HahnWeight>(&m.base())) {
        scan_discrete(w->points + 1, w->points);
        return report;
    }
    if (std::holds_alternative<MeixnerWeight>(m.base())) {
        const auto& w = std::get<MeixnerWeight>(m.base());
        if (!(w.a > 0 && w.a < 1)) {
            report.positive = false;
            report.detail = "meixner base needs 0 < a < 1";
            return report;
        }
        scan_discrete(sample_count, -1);
        return report;
    }
    if (const auto* w = std::get_if<LaguerreWeight>(&m.base())) {
        if (w->alpha <= -1) {
            report.positive = false;
            report.detail = "laguerre window requires alpha > -1";
            return report;
        }
        for (int i = 0; i < sample_count; ++i) {
            if (m.modifier()(Scalar(i)) <= 0 && m.modifier() != Poly::one()) {
                report.positive = false;
                report.witness = Scalar(i);
                report.detail = "modifier not positive on the support";
                return report;
            }
        }
        return report;
    }
    const auto& w = std::get<JacobiWeight>(m.base());
    if (w.alpha <= -1 || w.beta <= -1) {
        report.positive = false;
        report.detail = "jacobi window requires alpha, beta > -1";
        return report;
    }
    for (int i = 1; i <= sample_count; ++i) {
        const Scalar x = Scalar(-1) + Scalar(2 * i) / Scalar(sample_count + 1);
        if (m.modifier()(x) <= 0 && m.modifier() != Poly::one()) {
            report.positive = false;
            report.witness = x;
            report.detail = "modifier not positive on the support";
            return report;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// The eight named measures and their positivity windows.
// ---------------------------------------------------------------------------

enum class NamedMeasureId { lagk, mk, mk2, jack, jack2, hw, hk, hk2 };

inline const char* measure_name(NamedMeasureId id) {
    switch (id) {
    case NamedMeasureId::lagk: return "lagk";
    case NamedMeasureId::mk: return "mk";
    case NamedMeasureId::mk2: return "mk2";
    case NamedMeasureId::jack: return "jack";
    case NamedMeasureId::jack2: return "jack2";
    case NamedMeasureId::hw: return "hw";
    case NamedMeasureId::hk: return "hk";
    case NamedMeasureId::hk2: return "hk2";
    }
    return "?";
}

inline std::optional<NamedMeasureId> measure_from_name(const std::string& name) {
    for (NamedMeasureId id :
         {NamedMeasureId::lagk, NamedMeasureId::mk, NamedMeasureId::mk2, NamedMeasureId::jack,
          NamedMeasureId::jack2, NamedMeasureId::hw, NamedMeasureId::hk, NamedMeasureId::hk2}) {
        if (name == measure_name(id))
            return id;
    }
    return std::nullopt;
}

struct MeasureParams {
    std::optional<Scalar> a, b, c, alpha, u, v;
    std::optional<int> kappa, sigma, points; // points = N
};

namespace detail {

inline Scalar req(const std::optional<Scalar>& v, const char* name) {
    if (!v)
        throw invalid_parameter(std::string("missing measure parameter ") + name);
    return *v;
}

inline int req(const std::optional<int>& v, const char* name) {
    if (!v)
        throw invalid_parameter(std::string("missing measure parameter ") + name);
    return *v;
}

} // namespace detail

// Empty when the parameters sit inside the measure's positivity window;
// otherwise a description of the violated constraint.
inline std::optional<std::string> positivity_window_violation(NamedMeasureId id,
                                                              const MeasureParams& p) {
    using detail::req;
    switch (id) {
    case NamedMeasureId::lagk: {
        if (req(p.kappa, "kappa") < 1)
            return "kappa must be a positive integer";
        if (req(p.u, "u") <= 0)
            return "u must be positive";
        return std::nullopt;
    }
    case NamedMeasureId::mk: {
        const int kappa = req(p.kappa, "kappa");
        if (kappa < 1)
            return "kappa must be a positive integer";
        const Scalar a = req(p.a, "a");
        if (!(a > 0 && a < 1))
            return "requires 0 < a < 1";
        if (!(req(p.c, "c") > kappa + 1))
            return "requires c > kappa + 1";
        return std::nullopt;
    }
    case NamedMeasureId::mk2: {
        const int kappa = req(p.kappa, "kappa");
        if (kappa < 1)
            return "kappa must be a positive integer";
        const Scalar a = req(p.a, "a");
        if (!(a > 0 && a < 1))
            return "requires 0 < a < 1";
        const Scalar c = req(p.c, "c");
        if (kappa % 2 == 0)
            return c > kappa + 1 ? std::nullopt
                                 : std::optional<std::string>("requires c > kappa + 1 for even kappa");
        for (int j = 1 - (kappa - 1) / 2; j <= 1; ++j)
            if (c > kappa + 2 * j - 2 && c < kappa + 2 * j - 1)
                return std::nullopt;
        return "c outside the odd-kappa positivity intervals";
    }
    case NamedMeasureId::jack: {
        if (req(p.kappa, "kappa") < 1)
            return "kappa must be a positive integer";
        if (!(req(p.alpha, "alpha") > -1))
            return "requires alpha > -1";
        if (req(p.u, "u") <= 0)
            return "u must be positive";
        return std::nullopt;
    }
    case NamedMeasureId::jack2: {
        if (req(p.kappa, "kappa") < 1 || req(p.sigma, "sigma") < 1)
            return "kappa and sigma must be positive integers";
        if (req(p.u, "u") <= 0 || req(p.v, "v") <= 0)
            return "u and v must be positive";
        return std::nullopt;
    }
    case NamedMeasureId::hw: {
        if (req(p.points, "N") < 0)
            return "N must be a nonnegative integer";
        if (!(req(p.a, "a") > -1 && req(p.b, "b") > -1))
            return "requires a, b > -1";
        return std::nullopt;
    }
    case NamedMeasureId::hk: {
        const int kappa = req(p.kappa, "kappa");
        if (kappa < 1 || req(p.points, "N") < 1)
            return "kappa and N must be positive integers";
        if (!(req(p.a, "a") > -1))
            return "requires a > -1";
        if (!(req(p.b, "b") > kappa))
            return "requires b > kappa";
        return std::nullopt;
    }
    case NamedMeasureId::hk2: {
        const int kappa = req(p.kappa, "kappa");
        const int sigma = req(p.sigma, "sigma");
        if (kappa < 1 || sigma < 1 || req(p.points, "N") < 1)
            return "kappa, sigma and N must be positive integers";
        if (!(req(p.a, "a") > kappa))
            return "requires a > kappa";
        if (!(req(p.b, "b") > sigma))
            return "requires b > sigma";
        return std::nullopt;
    }
    }
    return "unknown measure";
}

// Canonical decomposition of each named measure.  Out-of-window parameters
// are permitted only with the explicit override flag.
inline Measure make_named_measure(NamedMeasureId id, const MeasureParams& p,
                                  bool allow_nonpositive = false) {
    using detail::req;
    if (auto violation = positivity_window_violation(id, p); violation && !allow_nonpositive)
        throw positivity_not_guaranteed(std::string(measure_name(id)) + ": " + *violation);
    switch (id) {
    case NamedMeasureId::lagk: {
        const int kappa = req(p.kappa, "kappa");
        return Measure(LaguerreWeight{Scalar(kappa - 1)}, 0, Poly::one(),
                       {{Scalar(0), Scalar(factorial(kappa)) * req(p.u, "u")}});
    }
    case NamedMeasureId::mk: {
        const int kappa = req(p.kappa, "kappa");
        const Scalar c = req(p.c, "c");
        Poly modifier = Poly::one();
        for (int j = 1; j <= kappa; ++j)
            modifier = modifier * Poly({c - j, Scalar(1)});
        return Measure(MeixnerWeight{req(p.a, "a"), c - kappa - 1}, 0, modifier);
    }
    case NamedMeasureId::mk2: {
        const int kappa = req(p.kappa, "kappa");
        Poly modifier = Poly::one();
        for (int j = 1; j <= kappa; ++j)
            modifier = modifier * Poly({Scalar(j), Scalar(1)});
        return Measure(MeixnerWeight{req(p.a, "a"), req(p.c, "c") - kappa - 1}, kappa + 1,
                       modifier);
    }
    case NamedMeasureId::jack: {
        const int kappa = req(p.kappa, "kappa");
        return Measure(JacobiWeight{req(p.alpha, "alpha"), Scalar(kappa - 1)}, 0, Poly::one(),
                       {{Scalar(-1), Scalar(factorial(kappa)) * req(p.u, "u")}});
    }
    case NamedMeasureId::jack2: {
        const int kappa = req(p.kappa, "kappa");
        const int sigma = req(p.sigma, "sigma");
        return Measure(JacobiWeight{Scalar(kappa - 1), Scalar(sigma - 1)}, 0, Poly::one(),
                       {{Scalar(1), Scalar(factorial(kappa)) * req(p.u, "u") / 2},
                        {Scalar(-1), Scalar(factorial(sigma)) * req(p.v, "v") / 2}});
    }
    case NamedMeasureId::hw: {
        return Measure(HahnWeight{req(p.a, "a"), req(p.b, "b"), req(p.points, "N")});
    }
    case NamedMeasureId::hk: {
        const int kappa = req(p.kappa, "kappa");
        const int N = req(p.points, "N");
        const Scalar b = req(p.b, "b");
        // (N+b-kappa+1-x)_kappa as a polynomial in x
        const Poly linear({N + b - kappa + 1, Scalar(-1)});
        Poly modifier = Poly::one();
        for (int i = 0; i < kappa; ++i)
            modifier = modifier * (linear + Poly(Scalar(i)));
        return Measure(HahnWeight{req(p.a, "a"), b - kappa - 1, N}, 0, modifier);
    }
    case NamedMeasureId::hk2: {
        const int kappa = req(p.kappa, "kappa");
        const int sigma = req(p.sigma, "sigma");
        const int N = req(p.points, "N");
        const Scalar a = req(p.a, "a");
        const Scalar b = req(p.b, "b");
        const Poly up({a - kappa + 1, Scalar(1)});
        const Poly down({N + b - sigma + 1, Scalar(-1)});
        Poly modifier = Poly::one();
        for (int i = 0; i < kappa; ++i)
            modifier = modifier * (up + Poly(Scalar(i)));
        for (int i = 0; i < sigma; ++i)
            modifier = modifier * (down + Poly(Scalar(i)));
        return Measure(HahnWeight{a - kappa - 1, b - sigma - 1, N}, 0, modifier);
    }
    }
    throw invalid_parameter("unknown measure");
}

} // namespace krall
