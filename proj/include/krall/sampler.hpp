#pragma once

#include <cstdlib>
#include <random>

#include "krall/scalar.hpp"

namespace krall {

// Seed used by every randomized check unless KRALL_SEED overrides it.
inline constexpr std::uint64_t kDefaultSeed = 20150923ULL;

inline std::uint64_t resolve_seed() {
    if (const char* env = std::getenv("KRALL_SEED"))
        return std::strtoull(env, nullptr, 10);
    return kDefaultSeed;
}

// Deterministic rational parameter draws for property checks.  Numerators
// and denominators are bounded (default 20); callers rejection-sample away
// from each identity's excluded set.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Scalar rational(int bound = 20) {
        const int num = integer(-bound, bound);
        const int den = integer(1, bound);
        return ratio(num, den);
    }

    Scalar nonzero_rational(int bound = 20) {
        for (;;) {
            Scalar q = rational(bound);
            if (q != 0)
                return q;
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace krall
