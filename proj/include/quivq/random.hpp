#pragma once

#include <cstdint>
#include <random>

#include "quivq/rational.hpp"

namespace quivq {

/// Seeded stream of small integers. Uses the raw mt19937_64 output reduced modulo
/// the range so that values are identical on every platform.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : gen_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long next(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(gen_() % span);
    }
    Rational small() { return Rational(next(-3, 3)); }
    /// Nonzero integer in [-3, 3].
    Rational small_nonzero() {
        long x = next(1, 6);
        return Rational(x <= 3 ? x : 3 - x);
    }
    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

}  // namespace quivq
