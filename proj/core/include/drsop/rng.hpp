#pragma once

#include <cstdint>
#include <random>

namespace drsop {

/// Deterministic random source. std::mt19937_64 output is pinned by the
/// standard, and the bounded/unit draws below avoid std::*_distribution,
/// whose algorithms differ between standard library implementations. Given
/// the same seed, every draw sequence is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased draw from [0, n) by rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// splitmix64-style mixer for deriving independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// exp(x) from basic IEEE-754 arithmetic only, so annealing acceptance
/// decisions do not depend on the platform's libm. Accurate to ~1e-14
/// relative over the range used here; returns 0 below the underflow cutoff.
double portable_exp(double x);

} // namespace drsop
