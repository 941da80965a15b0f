#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace specklebench {

// Stateless counter-based randomness. Every value is a pure function of
// (seed, stream, draw counter), so outputs never depend on evaluation order
// and are reproducible across runs and platforms.
//
// The generator definition is fixed; changing it changes every seeded output:
//   mix64   = SplitMix64 finalizer
//   word(seed, stream, k) = mix64(mix64(seed + (stream+1)*GAMMA) + (k+1)*GAMMA)
// with GAMMA = 0x9e3779b97f4a7c15 (the SplitMix64 increment).

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rng_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    const std::uint64_t keyed = mix64(seed + (stream + 1) * kGamma);
    return mix64(keyed + (counter + 1) * kGamma);
}

/// Draw-counter view over one stream. The noise injectors use one stream per
/// pixel index, which keeps results independent of any traversal order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() { return rng_word(seed_, stream_, counter_++); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log() argument.
    double next_unit_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (cosine branch); consumes two words.
    double next_normal() {
        const double u1 = next_unit_open();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Exponential with mean 1.
    double next_exponential() { return -std::log(next_unit_open()); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace specklebench
