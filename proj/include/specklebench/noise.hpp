#pragma once

#include <cstdint>
#include <variant>

#include "specklebench/image.hpp"

namespace specklebench {

struct GaussianAdditive {
    double sigma = 0.0;
};

struct SpeckleGamma {
    int alpha = 1;
};

struct SaltPepper {
    double density = 0.0;
    double salt_fraction = 0.5;
};

/// Tagged noise model plus the seed that makes the corruption reproducible.
struct NoiseSpec {
    std::variant<GaussianAdditive, SpeckleGamma, SaltPepper> model;
    std::uint64_t seed = 0;
};

/// Adds zero-mean normal noise with standard deviation sigma to every pixel.
/// The output is deliberately not clamped; clamping happens at file I/O.
Image inject_gaussian(const Image& img, double sigma, std::uint64_t seed);

/// Multiplies every pixel by a gamma-distributed gain with integer shape
/// alpha and scale 1/alpha, so the gain has mean 1 and variance 1/alpha.
/// The gain is the scaled sum of alpha unit exponentials.
Image inject_speckle(const Image& img, int alpha, std::uint64_t seed);

/// Corrupts each pixel independently with the given probability; corrupted
/// pixels become 255 with probability salt_fraction, otherwise 0. Unaffected
/// pixels are copied bit-identically.
Image inject_salt_pepper(const Image& img, double density, double salt_fraction,
                         std::uint64_t seed);

Image inject(const Image& img, const NoiseSpec& spec);

}  // namespace specklebench
