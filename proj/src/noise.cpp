#include "specklebench/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specklebench/rng.hpp"

namespace specklebench {

namespace {

void check_unit_interval(double value, const char* what) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                    std::to_string(value));
    }
}

}  // namespace

Image inject_gaussian(const Image& img, double sigma, std::uint64_t seed) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("gaussian sigma must be positive and finite, got " +
                                    std::to_string(sigma));
    }
    Image out = img;
    auto pixels = out.pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        CounterRng rng(seed, i);
        pixels[i] += sigma * rng.next_normal();
    }
    return out;
}

Image inject_speckle(const Image& img, int alpha, std::uint64_t seed) {
    if (alpha < 1) {
        throw std::invalid_argument("speckle alpha must be an integer >= 1, got " +
                                    std::to_string(alpha));
    }
    Image out = img;
    auto pixels = out.pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        CounterRng rng(seed, i);
        double gain = 0.0;
        for (int k = 0; k < alpha; ++k) {
            gain += rng.next_exponential();
        }
        gain /= static_cast<double>(alpha);
        pixels[i] *= gain;
    }
    return out;
}

Image inject_salt_pepper(const Image& img, double density, double salt_fraction,
                         std::uint64_t seed) {
    check_unit_interval(density, "salt-pepper density");
    check_unit_interval(salt_fraction, "salt fraction");
    Image out = img;
    auto pixels = out.pixels();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        CounterRng rng(seed, i);
        if (rng.next_unit() < density) {
            pixels[i] = rng.next_unit() < salt_fraction ? 255.0 : 0.0;
        }
    }
    return out;
}

Image inject(const Image& img, const NoiseSpec& spec) {
    return std::visit(
        [&](const auto& model) -> Image {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, GaussianAdditive>) {
                return inject_gaussian(img, model.sigma, spec.seed);
            } else if constexpr (std::is_same_v<T, SpeckleGamma>) {
                return inject_speckle(img, model.alpha, spec.seed);
            } else {
                return inject_salt_pepper(img, model.density, model.salt_fraction, spec.seed);
            }
        },
        spec.model);
}

}  // namespace specklebench
