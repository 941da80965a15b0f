#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "specklebench/image.hpp"

namespace specklebench {

/// Intensity remapping table produced by histogram equalization. Always
/// monotonically non-decreasing, entries in [0, 255].
struct EqualizationMap {
    std::array<int, 256> lut{};
};

/// CDF-based histogram equalization over the quantized 256-bin histogram:
/// lut[v] = round(255 * CDF(v)). Returns the remapped image together with
/// the map itself for auditing.
std::pair<Image, EqualizationMap> histogram_equalize(const Image& img);

/// Boolean membership raster produced by region growing.
struct RegionMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> member;  // 0/1, row-major

    bool contains(int x, int y) const {
        return member[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)] != 0;
    }
    std::size_t count() const;
};

/// Maximal 4-connected component containing the seed in which every member
/// pixel differs from the *seed pixel's* intensity by at most tolerance. The
/// fixed seed reference makes the result independent of visit order.
RegionMask region_grow(const Image& img, int seed_x, int seed_y, double tolerance);

/// Renders a mask as a {0, 255} image, e.g. for saving as a PGM.
Image mask_to_image(const RegionMask& mask);

}  // namespace specklebench
