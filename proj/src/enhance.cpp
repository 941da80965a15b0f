#include "specklebench/enhance.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace specklebench {

std::pair<Image, EqualizationMap> histogram_equalize(const Image& img) {
    std::array<std::size_t, 256> histogram{};
    std::vector<int> quantized(img.pixel_count());
    auto src = img.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        quantized[i] = quantize_sample(src[i]);
        ++histogram[static_cast<std::size_t>(quantized[i])];
    }

    EqualizationMap map;
    const double total = static_cast<double>(img.pixel_count());
    std::size_t running = 0;
    for (int v = 0; v < 256; ++v) {
        running += histogram[static_cast<std::size_t>(v)];
        const double cdf = static_cast<double>(running) / total;
        map.lut[static_cast<std::size_t>(v)] =
            static_cast<int>(std::lround(Image::kMaxValue * cdf));
    }

    Image out(img.width(), img.height());
    auto dst = out.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = static_cast<double>(map.lut[static_cast<std::size_t>(quantized[i])]);
    }
    return {std::move(out), map};
}

std::size_t RegionMask::count() const {
    return static_cast<std::size_t>(std::accumulate(member.begin(), member.end(), std::size_t{0}));
}

RegionMask region_grow(const Image& img, int seed_x, int seed_y, double tolerance) {
    if (!img.in_bounds(seed_x, seed_y)) {
        throw std::out_of_range("region seed (" + std::to_string(seed_x) + ", " +
                                std::to_string(seed_y) + ") outside " +
                                std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                                " image");
    }
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("region tolerance must be >= 0");
    }

    RegionMask mask{img.width(), img.height(),
                    std::vector<std::uint8_t>(img.pixel_count(), 0)};
    const double seed_value = img(seed_x, seed_y);
    auto accepts = [&](int x, int y) { return std::abs(img(x, y) - seed_value) <= tolerance; };
    auto flat = [&](int x, int y) {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width()) +
               static_cast<std::size_t>(x);
    };

    std::deque<std::pair<int, int>> worklist;
    mask.member[flat(seed_x, seed_y)] = 1;
    worklist.emplace_back(seed_x, seed_y);
    while (!worklist.empty()) {
        const auto [x, y] = worklist.front();
        worklist.pop_front();
        constexpr std::pair<int, int> steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& [dx, dy] : steps) {
            const int nx = x + dx;
            const int ny = y + dy;
            if (img.in_bounds(nx, ny) && !mask.member[flat(nx, ny)] && accepts(nx, ny)) {
                mask.member[flat(nx, ny)] = 1;
                worklist.emplace_back(nx, ny);
            }
        }
    }
    return mask;
}

Image mask_to_image(const RegionMask& mask) {
    Image out(mask.width, mask.height);
    auto dst = out.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = mask.member[i] ? 255.0 : 0.0;
    }
    return out;
}

}  // namespace specklebench
