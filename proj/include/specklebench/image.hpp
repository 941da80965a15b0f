#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specklebench {

/// Grayscale raster with real-valued intensities, stored row-major.
///
/// The nominal intensity range is [0, 255], but values are allowed to leave
/// that range in memory (additive noise, filter intermediates). Clamping and
/// rounding to 8-bit samples happens only at file boundaries, via quantize().
class Image {
public:
    static constexpr double kMaxValue = 255.0;

    Image() = default;
    Image(int width, int height, double fill = 0.0);
    Image(int width, int height, std::vector<double> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    double operator()(int x, int y) const { return pixels_[index(x, y)]; }
    double& operator()(int x, int y) { return pixels_[index(x, y)]; }

    std::span<const double> pixels() const { return pixels_; }
    std::span<double> pixels() { return pixels_; }

    bool operator==(const Image&) const = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> pixels_;
};

/// File-boundary quantization rule: clamp to [0, 255], then round half away
/// from zero. Rank filters apply the same rule before processing.
int quantize_sample(double value);

/// Applies quantize_sample to every pixel; the result holds integer values.
Image quantize(const Image& img);

/// Rule for window reads outside the image.
enum class BorderPolicy {
    Replicate,  ///< clamp to the nearest valid row/column
    Reflect,    ///< mirror without repeating the edge pixel
    Zero,       ///< read the value 0
};

/// Maps coordinate i onto [0, n) under the given policy. Returns -1 when the
/// Zero policy leaves the read out of range (caller substitutes 0).
int resolve_border(int i, int n, BorderPolicy policy);

/// Odd-sized square neighborhood of a pixel, in raster order.
struct Window {
    int size = 0;
    std::vector<double> values;

    Window(int size, std::vector<double> values);
};

/// Extracts the size x size neighborhood centered on (x, y). Out-of-range
/// reads are resolved by the border policy. size must be odd and >= 3.
Window window_at(const Image& img, int x, int y, int size, BorderPolicy policy);

}  // namespace specklebench
