#include "specklebench/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace specklebench {

namespace {

void check_dimensions(int width, int height) {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

}  // namespace

Image::Image(int width, int height, double fill)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width > 0 ? width : 0) *
                  static_cast<std::size_t>(height > 0 ? height : 0),
              fill) {
    check_dimensions(width, height);
    if (!std::isfinite(fill)) {
        throw std::invalid_argument("image fill value must be finite");
    }
}

Image::Image(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dimensions(width, height);
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (pixels_.size() != expected) {
        throw std::invalid_argument("pixel buffer size " + std::to_string(pixels_.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height));
    }
    for (double v : pixels_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("image intensities must be finite");
        }
    }
}

int quantize_sample(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot quantize a non-finite intensity");
    }
    const long rounded = std::lround(value);
    return static_cast<int>(std::clamp(rounded, 0L, 255L));
}

Image quantize(const Image& img) {
    Image out(img.width(), img.height());
    auto dst = out.pixels();
    auto src = img.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = static_cast<double>(quantize_sample(src[i]));
    }
    return out;
}

int resolve_border(int i, int n, BorderPolicy policy) {
    if (i >= 0 && i < n) {
        return i;
    }
    switch (policy) {
        case BorderPolicy::Replicate:
            return std::clamp(i, 0, n - 1);
        case BorderPolicy::Reflect: {
            if (n == 1) {
                return 0;
            }
            // Mirror without repeating the edge pixel: period 2n-2.
            const int period = 2 * n - 2;
            int p = i % period;
            if (p < 0) {
                p += period;
            }
            return p < n ? p : period - p;
        }
        case BorderPolicy::Zero:
            return -1;
    }
    throw std::logic_error("unknown border policy");
}

Window::Window(int size, std::vector<double> values) : size(size), values(std::move(values)) {
    if (size < 3 || size % 2 == 0) {
        throw std::invalid_argument("window size must be odd and >= 3, got " +
                                    std::to_string(size));
    }
    const auto expected = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
    if (this->values.size() != expected) {
        throw std::invalid_argument("window value count " + std::to_string(this->values.size()) +
                                    " does not match size " + std::to_string(size));
    }
}

Window window_at(const Image& img, int x, int y, int size, BorderPolicy policy) {
    if (size < 3 || size % 2 == 0) {
        throw std::invalid_argument("window size must be odd and >= 3, got " +
                                    std::to_string(size));
    }
    if (!img.in_bounds(x, y)) {
        throw std::out_of_range("window center (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside " + std::to_string(img.width()) + "x" +
                                std::to_string(img.height()) + " image");
    }
    const int r = size / 2;
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (int dy = -r; dy <= r; ++dy) {
        const int iy = resolve_border(y + dy, img.height(), policy);
        for (int dx = -r; dx <= r; ++dx) {
            const int ix = resolve_border(x + dx, img.width(), policy);
            values.push_back((ix < 0 || iy < 0) ? 0.0 : img(ix, iy));
        }
    }
    return Window(size, std::move(values));
}

}  // namespace specklebench
