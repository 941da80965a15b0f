#include "specklebench/filters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace specklebench {

namespace {

void check_window_size(int window) {
    if (window < 3 || window % 2 == 0) {
        throw std::invalid_argument("filter window must be odd and >= 3, got " +
                                    std::to_string(window));
    }
}

// ---------------------------------------------------------------------------
// Naive engine: every output pixel evaluates its window from scratch. This is
// the reference the optimized paths are tested against.
// ---------------------------------------------------------------------------

Image apply_naive(const Image& img, const FilterSpec& spec) {
    double (*stat)(const Window&) = nullptr;
    switch (spec.kind) {
        case FilterKind::Median:   stat = median_filter; break;
        case FilterKind::Mean:     stat = mean_filter; break;
        case FilterKind::Max:      stat = max_filter; break;
        case FilterKind::Min:      stat = min_filter; break;
        case FilterKind::StdDev:   stat = stddev_filter; break;
        case FilterKind::Variance: stat = variance_filter; break;
    }
    Image out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out(x, y) = stat(window_at(img, x, y, spec.window, spec.border));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Optimized engine. Mean/Variance/StdDev use separable sliding sums; Max/Min
// use a separable monotonic deque; Median uses a sliding 256-bin histogram
// over the (pre-quantized) input. All paths materialize border values into an
// extended line first, so every policy goes through the same resolver as the
// naive engine.
// ---------------------------------------------------------------------------

// Row y of img extended by r columns on each side, border-resolved.
std::vector<double> extended_row(const Image& img, int y, int r, BorderPolicy policy) {
    const int w = img.width();
    std::vector<double> line(static_cast<std::size_t>(w) + 2 * r);
    for (int i = -r; i < w + r; ++i) {
        const int ix = resolve_border(i, w, policy);
        line[static_cast<std::size_t>(i + r)] = ix < 0 ? 0.0 : img(ix, y);
    }
    return line;
}

// Column x of img extended by r rows on each side, border-resolved.
std::vector<double> extended_column(const Image& img, int x, int r, BorderPolicy policy) {
    const int h = img.height();
    std::vector<double> line(static_cast<std::size_t>(h) + 2 * r);
    for (int i = -r; i < h + r; ++i) {
        const int iy = resolve_border(i, h, policy);
        line[static_cast<std::size_t>(i + r)] = iy < 0 ? 0.0 : img(x, iy);
    }
    return line;
}

// Sliding-window sum over an extended line: out[i] = sum of ext[i .. i+2r].
void sliding_sum(const std::vector<double>& ext, int r, std::vector<double>& out) {
    const std::size_t n = ext.size() - 2 * r;
    double acc = 0.0;
    for (int k = 0; k <= 2 * r; ++k) {
        acc += ext[static_cast<std::size_t>(k)];
    }
    out.resize(n);
    out[0] = acc;
    for (std::size_t i = 1; i < n; ++i) {
        acc += ext[i + 2 * r] - ext[i - 1];
        out[i] = acc;
    }
}

// Sliding-window extremum via a monotonic deque of candidate indices.
template <typename Better>
void sliding_extreme(const std::vector<double>& ext, int r, Better better,
                     std::vector<double>& out) {
    const std::size_t n = ext.size() - 2 * r;
    const std::size_t span = static_cast<std::size_t>(2 * r) + 1;
    out.resize(n);
    std::deque<std::size_t> candidates;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        while (!candidates.empty() && !better(ext[candidates.back()], ext[i])) {
            candidates.pop_back();
        }
        candidates.push_back(i);
        if (candidates.front() + span <= i) {
            candidates.pop_front();
        }
        if (i + 1 >= span) {
            out[i + 1 - span] = ext[candidates.front()];
        }
    }
}

// Separable two-pass box sums: per-row horizontal window sums, then vertical
// window sums over the intermediate plane. For the Zero policy a fully
// out-of-range row contributes 0, which matches the 2D zero padding exactly.
Image box_sum(const Image& img, int window, BorderPolicy policy) {
    const int r = window / 2;
    Image horizontal(img.width(), img.height());
    std::vector<double> sums;
    for (int y = 0; y < img.height(); ++y) {
        sliding_sum(extended_row(img, y, r, policy), r, sums);
        for (int x = 0; x < img.width(); ++x) {
            horizontal(x, y) = sums[static_cast<std::size_t>(x)];
        }
    }
    Image out(img.width(), img.height());
    for (int x = 0; x < img.width(); ++x) {
        sliding_sum(extended_column(horizontal, x, r, policy), r, sums);
        for (int y = 0; y < img.height(); ++y) {
            out(x, y) = sums[static_cast<std::size_t>(y)];
        }
    }
    return out;
}

Image extreme_filter(const Image& img, int window, BorderPolicy policy, bool want_max) {
    const int r = window / 2;
    auto better_max = [](double a, double b) { return a > b; };
    auto better_min = [](double a, double b) { return a < b; };

    Image horizontal(img.width(), img.height());
    std::vector<double> line;
    for (int y = 0; y < img.height(); ++y) {
        const auto ext = extended_row(img, y, r, policy);
        if (want_max) {
            sliding_extreme(ext, r, better_max, line);
        } else {
            sliding_extreme(ext, r, better_min, line);
        }
        for (int x = 0; x < img.width(); ++x) {
            horizontal(x, y) = line[static_cast<std::size_t>(x)];
        }
    }
    Image out(img.width(), img.height());
    for (int x = 0; x < img.width(); ++x) {
        const auto ext = extended_column(horizontal, x, r, policy);
        if (want_max) {
            sliding_extreme(ext, r, better_max, line);
        } else {
            sliding_extreme(ext, r, better_min, line);
        }
        for (int y = 0; y < img.height(); ++y) {
            out(x, y) = line[static_cast<std::size_t>(y)];
        }
    }
    return out;
}

// Huang sliding-histogram median. The input must already be integer-valued in
// [0, 255]; apply_filter quantizes rank-kind inputs before calling this.
Image median_filter_histogram(const Image& img, int window, BorderPolicy policy) {
    const int r = window / 2;
    const int w = img.width();
    const int h = img.height();
    const int rank = (window * window + 1) / 2;

    Image out(w, h);
    std::array<int, 256> hist{};

    auto column_bin = [&](int cx, int cy) -> int {
        const int ix = resolve_border(cx, w, policy);
        const int iy = resolve_border(cy, h, policy);
        if (ix < 0 || iy < 0) {
            return 0;  // Zero policy reads the value 0
        }
        return static_cast<int>(img(ix, iy));
    };

    for (int y = 0; y < h; ++y) {
        hist.fill(0);
        for (int cx = -r; cx <= r; ++cx) {
            for (int dy = -r; dy <= r; ++dy) {
                ++hist[static_cast<std::size_t>(column_bin(cx, y + dy))];
            }
        }
        for (int x = 0; x < w; ++x) {
            if (x > 0) {
                // Slide right: drop the leftmost column, add the new rightmost.
                for (int dy = -r; dy <= r; ++dy) {
                    --hist[static_cast<std::size_t>(column_bin(x - 1 - r, y + dy))];
                    ++hist[static_cast<std::size_t>(column_bin(x + r, y + dy))];
                }
            }
            int count = 0;
            int bin = 0;
            while (count + hist[static_cast<std::size_t>(bin)] < rank) {
                count += hist[static_cast<std::size_t>(bin)];
                ++bin;
            }
            out(x, y) = static_cast<double>(bin);
        }
    }
    return out;
}

Image apply_optimized(const Image& img, const FilterSpec& spec) {
    const double n2 = static_cast<double>(spec.window) * static_cast<double>(spec.window);
    switch (spec.kind) {
        case FilterKind::Median:
            return median_filter_histogram(img, spec.window, spec.border);
        case FilterKind::Max:
            return extreme_filter(img, spec.window, spec.border, true);
        case FilterKind::Min:
            return extreme_filter(img, spec.window, spec.border, false);
        case FilterKind::Mean: {
            Image out = box_sum(img, spec.window, spec.border);
            for (double& v : out.pixels()) {
                v /= n2;
            }
            return out;
        }
        case FilterKind::Variance:
        case FilterKind::StdDev: {
            Image squares(img.width(), img.height());
            for (int y = 0; y < img.height(); ++y) {
                for (int x = 0; x < img.width(); ++x) {
                    squares(x, y) = img(x, y) * img(x, y);
                }
            }
            const Image sum1 = box_sum(img, spec.window, spec.border);
            Image out = box_sum(squares, spec.window, spec.border);
            auto s1 = sum1.pixels();
            auto s2 = out.pixels();
            for (std::size_t i = 0; i < s2.size(); ++i) {
                const double mean = s1[i] / n2;
                const double variance = std::max(0.0, s2[i] / n2 - mean * mean);
                s2[i] = spec.kind == FilterKind::Variance ? variance : std::sqrt(variance);
            }
            return out;
        }
    }
    throw std::logic_error("unknown filter kind");
}

}  // namespace

bool is_rank_kind(FilterKind kind) {
    return kind == FilterKind::Median || kind == FilterKind::Max || kind == FilterKind::Min;
}

double max_filter(const Window& window) {
    return *std::max_element(window.values.begin(), window.values.end());
}

double min_filter(const Window& window) {
    return *std::min_element(window.values.begin(), window.values.end());
}

double mean_filter(const Window& window) {
    double sum = 0.0;
    for (double v : window.values) {
        sum += v;
    }
    return sum / static_cast<double>(window.values.size());
}

double median_filter(const Window& window) {
    std::vector<double> sorted = window.values;
    const std::size_t middle = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(middle),
                     sorted.end());
    return sorted[middle];
}

double variance_filter(const Window& window) {
    const double mean = mean_filter(window);
    double acc = 0.0;
    for (double v : window.values) {
        const double d = v - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(window.values.size());
}

double stddev_filter(const Window& window) {
    return std::sqrt(variance_filter(window));
}

Image apply_filter(const Image& img, const FilterSpec& spec, FilterEngine engine) {
    check_window_size(spec.window);
    const Image* source = &img;
    Image quantized;
    if (is_rank_kind(spec.kind)) {
        quantized = quantize(img);
        source = &quantized;
    }
    return engine == FilterEngine::NaiveOracle ? apply_naive(*source, spec)
                                               : apply_optimized(*source, spec);
}

}  // namespace specklebench
