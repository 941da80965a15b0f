#pragma once

#include "specklebench/image.hpp"

namespace specklebench {

enum class FilterKind { Median, Mean, Max, Min, StdDev, Variance };

/// True for the order-statistic kinds (Median, Max, Min). These quantize
/// their input to integers in [0, 255] before filtering, which is what lets
/// the optimized median run on a 256-bin histogram.
bool is_rank_kind(FilterKind kind);

struct FilterSpec {
    FilterKind kind = FilterKind::Median;
    int window = 3;
    BorderPolicy border = BorderPolicy::Replicate;
};

/// NaiveOracle evaluates every window from scratch; Optimized uses sliding
/// structures. The two must agree on every input: exactly for rank kinds,
/// within 1e-9 per pixel for Mean/StdDev/Variance.
enum class FilterEngine { NaiveOracle, Optimized };

// Window statistics. All are pure functions of the window's value multiset.
double max_filter(const Window& window);
double min_filter(const Window& window);
double mean_filter(const Window& window);

/// Middle order statistic (the (n*n+1)/2-th smallest; n*n is odd).
double median_filter(const Window& window);

/// Population standard deviation with divisor n*n, not n*n - 1.
double stddev_filter(const Window& window);

/// Population variance with divisor n*n; equals stddev_filter squared.
double variance_filter(const Window& window);

/// Applies the windowed statistic at every pixel. Output dimensions equal
/// input dimensions; border reads follow spec.border.
Image apply_filter(const Image& img, const FilterSpec& spec,
                   FilterEngine engine = FilterEngine::Optimized);

}  // namespace specklebench
