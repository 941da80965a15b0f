#include "specklebench/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace specklebench {

namespace {

constexpr double kPeak = 255.0;

void check_same_dimensions(const Image& ref, const Image& test) {
    if (ref.width() != test.width() || ref.height() != test.height()) {
        throw std::invalid_argument("image dimensions differ: " + std::to_string(ref.width()) +
                                    "x" + std::to_string(ref.height()) + " vs " +
                                    std::to_string(test.width()) + "x" +
                                    std::to_string(test.height()));
    }
}

}  // namespace

double mse(const Image& ref, const Image& test) {
    check_same_dimensions(ref, test);
    auto a = ref.pixels();
    auto b = test.pixels();
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

double rmse(const Image& ref, const Image& test) {
    return std::sqrt(mse(ref, test));
}

double population_variance(const Image& img) {
    auto p = img.pixels();
    double mean = 0.0;
    for (double v : p) {
        mean += v;
    }
    mean /= static_cast<double>(p.size());
    double acc = 0.0;
    for (double v : p) {
        const double d = v - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(p.size());
}

double snr_db(const Image& ref, const Image& test) {
    check_same_dimensions(ref, test);
    Image error(ref.width(), ref.height());
    auto a = ref.pixels();
    auto b = test.pixels();
    auto e = error.pixels();
    for (std::size_t i = 0; i < a.size(); ++i) {
        e[i] = a[i] - b[i];
    }
    const double error_variance = population_variance(error);
    if (error_variance == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double signal_variance = population_variance(ref);
    if (signal_variance == 0.0) {
        throw std::domain_error("SNR is undefined for a constant reference image");
    }
    return 10.0 * std::log10(signal_variance / error_variance);
}

double snr_ratio(double sigma_t_sq, double sigma_n_sq) {
    if (!(sigma_n_sq > 0.0)) {
        throw std::domain_error("snr_ratio requires a positive noise variance");
    }
    if (sigma_t_sq < sigma_n_sq) {
        throw std::domain_error("snr_ratio requires sigma_t_sq >= sigma_n_sq");
    }
    return std::sqrt(sigma_t_sq / sigma_n_sq - 1.0);
}

double psnr_report(const Image& ref, const Image& test) {
    const double err = rmse(ref, test);
    if (err == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 20.0 * std::log10(kPeak * kPeak / err);
}

double psnr_std(const Image& ref, const Image& test) {
    const double err = mse(ref, test);
    if (err == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(kPeak * kPeak / err);
}

MetricsReport compute_metrics(const Image& ref, const Image& test) {
    MetricsReport report;
    report.mse = mse(ref, test);
    report.rmse = std::sqrt(report.mse);
    report.snr_db = snr_db(ref, test);
    report.psnr_report = psnr_report(ref, test);
    report.psnr_std = psnr_std(ref, test);
    report.pixel_count = ref.pixel_count();
    return report;
}

}  // namespace specklebench
