#pragma once

#include <cstddef>

#include "specklebench/image.hpp"

namespace specklebench {

/// Score bundle for one (reference, test) pair. Both PSNR variants are kept:
/// psnr_report = 20*log10(255^2 / RMSE) is what the benchmark report prints;
/// psnr_std = 10*log10(255^2 / MSE) is the conventional definition. The two
/// differ by the constant 20*log10(255) ~ 48.13 dB. PSNR fields hold +inf
/// when mse is 0.
struct MetricsReport {
    double mse = 0.0;
    double rmse = 0.0;
    double snr_db = 0.0;
    double psnr_report = 0.0;
    double psnr_std = 0.0;
    std::size_t pixel_count = 0;
};

/// Mean squared pixel difference. Throws std::invalid_argument on dimension
/// mismatch (as do all pairwise metrics below).
double mse(const Image& ref, const Image& test);

double rmse(const Image& ref, const Image& test);

/// 10*log10(var(ref) / var(ref - test)), variances with population divisor.
/// Zero error variance yields +inf; a constant reference (with nonzero error)
/// has no defined ratio and throws std::domain_error.
double snr_db(const Image& ref, const Image& test);

/// sqrt(sigma_t_sq / sigma_n_sq - 1) on caller-supplied variances. Which
/// variance means "signal" and which "noise" is the caller's interpretation;
/// the function only requires sigma_t_sq >= sigma_n_sq > 0 and throws
/// std::domain_error otherwise (the root would be imaginary).
double snr_ratio(double sigma_t_sq, double sigma_n_sq);

double psnr_report(const Image& ref, const Image& test);
double psnr_std(const Image& ref, const Image& test);

/// Population variance (divisor = pixel count) of one image.
double population_variance(const Image& img);

MetricsReport compute_metrics(const Image& ref, const Image& test);

}  // namespace specklebench
