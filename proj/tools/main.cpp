// Command-line front end: noise injection, spatial filtering, quality
// metrics, enhancement/segmentation and the comparative benchmark pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
// malformed files, dimension mismatches, failed pipeline stages).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "specklebench/bench.hpp"
#include "specklebench/enhance.hpp"
#include "specklebench/filters.hpp"
#include "specklebench/metrics.hpp"
#include "specklebench/noise.hpp"
#include "specklebench/pgm.hpp"

namespace {

using namespace specklebench;

PgmFormat parse_format(const std::string& name) {
    return name == "p2" ? PgmFormat::P2 : PgmFormat::P5;
}

FilterKind filter_kind_from_name(const std::string& name) {
    if (name == "median") return FilterKind::Median;
    if (name == "mean") return FilterKind::Mean;
    if (name == "max") return FilterKind::Max;
    if (name == "min") return FilterKind::Min;
    if (name == "stddev") return FilterKind::StdDev;
    return FilterKind::Variance;
}

BorderPolicy border_from_name(const std::string& name) {
    if (name == "reflect") return BorderPolicy::Reflect;
    if (name == "zero") return BorderPolicy::Zero;
    return BorderPolicy::Replicate;
}

const CLI::Validator OddWindow(
    [](std::string& s) -> std::string {
        int value = 0;
        try {
            value = std::stoi(s);
        } catch (...) {
            return "window must be an integer";
        }
        if (value < 3 || value % 2 == 0) {
            return "window must be odd and >= 3";
        }
        return {};
    },
    "ODD>=3");

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grayscale image denoising benchmark toolkit (PGM in/out)"};
    app.require_subcommand(1);

    std::string input, output, ref_path, test_path, config_path, lut_path;
    std::string format = "p5";
    std::string kind = "median";
    std::string border = "replicate";
    std::string engine = "optimized";
    double gaussian_sigma = 0.0;
    int speckle_alpha = 1;
    double sp_density = 0.0;
    double sp_salt_fraction = 0.5;
    std::uint64_t seed = 0;
    int window = 3;
    int seed_x = 0;
    int seed_y = 0;
    double tolerance = 0.0;

    auto* inject_cmd = app.add_subcommand("inject", "Corrupt an image with a seeded noise model");
    inject_cmd->add_option("input", input, "input PGM")->required();
    inject_cmd->add_option("output", output, "output PGM")->required();
    auto* model = inject_cmd->add_option_group("noise model", "exactly one model");
    model->add_option("--gaussian-sigma", gaussian_sigma,
                      "additive zero-mean gaussian, standard deviation")
        ->check(CLI::PositiveNumber);
    model->add_option("--speckle-alpha", speckle_alpha,
                      "multiplicative gamma gain, integer shape (mean-1 gain)")
        ->check(CLI::Range(1, 1000000));
    auto* density_opt =
        model->add_option("--sp-density", sp_density, "salt-and-pepper corruption probability")
            ->check(CLI::Range(0.0, 1.0));
    model->require_option(1);
    inject_cmd->add_option("--sp-salt-fraction", sp_salt_fraction,
                           "fraction of corrupted pixels set to 255 (default 0.5)")
        ->check(CLI::Range(0.0, 1.0))
        ->needs(density_opt);
    inject_cmd->add_option("--seed", seed, "RNG seed (default 0)");
    inject_cmd->add_option("--format", format, "output format (default p5)")
        ->check(CLI::IsMember({"p2", "p5"}));

    auto* filter_cmd = app.add_subcommand("filter", "Apply a sliding-window filter");
    filter_cmd->add_option("input", input, "input PGM")->required();
    filter_cmd->add_option("output", output, "output PGM")->required();
    filter_cmd->add_option("--kind", kind, "filter kind")
        ->required()
        ->check(CLI::IsMember({"median", "mean", "max", "min", "stddev", "variance"}));
    filter_cmd->add_option("--window", window, "odd window size (default 3)")->check(OddWindow);
    filter_cmd->add_option("--border", border, "border policy (default replicate)")
        ->check(CLI::IsMember({"replicate", "reflect", "zero"}));
    filter_cmd->add_option("--engine", engine, "engine (default optimized)")
        ->check(CLI::IsMember({"naive", "optimized"}));
    filter_cmd->add_option("--format", format, "output format (default p5)")
        ->check(CLI::IsMember({"p2", "p5"}));

    auto* metrics_cmd = app.add_subcommand("metrics", "Score a test image against a reference");
    metrics_cmd->add_option("--ref", ref_path, "reference PGM")->required();
    metrics_cmd->add_option("--test", test_path, "test PGM")->required();

    auto* equalize_cmd = app.add_subcommand("equalize", "Histogram equalization");
    equalize_cmd->add_option("input", input, "input PGM")->required();
    equalize_cmd->add_option("output", output, "output PGM")->required();
    equalize_cmd->add_option("--lut", lut_path, "also write the 256-entry lookup table as CSV");
    equalize_cmd->add_option("--format", format, "output format (default p5)")
        ->check(CLI::IsMember({"p2", "p5"}));

    auto* grow_cmd = app.add_subcommand("grow", "Seeded region growing; writes a {0,255} mask");
    grow_cmd->add_option("input", input, "input PGM")->required();
    grow_cmd->add_option("output", output, "output mask PGM")->required();
    grow_cmd->add_option("--seed-x", seed_x, "seed column")->required();
    grow_cmd->add_option("--seed-y", seed_y, "seed row")->required();
    grow_cmd->add_option("--tol", tolerance, "intensity tolerance vs the seed pixel (default 0)")
        ->check(CLI::NonNegativeNumber);

    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark pipeline from a config file");
    bench_cmd->add_option("--config", config_path, "pipeline config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(inject_cmd)) {
            const Image img = load_pgm(input);
            Image out;
            if (model->count("--gaussian-sigma") > 0) {
                out = inject_gaussian(img, gaussian_sigma, seed);
            } else if (model->count("--speckle-alpha") > 0) {
                out = inject_speckle(img, speckle_alpha, seed);
            } else {
                out = inject_salt_pepper(img, sp_density, sp_salt_fraction, seed);
            }
            save_pgm(out, output, parse_format(format));
        } else if (app.got_subcommand(filter_cmd)) {
            const Image img = load_pgm(input);
            FilterSpec spec{filter_kind_from_name(kind), window, border_from_name(border)};
            const auto eng =
                engine == "naive" ? FilterEngine::NaiveOracle : FilterEngine::Optimized;
            save_pgm(apply_filter(img, spec, eng), output, parse_format(format));
        } else if (app.got_subcommand(metrics_cmd)) {
            const Image ref = load_pgm(ref_path);
            const Image test = load_pgm(test_path);
            std::cout << "mse=" << format_fixed2(mse(ref, test)) << "\n";
            std::cout << "rmse=" << format_fixed2(rmse(ref, test)) << "\n";
            std::string snr_text = "nan";  // undefined for a constant reference
            try {
                snr_text = format_fixed2(snr_db(ref, test));
            } catch (const std::domain_error&) {
            }
            std::cout << "snr=" << snr_text << "\n";
            std::cout << "psnr=" << format_fixed2(psnr_report(ref, test)) << "\n";
            std::cout << "psnr_std=" << format_fixed2(psnr_std(ref, test)) << "\n";
        } else if (app.got_subcommand(equalize_cmd)) {
            const Image img = load_pgm(input);
            const auto [out, map] = histogram_equalize(img);
            save_pgm(out, output, parse_format(format));
            if (!lut_path.empty()) {
                std::string lut_csv = "level,mapped\n";
                for (int v = 0; v < 256; ++v) {
                    lut_csv += std::to_string(v) + ',' +
                               std::to_string(map.lut[static_cast<std::size_t>(v)]) + '\n';
                }
                std::ofstream lut_out(lut_path, std::ios::binary | std::ios::trunc);
                if (!lut_out) {
                    throw std::runtime_error("cannot open " + lut_path + " for writing");
                }
                lut_out << lut_csv;
            }
        } else if (app.got_subcommand(grow_cmd)) {
            const Image img = load_pgm(input);
            const RegionMask mask = region_grow(img, seed_x, seed_y, tolerance);
            save_pgm(mask_to_image(mask), output);
            std::cout << "region=" << mask.count() << " pixels\n";
        } else if (app.got_subcommand(bench_cmd)) {
            const PipelineConfig config = load_pipeline_config(config_path);
            const BenchTable table = run_pipeline(config);
            std::cout << render_table(table, config.report_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
