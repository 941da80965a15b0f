#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specklebench/filters.hpp"
#include "specklebench/noise.hpp"

namespace specklebench {

enum class ReportFormat { Csv, Markdown };

/// Declarative description of one benchmark run, normally parsed from a
/// config file (grammar documented in the README). When `reference` is empty
/// the clean input image is the scoring reference.
struct PipelineConfig {
    std::filesystem::path input;
    std::optional<NoiseSpec> noise;
    std::vector<std::pair<std::string, FilterSpec>> filters;  // (label, spec), ordered
    std::optional<std::filesystem::path> reference;
    std::filesystem::path output_dir;
    ReportFormat report_format = ReportFormat::Csv;
};

/// Config-file problem; line() is 1-based, 0 when no line applies.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, int line);
    int line() const { return line_; }

private:
    int line_;
};

/// Parses config text. Relative paths are left untouched.
PipelineConfig parse_pipeline_config(const std::string& text);

/// Reads and parses a config file, then resolves relative paths in it
/// against the file's own directory, so a config bundle is relocatable.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

struct BenchRow {
    int serial = 0;
    std::string method;
    double rmse = 0.0;
    double snr = 0.0;
    double psnr = 0.0;
};

/// Ordered comparison rows, one per filter method.
struct BenchTable {
    std::vector<BenchRow> rows;
};

/// Runs the full load -> corrupt -> filter -> score pipeline, writing the
/// filtered images, the report and a full-precision sidecar CSV into
/// config.output_dir. Metrics are computed on the quantized images exactly
/// as written to disk, so the table can be re-derived from the files.
BenchTable run_pipeline(const PipelineConfig& config);

/// CSV: header `s_no,method,rmse,snr,psnr`, two-decimal values.
/// Markdown: pipe table with the same columns and rounding.
std::string render_table(const BenchTable& table, ReportFormat format);

/// Two-decimal rendering used by the reports: the value's shortest
/// round-trip decimal form, rounded half away from zero (so a value entered
/// as 2.005 renders as "2.01"). Infinities render as "inf" / "-inf".
std::string format_fixed2(double value);

/// Shortest decimal form that parses back to the same double.
std::string format_shortest(double value);

}  // namespace specklebench
