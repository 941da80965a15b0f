#include "specklebench/bench.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "specklebench/metrics.hpp"
#include "specklebench/pgm.hpp"

namespace specklebench {

// ---------------------------------------------------------------------------
// Number rendering
// ---------------------------------------------------------------------------

std::string format_shortest(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_fixed2(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (std::abs(value) >= 1e15) {
        // No fractional digits survive at this magnitude; plain fixed is exact.
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", value);
        return buf;
    }

    // Round the *shortest decimal form* half away from zero at two decimals,
    // so a value entered as 2.005 renders as 2.01 even though the nearest
    // double is fractionally below the tie.
    const std::string s = format_shortest(value);
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-') {
        negative = true;
        i = 1;
    }
    std::string digits;
    int frac_len = 0;
    int exponent = 0;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.') {
            seen_point = true;
        } else if (c == 'e' || c == 'E') {
            exponent = std::stoi(s.substr(i + 1));
            break;
        } else {
            digits += c;
            if (seen_point) {
                ++frac_len;
            }
        }
    }

    // value = digits * 10^(exponent - frac_len); want N = round(|value| * 100).
    const int shift = exponent - frac_len + 2;
    unsigned long long n = 0;
    if (shift >= 0) {
        n = std::stoull(digits);
        for (int k = 0; k < shift; ++k) {
            n *= 10;
        }
    } else {
        int keep = static_cast<int>(digits.size()) + shift;
        if (keep < 1) {
            digits.insert(0, static_cast<std::size_t>(1 - keep), '0');
            keep = 1;
        }
        n = std::stoull(digits.substr(0, static_cast<std::size_t>(keep)));
        if (digits[static_cast<std::size_t>(keep)] >= '5') {
            ++n;
        }
    }

    std::string out = (negative && n > 0) ? "-" : "";
    out += std::to_string(n / 100);
    out += '.';
    out += static_cast<char>('0' + (n / 10) % 10);
    out += static_cast<char>('0' + n % 10);
    return out;
}

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

ConfigError::ConfigError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + message
                                  : "config: " + message),
      line_(line) {}

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

bool valid_label(const std::string& label) {
    if (label.empty()) {
        return false;
    }
    return std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isalnum(c) || c == ' ' || c == '_' || c == '.' || c == '-';
    });
}

struct KeyValue {
    std::string value;
    int line = 0;
    bool used = false;
};

using Section = std::map<std::string, KeyValue>;

// Marks the key consumed; a key left unconsumed at the end is a typo.
std::optional<KeyValue> take(Section& section, const std::string& key) {
    auto it = section.find(key);
    if (it == section.end()) {
        return std::nullopt;
    }
    it->second.used = true;
    return it->second;
}

KeyValue require(Section& section, const std::string& key, const std::string& where,
                 int section_line) {
    auto kv = take(section, key);
    if (!kv) {
        throw ConfigError("missing required key '" + key + "' in " + where, section_line);
    }
    return *kv;
}

double parse_double(const KeyValue& kv, const std::string& key) {
    const std::string v = kv.value;
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
        throw ConfigError("expected a number for '" + key + "', got '" + v + "'", kv.line);
    }
    return out;
}

long long parse_integer(const KeyValue& kv, const std::string& key) {
    const std::string v = kv.value;
    long long out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
        throw ConfigError("expected an integer for '" + key + "', got '" + v + "'", kv.line);
    }
    return out;
}

std::uint64_t parse_seed(const KeyValue& kv, const std::string& key) {
    const std::string v = kv.value;
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
        throw ConfigError("expected an unsigned integer for '" + key + "', got '" + v + "'",
                          kv.line);
    }
    return out;
}

void reject_unused(const Section& section, const std::string& where) {
    for (const auto& [key, kv] : section) {
        if (!kv.used) {
            throw ConfigError("unknown key '" + key + "' in " + where, kv.line);
        }
    }
}

BorderPolicy parse_border(const KeyValue& kv) {
    if (kv.value == "replicate") {
        return BorderPolicy::Replicate;
    }
    if (kv.value == "reflect") {
        return BorderPolicy::Reflect;
    }
    if (kv.value == "zero") {
        return BorderPolicy::Zero;
    }
    throw ConfigError("unknown border policy '" + kv.value +
                          "' (expected replicate, reflect or zero)",
                      kv.line);
}

FilterKind parse_filter_kind(const KeyValue& kv) {
    if (kv.value == "median") return FilterKind::Median;
    if (kv.value == "mean") return FilterKind::Mean;
    if (kv.value == "max") return FilterKind::Max;
    if (kv.value == "min") return FilterKind::Min;
    if (kv.value == "stddev") return FilterKind::StdDev;
    if (kv.value == "variance") return FilterKind::Variance;
    throw ConfigError("unknown filter kind '" + kv.value +
                          "' (expected median, mean, max, min, stddev or variance)",
                      kv.line);
}

NoiseSpec build_noise(Section& section, int section_line) {
    NoiseSpec spec;
    const KeyValue kind = require(section, "kind", "[noise]", section_line);
    if (const auto seed = take(section, "seed")) {
        spec.seed = parse_seed(*seed, "seed");
    }
    if (kind.value == "gaussian") {
        const KeyValue sigma = require(section, "sigma", "[noise] kind gaussian", section_line);
        spec.model = GaussianAdditive{parse_double(sigma, "sigma")};
    } else if (kind.value == "speckle") {
        const KeyValue alpha = require(section, "alpha", "[noise] kind speckle", section_line);
        const long long a = parse_integer(alpha, "alpha");
        if (a < 1 || a > 1000000) {
            throw ConfigError("speckle alpha must be an integer >= 1", alpha.line);
        }
        spec.model = SpeckleGamma{static_cast<int>(a)};
    } else if (kind.value == "salt_pepper") {
        const KeyValue density = require(section, "density", "[noise] kind salt_pepper",
                                         section_line);
        SaltPepper model;
        model.density = parse_double(density, "density");
        if (const auto sf = take(section, "salt_fraction")) {
            model.salt_fraction = parse_double(*sf, "salt_fraction");
        }
        if (!(model.density >= 0.0 && model.density <= 1.0) ||
            !(model.salt_fraction >= 0.0 && model.salt_fraction <= 1.0)) {
            throw ConfigError("salt_pepper density and salt_fraction must lie in [0, 1]",
                              density.line);
        }
        spec.model = model;
    } else {
        throw ConfigError("unknown noise kind '" + kind.value +
                              "' (expected gaussian, speckle or salt_pepper)",
                          kind.line);
    }
    reject_unused(section, "[noise]");
    return spec;
}

FilterSpec build_filter(Section& section, const std::string& label, int section_line) {
    FilterSpec spec;
    spec.kind = parse_filter_kind(require(section, "kind", "[filter " + label + "]",
                                          section_line));
    if (const auto window = take(section, "window")) {
        const long long w = parse_integer(*window, "window");
        if (w < 3 || w % 2 == 0 || w > 9999) {
            throw ConfigError("filter window must be odd and >= 3, got " + window->value,
                              window->line);
        }
        spec.window = static_cast<int>(w);
    }
    if (const auto border = take(section, "border")) {
        spec.border = parse_border(*border);
    }
    reject_unused(section, "[filter " + label + "]");
    return spec;
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& text) {
    Section top;
    std::optional<Section> noise;
    int noise_line = 0;
    std::vector<std::pair<std::string, Section>> filter_sections;
    std::vector<int> filter_lines;

    // current: 0 = top, 1 = noise, 2 = filter (last of filter_sections)
    int current = 0;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("unterminated section header", line_no);
            }
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name == "noise") {
                if (noise) {
                    throw ConfigError("duplicate [noise] section", line_no);
                }
                noise.emplace();
                noise_line = line_no;
                current = 1;
            } else if (name.rfind("filter ", 0) == 0) {
                const std::string label = trim(name.substr(7));
                if (!valid_label(label)) {
                    throw ConfigError(
                        "filter label must be non-empty and use only letters, digits, "
                        "spaces, '_', '.' or '-'",
                        line_no);
                }
                for (const auto& [existing, _] : filter_sections) {
                    if (existing == label) {
                        throw ConfigError("duplicate filter label '" + label + "'", line_no);
                    }
                }
                filter_sections.emplace_back(label, Section{});
                filter_lines.push_back(line_no);
                current = 2;
            } else {
                throw ConfigError("unknown section [" + name + "]", line_no);
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("empty key", line_no);
        }
        Section& section = current == 0 ? top
                          : current == 1 ? *noise
                                         : filter_sections.back().second;
        if (section.contains(key)) {
            throw ConfigError("duplicate key '" + key + "'", line_no);
        }
        section[key] = KeyValue{value, line_no};
    }

    PipelineConfig config;
    const KeyValue input = require(top, "input", "the top-level section", 0);
    if (input.value.empty()) {
        throw ConfigError("input path must not be empty", input.line);
    }
    config.input = input.value;
    const KeyValue output = require(top, "output_dir", "the top-level section", 0);
    if (output.value.empty()) {
        throw ConfigError("output_dir path must not be empty", output.line);
    }
    config.output_dir = output.value;
    if (const auto reference = take(top, "reference")) {
        if (reference->value != "clean") {
            config.reference = reference->value;
        }
    }
    if (const auto report = take(top, "report")) {
        if (report->value == "csv") {
            config.report_format = ReportFormat::Csv;
        } else if (report->value == "markdown") {
            config.report_format = ReportFormat::Markdown;
        } else {
            throw ConfigError("unknown report format '" + report->value +
                                  "' (expected csv or markdown)",
                              report->line);
        }
    }
    reject_unused(top, "the top-level section");

    if (noise) {
        config.noise = build_noise(*noise, noise_line);
    }
    for (std::size_t i = 0; i < filter_sections.size(); ++i) {
        auto& [label, section] = filter_sections[i];
        config.filters.emplace_back(label, build_filter(section, label, filter_lines[i]));
    }
    return config;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + path.string(), 0);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    PipelineConfig config = parse_pipeline_config(buffer.str());

    const std::filesystem::path base = path.parent_path();
    auto resolve = [&](std::filesystem::path& p) {
        if (p.is_relative()) {
            p = base / p;
        }
    };
    resolve(config.input);
    resolve(config.output_dir);
    if (config.reference) {
        resolve(*config.reference);
    }
    return config;
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

namespace {

void check_table(const BenchTable& table) {
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const BenchRow& row = table.rows[i];
        if (row.serial != static_cast<int>(i) + 1) {
            throw std::invalid_argument("table serials must be contiguous from 1");
        }
        if (row.method.find_first_of(",|\r\n") != std::string::npos) {
            throw std::invalid_argument("method name '" + row.method +
                                        "' contains a reserved character");
        }
    }
}

}  // namespace

std::string render_table(const BenchTable& table, ReportFormat format) {
    check_table(table);
    std::string out;
    if (format == ReportFormat::Csv) {
        out += "s_no,method,rmse,snr,psnr\n";
        for (const BenchRow& row : table.rows) {
            out += std::to_string(row.serial);
            out += ',';
            out += row.method;
            out += ',';
            out += format_fixed2(row.rmse);
            out += ',';
            out += format_fixed2(row.snr);
            out += ',';
            out += format_fixed2(row.psnr);
            out += '\n';
        }
    } else {
        out += "| S.No | FILTERING METHOD | RMSE | SNR | PSNR |\n";
        out += "| --- | --- | --- | --- | --- |\n";
        for (const BenchRow& row : table.rows) {
            out += "| " + std::to_string(row.serial);
            out += " | " + row.method;
            out += " | " + format_fixed2(row.rmse);
            out += " | " + format_fixed2(row.snr);
            out += " | " + format_fixed2(row.psnr);
            out += " |\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void stage_error(const std::string& stage, const std::exception& e) {
    throw std::runtime_error(stage + ": " + e.what());
}

std::string slug(const std::string& label) {
    std::string out;
    out.reserve(label.size());
    for (const unsigned char c : label) {
        out += std::isalnum(c) ? static_cast<char>(c) : '_';
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw std::runtime_error("I/O error while writing " + path.string());
    }
}

}  // namespace

BenchTable run_pipeline(const PipelineConfig& config) {
    for (std::size_t i = 0; i < config.filters.size(); ++i) {
        if (!valid_label(config.filters[i].first)) {
            throw std::runtime_error("config: invalid filter label '" + config.filters[i].first +
                                     "'");
        }
        for (std::size_t j = i + 1; j < config.filters.size(); ++j) {
            if (config.filters[i].first == config.filters[j].first) {
                throw std::runtime_error("config: duplicate filter label '" +
                                         config.filters[i].first + "'");
            }
        }
    }

    Image input;
    try {
        input = load_pgm(config.input);
    } catch (const std::exception& e) {
        stage_error("input", e);
    }

    Image reference;
    if (config.reference) {
        try {
            reference = load_pgm(*config.reference);
        } catch (const std::exception& e) {
            stage_error("reference", e);
        }
        if (reference.width() != input.width() || reference.height() != input.height()) {
            throw std::runtime_error("reference: dimensions " + std::to_string(reference.width()) +
                                     "x" + std::to_string(reference.height()) +
                                     " do not match input " + std::to_string(input.width()) + "x" +
                                     std::to_string(input.height()));
        }
    } else {
        reference = input;
    }

    Image noisy;
    try {
        noisy = config.noise ? inject(input, *config.noise) : input;
    } catch (const std::exception& e) {
        stage_error("noise", e);
    }

    try {
        std::filesystem::create_directories(config.output_dir);
        if (config.noise) {
            save_pgm(quantize(noisy), config.output_dir / "noisy.pgm");
        }
    } catch (const std::exception& e) {
        stage_error("output", e);
    }

    BenchTable table;
    for (std::size_t i = 0; i < config.filters.size(); ++i) {
        const auto& [label, spec] = config.filters[i];
        Image filtered;
        try {
            filtered = quantize(apply_filter(noisy, spec, FilterEngine::Optimized));
        } catch (const std::exception& e) {
            stage_error("filter " + label, e);
        }
        try {
            save_pgm(filtered, config.output_dir / (slug(label) + ".pgm"));
        } catch (const std::exception& e) {
            stage_error("output", e);
        }
        BenchRow row;
        row.serial = static_cast<int>(i) + 1;
        row.method = label;
        try {
            const MetricsReport m = compute_metrics(reference, filtered);
            row.rmse = m.rmse;
            row.snr = m.snr_db;
            row.psnr = m.psnr_report;
        } catch (const std::exception& e) {
            stage_error("metrics " + label, e);
        }
        table.rows.push_back(std::move(row));
    }

    try {
        const bool csv = config.report_format == ReportFormat::Csv;
        write_text(config.output_dir / (csv ? "report.csv" : "report.md"),
                   render_table(table, config.report_format));
        std::string sidecar = "s_no,method,rmse,snr,psnr\n";
        for (const BenchRow& row : table.rows) {
            sidecar += std::to_string(row.serial) + ',' + row.method + ',' +
                       format_shortest(row.rmse) + ',' + format_shortest(row.snr) + ',' +
                       format_shortest(row.psnr) + '\n';
        }
        write_text(config.output_dir / "report_full.csv", sidecar);
    } catch (const std::exception& e) {
        stage_error("report", e);
    }
    return table;
}

}  // namespace specklebench
