#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specklebench/image.hpp"

namespace testutil {

inline std::filesystem::path fixtures_dir() {
    return std::filesystem::path(SPECKLEBENCH_FIXTURES_DIR);
}

/// Temp directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("specklebench_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline specklebench::Image random_real_image(std::mt19937_64& rng, int w, int h,
                                             double lo = 0.0, double hi = 255.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    specklebench::Image img(w, h);
    for (double& v : img.pixels()) {
        v = dist(rng);
    }
    return img;
}

inline specklebench::Image random_int_image(std::mt19937_64& rng, int w, int h,
                                            int lo = 0, int hi = 255) {
    std::uniform_int_distribution<int> dist(lo, hi);
    specklebench::Image img(w, h);
    for (double& v : img.pixels()) {
        v = static_cast<double>(dist(rng));
    }
    return img;
}

inline std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file_bytes(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string());
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace testutil
