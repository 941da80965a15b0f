#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

#include "specklebench/image.hpp"

namespace specklebench {

enum class PgmFormat { P2, P5 };

/// Parse failure; what() names the problem and the byte offset where it was
/// detected, also available through offset().
class PgmParseError : public std::runtime_error {
public:
    PgmParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses a P2 (ASCII) or P5 (binary) PGM buffer with maxval <= 255.
/// Sample values are taken verbatim; no maxval rescaling is performed.
Image parse_pgm(std::span<const unsigned char> bytes);

/// Serializes with maxval 255, single whitespace separators and no comments.
/// Intensities are quantized by the file-boundary rule (clamp + round).
std::string encode_pgm(const Image& img, PgmFormat format);

Image load_pgm(const std::filesystem::path& path);
void save_pgm(const Image& img, const std::filesystem::path& path,
              PgmFormat format = PgmFormat::P5);

}  // namespace specklebench
