#include "specklebench/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace specklebench {

namespace {

// Desk-scale guard against absurd headers allocating gigabytes.
constexpr std::size_t kMaxPixelCount = std::size_t{1} << 28;

bool is_pgm_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Cursor over the raw bytes; tracks the offset used in error reports.
struct Cursor {
    std::span<const unsigned char> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    unsigned char peek() const { return bytes[pos]; }

    // Skips whitespace and '#' comments (accepted on input, never emitted).
    void skip_separators() {
        while (!eof()) {
            if (is_pgm_space(peek())) {
                ++pos;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') {
                    ++pos;
                }
            } else {
                break;
            }
        }
    }

    unsigned read_uint(const char* category, const char* what) {
        skip_separators();
        if (eof()) {
            throw PgmParseError(std::string(category) + ": missing " + what, pos);
        }
        if (!std::isdigit(peek())) {
            throw PgmParseError(std::string(category) + ": expected digit for " + what, pos);
        }
        unsigned long value = 0;
        while (!eof() && std::isdigit(peek())) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000000UL) {
                throw PgmParseError(std::string(category) + ": " + what + " out of range", pos);
            }
            ++pos;
        }
        return static_cast<unsigned>(value);
    }
};

}  // namespace

PgmParseError::PgmParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

Image parse_pgm(std::span<const unsigned char> bytes) {
    Cursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw PgmParseError("malformed header: expected magic P2 or P5", 0);
    }
    const bool binary = bytes[1] == '5';
    cur.pos = 2;

    const unsigned width = cur.read_uint("malformed header", "width");
    const unsigned height = cur.read_uint("malformed header", "height");
    if (width == 0 || height == 0) {
        throw PgmParseError("malformed header: zero image dimension", cur.pos);
    }
    if (static_cast<std::size_t>(width) * height > kMaxPixelCount) {
        throw PgmParseError("malformed header: image dimensions too large", cur.pos);
    }
    cur.skip_separators();
    const std::size_t maxval_offset = cur.pos;
    const unsigned maxval = cur.read_uint("malformed header", "maxval");
    if (maxval == 0) {
        throw PgmParseError("malformed header: maxval must be positive", maxval_offset);
    }
    if (maxval > 255) {
        throw PgmParseError("unsupported maxval " + std::to_string(maxval) + " (limit 255)",
                            maxval_offset);
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<double> pixels;
    pixels.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (cur.eof() || !is_pgm_space(cur.peek())) {
            throw PgmParseError("malformed header: expected single whitespace before raster",
                                cur.pos);
        }
        ++cur.pos;
        if (bytes.size() - cur.pos < count) {
            throw PgmParseError("truncated payload: expected " + std::to_string(count) +
                                    " raster bytes, found " + std::to_string(bytes.size() - cur.pos),
                                bytes.size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            const unsigned char sample = bytes[cur.pos];
            if (sample > maxval) {
                throw PgmParseError("sample value " + std::to_string(sample) + " exceeds maxval " +
                                        std::to_string(maxval),
                                    cur.pos);
            }
            pixels.push_back(static_cast<double>(sample));
            ++cur.pos;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_separators();
            if (cur.eof()) {
                throw PgmParseError("truncated payload: expected " + std::to_string(count) +
                                        " samples, found " + std::to_string(i),
                                    cur.pos);
            }
            const std::size_t sample_offset = cur.pos;
            const unsigned sample = cur.read_uint("malformed sample", "sample");
            if (sample > maxval) {
                throw PgmParseError("sample value " + std::to_string(sample) + " exceeds maxval " +
                                        std::to_string(maxval),
                                    sample_offset);
            }
            pixels.push_back(static_cast<double>(sample));
        }
    }

    cur.skip_separators();
    if (!cur.eof()) {
        throw PgmParseError("trailing data after raster", cur.pos);
    }
    return Image(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::string encode_pgm(const Image& img, PgmFormat format) {
    std::string out;
    out.reserve(img.pixel_count() * (format == PgmFormat::P2 ? 4 : 1) + 32);
    out += format == PgmFormat::P2 ? "P2\n" : "P5\n";
    out += std::to_string(img.width());
    out += ' ';
    out += std::to_string(img.height());
    out += "\n255\n";
    if (format == PgmFormat::P5) {
        for (double v : img.pixels()) {
            out += static_cast<char>(static_cast<unsigned char>(quantize_sample(v)));
        }
    } else {
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                if (x > 0) {
                    out += ' ';
                }
                out += std::to_string(quantize_sample(img(x, y)));
            }
            out += '\n';
        }
    }
    return out;
}

Image load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw std::runtime_error("I/O error while reading " + path.string());
    }
    const std::string data = buffer.str();
    return parse_pgm(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(data.data()), data.size()));
}

void save_pgm(const Image& img, const std::filesystem::path& path, PgmFormat format) {
    const std::string data = encode_pgm(img, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
        throw std::runtime_error("I/O error while writing " + path.string());
    }
}

}  // namespace specklebench
