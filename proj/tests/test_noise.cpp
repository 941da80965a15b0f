#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "helpers.hpp"
#include "specklebench/noise.hpp"
#include "specklebench/rng.hpp"

using namespace specklebench;

namespace {

double field_mean(const Image& img) {
    double acc = 0.0;
    for (double v : img.pixels()) {
        acc += v;
    }
    return acc / static_cast<double>(img.pixel_count());
}

double field_variance(const Image& img) {
    const double mean = field_mean(img);
    double acc = 0.0;
    for (double v : img.pixels()) {
        acc += (v - mean) * (v - mean);
    }
    return acc / static_cast<double>(img.pixel_count());
}

}  // namespace

TEST_CASE("injectors validate parameters") {
    const Image img(4, 4, 10.0);
    CHECK_THROWS_AS(inject_gaussian(img, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(inject_gaussian(img, -1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(inject_speckle(img, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(inject_salt_pepper(img, -0.1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(inject_salt_pepper(img, 1.1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(inject_salt_pepper(img, 0.5, 2.0, 1), std::invalid_argument);
}

TEST_CASE("vanishing sigma leaves the image essentially unchanged") {
    std::mt19937_64 rng(5);
    const Image img = testutil::random_int_image(rng, 16, 16);
    const Image out = inject_gaussian(img, 1e-9, 123);
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        REQUIRE(std::abs(out.pixels()[i] - img.pixels()[i]) < 1e-6);
    }
}

TEST_CASE("gaussian noise field statistics match sigma") {
    const Image img(256, 256, 128.0);
    const Image out = inject_gaussian(img, 20.0, 42);
    Image noise(256, 256);
    for (std::size_t i = 0; i < noise.pixel_count(); ++i) {
        noise.pixels()[i] = out.pixels()[i] - img.pixels()[i];
    }
    CHECK(std::abs(field_mean(noise)) < 0.5);
    const double sd = std::sqrt(field_variance(noise));
    CHECK(sd > 20.0 * 0.95);
    CHECK(sd < 20.0 * 1.05);
}

TEST_CASE("gaussian output is not clamped in memory") {
    const Image dark(64, 64, 0.0);
    const Image out = inject_gaussian(dark, 20.0, 7);
    bool negative_seen = false;
    for (double v : out.pixels()) {
        negative_seen = negative_seen || v < 0.0;
    }
    CHECK(negative_seen);
}

TEST_CASE("injectors are deterministic in (image, params, seed)") {
    std::mt19937_64 rng(9);
    const Image img = testutil::random_int_image(rng, 24, 17);
    CHECK(inject_gaussian(img, 5.0, 77) == inject_gaussian(img, 5.0, 77));
    CHECK(inject_speckle(img, 3, 77) == inject_speckle(img, 3, 77));
    CHECK(inject_salt_pepper(img, 0.2, 0.5, 77) == inject_salt_pepper(img, 0.2, 0.5, 77));

    // distinct seeds give distinct fields
    CHECK(inject_gaussian(img, 5.0, 77) != inject_gaussian(img, 5.0, 78));
    CHECK(inject_speckle(img, 3, 77) != inject_speckle(img, 3, 78));
    CHECK(inject_salt_pepper(img, 0.2, 0.5, 77) != inject_salt_pepper(img, 0.2, 0.5, 78));
}

TEST_CASE("noise values are keyed by pixel index, not traversal order") {
    // The same (seed, index) pair must produce the same draw regardless of
    // image shape, which pins the counter-based construction.
    const Image wide(6, 2, 100.0);
    const Image tall(2, 6, 100.0);
    const Image a = inject_gaussian(wide, 10.0, 5);
    const Image b = inject_gaussian(tall, 10.0, 5);
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        REQUIRE(a.pixels()[i] == b.pixels()[i]);
    }
}

TEST_CASE("speckle with alpha 1 is exponential with mean 1") {
    const Image ones(256, 256, 1.0);
    const Image gains = inject_speckle(ones, 1, 1234);
    CHECK(std::abs(field_mean(gains) - 1.0) < 0.03);
}

TEST_CASE("speckle fixes zero images") {
    const Image zeros(32, 32, 0.0);
    for (int alpha : {1, 2, 8}) {
        const Image out = inject_speckle(zeros, alpha, 99);
        for (double v : out.pixels()) {
            REQUIRE(v == 0.0);
        }
    }
}

TEST_CASE("speckle gain variance is 1/alpha") {
    const Image img(256, 256, 100.0);
    const Image out = inject_speckle(img, 4, 2024);
    // Var(out) = 100^2 * Var(gain) = 10000 / 4 = 2500
    const double variance = field_variance(out);
    CHECK(variance > 2500.0 * 0.9);
    CHECK(variance < 2500.0 * 1.1);
    // mean preserved in expectation (a = 1/alpha keeps E[gain] = 1)
    CHECK(std::abs(field_mean(out) - 100.0) < 1.0);
}

TEST_CASE("salt and pepper endpoints") {
    std::mt19937_64 rng(31);
    const Image img = testutil::random_int_image(rng, 20, 20, 1, 254);
    CHECK(inject_salt_pepper(img, 0.0, 0.5, 5) == img);
    const Image all_salt = inject_salt_pepper(img, 1.0, 1.0, 5);
    for (double v : all_salt.pixels()) {
        REQUIRE(v == 255.0);
    }
    const Image all_pepper = inject_salt_pepper(img, 1.0, 0.0, 5);
    for (double v : all_pepper.pixels()) {
        REQUIRE(v == 0.0);
    }
}

TEST_CASE("salt and pepper corruption counts follow the binomial") {
    // values in [1, 254] so every corrupted pixel is identifiable
    std::mt19937_64 rng(37);
    const Image img = testutil::random_int_image(rng, 100, 100, 1, 254);
    const Image out = inject_salt_pepper(img, 0.1, 0.5, 4242);

    int corrupted = 0;
    int salt = 0;
    int pepper = 0;
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        const double before = img.pixels()[i];
        const double after = out.pixels()[i];
        if (after != before) {
            ++corrupted;
            REQUIRE((after == 0.0 || after == 255.0));
            (after == 255.0 ? salt : pepper) += 1;
        } else {
            REQUIRE(after == before);  // untouched pixels are bit-identical
        }
    }
    // 3-sigma binomial bounds: n=10000, p=0.1 -> 1000 +- 90
    CHECK(corrupted > 910);
    CHECK(corrupted < 1090);
    // salt/pepper split: 500 +- 3*sqrt(1000*0.25) ~ 47.4
    CHECK(salt > 452);
    CHECK(salt < 548);
    CHECK(pepper > 452);
    CHECK(pepper < 548);
}

TEST_CASE("NoiseSpec dispatch matches the direct calls") {
    std::mt19937_64 rng(41);
    const Image img = testutil::random_int_image(rng, 12, 12);
    CHECK(inject(img, {GaussianAdditive{3.0}, 9}) == inject_gaussian(img, 3.0, 9));
    CHECK(inject(img, {SpeckleGamma{2}, 9}) == inject_speckle(img, 2, 9));
    CHECK(inject(img, {SaltPepper{0.3, 0.5}, 9}) == inject_salt_pepper(img, 0.3, 0.5, 9));
}

TEST_CASE("counter rng basics") {
    // fixed definition: same inputs, same word
    CHECK(rng_word(1, 2, 3) == rng_word(1, 2, 3));
    CHECK(rng_word(1, 2, 3) != rng_word(1, 2, 4));
    CHECK(rng_word(1, 2, 3) != rng_word(1, 3, 3));
    CHECK(rng_word(2, 2, 3) != rng_word(1, 2, 3));

    CounterRng a(10, 20);
    CounterRng b(10, 20);
    for (int i = 0; i < 8; ++i) {
        REQUIRE(a.next_u64() == b.next_u64());
    }
    CounterRng c(10, 21);
    double unit = c.next_unit();
    CHECK(unit >= 0.0);
    CHECK(unit < 1.0);
    double open = c.next_unit_open();
    CHECK(open > 0.0);
    CHECK(open <= 1.0);
    CHECK(c.next_exponential() >= 0.0);
}
