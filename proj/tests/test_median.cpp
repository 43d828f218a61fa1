#include <doctest.h>

#include <algorithm>
#include <random>

#include "modfilter/median.hpp"

using namespace modfilter;

namespace {

// Independent sort-based oracle with the same replicate border rule.
Image brute_force_median(const Image& img) {
    std::vector<std::uint8_t> out(img.data().size());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            for (int c = 0; c < img.channels(); ++c) {
                std::vector<std::uint8_t> window;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = std::clamp(x + dx, 0, img.width() - 1);
                        const int sy = std::clamp(y + dy, 0, img.height() - 1);
                        window.push_back(img.value(sx, sy, c));
                    }
                std::sort(window.begin(), window.end());
                out[(static_cast<std::size_t>(y) * img.width() + x) * img.channels() + c] =
                    window[4];
            }
    return Image(img.width(), img.height(), img.channels(), std::move(out));
}

} // namespace

TEST_CASE("window_median examples") {
    const std::vector<std::uint8_t> one_to_nine{1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(window_median(one_to_nine) == 5);

    const std::vector<std::uint8_t> sevens(9, 7);
    CHECK(window_median(sevens) == 7);

    const std::vector<std::uint8_t> outliers{255, 0, 0, 0, 0, 0, 0, 0, 255};
    CHECK(window_median(outliers) == 0);

    CHECK_THROWS_AS(window_median(std::vector<std::uint8_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(window_median(std::vector<std::uint8_t>{1, 2}), std::invalid_argument);
}

TEST_CASE("median_filter: flat image is unchanged") {
    const Image img(7, 5, 1, std::uint8_t{42});
    CHECK(median_filter(img) == img);
}

TEST_CASE("median_filter: single outlier disappears") {
    Image img(5, 5, 1, std::uint8_t{0});
    img.set_pixel(2, 2, {255, 255, 255});
    const Image expected(5, 5, 1, std::uint8_t{0});
    CHECK(median_filter(img) == expected);
}

TEST_CASE("median_filter: 3x3 cross pattern") {
    Image img(3, 3, 1, std::uint8_t{0});
    img.set_pixel(1, 1, {255, 255, 255});
    const Image out = median_filter(img);
    CHECK(out.value(1, 1, 0) == 0);
    CHECK(out.value(0, 0, 0) == 0);
    CHECK(out.value(2, 2, 0) == 0);
}

TEST_CASE("median_filter: agrees with the brute-force oracle on random images") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> channel(0, 255);
    for (int trial = 0; trial < 40; ++trial) {
        const int channels = trial % 2 == 0 ? 1 : 3;
        std::vector<std::uint8_t> data(static_cast<std::size_t>(8) * 8 * channels);
        for (auto& v : data) v = static_cast<std::uint8_t>(channel(rng));
        const Image img(8, 8, channels, std::move(data));
        CHECK(median_filter(img) == brute_force_median(img));
    }
}

TEST_CASE("median_filter: output values come from the input value set") {
    std::mt19937 rng(9);
    std::vector<std::uint8_t> data(36);
    for (auto& v : data) v = static_cast<std::uint8_t>((rng() % 4) * 80);
    const Image img(6, 6, 1, std::move(data));
    const Image out = median_filter(img);
    for (std::uint8_t v : out.data())
        CHECK(std::find(img.data().begin(), img.data().end(), v) != img.data().end());

    // idempotence on the already-flat result of a flat input
    const Image flat(4, 4, 1, std::uint8_t{13});
    CHECK(median_filter(median_filter(flat)) == median_filter(flat));
}
