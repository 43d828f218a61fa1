#include "modfilter/median.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace modfilter {

std::uint8_t window_median(std::span<const std::uint8_t> values) {
    if (values.empty()) throw std::invalid_argument("window_median: empty list");
    if (values.size() % 2 == 0)
        throw std::invalid_argument("window_median: list must be odd-length");
    std::vector<std::uint8_t> sorted(values.begin(), values.end());
    auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
    std::nth_element(sorted.begin(), mid, sorted.end());
    return *mid;
}

Image median_filter(const Image& image, const MedianConfig& config) {
    (void)config; // only replicate borders in v1
    const int w = image.width();
    const int h = image.height();
    const int channels = image.channels();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h * channels);

    std::array<std::uint8_t, 9> window;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < channels; ++c) {
                int n = 0;
                for (int dy = -1; dy <= 1; ++dy) {
                    const int sy = std::clamp(y + dy, 0, h - 1);
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = std::clamp(x + dx, 0, w - 1);
                        window[static_cast<std::size_t>(n++)] = image.value(sx, sy, c);
                    }
                }
                std::array<std::uint8_t, 9> sorted = window;
                std::nth_element(sorted.begin(), sorted.begin() + 4, sorted.end());
                out[(static_cast<std::size_t>(y) * w + x) * channels + c] = sorted[4];
            }
        }
    }
    return Image(w, h, channels, std::move(out));
}

} // namespace modfilter
