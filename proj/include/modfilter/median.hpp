#ifndef MODFILTER_MEDIAN_HPP
#define MODFILTER_MEDIAN_HPP

#include <cstdint>
#include <span>

#include "modfilter/image.hpp"

namespace modfilter {

enum class MedianBorder {
    kReplicate, ///< out-of-bounds window cells repeat the nearest edge pixel
};

struct MedianConfig {
    MedianBorder border = MedianBorder::kReplicate;
};

/// Middle element of the sorted values. Throws std::invalid_argument on
/// an empty or even-length list.
std::uint8_t window_median(std::span<const std::uint8_t> values);

/// 3x3 per-channel median filter with edge replication; dimensions are
/// unchanged.
Image median_filter(const Image& image, const MedianConfig& config = {});

} // namespace modfilter

#endif // MODFILTER_MEDIAN_HPP
