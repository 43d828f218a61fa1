#ifndef MODFILTER_SYNTHETIC_HPP
#define MODFILTER_SYNTHETIC_HPP

#include "modfilter/image.hpp"

namespace modfilter {

enum class SyntheticKind {
    kSolidRect,         ///< uniform background with a centered w/2 x h/2 rectangle
    kSolidPlusGradient, ///< left half solid, right half horizontal gradient
};

/// Deterministic test-image generator for the benchmark harness. For
/// grayscale output (channels = 1) the r component of each color is used.
struct SyntheticSpec {
    SyntheticKind kind = SyntheticKind::kSolidRect;
    int width = 64;
    int height = 64;
    int channels = 1;
    Rgb background{60, 60, 60};   ///< whole-image / left-half fill
    Rgb foreground{200, 200, 200}; ///< rectangle color
    Rgb gradient_from{0, 0, 0};   ///< right-half gradient at x = width/2
    Rgb gradient_to{255, 255, 255}; ///< right-half gradient at x = width-1
};

Image generate_synthetic(const SyntheticSpec& spec);

} // namespace modfilter

#endif // MODFILTER_SYNTHETIC_HPP
